#include "ffactor/whitehead.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace ffactor {

  namespace {

    void check_rank(std::size_t rank) {
      if (rank == 0 || rank > max_whitehead_rank) {
        throw WordError("Whitehead rank must be in 1.." + std::to_string(max_whitehead_rank));
      }
    }

    std::string letter_text(LetterCode c, std::span<std::string const> alphabet) {
      std::string s = (c >> 1) < alphabet.size() ? alphabet[c >> 1] : "x" + std::to_string(c >> 1);
      return (c & 1) ? s + "^-1" : s;
    }

  }  // namespace

  WhiteheadAuto WhiteheadAuto::permutation(std::vector<std::size_t> perm, std::vector<bool> invert) {
    check_rank(perm.size());
    if (invert.size() != perm.size()) {
      throw WordError("permutation and inversion vectors differ in size");
    }
    std::vector<std::size_t> sorted = perm;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < sorted.size(); ++i) {
      if (sorted[i] != i) {
        throw WordError("not a permutation of the generators");
      }
    }
    WhiteheadAuto a;
    a._kind   = Kind::permutation;
    a._perm   = std::move(perm);
    a._invert = std::move(invert);
    a.compute_images();
    return a;
  }

  WhiteheadAuto WhiteheadAuto::multiplier(std::size_t rank, LetterCode m, std::vector<bool> in_set) {
    check_rank(rank);
    if (in_set.size() != 2 * rank || m >= 2 * rank) {
      throw WordError("multiplier automorphism descriptor has wrong size");
    }
    if (!in_set[m] || in_set[m ^ 1u]) {
      throw WordError("multiplier set must contain a and not a^-1");
    }
    WhiteheadAuto a;
    a._kind       = Kind::multiplier;
    a._multiplier = m;
    a._in_set     = std::move(in_set);
    a._images.resize(rank);
    a.compute_images();
    return a;
  }

  void WhiteheadAuto::compute_images() {
    if (_kind == Kind::permutation) {
      _images.assign(_perm.size(), {});
      for (std::size_t i = 0; i < _perm.size(); ++i) {
        _images[i] = {static_cast<LetterCode>(2 * _perm[i] + (_invert[i] ? 1 : 0))};
      }
      return;
    }
    std::size_t const rank = _in_set.size() / 2;
    LetterCode const  a    = _multiplier;
    _images.assign(rank, {});
    for (std::size_t i = 0; i < rank; ++i) {
      auto const x = static_cast<LetterCode>(2 * i);
      if (i == (a >> 1)) {
        _images[i] = {x};
        continue;
      }
      bool const pos = _in_set[x], neg = _in_set[x ^ 1u];
      std::vector<LetterCode> img;
      if (neg) {
        img.push_back(a ^ 1u);
      }
      img.push_back(x);
      if (pos) {
        img.push_back(a);
      }
      _images[i] = free_reduce(img);
    }
  }

  std::vector<LetterCode> WhiteheadAuto::apply(std::span<LetterCode const> w) const {
    std::vector<LetterCode> out;
    out.reserve(w.size() * 3);
    for (auto c : w) {
      auto const& img = _images.at(c >> 1);
      if (c & 1) {
        for (auto it = img.rbegin(); it != img.rend(); ++it) {
          out.push_back(*it ^ 1u);
        }
      } else {
        out.insert(out.end(), img.begin(), img.end());
      }
    }
    return free_reduce(out);
  }

  Word WhiteheadAuto::apply(Word const& w, std::span<std::string const> alphabet) const {
    auto codes = apply(encode(w, alphabet));
    return decode(codes, alphabet);
  }

  WhiteheadAuto WhiteheadAuto::inverse() const {
    if (_kind == Kind::permutation) {
      std::vector<std::size_t> perm(_perm.size());
      std::vector<bool>        invert(_perm.size());
      for (std::size_t i = 0; i < _perm.size(); ++i) {
        perm[_perm[i]]   = i;
        invert[_perm[i]] = _invert[i];
      }
      return permutation(std::move(perm), std::move(invert));
    }
    auto set = _in_set;
    set[_multiplier]      = false;
    set[_multiplier ^ 1u] = true;
    return multiplier(_in_set.size() / 2, _multiplier ^ 1u, std::move(set));
  }

  std::string WhiteheadAuto::describe(std::span<std::string const> alphabet) const {
    std::ostringstream os;
    if (_kind == Kind::permutation) {
      os << "permutation";
    } else {
      os << "multiplier " << letter_text(_multiplier, alphabet) << " {";
      bool first = true;
      for (std::size_t c = 0; c < _in_set.size(); ++c) {
        if (_in_set[c]) {
          os << (first ? "" : ", ") << letter_text(static_cast<LetterCode>(c), alphabet);
          first = false;
        }
      }
      os << "}";
    }
    os << ":";
    for (std::size_t i = 0; i < _images.size(); ++i) {
      os << " " << letter_text(static_cast<LetterCode>(2 * i), alphabet) << "->";
      if (_images[i].empty()) {
        os << "1";
      }
      for (std::size_t k = 0; k < _images[i].size(); ++k) {
        os << (k ? "." : "") << letter_text(_images[i][k], alphabet);
      }
    }
    return os.str();
  }

  std::vector<WhiteheadAuto> whitehead_automorphisms(std::size_t rank, bool include_permutations) {
    check_rank(rank);
    std::vector<WhiteheadAuto> result;
    if (include_permutations) {
      std::vector<std::size_t> perm(rank);
      std::iota(perm.begin(), perm.end(), 0);
      do {
        for (std::size_t mask = 0; mask < (std::size_t{1} << rank); ++mask) {
          std::vector<bool> invert(rank);
          for (std::size_t i = 0; i < rank; ++i) {
            invert[i] = (mask >> i) & 1;
          }
          result.push_back(WhiteheadAuto::permutation(perm, std::move(invert)));
        }
      } while (std::next_permutation(perm.begin(), perm.end()));
    }
    std::size_t const others = std::size_t{1} << (2 * (rank - 1));
    for (LetterCode a = 0; a < 2 * rank; ++a) {
      for (std::size_t mask = 1; mask < others; ++mask) {
        std::vector<bool> set(2 * rank, false);
        set[a]        = true;
        std::size_t k = 0;
        for (std::size_t i = 0; i < rank; ++i) {
          if (i == (a >> 1)) {
            continue;
          }
          set[2 * i]     = (mask >> (2 * k)) & 1;
          set[2 * i + 1] = (mask >> (2 * k + 1)) & 1;
          ++k;
        }
        result.push_back(WhiteheadAuto::multiplier(rank, a, std::move(set)));
      }
    }
    return result;
  }

  WhiteheadDescent whitehead_minimize(std::span<LetterCode const> w, std::size_t rank) {
    auto const       moves = whitehead_automorphisms(rank, false);
    WhiteheadDescent d;
    d.minimal = cyclic_core(w);
    for (bool shortened = true; shortened && d.minimal.size() > 1;) {
      shortened = false;
      for (auto const& m : moves) {
        auto next = cyclic_core(m.apply(d.minimal));
        if (next.size() < d.minimal.size()) {
          d.minimal = std::move(next);
          ++d.steps;
          shortened = true;
          break;
        }
      }
    }
    d.minimal = least_rotation(d.minimal);
    return d;
  }

  bool is_primitive_whitehead(Word const& w, std::size_t rank) {
    auto alphabet = make_alphabet(std::span<Word const>(&w, 1), rank);
    return is_primitive_whitehead(w, alphabet);
  }

  bool is_primitive_whitehead(Word const& w, std::span<std::string const> alphabet) {
    auto codes = encode(w, alphabet);
    if (cyclic_core(codes).empty()) {
      return false;
    }
    return whitehead_minimize(codes, alphabet.size()).minimal.size() == 1;
  }

}  // namespace ffactor
