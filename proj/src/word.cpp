#include "ffactor/word.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <set>
#include <sstream>

namespace ffactor {

  namespace {

    void push_reduced(std::vector<Letter>& out, Letter l) {
      if (!out.empty() && out.back().name == l.name && out.back().exponent == -l.exponent) {
        out.pop_back();
      } else {
        out.push_back(std::move(l));
      }
    }

    Letter parse_token(std::string_view tok, std::vector<Letter>& out) {
      auto caret = tok.find('^');
      auto name  = tok.substr(0, caret);
      if (!is_generator_name(name)) {
        throw WordError("invalid generator name '" + std::string(name) + "'");
      }
      long power = 1;
      if (caret != std::string_view::npos) {
        auto exp        = tok.substr(caret + 1);
        auto [ptr, ec]  = std::from_chars(exp.data(), exp.data() + exp.size(), power);
        if (ec != std::errc() || ptr != exp.data() + exp.size() || power == 0) {
          throw WordError("invalid exponent in token '" + std::string(tok) + "'");
        }
        if (power > 1000000 || power < -1000000) {
          throw WordError("exponent too large in token '" + std::string(tok) + "'");
        }
      }
      Letter l{std::string(name), power > 0 ? 1 : -1};
      for (long i = 0; i < std::abs(power); ++i) {
        out.push_back(l);
      }
      return l;
    }

    // Rank of a letter in the order x1 < x1^-1 < x2 < ...
    struct LetterOrder {
      std::span<std::string const> alphabet;

      std::size_t position(std::string const& name) const {
        if (alphabet.empty()) {
          return 0;
        }
        auto it = std::find(alphabet.begin(), alphabet.end(), name);
        return static_cast<std::size_t>(it - alphabet.begin());
      }

      bool less(Letter const& a, Letter const& b) const {
        auto pa = position(a.name), pb = position(b.name);
        if (pa != pb) {
          return pa < pb;
        }
        if (a.name != b.name) {
          return a.name < b.name;
        }
        return a.exponent > b.exponent;
      }
    };

  }  // namespace

  bool is_generator_name(std::string_view name) {
    if (name.empty() || !std::isalpha(static_cast<unsigned char>(name.front()))) {
      return false;
    }
    std::size_t i = 1;
    while (i < name.size()
           && (std::isalnum(static_cast<unsigned char>(name[i])) || name[i] == '_')) {
      ++i;
    }
    while (i < name.size() && name[i] == '\'') {
      ++i;
    }
    return i == name.size();
  }

  Word::Word(std::vector<Letter> raw) {
    for (auto& l : raw) {
      if (l.exponent != 1 && l.exponent != -1) {
        throw WordError("letter exponent must be +1 or -1");
      }
      push_reduced(_letters, std::move(l));
    }
  }

  Word Word::parse(std::string_view text) {
    std::vector<Letter> raw;
    std::size_t         i = 0;
    while (i < text.size()) {
      while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) {
        ++i;
      }
      std::size_t j = i;
      while (j < text.size() && !std::isspace(static_cast<unsigned char>(text[j]))) {
        ++j;
      }
      if (j > i) {
        parse_token(text.substr(i, j - i), raw);
      }
      i = j;
    }
    return Word(std::move(raw));
  }

  Word Word::parse(std::string_view text, std::span<std::string const> alphabet) {
    auto w = parse(text);
    for (auto const& l : w.letters()) {
      if (std::find(alphabet.begin(), alphabet.end(), l.name) == alphabet.end()) {
        throw WordError("unknown generator '" + l.name + "'");
      }
    }
    return w;
  }

  Word Word::inverse() const {
    Word r;
    r._letters.reserve(_letters.size());
    for (auto it = _letters.rbegin(); it != _letters.rend(); ++it) {
      r._letters.push_back({it->name, -it->exponent});
    }
    return r;
  }

  Word Word::renamed(std::map<std::string, std::string> const& names) const {
    std::vector<Letter> raw = _letters;
    for (auto& l : raw) {
      if (auto it = names.find(l.name); it != names.end()) {
        l.name = it->second;
      }
    }
    return Word(std::move(raw));
  }

  std::string Word::str() const {
    std::string s;
    for (auto const& l : _letters) {
      if (!s.empty()) {
        s += ' ';
      }
      s += l.name;
      if (l.exponent < 0) {
        s += "^-1";
      }
    }
    return s;
  }

  Word operator*(Word const& a, Word const& b) {
    Word r = a;
    for (auto const& l : b._letters) {
      push_reduced(r._letters, l);
    }
    return r;
  }

  Word reduce(std::vector<Letter> raw) {
    return Word(std::move(raw));
  }

  Word reduce(std::vector<Letter> raw, std::span<std::string const> alphabet) {
    for (auto const& l : raw) {
      if (std::find(alphabet.begin(), alphabet.end(), l.name) == alphabet.end()) {
        throw WordError("unknown generator '" + l.name + "'");
      }
    }
    return Word(std::move(raw));
  }

  Word cyclic_reduce(Word const& w) {
    return cyclic_reduce(w, {});
  }

  Word cyclic_reduce(Word const& w, std::span<std::string const> alphabet) {
    auto const& ls    = w.letters();
    std::size_t begin = 0, end = ls.size();
    while (end - begin >= 2 && ls[begin].name == ls[end - 1].name
           && ls[begin].exponent == -ls[end - 1].exponent) {
      ++begin;
      --end;
    }
    std::vector<Letter> core(ls.begin() + begin, ls.begin() + end);
    if (core.empty()) {
      return Word();
    }
    LetterOrder const order{alphabet};
    auto              rotation_less = [&](std::size_t a, std::size_t b) {
      for (std::size_t k = 0; k < core.size(); ++k) {
        auto const& la = core[(a + k) % core.size()];
        auto const& lb = core[(b + k) % core.size()];
        if (order.less(la, lb)) {
          return true;
        }
        if (order.less(lb, la)) {
          return false;
        }
      }
      return false;
    };
    std::size_t best = 0;
    for (std::size_t r = 1; r < core.size(); ++r) {
      if (rotation_less(r, best)) {
        best = r;
      }
    }
    std::rotate(core.begin(), core.begin() + best, core.end());
    return Word(std::move(core));
  }

  std::vector<std::string> make_alphabet(std::span<Word const> words, std::size_t rank) {
    std::set<std::string> names;
    for (auto const& w : words) {
      for (auto const& l : w.letters()) {
        names.insert(l.name);
      }
    }
    if (names.size() > rank) {
      throw WordError("words use " + std::to_string(names.size()) + " generators, more than rank "
                      + std::to_string(rank));
    }
    std::vector<std::string> alphabet(names.begin(), names.end());
    for (std::size_t k = 1; alphabet.size() < rank; ++k) {
      auto candidate = "x" + std::to_string(k);
      if (!names.contains(candidate)) {
        alphabet.push_back(candidate);
      }
    }
    return alphabet;
  }

  std::vector<LetterCode> encode(Word const& w, std::span<std::string const> alphabet) {
    std::vector<LetterCode> codes;
    codes.reserve(w.size());
    for (auto const& l : w.letters()) {
      auto it = std::find(alphabet.begin(), alphabet.end(), l.name);
      if (it == alphabet.end()) {
        throw WordError("unknown generator '" + l.name + "'");
      }
      auto g = static_cast<LetterCode>(it - alphabet.begin());
      codes.push_back(2 * g + (l.exponent < 0 ? 1 : 0));
    }
    return codes;
  }

  Word decode(std::span<LetterCode const> codes, std::span<std::string const> alphabet) {
    std::vector<Letter> raw;
    raw.reserve(codes.size());
    for (auto c : codes) {
      raw.push_back({alphabet[c >> 1], (c & 1) ? -1 : 1});
    }
    return Word(std::move(raw));
  }

  std::vector<LetterCode> free_reduce(std::span<LetterCode const> codes) {
    std::vector<LetterCode> out;
    out.reserve(codes.size());
    for (auto c : codes) {
      if (!out.empty() && out.back() == (c ^ 1u)) {
        out.pop_back();
      } else {
        out.push_back(c);
      }
    }
    return out;
  }

  std::vector<LetterCode> cyclic_core(std::span<LetterCode const> codes) {
    auto        r     = free_reduce(codes);
    std::size_t begin = 0, end = r.size();
    while (end - begin >= 2 && r[begin] == (r[end - 1] ^ 1u)) {
      ++begin;
      --end;
    }
    return {r.begin() + begin, r.begin() + end};
  }

  std::vector<LetterCode> least_rotation(std::span<LetterCode const> codes) {
    std::vector<LetterCode> best(codes.begin(), codes.end());
    std::vector<LetterCode> rot = best;
    for (std::size_t r = 1; r < codes.size(); ++r) {
      std::rotate(rot.begin(), rot.begin() + 1, rot.end());
      if (rot < best) {
        best = rot;
      }
    }
    return best;
  }

}  // namespace ffactor
