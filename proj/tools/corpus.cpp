#include "corpus.hpp"

#include <set>
#include <stdexcept>

namespace ffactor::cli {

  Word random_word(std::mt19937_64& rng, std::vector<std::string> const& generators, std::size_t length) {
    std::uniform_int_distribution<std::size_t> pick(0, 2 * generators.size() - 1);
    std::vector<Letter>                         letters;
    while (letters.size() < length) {
      auto const   c = pick(rng);
      Letter const l{generators[c / 2], c % 2 == 0 ? 1 : -1};
      if (!letters.empty() && letters.back().name == l.name && letters.back().exponent == -l.exponent) {
        continue;
      }
      letters.push_back(l);
    }
    return Word(std::move(letters));
  }

  Presentation random_presentation(std::mt19937_64& rng,
                                   std::size_t      max_generators,
                                   std::size_t      max_relators,
                                   std::size_t      max_relator_length) {
    static char const* const names[] = {"x", "y", "z", "u", "v", "w"};
    std::uniform_int_distribution<std::size_t> gens(1, std::min<std::size_t>(max_generators, 6));
    std::uniform_int_distribution<std::size_t> rels(0, max_relators);
    std::uniform_int_distribution<std::size_t> len(1, max_relator_length);
    Presentation                               p;
    for (std::size_t i = 0, k = gens(rng); i < k; ++i) {
      p.generators.emplace_back(names[i]);
    }
    for (std::size_t i = 0, k = rels(rng); i < k; ++i) {
      p.relators.push_back(random_word(rng, p.generators, len(rng)));
    }
    return p;
  }

  SubgroupSpec random_cyclic_subgroup(std::mt19937_64& rng, Presentation const& g, std::size_t max_length) {
    std::uniform_int_distribution<std::size_t> len(1, max_length);
    return SubgroupSpec{Presentation{{"h"}, {}}, {random_word(rng, g.generators, len(rng))}};
  }

  std::vector<Word> cyclic_word_classes(std::size_t rank, std::size_t max_length) {
    static char const* const names[] = {"x", "y", "z", "w"};
    if (rank == 0 || rank > 4) {
      throw std::invalid_argument("cyclic_word_classes needs rank 1..4");
    }
    std::vector<std::string> alphabet(names, names + rank);
    std::vector<Word>                    out;
    std::set<std::vector<LetterCode>>    seen;
    std::vector<LetterCode>              codes;
    auto const                           letters = static_cast<LetterCode>(2 * rank);
    for (std::size_t length = 1; length <= max_length; ++length) {
      codes.assign(length, 0);
      while (true) {
        auto core = cyclic_core(free_reduce(codes));
        if (core.size() == length) {
          auto const a = least_rotation(core);
          std::vector<LetterCode> inverse(core.rbegin(), core.rend());
          for (auto& c : inverse) {
            c ^= 1;
          }
          auto const inv = least_rotation(inverse);
          auto const canon = std::min(a, inv);
          if (seen.insert(canon).second) {
            out.push_back(decode(canon, alphabet));
          }
        }
        std::size_t k = 0;
        while (k < length && ++codes[k] == letters) {
          codes[k++] = 0;
        }
        if (k == length) {
          break;
        }
      }
    }
    return out;
  }

}  // namespace ffactor::cli
