#include <cmath>

#include "ffactor/homcount.hpp"

namespace ffactor::reference {

  std::uint64_t count_assignments(Presentation const&         g,
                                  FiniteGroup const&          p,
                                  std::span<Constraint const> constraints,
                                  bool                        epimorphisms) {
    g.validate();
    std::size_t const k = g.generators.size();
    if (std::pow(static_cast<double>(p.order()), static_cast<double>(k)) > 1e8) {
      throw BudgetExceeded("reference enumeration limited to 10^8 assignments");
    }
    std::vector<std::vector<LetterCode>> relators;
    for (auto const& r : g.relators) {
      relators.push_back(encode(r, g.generators));
    }
    std::vector<std::vector<LetterCode>> words;
    for (auto const& c : constraints) {
      words.push_back(encode(c.word, g.generators));
    }
    auto value = [&](std::vector<LetterCode> const& codes, std::vector<Elem> const& imgs) {
      Elem cur = 0;
      for (auto c : codes) {
        Elem x = imgs[c >> 1];
        cur    = p.mul(cur, (c & 1) ? p.inv(x) : x);
      }
      return cur;
    };
    std::uint64_t     count = 0;
    std::vector<Elem> imgs(k, 0);
    while (true) {
      bool ok = true;
      for (auto const& r : relators) {
        if (value(r, imgs) != 0) {
          ok = false;
          break;
        }
      }
      for (std::size_t i = 0; ok && i < words.size(); ++i) {
        ok = value(words[i], imgs) == constraints[i].target;
      }
      if (ok && epimorphisms) {
        ok = p.closure(imgs).size() == p.order();
      }
      count += ok ? 1 : 0;
      std::size_t pos = 0;
      while (pos < k && ++imgs[pos] == p.order()) {
        imgs[pos++] = 0;
      }
      if (pos == k) {
        break;
      }
    }
    return count;
  }

}  // namespace ffactor::reference
