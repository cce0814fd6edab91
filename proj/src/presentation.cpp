#include "ffactor/presentation.hpp"

#include <algorithm>
#include <set>

namespace ffactor {

  void Presentation::validate() const {
    std::set<std::string> names;
    for (auto const& g : generators) {
      if (!is_generator_name(g)) {
        throw PresentationError("invalid generator name '" + g + "'");
      }
      if (!names.insert(g).second) {
        throw PresentationError("duplicate generator '" + g + "'");
      }
    }
    for (auto const& r : relators) {
      for (auto const& l : r.letters()) {
        if (!names.contains(l.name)) {
          throw PresentationError("relator '" + r.str() + "' uses undeclared generator '" + l.name + "'");
        }
      }
    }
  }

  std::optional<std::size_t> Presentation::generator_index(std::string const& name) const {
    auto it = std::find(generators.begin(), generators.end(), name);
    if (it == generators.end()) {
      return std::nullopt;
    }
    return static_cast<std::size_t>(it - generators.begin());
  }

  std::string Presentation::str() const {
    std::string s = "<";
    for (std::size_t i = 0; i < generators.size(); ++i) {
      s += (i ? ", " : " ") + generators[i];
    }
    s += " |";
    for (std::size_t i = 0; i < relators.size(); ++i) {
      s += (i ? ", " : " ") + relators[i].str();
    }
    return s + " >";
  }

  Presentation free_presentation(std::size_t rank) {
    std::vector<std::string> names;
    for (std::size_t i = 1; i <= rank; ++i) {
      names.push_back("x" + std::to_string(i));
    }
    return free_presentation(std::move(names));
  }

  Presentation free_presentation(std::vector<std::string> names) {
    Presentation p{std::move(names), {}};
    p.validate();
    return p;
  }

  Presentation free_product(Presentation const&                  a,
                            Presentation const&                  b,
                            std::map<std::string, std::string>* renamed) {
    std::set<std::string>              used(a.generators.begin(), a.generators.end());
    std::map<std::string, std::string> rename;
    Presentation                       result = a;
    for (auto const& g : b.generators) {
      std::string name = g;
      while (used.contains(name)) {
        name += '\'';
      }
      used.insert(name);
      rename[g] = name;
      result.generators.push_back(name);
    }
    for (auto const& r : b.relators) {
      result.relators.push_back(r.renamed(rename));
    }
    if (renamed != nullptr) {
      *renamed = std::move(rename);
    }
    return result;
  }

  GroupPresentation presentation_of(FiniteGroup const&       g,
                                    std::vector<std::string> names,
                                    std::string const&       prefix) {
    GroupPresentation gp;
    gp.generator_elements = g.generating_set();
    std::size_t const k   = gp.generator_elements.size();
    for (std::size_t i = names.size(); i < k; ++i) {
      names.push_back(prefix + std::to_string(i + 1));
    }
    names.resize(k);
    gp.presentation.generators = names;

    std::vector<Word> words(g.order());
    std::vector<char> seen(g.order(), 0);
    std::vector<Elem> queue{0};
    seen[0] = 1;
    for (std::size_t i = 0; i < queue.size(); ++i) {
      for (std::size_t s = 0; s < k; ++s) {
        Elem y = g.mul(queue[i], gp.generator_elements[s]);
        if (!seen[y]) {
          seen[y] = 1;
          words[y] = words[queue[i]] * Word({{names[s], 1}});
          queue.push_back(y);
        }
      }
    }
    std::set<std::string> distinct;
    for (auto x : queue) {
      for (std::size_t s = 0; s < k; ++s) {
        Elem y = g.mul(x, gp.generator_elements[s]);
        Word r = cyclic_reduce(words[x] * Word({{names[s], 1}}) * words[y].inverse(), names);
        if (!r.empty() && distinct.insert(r.str()).second) {
          gp.presentation.relators.push_back(std::move(r));
        }
      }
    }
    gp.element_words = std::move(words);
    gp.presentation.validate();
    return gp;
  }

}  // namespace ffactor
