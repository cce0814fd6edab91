#include "ffactor/subgroup.hpp"

#include "ffactor/stallings.hpp"

namespace ffactor {

  void SubgroupSpec::validate(Presentation const& g) const {
    presentation.validate();
    if (embedding.size() != presentation.generators.size()) {
      throw PresentationError("subgroup embedding has " + std::to_string(embedding.size())
                              + " words for " + std::to_string(presentation.generators.size())
                              + " generators");
    }
    for (auto const& w : embedding) {
      for (auto const& l : w.letters()) {
        if (!g.generator_index(l.name)) {
          throw PresentationError("embedding word '" + w.str() + "' uses unknown generator '"
                                  + l.name + "'");
        }
      }
    }
  }

  SubgroupSpec subgroup_of_free_group(Presentation const& g, std::vector<Word> const& words) {
    if (!g.is_free()) {
      throw PresentationError("subgroup_of_free_group needs a presentation without relators");
    }
    auto graph = stallings_fold(words, g.generators);
    auto basis = free_basis(graph);
    SubgroupSpec h;
    for (std::size_t i = 0; i < basis.size(); ++i) {
      h.presentation.generators.push_back("h" + std::to_string(i + 1));
    }
    h.embedding = std::move(basis);
    return h;
  }

  Word embed(SubgroupSpec const& h, Word const& w) {
    std::vector<Letter> raw;
    for (auto const& l : w.letters()) {
      auto i = h.presentation.generator_index(l.name);
      if (!i) {
        throw PresentationError("'" + l.name + "' is not a generator of H");
      }
      auto const image = l.exponent > 0 ? h.embedding[*i] : h.embedding[*i].inverse();
      raw.insert(raw.end(), image.letters().begin(), image.letters().end());
    }
    return reduce(std::move(raw));
  }

  std::optional<std::string> embedding_defect(Presentation const&             g,
                                              SubgroupSpec const&             h,
                                              std::vector<FiniteGroup> const& catalog,
                                              CountOptions const&             options) {
    h.validate(g);
    for (auto const& r : h.presentation.relators) {
      auto const image = embed(h, r);
      if (image.empty()) {
        continue;
      }
      if (g.is_free()) {
        return "relator '" + r.str() + "' of H maps to '" + image.str() + "', which is not trivial in G";
      }
      auto const verdict = residual_nontriviality(g, image, catalog, options);
      if (verdict.nontrivial) {
        return "relator '" + r.str() + "' of H maps to '" + image.str() + "', which is nontrivial in "
               + *verdict.witness;
      }
    }
    return std::nullopt;
  }

  SubgroupSpec whole_subgroup(Presentation const& g) {
    SubgroupSpec h{g, {}};
    for (auto const& name : g.generators) {
      h.embedding.push_back(Word({{name, 1}}));
    }
    return h;
  }

}  // namespace ffactor
