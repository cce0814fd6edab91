#ifndef FFACTOR_SUBGROUP_HPP_
#define FFACTOR_SUBGROUP_HPP_

#include <optional>
#include <string>
#include <vector>

#include "ffactor/fingroup.hpp"
#include "ffactor/homcount.hpp"
#include "ffactor/presentation.hpp"

namespace ffactor {

  // A finitely generated subgroup H of G: an abstract presentation of H and,
  // for every generator of H (in order), its image as a word over G.
  struct SubgroupSpec {
    Presentation      presentation;
    std::vector<Word> embedding;

    // Throws PresentationError when the embedding does not match the
    // generators of either presentation.
    void validate(Presentation const& g) const;
  };

  // H = <words> in a free group G: the abstract presentation is free on
  // h1..hk and the embedding is the free basis read off the folded
  // Stallings graph. Throws PresentationError if G has relators.
  SubgroupSpec subgroup_of_free_group(Presentation const& g, std::vector<Word> const& words);

  // A word over H's generators rewritten over G's through the embedding.
  Word embed(SubgroupSpec const& h, Word const& w);

  // Every relator of H must map to the identity of G. For free G this is
  // exact (free reduction); otherwise a catalog group sending an embedded
  // relator off the identity proves the embedding wrong, and passing proves
  // nothing. Returns a diagnostic, or nullopt when no defect is found.
  std::optional<std::string> embedding_defect(Presentation const&             g,
                                              SubgroupSpec const&             h,
                                              std::vector<FiniteGroup> const& catalog,
                                              CountOptions const&             options = {});

  // The identity embedding of G into itself.
  SubgroupSpec whole_subgroup(Presentation const& g);

}  // namespace ffactor

#endif  // FFACTOR_SUBGROUP_HPP_
