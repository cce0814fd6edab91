#ifndef FFACTOR_GOG_HPP_
#define FFACTOR_GOG_HPP_

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ffactor/fingroup.hpp"
#include "ffactor/presentation.hpp"
#include "ffactor/subgroup.hpp"

namespace ffactor {

  // An edge of a graph of finite groups. iota and tau map edge-group element
  // indices into the vertex groups at from and to.
  struct GogEdge {
    std::string       id;
    std::string       from;
    std::string       to;
    FiniteGroup       group;
    std::vector<Elem> iota;
    std::vector<Elem> tau;
  };

  // A finite graph of finite groups. Vertices keep declaration order; loops
  // and parallel edges are allowed.
  struct GraphOfGroups {
    std::vector<std::pair<std::string, FiniteGroup>> vertices;
    std::vector<GogEdge>                             edges;

    std::optional<std::size_t> vertex_index(std::string const& name) const;
    FiniteGroup const&         vertex_group(std::string const& name) const;
  };

  // Connectivity and monomorphism checks; empty when valid.
  std::vector<std::string> validate(GraphOfGroups const& g);

  // A maximal subtree as sorted indices into GraphOfGroups::edges.
  struct MaximalTree {
    std::vector<std::size_t> edges;

    bool contains(std::size_t e) const;
    bool operator==(MaximalTree const&) const = default;
  };

  // Breadth-first tree from seed, edges explored in declaration order.
  MaximalTree maximal_tree(GraphOfGroups const& g, std::string const& seed);
  // The tree grown from the first declared vertex.
  MaximalTree canonical_tree(GraphOfGroups const& g);
  // Every maximal subtree, in lexicographic order of edge indices.
  std::vector<MaximalTree> all_maximal_trees(GraphOfGroups const& g);

  // Contracts tree edges (of the canonical tree) joining distinct vertices
  // whose iota or tau is onto, in declaration order, until none is left.
  GraphOfGroups normalize(GraphOfGroups const& g);

  struct FundamentalPresentation {
    Presentation presentation;
    // Per vertex (declaration order): its generator names and a word for
    // every element of the vertex group.
    std::vector<std::string>                       vertex_names;
    std::vector<std::vector<std::string>>          vertex_generators;
    std::vector<std::vector<Word>>                 vertex_relators;
    std::vector<std::vector<Word>>                 vertex_embeddings;
    std::map<std::string, std::string>             stable_letters;  // edge id -> generator, off-tree edges
  };

  // Generators: a small generating set per vertex group (names a, b, c, ...
  // skipping q) and q_<edge id> for every edge outside the tree. Relators:
  // vertex relators, then per edge and edge-group generator s either
  // i(s) t(s)^-1 (tree edge) or q i(s) q^-1 t(s)^-1 (other edges).
  FundamentalPresentation fundamental_presentation(GraphOfGroups const& g, MaximalTree const& t);

  // The vertex group as a subgroup of the fundamental group.
  SubgroupSpec vertex_subgroup(FundamentalPresentation const& fp, std::string const& vertex);

  // Elements of G_v that can be carried through every edge of the tree
  // geodesic from v to w (preimage under the map at the near end, image
  // under the map at the far end).
  Subgroup vertex_intersection(GraphOfGroups const& g,
                               MaximalTree const&   t,
                               std::string const&   v,
                               std::string const&   w);

  // True iff every edge incident with v has trivial edge group.
  bool trivial_edge_free_factor_check(GraphOfGroups const& g, std::string const& v);

}  // namespace ffactor

#endif  // FFACTOR_GOG_HPP_
