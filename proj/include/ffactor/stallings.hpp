#ifndef FFACTOR_STALLINGS_HPP_
#define FFACTOR_STALLINGS_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "ffactor/word.hpp"

namespace ffactor {

  struct StallingsEdge {
    std::size_t from;
    std::size_t to;
    std::size_t label;  // index into the alphabet

    auto operator<=>(StallingsEdge const&) const = default;
  };

  // Folded core graph of a finitely generated subgroup of a free group.
  //
  // Vertices are numbered in breadth-first order from the base (vertex 0),
  // visiting labels in alphabet order, outgoing before incoming; edges are
  // sorted. Two graphs of the same subgroup therefore compare equal.
  struct StallingsGraph {
    std::vector<std::string>   alphabet;
    std::size_t                vertex_count = 1;
    std::vector<StallingsEdge> edges;
    std::size_t                base   = 0;
    bool                       folded = false;

    bool operator==(StallingsGraph const&) const = default;
  };

  StallingsGraph stallings_fold(std::vector<Word> const& generators, std::vector<std::string> alphabet);
  // Alphabet from make_alphabet(generators, rank).
  StallingsGraph stallings_fold(std::vector<Word> const& generators, std::size_t rank);

  bool membership(StallingsGraph const& g, Word const& w);

  std::size_t subgroup_rank(StallingsGraph const& g);
  // Index in the free group of the given rank; nullopt when infinite.
  std::optional<std::size_t> subgroup_index(StallingsGraph const& g, std::size_t rank);
  std::vector<Word>          free_basis(StallingsGraph const& g);

  std::string to_dot(StallingsGraph const& g);

}  // namespace ffactor

#endif  // FFACTOR_STALLINGS_HPP_
