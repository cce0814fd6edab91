#ifndef FFACTOR_TESTS_GOG_CORPUS_HPP_
#define FFACTOR_TESTS_GOG_CORPUS_HPP_

#include <string>
#include <vector>

#include "ffactor/gog.hpp"

namespace corpus {

  using namespace ffactor;

  inline GogEdge edge(std::string id, std::string from, std::string to, FiniteGroup group, std::vector<Elem> iota,
                      std::vector<Elem> tau) {
    return GogEdge{std::move(id), std::move(from), std::move(to), std::move(group), std::move(iota), std::move(tau)};
  }

  // C2 * C3
  inline GraphOfGroups c2_star_c3() {
    GraphOfGroups g;
    g.vertices = {{"u", make_cyclic(2)}, {"v", make_cyclic(3)}};
    g.edges    = {edge("e", "u", "v", make_trivial(), {0}, {0})};
    return g;
  }

  // C4 *_{C2} C4
  inline GraphOfGroups c4_amalgam() {
    GraphOfGroups g;
    g.vertices = {{"v", make_cyclic(4)}, {"w", make_cyclic(4)}};
    g.edges    = {edge("e", "v", "w", make_cyclic(2), {0, 2}, {0, 2})};
    return g;
  }

  // Two C2 vertices joined by two parallel trivial edges: C2 * C2 * Z.
  inline GraphOfGroups parallel_edges() {
    GraphOfGroups g;
    g.vertices = {{"v", make_cyclic(2)}, {"w", make_cyclic(2)}};
    g.edges    = {edge("e1", "v", "w", make_trivial(), {0}, {0}), edge("e2", "v", "w", make_trivial(), {0}, {0})};
    return g;
  }

  // HNN extension of C4 along a loop identifying its C2 with itself.
  inline GraphOfGroups c4_loop() {
    GraphOfGroups g;
    g.vertices = {{"v", make_cyclic(4)}};
    g.edges    = {edge("l", "v", "v", make_cyclic(2), {0, 2}, {0, 2})};
    return g;
  }

  // C2 -> S3 with an onto edge map at the C2 end, plus a C3 vertex hanging
  // off S3 by a trivial edge and a triangle closing through a C2 edge.
  inline GraphOfGroups triangle() {
    GraphOfGroups g;
    g.vertices = {{"a", make_cyclic(2)}, {"s", make_symmetric(3)}, {"b", make_cyclic(3)}};
    g.edges    = {edge("e1", "a", "s", make_cyclic(2), {0, 1}, {0, 3}), edge("e2", "s", "b", make_trivial(), {0}, {0}),
                  edge("e3", "b", "a", make_trivial(), {0}, {0})};
    return g;
  }

  inline std::vector<GraphOfGroups> all() {
    return {c2_star_c3(), c4_amalgam(), parallel_edges(), c4_loop(), triangle()};
  }

}  // namespace corpus

#endif  // FFACTOR_TESTS_GOG_CORPUS_HPP_
