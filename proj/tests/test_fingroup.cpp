#include "doctest.h"
#include "ffactor/fingroup.hpp"
#include "oracles.hpp"

using namespace ffactor;

TEST_CASE("cyclic group arithmetic") {
  auto c5 = make_cyclic(5);
  CHECK(c5.order() == 5);
  CHECK(c5.name() == "cyclic-5");
  for (Elem i = 0; i < 5; ++i) {
    for (Elem j = 0; j < 5; ++j) {
      CHECK(c5.mul(i, j) == (i + j) % 5);
    }
    CHECK(c5.mul(i, c5.inv(i)) == 0);
  }
  CHECK(c5.check_axioms().empty());
  CHECK_THROWS_AS(make_cyclic(0), GroupError);
  CHECK_THROWS_AS(make_cyclic(257), GroupError);
}

TEST_CASE("C6 is isomorphic to C2 x C3") {
  auto c6  = make_cyclic(6);
  auto c23 = make_product(make_cyclic(2), make_cyclic(3));
  CHECK(oracle::isomorphic(c6, c23));
  CHECK(find_isomorphism(c6, c23).has_value());
  CHECK_FALSE(find_isomorphism(c6, make_symmetric(3)).has_value());
  CHECK_FALSE(oracle::isomorphic(c6, make_symmetric(3)));
}

TEST_CASE("symmetric and alternating groups") {
  auto s3 = make_symmetric(3);
  CHECK(s3.order() == 6);
  CHECK_FALSE(s3.is_abelian());
  CHECK(s3.has_permutations());
  // even permutations come first
  CHECK(s3.element_order(1) == 3);
  CHECK(s3.element_order(2) == 3);
  for (Elem t = 3; t < 6; ++t) {
    CHECK(s3.element_order(t) == 2);
  }
  auto s4 = make_symmetric(4);
  auto a4 = make_alternating(4);
  CHECK(s4.order() == 24);
  CHECK(a4.order() == 12);
  for (Elem x = 0; x < 12; ++x) {
    CHECK(s4.permutation(x) == a4.permutation(x));
  }
  CHECK_THROWS_AS(make_symmetric(8), GroupError);
}

TEST_CASE("permutation realization is faithful") {
  for (auto const& g : {make_symmetric(4), make_alternating(4), from_permutations(4, {{1, 0, 3, 2}, {1, 2, 3, 0}})}) {
    REQUIRE(g.has_permutations());
    std::set<Permutation> distinct;
    for (std::size_t x = 0; x < g.order(); ++x) {
      distinct.insert(g.permutation(static_cast<Elem>(x)));
      for (std::size_t y = 0; y < g.order(); ++y) {
        auto const& px = g.permutation(static_cast<Elem>(x));
        auto const& py = g.permutation(static_cast<Elem>(y));
        Permutation composed(px.size());
        for (std::size_t i = 0; i < px.size(); ++i) {
          composed[i] = px[py[i]];
        }
        CHECK(g.permutation(g.mul(static_cast<Elem>(x), static_cast<Elem>(y))) == composed);
      }
    }
    CHECK(distinct.size() == g.order());
  }
}

TEST_CASE("from_permutations builds the dihedral group of the square") {
  auto g = from_permutations(4, {{1, 2, 3, 0}, {0, 3, 2, 1}});
  CHECK(g.order() == 8);
  CHECK(oracle::isomorphic(g, make_dihedral(4)));
  CHECK_FALSE(oracle::isomorphic(g, make_quaternion8()));
  CHECK_THROWS_AS(from_permutations(5, {{1, 2, 3, 4, 0}, {1, 0, 2, 3, 4}}, 100), GroupError);
}

TEST_CASE("from_table relabels the identity and rejects non-groups") {
  // C3 with the identity stored as element 2.
  std::vector<std::vector<std::size_t>> t = {{1, 2, 0}, {2, 0, 1}, {0, 1, 2}};
  auto g = FiniteGroup::from_table(t, "shifted");
  CHECK(g.order() == 3);
  for (Elem x = 0; x < 3; ++x) {
    CHECK(g.mul(0, x) == x);
    CHECK(g.mul(x, 0) == x);
  }
  CHECK(oracle::isomorphic(g, make_cyclic(3)));
  CHECK_THROWS_AS(FiniteGroup::from_table({{0, 1}, {1, 1}}, "bad"), GroupError);
  CHECK_THROWS_AS(FiniteGroup::from_table({{0, 1}, {1}}, "ragged"), GroupError);
  // a Latin square that is not associative
  std::vector<std::vector<std::size_t>> loop = {{0, 1, 2, 3, 4}, {1, 0, 3, 4, 2}, {2, 4, 0, 1, 3},
                                                {3, 2, 4, 0, 1}, {4, 3, 1, 2, 0}};
  CHECK_THROWS_AS(FiniteGroup::from_table(loop, "loop"), GroupError);
}

TEST_CASE("subgroup lattices match subset enumeration") {
  for (auto const& g : {make_cyclic(6), make_product(make_cyclic(2), make_cyclic(2)), make_symmetric(3),
                        make_dihedral(4), make_quaternion8(), make_alternating(4),
                        make_product(make_cyclic(2), make_cyclic(4))}) {
    std::set<std::vector<Elem>> mine;
    for (auto const& s : all_subgroups(g)) {
      mine.insert(s.elements);
    }
    CHECK_MESSAGE(mine == oracle::subgroups(g), g.name());
  }
  CHECK(all_subgroups(make_symmetric(4)).size() == 30);
}

TEST_CASE("automorphism groups match brute force") {
  for (auto const& g : {make_cyclic(5), make_cyclic(6), make_product(make_cyclic(2), make_cyclic(2)),
                        make_symmetric(3), make_dihedral(4), make_quaternion8()}) {
    auto mine  = automorphisms(g);
    auto brute = oracle::automorphisms(g);
    std::set<std::vector<Elem>> a;
    for (auto const& iso : mine) {
      a.insert(iso.map);
    }
    CHECK_MESSAGE(a == std::set<std::vector<Elem>>(brute.begin(), brute.end()), g.name());
  }
}

TEST_CASE("isomorphisms between subgroups") {
  auto c24 = make_product(make_cyclic(2), make_cyclic(4));
  auto x   = make_subgroup(c24, {0, 1});
  auto y2  = make_subgroup(c24, c24.closure(std::vector<Elem>{4}));
  REQUIRE(y2.size() == 2);
  auto isos = isomorphisms(x, y2);
  REQUIRE(isos.size() == 1);
  CHECK(isos[0](1) == 4);
  CHECK(isomorphisms(x, whole_group(c24)).empty());
  CHECK_THROWS_AS(make_subgroup(c24, {0, 2}), GroupError);
}

TEST_CASE("subgroups as groups") {
  auto s4 = make_symmetric(4);
  for (auto const& h : all_subgroups(s4)) {
    auto g = h.as_group();
    CHECK(g.order() == h.size());
    CHECK(g.check_axioms().empty());
    for (std::size_t i = 0; i < g.order(); ++i) {
      for (std::size_t j = 0; j < g.order(); ++j) {
        CHECK(h.elements[g.mul(static_cast<Elem>(i), static_cast<Elem>(j))] == s4.mul(h.elements[i], h.elements[j]));
      }
    }
  }
}

TEST_CASE("default catalog") {
  auto cat = default_catalog();
  std::vector<std::size_t> orders;
  for (auto const& g : cat) {
    orders.push_back(g.order());
    CHECK(g.check_axioms().empty());
  }
  CHECK(orders == std::vector<std::size_t>{2, 3, 4, 4, 5, 6, 6, 8, 8, 12, 24});
  CHECK(cat[2].name() == "cyclic-2 x cyclic-2");
}
