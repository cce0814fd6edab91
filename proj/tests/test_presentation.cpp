#include <random>

#include "corpus.hpp"
#include "doctest.h"
#include "ffactor/homcount.hpp"
#include "ffactor/presentation.hpp"
#include "oracles.hpp"

using namespace ffactor;

namespace {
  Presentation pres(std::vector<std::string> gens, std::vector<char const*> rels) {
    Presentation p{std::move(gens), {}};
    for (auto r : rels) {
      p.relators.push_back(Word::parse(r, p.generators));
    }
    return p;
  }
  Elem find_transposition(FiniteGroup const& s3) {
    for (Elem x = 1; x < s3.order(); ++x) {
      if (s3.element_order(x) == 2) {
        return x;
      }
    }
    return 0;
  }
}  // namespace

TEST_CASE("free presentations and free products") {
  CHECK(free_presentation(2).str() == "< x1, x2 | >");
  auto ab = free_product(pres({"a"}, {"a a"}), pres({"b"}, {"b b b"}));
  CHECK(ab.str() == "< a, b | a a, b b b >");
  std::map<std::string, std::string> renamed;
  auto aa = free_product(pres({"a"}, {"a a"}), pres({"a"}, {"a a"}), &renamed);
  CHECK(aa.str() == "< a, a' | a a, a' a' >");
  CHECK(renamed.at("a") == "a'");
  CHECK_THROWS_AS(pres({"a", "a"}, {}).validate(), PresentationError);
}

TEST_CASE("count_homs examples") {
  auto s3 = make_symmetric(3);
  auto c2 = make_cyclic(2);
  auto f2 = pres({"x", "y"}, {});
  CHECK(count_homs(f2, s3).total == 36);
  Constraint const off[] = {{Word::parse("x x"), 1}};
  Constraint const on[]  = {{Word::parse("x x"), 0}};
  CHECK(count_homs(f2, c2, off).total == 0);
  CHECK(count_homs(f2, c2, on).total == 4);
  CHECK(count_homs(pres({"a", "b"}, {"a a", "b b b"}), s3).total == 12);
  Constraint const ab[] = {{Word::parse("a b"), find_transposition(s3)}};
  CHECK(count_homs(pres({"a", "b"}, {"a a", "b b"}), s3, ab).total == 2);
}

TEST_CASE("count_epis examples") {
  auto c2 = make_cyclic(2);
  auto v4 = make_product(c2, c2);
  CHECK(count_epis(pres({"x"}, {}), c2).total == 1);
  CHECK(count_homs(pres({"x", "y"}, {}), v4).total == 16);
  CHECK(count_epis(pres({"x", "y"}, {}), v4).total == 6);
  CHECK(count_epis(pres({"a"}, {"a a"}), make_symmetric(3)).total == 0);
  CHECK(count_epis(pres({"a", "b"}, {"a a"}), make_trivial()).total == 1);
}

TEST_CASE("zero generators") {
  Presentation empty;
  CHECK(count_homs(empty, make_symmetric(3)).total == 1);
  CHECK(count_epis(empty, make_symmetric(3)).total == 0);
  CHECK(count_epis(empty, make_trivial()).total == 1);
}

TEST_CASE("residual nontriviality") {
  auto cat = default_catalog();
  auto f2  = pres({"x", "y"}, {});
  auto r1  = residual_nontriviality(f2, Word::parse("x"), cat);
  CHECK(r1.nontrivial);
  CHECK(r1.witness == "cyclic-2");
  CHECK_FALSE(residual_nontriviality(pres({"a"}, {"a a"}), Word::parse("a a"), cat).nontrivial);
  auto r3 = residual_nontriviality(f2, Word::parse("x y x^-1 y^-1"), cat);
  CHECK(r3.nontrivial);
  CHECK(r3.witness == "symmetric-3");
  auto const& s3 = cat[6];
  REQUIRE(s3.name() == "symmetric-3");
  CHECK(evaluate(Word::parse("x y x^-1 y^-1"), f2, r3.hom, s3) == r3.image);
  CHECK(r3.image != 0);
}

TEST_CASE("free groups: |Hom(F_r, P)| = |P|^r") {
  for (auto const& p : default_catalog()) {
    std::uint64_t expect = 1;
    for (std::size_t r = 0; r <= 4; ++r) {
      CHECK(count_homs(free_presentation(r), p).total == expect);
      expect *= p.order();
    }
  }
}

TEST_CASE("backtracking, odometer and brute force agree on random presentations") {
  std::mt19937_64 rng(3);
  auto            cat = default_catalog();
  for (int trial = 0; trial < 60; ++trial) {
    auto g = cli::random_presentation(rng);
    for (auto const& p : cat) {
      if (p.order() > 12) {
        continue;
      }
      auto const brute = oracle::homs(g, p);
      CHECK(count_homs(g, p).total == brute);
      CHECK(reference::count_assignments(g, p, {}, false) == brute);
      auto const brute_epi = oracle::homs(g, p, {}, true);
      CHECK(count_epis(g, p).total == brute_epi);
      CHECK(reference::count_assignments(g, p, {}, true) == brute_epi);
    }
  }
}

TEST_CASE("constrained counts agree with brute force") {
  std::mt19937_64 rng(5);
  auto            cat = default_catalog();
  for (int trial = 0; trial < 40; ++trial) {
    auto       g      = cli::random_presentation(rng);
    auto const target = cli::random_word(rng, g.generators, 1 + rng() % 3);
    for (auto const& p : cat) {
      if (p.order() > 8) {
        continue;
      }
      Elem const       t    = static_cast<Elem>(rng() % p.order());
      Constraint const c[]  = {{target, t}};
      CHECK(count_homs(g, p, c).total == oracle::homs(g, p, {{target, t}}));
      CHECK(count_epis(g, p, c).total == oracle::homs(g, p, {{target, t}}, true));
    }
  }
}

TEST_CASE("parallel counting equals serial counting") {
  std::mt19937_64 rng(9);
  auto            cat = default_catalog();
  for (int trial = 0; trial < 30; ++trial) {
    auto g = cli::random_presentation(rng, 3, 2, 5);
    for (auto const& p : cat) {
      auto a = count_homs(g, p, {}, {.workers = 1});
      for (std::size_t workers : {2, 3, 8}) {
        auto b = count_homs(g, p, {}, {.workers = workers});
        CHECK(a.total == b.total);
        CHECK(a.nodes == b.nodes);
        CHECK(count_epis(g, p, {}, {.workers = 1}).total == count_epis(g, p, {}, {.workers = workers}).total);
      }
    }
  }
}

TEST_CASE("free products multiply hom counts") {
  std::vector<Presentation> parts = {pres({"a"}, {"a a"}), pres({"b"}, {"b b b"}), pres({"c", "d"}, {"c d c^-1 d^-1"}),
                                     free_presentation(1)};
  for (auto const& a : parts) {
    for (auto const& b : parts) {
      auto ab = free_product(a, b);
      for (auto const& p : default_catalog()) {
        CHECK(count_homs(ab, p).total == count_homs(a, p).total * count_homs(b, p).total);
      }
    }
  }
}

TEST_CASE("epimorphisms never exceed homomorphisms") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 30; ++trial) {
    auto g = cli::random_presentation(rng);
    for (auto const& p : default_catalog()) {
      CHECK(count_epis(g, p).total <= count_homs(g, p).total);
    }
    CHECK(count_epis(g, make_trivial()).total == count_homs(g, make_trivial()).total);
  }
}

TEST_CASE("presentations of finite groups are faithful") {
  // surjective endomorphisms of a finite group are its automorphisms;
  // |Aut(A4)| = |Aut(S4)| = 24
  std::map<std::string, std::size_t> const known = {{"alternating-4", 24}, {"symmetric-4", 24}};
  for (auto const& p : default_catalog()) {
    auto       gp  = presentation_of(p);
    auto const aut = p.order() <= 8 ? oracle::automorphisms(p).size() : known.at(p.name());
    CHECK_MESSAGE(count_epis(gp.presentation, p).total == aut, p.name());
    for (std::size_t x = 0; x < p.order(); ++x) {
      CHECK(evaluate(gp.element_words[x], gp.presentation, gp.generator_elements, p) == x);
    }
  }
}

TEST_CASE("enumeration order and budget") {
  auto c3  = make_cyclic(3);
  auto all = enumerate_homs(free_presentation(2), c3);
  REQUIRE(all.size() == 9);
  CHECK(std::is_sorted(all.begin(), all.end()));
  CHECK(find_hom(pres({"a"}, {"a a"}), c3) == std::vector<Elem>{0});
  CHECK_THROWS_AS(count_homs(free_presentation(4), make_symmetric(4), {}, {.node_budget = 1000}), BudgetExceeded);
  CHECK_THROWS_AS(count_homs(free_presentation(4), make_symmetric(4), {}, {.workers = 4, .node_budget = 1000}),
                  BudgetExceeded);
  CHECK_THROWS_AS(count_homs(free_presentation(9), c3), PresentationError);
}
