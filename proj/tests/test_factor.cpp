#include <random>

#include "corpus.hpp"
#include "doctest.h"
#include "ffactor/factor.hpp"
#include "ffactor/whitehead.hpp"
#include "gog_corpus.hpp"
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
  SubgroupSpec cyclic(char const* w, std::vector<char const*> rels = {}) {
    return SubgroupSpec{pres({"h"}, rels), {Word::parse(w)}};
  }
  Presentation const f2   = pres({"x", "y"}, {});
  Presentation const dinf = pres({"a", "b"}, {"a a", "b b"});
  Presentation const c2c3 = pres({"a", "b"}, {"a a", "b b b"});

  std::vector<std::uint64_t> h_values(ConstancyReport const& r) {
    std::vector<std::uint64_t> out;
    for (auto const& c : r.counts) {
      out.push_back(c.extensions);
    }
    return out;
  }

  void check_against_oracle(Presentation const& g, SubgroupSpec const& h, FiniteGroup const& p) {
    auto const report = constancy_test(g, h, p);
    auto const brute  = oracle::extension_table(g, h, p);
    REQUIRE(report.counts.size() == brute.size());
    for (std::size_t i = 0; i < brute.size(); ++i) {
      CHECK(report.counts[i].gamma == brute[i].first);
      CHECK(report.counts[i].extensions == brute[i].second);
    }
  }
}  // namespace

TEST_CASE("extension counts") {
  auto c2 = make_cyclic(2);
  auto s3 = make_symmetric(3);
  auto xy = subgroup_of_free_group(f2, {Word::parse("x y")});
  CHECK(extension_count(f2, xy, {0}, c2) == 2);
  CHECK(extension_count(f2, xy, {1}, c2) == 2);
  auto xx = subgroup_of_free_group(f2, {Word::parse("x x")});
  CHECK(extension_count(f2, xx, {0}, c2) == 4);
  CHECK(extension_count(f2, xx, {1}, c2) == 0);

  auto a     = cyclic("a", {"h h"});
  auto gamma = enumerate_gammas(a, s3);
  CHECK(gamma.size() == 4);
  for (auto const& g : gamma) {
    CHECK(extension_count(c2c3, a, g, s3) == 3);
  }
  CHECK_THROWS_AS(extension_count(c2c3, a, {1}, s3), PresentationError);
  CHECK_THROWS_AS(extension_count(c2c3, a, {0, 0}, s3), PresentationError);

  auto whole = whole_subgroup(c2c3);
  for (auto const& g : enumerate_gammas(whole, s3)) {
    CHECK(extension_count(c2c3, whole, g, s3) == 1);
  }
}

TEST_CASE("epimorphism extension counts") {
  auto c2 = make_cyclic(2);
  auto x  = subgroup_of_free_group(f2, {Word::parse("x")});
  CHECK(epi_extension_count(f2, x, {1}, c2) == 2);
  auto c2p = pres({"a"}, {"a a"});
  CHECK(epi_extension_count(c2p, whole_subgroup(c2p), {1}, c2) == 1);
  auto triv = make_trivial();
  CHECK(epi_extension_count(c2c3, cyclic("a", {"h h"}), {0}, triv) == 1);
  CHECK(extension_count(c2c3, cyclic("a", {"h h"}), {0}, triv) == 1);
}

TEST_CASE("corestriction identity examples") {
  auto c2 = make_cyclic(2);
  auto x  = subgroup_of_free_group(f2, {Word::parse("x")});
  for (Elem g : {0, 1}) {
    auto c = corestriction_identity_check(f2, x, {g}, c2);
    CHECK(c.holds);
    CHECK(c.extensions == 2);
  }
  auto s3 = make_symmetric(3);
  auto a  = cyclic("a", {"h h"});
  for (auto const& g : enumerate_gammas(a, s3)) {
    CHECK(corestriction_identity_check(c2c3, a, g, s3).holds);
  }
  CHECK(corestriction_identity_check(c2c3, a, {0}, make_trivial()).holds);
}

TEST_CASE("corestriction identity on random instances") {
  std::mt19937_64 rng(21);
  auto const      cat = default_catalog();
  for (int trial = 0; trial < 20; ++trial) {
    auto const  g  = cli::random_presentation(rng);
    auto const  h  = cli::random_cyclic_subgroup(rng, g);
    auto const& p  = cat[rng() % cat.size()];
    auto const  gs = enumerate_gammas(h, p);
    auto const  c  = corestriction_identity_check(g, h, gs[rng() % gs.size()], p);
    CHECK(c.holds);
    CHECK(c.extensions == c.epi_sum);
  }
}

TEST_CASE("constancy examples") {
  auto c2 = make_cyclic(2);
  auto s3 = make_symmetric(3);
  auto ab = cyclic("a b");
  auto r1 = constancy_test(dinf, ab, c2);
  CHECK(r1.constant);
  CHECK(h_values(r1) == std::vector<std::uint64_t>{2, 2});
  auto r2 = constancy_test(dinf, ab, s3);
  CHECK_FALSE(r2.constant);
  CHECK(h_values(r2) == std::vector<std::uint64_t>{4, 3, 3, 2, 2, 2});
  CHECK(r2.hom_total == 16);
  CHECK(r2.partition_identity);
  REQUIRE(r2.witness_pair);
  CHECK(r2.witness_pair->first == Gamma{0});
  CHECK(r2.witness_pair->second == Gamma{1});

  auto comm = subgroup_of_free_group(f2, {Word::parse("x y x^-1 y^-1")});
  auto r3   = constancy_test(f2, comm, s3);
  CHECK(h_values(r3) == std::vector<std::uint64_t>{18, 9, 9, 0, 0, 0});
  CHECK(r3.hom_total == 36);
}

TEST_CASE("constancy tables match restriction counting") {
  for (auto const& p : {make_cyclic(2), make_cyclic(3), make_symmetric(3), make_quaternion8()}) {
    check_against_oracle(dinf, cyclic("a b"), p);
    check_against_oracle(c2c3, cyclic("a", {"h h"}), p);
    check_against_oracle(f2, subgroup_of_free_group(f2, {Word::parse("x x"), Word::parse("y x y^-1")}), p);
  }
}

TEST_CASE("constancy reports do not depend on the worker count") {
  auto const h = subgroup_of_free_group(f2, {Word::parse("x y x^-1 y^-1")});
  for (auto const& p : default_catalog()) {
    auto const a = constancy_test(f2, h, p, {.workers = 1});
    auto const b = constancy_test(f2, h, p, {.workers = 4});
    CHECK(h_values(a) == h_values(b));
    CHECK(a.witness_pair == b.witness_pair);
  }
}

TEST_CASE("partition identity and the counting formula") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 40; ++trial) {
    auto const g = cli::random_presentation(rng);
    auto const h = cli::random_cyclic_subgroup(rng, g);
    for (auto const& p : default_catalog()) {
      auto const r = constancy_test(g, h, p);
      CHECK(r.partition_identity);
      if (r.constant) {
        CHECK(r.counts.front().extensions * r.gamma_count == r.hom_total);
      }
    }
  }
}

TEST_CASE("free factors of free products give constant counts") {
  std::vector<Presentation> parts = {pres({"a"}, {"a a"}), pres({"b"}, {"b b b"}), free_presentation(1)};
  for (auto const& a : parts) {
    for (auto const& b : parts) {
      std::map<std::string, std::string> renamed;
      auto const                         g = free_product(a, b, &renamed);
      auto const                         h = whole_subgroup(a);
      for (auto const& p : default_catalog()) {
        auto const r = constancy_test(g, h, p);
        CHECK(r.constant);
        CHECK(r.counts.front().extensions == count_homs(b, p).total);
      }
    }
  }
}

TEST_CASE("scan verdicts") {
  auto const cat = default_catalog();
  auto       v1  = measure_preservation_scan(f2, subgroup_of_free_group(f2, {Word::parse("x x")}), cat);
  CHECK(v1.outcome == ScanOutcome::not_free_factor);
  CHECK(v1.witness_group == "cyclic-2");
  auto v2 = measure_preservation_scan(f2, subgroup_of_free_group(f2, {Word::parse("x y")}), cat);
  CHECK(v2.outcome == ScanOutcome::no_witness_up_to);
  CHECK(v2.catalog_bound == 24);
  CHECK(v2.reports.size() == cat.size());
  for (auto const& r : v2.reports) {
    CHECK(r.counts.front().extensions == r.group_order);
  }
  // C2 passes; the first refuting group in (order, name) order is C3.
  auto v3 = measure_preservation_scan(dinf, cyclic("a b"), cat);
  CHECK(v3.reports.front().constant);
  CHECK(v3.witness_group == "cyclic-3");
  auto v4 = measure_preservation_scan(dinf, cyclic("a b"), {make_cyclic(2), make_symmetric(3)});
  CHECK(v4.witness_group == "symmetric-3");

  auto tight = measure_preservation_scan(f2, subgroup_of_free_group(f2, {Word::parse("x y")}), cat,
                                         {.node_budget = 200});
  CHECK_FALSE(tight.incomplete.empty());
  CHECK(tight.outcome == ScanOutcome::no_witness_up_to);
}

TEST_CASE("free factor decisions") {
  auto const cat = default_catalog();
  auto       d1  = free_factor_decision(f2, subgroup_of_free_group(f2, {Word::parse("x y")}), cat, WhiteheadOracle{});
  CHECK(d1.decision == Decision::free_factor);
  CHECK(d1.oracle_verdict == true);
  auto d2 = free_factor_decision(f2, cyclic("x x y y"), cat, WhiteheadOracle{});
  CHECK(d2.decision == Decision::not_free_factor);
  CHECK(d2.scan.witness_group == "cyclic-2");
  CHECK(d2.oracle_verdict == false);

  auto const g = corpus::c2_star_c3();
  auto       d3 = free_factor_decision(TrivialEdgeOracle{&g, "u"}, cat);
  CHECK(d3.decision == Decision::free_factor);
  auto const am = corpus::c4_amalgam();
  auto       d4 = free_factor_decision(TrivialEdgeOracle{&am, "v"}, cat);
  CHECK(d4.decision != Decision::free_factor);

  auto d5 = free_factor_decision(f2, subgroup_of_free_group(f2, {Word::parse("x x"), Word::parse("y")}), cat);
  CHECK(d5.decision == Decision::not_free_factor);
  CHECK_FALSE(d5.oracle_verdict.has_value());

  CHECK_THROWS_AS(free_factor_decision(dinf, cyclic("a b"), cat, WhiteheadOracle{}), PresentationError);
}

TEST_CASE("oracle and scan never contradict on short words") {
  auto const cat = default_catalog();
  for (auto const& w : cli::cyclic_word_classes(2, 5)) {
    auto const d = free_factor_decision(f2, SubgroupSpec{pres({"h"}, {}), {w}}, cat, WhiteheadOracle{});
    if (*d.oracle_verdict) {
      CHECK(d.scan.outcome == ScanOutcome::no_witness_up_to);
    }
  }
}

TEST_CASE("embedding defects") {
  auto const cat = default_catalog();
  CHECK(embedding_defect(f2, cyclic("x", {"h h"}), cat).has_value());
  CHECK_FALSE(embedding_defect(c2c3, cyclic("a", {"h h"}), cat).has_value());
  CHECK(embedding_defect(c2c3, cyclic("b", {"h h"}), cat).has_value());
  CHECK_FALSE(embedding_defect(c2c3, cyclic("b", {"h h h"}), cat).has_value());
}

TEST_CASE("automorphism extension examples") {
  auto const cat = default_catalog();
  auto const v4  = make_product(make_cyclic(2), make_cyclic(2));
  auto const f1  = make_subgroup(v4, {0, 1});
  auto const f2s = make_subgroup(v4, {0, 2});
  CHECK(aut_extension_test(v4, isomorphisms(f1, f2s).at(0), cat));

  auto const c24 = make_product(make_cyclic(2), make_cyclic(4));
  auto const x   = make_subgroup(c24, {0, 1});
  auto const y2  = make_subgroup(c24, c24.closure(std::vector<Elem>{4}));
  auto const bad = isomorphisms(x, y2).at(0);
  CHECK_FALSE(aut_extension_test(c24, bad, cat));
  auto const alone = aut_extension_check(c24, bad, {});
  CHECK_FALSE(alone.condition_d);
  CHECK(alone.failing_group == c24.name());

  auto const s3 = make_symmetric(3);
  for (auto const& h : all_subgroups(s3)) {
    std::vector<Elem> id(h.elements.size());
    std::iota(id.begin(), id.end(), 0);
    CHECK(aut_extension_test(s3, FiniteIso{h, h, h.elements}, cat));
  }
}

TEST_CASE("automorphism extension agrees with brute force") {
  auto const cat = default_catalog();
  for (auto const& g : {make_product(make_cyclic(2), make_cyclic(2)), make_product(make_cyclic(2), make_cyclic(4)),
                        make_dihedral(4), make_quaternion8()}) {
    auto const autos = oracle::automorphisms(g);
    for (auto const& h1 : all_subgroups(g)) {
      for (auto const& h2 : all_subgroups(g)) {
        for (auto const& alpha : isomorphisms(h1, h2)) {
          bool brute = false;
          for (auto const& a : autos) {
            bool agrees = true;
            for (std::size_t i = 0; i < h1.size(); ++i) {
              agrees = agrees && a[h1.elements[i]] == alpha.map[i];
            }
            brute = brute || agrees;
          }
          CHECK(aut_extension_test(g, alpha, cat) == brute);
        }
      }
    }
  }
}
