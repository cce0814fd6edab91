#include <random>

#include "corpus.hpp"
#include "doctest.h"
#include "ffactor/whitehead.hpp"
#include "ffactor/wordmeasure.hpp"
#include "oracles.hpp"

using namespace ffactor;

namespace {
  std::vector<std::uint64_t> counts(char const* w, std::size_t rank, FiniteGroup const& p) {
    return word_value_distribution(Word::parse(w), rank, p).counts;
  }
  std::vector<std::string> alphabet(Word const& w, std::size_t rank) {
    return make_alphabet(std::span<Word const>(&w, 1), rank);
  }
  std::uint64_t power(std::uint64_t b, std::size_t e) {
    std::uint64_t r = 1;
    while (e-- > 0) {
      r *= b;
    }
    return r;
  }
}  // namespace

TEST_CASE("word distributions on Sym(3)") {
  auto const s3 = make_symmetric(3);
  CHECK(counts("x", 2, s3) == std::vector<std::uint64_t>{6, 6, 6, 6, 6, 6});
  CHECK(counts("x x", 1, s3) == std::vector<std::uint64_t>{4, 1, 1, 0, 0, 0});
  CHECK(counts("x y x^-1 y^-1", 2, s3) == std::vector<std::uint64_t>{18, 9, 9, 0, 0, 0});
  CHECK(counts("x y", 2, s3) == std::vector<std::uint64_t>{6, 6, 6, 6, 6, 6});
  auto const d = word_value_distribution(Word::parse("x x"), 1, s3);
  CHECK(d.total == 6);
  CHECK(d.codomain == "symmetric-3");
}

TEST_CASE("expected fixed points and deviation") {
  CHECK(expected_fixed_points(Word::parse("x"), 1, 3) == Rational(1));
  CHECK(expected_fixed_points(Word::parse("x x"), 1, 3) == Rational(2));
  CHECK(expected_fixed_points(Word::parse("x y x^-1 y^-1"), 2, 3) == Rational(3, 2));
  auto const s3 = make_symmetric(3);
  CHECK(uniformity_deviation(Word::parse("x"), 1, s3) == Rational(0));
  CHECK(uniformity_deviation(Word::parse("x y x^-1 y^-1"), 2, s3) == Rational(1, 2));
  CHECK(uniformity_deviation(Word::parse("x y x y^-1 x^-1"), 2, s3) == Rational(0));
  CHECK(expected_fixed_points(Word::parse("x"), 1, 1) == Rational(1));
  CHECK_THROWS(expected_fixed_points(Word::parse("x"), 1, 7));
}

TEST_CASE("distributions match exhaustive evaluation") {
  std::mt19937_64 rng(5);
  std::vector<std::string> const gens{"x", "y"};
  for (auto const& p : {make_cyclic(4), make_symmetric(3), make_quaternion8(), make_alternating(4)}) {
    for (int trial = 0; trial < 10; ++trial) {
      auto const w   = cli::random_word(rng, gens, 1 + rng() % 6);
      auto const a   = alphabet(w, 2);
      auto const d   = word_value_distribution(w, 2, p);
      CHECK(d.counts == oracle::word_distribution(w, a, p));
      CHECK(d.total == power(p.order(), 2));
      std::uint64_t sum = 0;
      for (auto c : d.counts) {
        sum += c;
      }
      CHECK(sum == d.total);
    }
  }
}

TEST_CASE("enumeration, counting and parallel routes agree") {
  std::mt19937_64 rng(9);
  std::vector<std::string> const gens{"x", "y", "z"};
  for (auto const& p : {make_symmetric(3), make_dihedral(4), make_symmetric(4)}) {
    for (int trial = 0; trial < 6; ++trial) {
      auto const w      = cli::random_word(rng, gens, 2 + rng() % 5);
      auto const serial = word_value_distribution(w, 3, p);
      CHECK(word_value_distribution(w, 3, p, 4).counts == serial.counts);
      CHECK(word_value_distribution_by_counting(w, 3, p).counts == serial.counts);
    }
  }
}

TEST_CASE("primitive words are uniformly distributed") {
  std::vector<FiniteGroup> targets;
  for (std::size_t n = 1; n <= 4; ++n) {
    targets.push_back(make_symmetric(n));
  }
  for (auto const& w : cli::cyclic_word_classes(2, 5)) {
    if (!is_primitive_whitehead(w, 2)) {
      continue;
    }
    for (auto const& p : targets) {
      auto const d = word_value_distribution(w, 2, p);
      CHECK(uniformity_deviation(d) == Rational(0));
      CHECK(expected_fixed_points(d, p) == Rational(1));
    }
  }
}

TEST_CASE("fixed point expectation is at least one") {
  for (auto const& w : cli::cyclic_word_classes(2, 6)) {
    if (w.letters().empty()) {
      continue;
    }
    CHECK(expected_fixed_points(w, 2, 3) >= Rational(1));
  }
  for (char const* w : {"x x", "x x y y", "x y x^-1 y^-1", "x x x", "x y x y^-1", "x x y x x y^-1"}) {
    REQUIRE_FALSE(is_primitive_whitehead(Word::parse(w), 2));
    CHECK(expected_fixed_points(Word::parse(w), 2, 3) > Rational(1));
  }
}

TEST_CASE("assignment limit") {
  CHECK_THROWS(word_value_distribution(Word::parse("x y z w"), 6, make_symmetric(5)));
}
