#ifndef FFACTOR_WORDMEASURE_HPP_
#define FFACTOR_WORDMEASURE_HPP_

#include <boost/rational.hpp>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "ffactor/fingroup.hpp"
#include "ffactor/homcount.hpp"
#include "ffactor/word.hpp"

namespace ffactor {

  using Rational = boost::rational<std::int64_t>;

  // Law of w(phi) for phi uniform in Hom(F_rank, P), as raw counts.
  struct WordDistribution {
    Word                       word;
    std::size_t                rank = 0;
    std::string                codomain;
    std::vector<std::uint64_t> counts;  // indexed by element of P
    std::uint64_t              total = 0;  // |P|^rank
  };

  inline constexpr std::uint64_t max_measure_assignments = 10'000'000;

  // Full enumeration, split over the image of the first generator.
  WordDistribution word_value_distribution(Word const& w, std::size_t rank, FiniteGroup const& p,
                                           std::size_t workers = 1);

  // Same table from one constrained count per element of P.
  WordDistribution word_value_distribution_by_counting(Word const& w, std::size_t rank, FiniteGroup const& p,
                                                       CountOptions const& options = {});

  // E[fix(w(phi))] for phi uniform in Hom(F_rank, Sym(n)), n <= 6.
  Rational expected_fixed_points(Word const& w, std::size_t rank, std::size_t n, std::size_t workers = 1);
  Rational expected_fixed_points(WordDistribution const& d, FiniteGroup const& sym);

  // Total variation distance between the law of w(phi) and uniform on P.
  Rational uniformity_deviation(Word const& w, std::size_t rank, FiniteGroup const& p, std::size_t workers = 1);
  Rational uniformity_deviation(WordDistribution const& d);

}  // namespace ffactor

#endif  // FFACTOR_WORDMEASURE_HPP_
