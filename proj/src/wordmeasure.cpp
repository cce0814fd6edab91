#include "ffactor/wordmeasure.hpp"

#include <omp.h>

#include <stdexcept>

#include "ffactor/presentation.hpp"

namespace ffactor {

  namespace {

    std::uint64_t assignment_count(std::size_t order, std::size_t rank) {
      std::uint64_t total = 1;
      for (std::size_t i = 0; i < rank; ++i) {
        if (total > max_measure_assignments / order) {
          throw std::invalid_argument("|P|^rank exceeds " + std::to_string(max_measure_assignments));
        }
        total *= order;
      }
      return total;
    }

    WordDistribution empty_distribution(Word const& w, std::size_t rank, FiniteGroup const& p) {
      WordDistribution d;
      d.word     = w;
      d.rank     = rank;
      d.codomain = p.name();
      d.counts.assign(p.order(), 0);
      d.total = assignment_count(p.order(), rank);
      return d;
    }

  }  // namespace

  WordDistribution word_value_distribution(Word const& w, std::size_t rank, FiniteGroup const& p,
                                           std::size_t workers) {
    Word const one[]   = {w};
    auto const alpha   = make_alphabet(one, rank);
    auto const codes   = encode(w, alpha);
    auto       d       = empty_distribution(w, rank, p);
    std::size_t const n = p.order();
    if (rank == 0) {
      d.counts[0] = 1;
      return d;
    }

    // Letter values are looked up from per-generator image and inverse.
    std::vector<std::vector<std::uint64_t>> partial(n, std::vector<std::uint64_t>(n, 0));
    long const first_count = static_cast<long>(n);
#pragma omp parallel for schedule(dynamic, 1) num_threads(static_cast<int>(std::max<std::size_t>(1, workers)))
    for (long first = 0; first < first_count; ++first) {
      std::vector<Elem> images(rank, 0);
      std::vector<Elem> values(2 * rank, 0);
      images[0]    = static_cast<Elem>(first);
      auto& counts = partial[first];
      while (true) {
        for (std::size_t g = 0; g < rank; ++g) {
          values[2 * g]     = images[g];
          values[2 * g + 1] = p.inv(images[g]);
        }
        Elem acc = 0;
        for (auto c : codes) {
          acc = p.mul(acc, values[c]);
        }
        ++counts[acc];
        std::size_t k = 1;
        while (k < rank && ++images[k] == n) {
          images[k++] = 0;
        }
        if (k == rank) {
          break;
        }
      }
    }
    for (auto const& counts : partial) {
      for (std::size_t x = 0; x < n; ++x) {
        d.counts[x] += counts[x];
      }
    }
    return d;
  }

  WordDistribution word_value_distribution_by_counting(Word const& w, std::size_t rank, FiniteGroup const& p,
                                                       CountOptions const& options) {
    Word const one[]  = {w};
    auto const free   = free_presentation(make_alphabet(one, rank));
    auto       d      = empty_distribution(w, rank, p);
    CountOptions opts = options;
    opts.max_generators = std::max(opts.max_generators, rank);
    for (std::size_t x = 0; x < p.order(); ++x) {
      Constraint const c[] = {{w, static_cast<Elem>(x)}};
      d.counts[x]          = count_homs(free, p, c, opts).total;
    }
    return d;
  }

  Rational expected_fixed_points(WordDistribution const& d, FiniteGroup const& sym) {
    if (!sym.has_permutations()) {
      throw GroupError(sym.name() + " has no permutation realization");
    }
    std::int64_t weighted = 0;
    for (std::size_t x = 0; x < sym.order(); ++x) {
      auto const& perm  = sym.permutation(static_cast<Elem>(x));
      std::int64_t fix = 0;
      for (std::size_t i = 0; i < perm.size(); ++i) {
        fix += perm[i] == i;
      }
      weighted += static_cast<std::int64_t>(d.counts[x]) * fix;
    }
    return Rational(weighted, static_cast<std::int64_t>(d.total));
  }

  Rational expected_fixed_points(Word const& w, std::size_t rank, std::size_t n, std::size_t workers) {
    if (n > 6) {
      throw std::invalid_argument("expected_fixed_points needs n <= 6");
    }
    auto const sym = make_symmetric(n);
    return expected_fixed_points(word_value_distribution(w, rank, sym, workers), sym);
  }

  Rational uniformity_deviation(WordDistribution const& d) {
    auto const   order = static_cast<std::int64_t>(d.counts.size());
    auto const   total = static_cast<std::int64_t>(d.total);
    std::int64_t gap   = 0;
    for (auto c : d.counts) {
      auto const diff = static_cast<std::int64_t>(c) * order - total;
      gap += diff < 0 ? -diff : diff;
    }
    return Rational(gap, 2 * total * order);
  }

  Rational uniformity_deviation(Word const& w, std::size_t rank, FiniteGroup const& p, std::size_t workers) {
    return uniformity_deviation(word_value_distribution(w, rank, p, workers));
  }

}  // namespace ffactor
