#ifndef FFACTOR_HOMCOUNT_HPP_
#define FFACTOR_HOMCOUNT_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "ffactor/fingroup.hpp"
#include "ffactor/presentation.hpp"

namespace ffactor {

  // Pins the image of a word of G to an element of the codomain.
  struct Constraint {
    Word word;
    Elem target = 0;

    bool operator==(Constraint const&) const = default;
  };

  // The search visited more nodes than allowed. Counting never returns a
  // partial result.
  class BudgetExceeded : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  class CountOverflow : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  struct CountQuery {
    Presentation const&         presentation;
    FiniteGroup const&          group;
    std::span<Constraint const> constraints;
    bool                        epimorphisms;
  };

  // Memo of exact counts. Implementations must be safe to call from several
  // threads at once.
  class CountCache {
   public:
    struct Entry {
      std::uint64_t total = 0;
      std::uint64_t nodes = 0;
    };

    virtual ~CountCache()                                           = default;
    virtual std::optional<Entry> lookup(CountQuery const& query)    = 0;
    virtual void                 store(CountQuery const& query, Entry entry) = 0;
  };

  struct CountOptions {
    std::size_t   workers        = 1;
    std::uint64_t node_budget    = 1'000'000'000;
    std::size_t   max_generators = 8;
    CountCache*   cache          = nullptr;
  };

  struct HomCountReport {
    std::string             codomain;
    std::size_t             codomain_order = 0;
    bool                    epimorphisms   = false;
    std::uint64_t           total          = 0;
    std::vector<Constraint> constraints;
    std::uint64_t           nodes           = 0;  // assignments tried
    double                  elapsed_seconds = 0;
  };

  // Number of assignments generator -> element of p under which every relator
  // evaluates to the identity and every constraint word to its target.
  // Partitioned over the image of the first generator across
  // options.workers threads; the result does not depend on the worker count.
  HomCountReport count_homs(Presentation const&         g,
                            FiniteGroup const&          p,
                            std::span<Constraint const> constraints = {},
                            CountOptions const&         options     = {});

  // As count_homs, restricted to assignments whose images generate p.
  HomCountReport count_epis(Presentation const&         g,
                            FiniteGroup const&          p,
                            std::span<Constraint const> constraints = {},
                            CountOptions const&         options     = {});

  // All solutions as generator image tuples, in lexicographic order. Throws
  // BudgetExceeded if there are more than limit of them.
  std::vector<std::vector<Elem>> enumerate_homs(Presentation const&         g,
                                                FiniteGroup const&          p,
                                                std::span<Constraint const> constraints = {},
                                                CountOptions const&         options     = {},
                                                std::size_t                 limit       = 1'000'000);

  // Lexicographically first solution.
  std::optional<std::vector<Elem>> find_hom(Presentation const&         g,
                                            FiniteGroup const&          p,
                                            std::span<Constraint const> constraints = {},
                                            CountOptions const&         options     = {});

  // Value of w under generator images (one per generator of g).
  Elem evaluate(Word const& w, Presentation const& g, std::span<Elem const> images, FiniteGroup const& p);

  struct ResidualVerdict {
    bool                       nontrivial = false;
    std::optional<std::string> witness;  // codomain name
    std::vector<Elem>          hom;      // generator images
    Elem                       image = 0;
    std::size_t                groups_checked = 0;
  };

  // Looks for a homomorphism to a catalog group that sends w off the
  // identity. Catalog order is kept; the first witness wins.
  ResidualVerdict residual_nontriviality(Presentation const&             g,
                                         Word const&                     w,
                                         std::vector<FiniteGroup> const& catalog,
                                         CountOptions const&             options = {});

  namespace reference {
    // Serial odometer over all |p|^k assignments, no pruning. Kept as the
    // baseline for the parallel kernel; requires |p|^k <= 10^8.
    std::uint64_t count_assignments(Presentation const&         g,
                                    FiniteGroup const&          p,
                                    std::span<Constraint const> constraints,
                                    bool                        epimorphisms);
  }  // namespace reference

}  // namespace ffactor

#endif  // FFACTOR_HOMCOUNT_HPP_
