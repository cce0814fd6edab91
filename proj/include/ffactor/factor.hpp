#ifndef FFACTOR_FACTOR_HPP_
#define FFACTOR_FACTOR_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ffactor/fingroup.hpp"
#include "ffactor/gog.hpp"
#include "ffactor/homcount.hpp"
#include "ffactor/presentation.hpp"
#include "ffactor/subgroup.hpp"

namespace ffactor {

  // A homomorphism H -> P given by the images of H's generators.
  using Gamma = std::vector<Elem>;

  // Hom(H, P) in lexicographic order of the image tuples.
  std::vector<Gamma> enumerate_gammas(SubgroupSpec const& h, FiniteGroup const& p, CountOptions const& options = {});

  // Constraints pinning embedding(h_i) to gamma[i].
  std::vector<Constraint> gamma_constraints(SubgroupSpec const& h, Gamma const& gamma);

  // Number of homomorphisms G -> P extending gamma. Throws
  // PresentationError when gamma does not respect H's relators.
  std::uint64_t extension_count(Presentation const& g,
                                SubgroupSpec const& h,
                                Gamma const&        gamma,
                                FiniteGroup const&  p,
                                CountOptions const& options = {});

  // Number of epimorphisms G -> P extending gamma.
  std::uint64_t epi_extension_count(Presentation const& g,
                                    SubgroupSpec const& h,
                                    Gamma const&        gamma,
                                    FiniteGroup const&  p,
                                    CountOptions const& options = {});

  struct CorestrictionTerm {
    std::vector<Elem> subgroup;  // elements of Q in P
    std::uint64_t     epis = 0;  // e(G, H, gamma^Q, Q)
  };

  struct CorestrictionCheck {
    std::uint64_t                  extensions = 0;  // h(G, H, gamma, P)
    std::uint64_t                  epi_sum    = 0;  // sum over Q >= im(gamma)
    std::vector<CorestrictionTerm> terms;
    bool                           holds = false;
  };

  // Compares h(G, H, gamma, P) with the sum of e(G, H, gamma^Q, Q) over the
  // subgroups Q of P containing the image of gamma. |P| <= 128.
  CorestrictionCheck corestriction_identity_check(Presentation const& g,
                                                  SubgroupSpec const& h,
                                                  Gamma const&        gamma,
                                                  FiniteGroup const&  p,
                                                  CountOptions const& options = {});

  struct GammaCount {
    Gamma         gamma;
    std::uint64_t extensions = 0;
  };

  struct ConstancyReport {
    std::string                               group;
    std::size_t                               group_order = 0;
    std::uint64_t                             gamma_count = 0;  // |Hom(H, P)|
    std::vector<GammaCount>                   counts;           // gamma order
    std::uint64_t                             hom_total   = 0;  // |Hom(G, P)|, counted directly
    bool                                      constant    = false;
    std::optional<std::pair<Gamma, Gamma>>    witness_pair;
    bool                                      partition_identity = false;
  };

  // The full table of h(G, H, gamma, P) over Hom(H, P). The gamma loop is
  // spread over options.workers threads; the report is identical for any
  // worker count.
  ConstancyReport constancy_test(Presentation const& g,
                                 SubgroupSpec const& h,
                                 FiniteGroup const&  p,
                                 CountOptions const& options = {});

  enum class ScanOutcome { not_free_factor, no_witness_up_to };

  struct ScanVerdict {
    ScanOutcome                  outcome = ScanOutcome::no_witness_up_to;
    std::optional<std::string>   witness_group;
    std::optional<std::pair<Gamma, Gamma>> witness_pair;
    std::vector<ConstancyReport> reports;       // groups examined, in order
    std::vector<std::string>     incomplete;    // groups skipped on budget
    std::size_t                  catalog_bound = 0;  // largest order examined
  };

  // Runs constancy_test over the catalog sorted by (order, name) and stops
  // at the first group on which h is not constant.
  ScanVerdict measure_preservation_scan(Presentation const&             g,
                                        SubgroupSpec const&             h,
                                        std::vector<FiniteGroup> const& catalog,
                                        CountOptions const&             options = {});

  enum class Decision { free_factor, not_free_factor, undecided };

  struct WhiteheadOracle {};
  struct TrivialEdgeOracle {
    GraphOfGroups const* graph = nullptr;
    std::string          vertex;
  };

  struct FactorDecision {
    Decision            decision = Decision::undecided;
    std::string         certificate;  // oracle certificate or witness summary
    std::optional<bool> oracle_verdict;
    ScanVerdict         scan;
  };

  // Whitehead oracle: G free, H cyclic. Throws PresentationError otherwise.
  FactorDecision free_factor_decision(Presentation const&             g,
                                      SubgroupSpec const&             h,
                                      std::vector<FiniteGroup> const& catalog,
                                      WhiteheadOracle,
                                      CountOptions const& options = {});

  // Trivial-edge oracle for a vertex group; G and H are built from the graph
  // on its canonical tree.
  FactorDecision free_factor_decision(TrivialEdgeOracle const&        oracle,
                                      std::vector<FiniteGroup> const& catalog,
                                      CountOptions const&             options = {});

  // Scan only.
  FactorDecision free_factor_decision(Presentation const&             g,
                                      SubgroupSpec const&             h,
                                      std::vector<FiniteGroup> const& catalog,
                                      CountOptions const&             options = {});

  struct AutExtensionResult {
    bool                       extends     = false;  // some automorphism restricts to alpha
    bool                       condition_d = false;  // epimorphism-extension condition
    std::optional<std::string> failing_group;        // first P violating the condition
  };

  // For a finite group G and an isomorphism alpha: H1 -> H2 of subgroups,
  // decides whether alpha extends to an automorphism of G, and separately
  // whether e(G, H2, gamma, P) != 0 implies e(G, H1, gamma o alpha, P) != 0
  // for every P among the catalog groups whose order divides |G|, and G
  // itself. Throws std::logic_error if the two disagree. |G| <= 64.
  AutExtensionResult aut_extension_check(FiniteGroup const&              g,
                                         FiniteIso const&                alpha,
                                         std::vector<FiniteGroup> const& catalog,
                                         CountOptions const&             options = {});

  bool aut_extension_test(FiniteGroup const&              g,
                          FiniteIso const&                alpha,
                          std::vector<FiniteGroup> const& catalog,
                          CountOptions const&             options = {});

}  // namespace ffactor

#endif  // FFACTOR_FACTOR_HPP_
