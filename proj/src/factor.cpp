#include "ffactor/factor.hpp"

#include <omp.h>

#include <algorithm>
#include <exception>
#include <numeric>
#include <stdexcept>

#include "ffactor/whitehead.hpp"

namespace ffactor {

  namespace {

    void check_gamma(SubgroupSpec const& h, Gamma const& gamma, FiniteGroup const& p) {
      if (gamma.size() != h.presentation.generators.size()) {
        throw PresentationError("gamma has " + std::to_string(gamma.size()) + " images for "
                                + std::to_string(h.presentation.generators.size()) + " generators");
      }
      for (auto x : gamma) {
        if (x >= p.order()) {
          throw GroupError("gamma image outside " + p.name());
        }
      }
      for (auto const& r : h.presentation.relators) {
        if (evaluate(r, h.presentation, gamma, p) != 0) {
          throw PresentationError("gamma is not a homomorphism: relator '" + r.str()
                                  + "' maps off the identity");
        }
      }
    }

    std::vector<std::size_t> catalog_order(std::vector<FiniteGroup> const& catalog) {
      std::vector<std::size_t> idx(catalog.size());
      std::iota(idx.begin(), idx.end(), 0);
      std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
        if (catalog[a].order() != catalog[b].order()) {
          return catalog[a].order() < catalog[b].order();
        }
        return catalog[a].name() < catalog[b].name();
      });
      return idx;
    }

    FactorDecision combine(bool oracle, std::string certificate, ScanVerdict scan) {
      FactorDecision d;
      d.oracle_verdict = oracle;
      bool const refuted = scan.outcome == ScanOutcome::not_free_factor;
      if (oracle && refuted) {
        throw std::logic_error("oracle certifies a free factor but " + *scan.witness_group
                               + " refutes constancy");
      }
      if (oracle) {
        d.decision    = Decision::free_factor;
        d.certificate = std::move(certificate);
      } else if (refuted) {
        d.decision    = Decision::not_free_factor;
        d.certificate = "extension counts not constant on " + *scan.witness_group;
      } else {
        d.decision    = Decision::undecided;
        d.certificate = "no witness up to order " + std::to_string(scan.catalog_bound);
      }
      d.scan = std::move(scan);
      return d;
    }

    // H as an abstract group with a word over G for each of its generators.
    struct FiniteSubgroupData {
      FiniteGroup       abstract;
      GroupPresentation presentation;
      SubgroupSpec      spec;
    };

    FiniteSubgroupData finite_subgroup(Subgroup const& h, GroupPresentation const& g, std::string const& prefix) {
      FiniteSubgroupData d{h.as_group(), {}, {}};
      d.presentation      = presentation_of(d.abstract, {}, prefix);
      d.spec.presentation = d.presentation.presentation;
      for (auto local : d.presentation.generator_elements) {
        d.spec.embedding.push_back(g.element_words[h.elements[local]]);
      }
      return d;
    }

  }  // namespace

  std::vector<Gamma> enumerate_gammas(SubgroupSpec const& h, FiniteGroup const& p, CountOptions const& options) {
    CountOptions opts   = options;
    opts.max_generators = std::max(opts.max_generators, h.presentation.generators.size());
    return enumerate_homs(h.presentation, p, {}, opts);
  }

  std::vector<Constraint> gamma_constraints(SubgroupSpec const& h, Gamma const& gamma) {
    std::vector<Constraint> cs;
    cs.reserve(gamma.size());
    for (std::size_t i = 0; i < gamma.size(); ++i) {
      cs.push_back({h.embedding[i], gamma[i]});
    }
    return cs;
  }

  std::uint64_t extension_count(Presentation const& g,
                                SubgroupSpec const& h,
                                Gamma const&        gamma,
                                FiniteGroup const&  p,
                                CountOptions const& options) {
    h.validate(g);
    check_gamma(h, gamma, p);
    return count_homs(g, p, gamma_constraints(h, gamma), options).total;
  }

  std::uint64_t epi_extension_count(Presentation const& g,
                                    SubgroupSpec const& h,
                                    Gamma const&        gamma,
                                    FiniteGroup const&  p,
                                    CountOptions const& options) {
    h.validate(g);
    check_gamma(h, gamma, p);
    return count_epis(g, p, gamma_constraints(h, gamma), options).total;
  }

  CorestrictionCheck corestriction_identity_check(Presentation const& g,
                                                  SubgroupSpec const& h,
                                                  Gamma const&        gamma,
                                                  FiniteGroup const&  p,
                                                  CountOptions const& options) {
    CorestrictionCheck check;
    check.extensions  = extension_count(g, h, gamma, p, options);
    auto const image  = p.closure(gamma);
    for (auto const& q : all_subgroups(p)) {
      if (!std::includes(q.elements.begin(), q.elements.end(), image.begin(), image.end())) {
        continue;
      }
      auto const qg = q.as_group();
      Gamma      corestricted;
      for (auto x : gamma) {
        corestricted.push_back(static_cast<Elem>(*q.index_of(x)));
      }
      CorestrictionTerm term{q.elements, epi_extension_count(g, h, corestricted, qg, options)};
      check.epi_sum += term.epis;
      check.terms.push_back(std::move(term));
    }
    check.holds = check.extensions == check.epi_sum;
    return check;
  }

  ConstancyReport constancy_test(Presentation const& g,
                                 SubgroupSpec const& h,
                                 FiniteGroup const&  p,
                                 CountOptions const& options) {
    h.validate(g);
    ConstancyReport report;
    report.group       = p.name();
    report.group_order = p.order();
    auto gammas        = enumerate_gammas(h, p, options);
    report.gamma_count = gammas.size();
    report.counts.resize(gammas.size());

    // Parallel over gamma, each count serial.
    CountOptions inner = options;
    inner.workers      = 1;
    std::vector<std::exception_ptr> errors(gammas.size());
    long const                      n       = static_cast<long>(gammas.size());
    int const                       threads = static_cast<int>(std::max<std::size_t>(1, options.workers));
#pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
    for (long i = 0; i < n; ++i) {
      try {
        report.counts[i].gamma      = gammas[i];
        report.counts[i].extensions = count_homs(g, p, gamma_constraints(h, gammas[i]), inner).total;
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
    for (auto const& e : errors) {
      if (e) {
        std::rethrow_exception(e);
      }
    }

    report.hom_total = count_homs(g, p, {}, options).total;
    std::uint64_t sum = 0;
    for (auto const& c : report.counts) {
      sum += c.extensions;
    }
    report.partition_identity = sum == report.hom_total;
    report.constant           = true;
    for (std::size_t i = 1; i < report.counts.size(); ++i) {
      if (report.counts[i].extensions != report.counts[0].extensions) {
        report.constant     = false;
        report.witness_pair = std::make_pair(report.counts[0].gamma, report.counts[i].gamma);
        break;
      }
    }
    return report;
  }

  ScanVerdict measure_preservation_scan(Presentation const&             g,
                                        SubgroupSpec const&             h,
                                        std::vector<FiniteGroup> const& catalog,
                                        CountOptions const&             options) {
    ScanVerdict verdict;
    for (auto i : catalog_order(catalog)) {
      auto const& p = catalog[i];
      try {
        verdict.reports.push_back(constancy_test(g, h, p, options));
      } catch (BudgetExceeded const&) {
        verdict.incomplete.push_back(p.name());
        continue;
      }
      verdict.catalog_bound = std::max(verdict.catalog_bound, p.order());
      auto const& report    = verdict.reports.back();
      if (!report.constant) {
        verdict.outcome       = ScanOutcome::not_free_factor;
        verdict.witness_group = p.name();
        verdict.witness_pair  = report.witness_pair;
        break;
      }
    }
    return verdict;
  }

  FactorDecision free_factor_decision(Presentation const&             g,
                                      SubgroupSpec const&             h,
                                      std::vector<FiniteGroup> const& catalog,
                                      WhiteheadOracle,
                                      CountOptions const& options) {
    h.validate(g);
    if (!g.is_free() || h.presentation.generators.size() != 1 || !h.presentation.relators.empty()) {
      throw PresentationError("the Whitehead oracle needs a free G and a cyclic free H");
    }
    bool const primitive = is_primitive_whitehead(h.embedding.front(), g.generators);
    auto       scan      = measure_preservation_scan(g, h, catalog, options);
    return combine(primitive,
                   "'" + h.embedding.front().str() + "' is primitive: Whitehead descent reaches cyclic length 1",
                   std::move(scan));
  }

  FactorDecision free_factor_decision(TrivialEdgeOracle const&        oracle,
                                      std::vector<FiniteGroup> const& catalog,
                                      CountOptions const&             options) {
    if (oracle.graph == nullptr) {
      throw PresentationError("trivial-edge oracle needs a graph of groups");
    }
    auto const fp      = fundamental_presentation(*oracle.graph, canonical_tree(*oracle.graph));
    auto const h       = vertex_subgroup(fp, oracle.vertex);
    bool const trivial = trivial_edge_free_factor_check(*oracle.graph, oracle.vertex);
    auto       scan    = measure_preservation_scan(fp.presentation, h, catalog, options);
    return combine(trivial, "every edge group incident with vertex " + oracle.vertex + " is trivial",
                   std::move(scan));
  }

  FactorDecision free_factor_decision(Presentation const&             g,
                                      SubgroupSpec const&             h,
                                      std::vector<FiniteGroup> const& catalog,
                                      CountOptions const&             options) {
    auto d           = combine(false, {}, measure_preservation_scan(g, h, catalog, options));
    d.oracle_verdict = std::nullopt;
    return d;
  }

  AutExtensionResult aut_extension_check(FiniteGroup const&              g,
                                         FiniteIso const&                alpha,
                                         std::vector<FiniteGroup> const& catalog,
                                         CountOptions const&             options) {
    if (g.order() > 64) {
      throw GroupError("aut_extension_check requires |G| <= 64");
    }
    if (alpha.source.parent != &g || alpha.target.parent != &g) {
      throw GroupError("alpha must be an isomorphism between subgroups of G");
    }
    AutExtensionResult result;
    for (auto const& aut : automorphisms(g)) {
      bool agrees = true;
      for (std::size_t i = 0; i < alpha.source.size() && agrees; ++i) {
        agrees = aut.map[alpha.source.elements[i]] == alpha.map[i];
      }
      if (agrees) {
        result.extends = true;
        break;
      }
    }

    auto const gp = presentation_of(g, {}, "g");
    auto const h1 = finite_subgroup(alpha.source, gp, "s");
    auto const h2 = finite_subgroup(alpha.target, gp, "t");

    std::vector<FiniteGroup const*> targets;
    for (auto const& p : catalog) {
      if (g.order() % p.order() == 0) {
        targets.push_back(&p);
      }
    }
    targets.push_back(&g);

    CountOptions opts   = options;
    opts.max_generators = std::max(opts.max_generators, gp.presentation.generators.size());
    result.condition_d  = true;
    for (auto const* p : targets) {
      for (auto const& gamma : enumerate_gammas(h2.spec, *p, opts)) {
        if (epi_extension_count(gp.presentation, h2.spec, gamma, *p, opts) == 0) {
          continue;
        }
        // gamma as a map on the elements of H2, then composed with alpha on
        // the generators of H1.
        Gamma composed;
        for (auto local : h1.presentation.generator_elements) {
          Elem const image = alpha.map[local];
          auto const pos   = *alpha.target.index_of(image);
          composed.push_back(evaluate(h2.presentation.element_words[pos], h2.presentation.presentation, gamma, *p));
        }
        if (epi_extension_count(gp.presentation, h1.spec, composed, *p, opts) == 0) {
          result.condition_d   = false;
          result.failing_group = p->name();
          break;
        }
      }
      if (!result.condition_d) {
        break;
      }
    }
    if (result.extends != result.condition_d) {
      throw std::logic_error("automorphism extension and epimorphism condition disagree");
    }
    return result;
  }

  bool aut_extension_test(FiniteGroup const&              g,
                          FiniteIso const&                alpha,
                          std::vector<FiniteGroup> const& catalog,
                          CountOptions const&             options) {
    return aut_extension_check(g, alpha, catalog, options).extends;
  }

}  // namespace ffactor
