#include "ffactor/homcount.hpp"

#include <omp.h>

#include <atomic>
#include <chrono>
#include <map>
#include <set>

namespace ffactor {

  namespace {

    struct Check {
      std::vector<LetterCode> letters;
      Elem                    target = 0;
    };

    // Relators and constraints compiled against one codomain. Checks that
    // mention a single generator are folded into that generator's candidate
    // list; every other check runs as soon as its last generator is assigned.
    struct System {
      std::size_t                     generators = 0;
      std::vector<std::vector<Elem>>  candidates;
      std::vector<std::vector<Check>> at_level;
      bool                            infeasible = false;
    };

    // imgs holds 2k entries: image and inverse image of every generator,
    // indexed by letter code.
    inline Elem evaluate_codes(std::span<LetterCode const> letters,
                               Elem const*                 imgs,
                               FiniteGroup const&          p) noexcept {
      Elem cur = 0;
      for (auto c : letters) {
        cur = p.mul(cur, imgs[c]);
      }
      return cur;
    }

    System compile(Presentation const&         g,
                   FiniteGroup const&          p,
                   std::span<Constraint const> constraints,
                   CountOptions const&         options) {
      g.validate();
      if (g.generators.size() > options.max_generators) {
        throw PresentationError("presentation has " + std::to_string(g.generators.size())
                                + " generators; the limit is " + std::to_string(options.max_generators));
      }
      System sys;
      sys.generators = g.generators.size();
      sys.at_level.resize(sys.generators);
      std::vector<Check> checks;
      for (auto const& r : g.relators) {
        checks.push_back({encode(r, g.generators), 0});
      }
      for (auto const& c : constraints) {
        if (c.target >= p.order()) {
          throw GroupError("constraint target " + std::to_string(c.target) + " outside "
                           + p.name());
        }
        checks.push_back({encode(c.word, g.generators), c.target});
      }
      std::vector<std::vector<Check>> unary(sys.generators);
      for (auto& c : checks) {
        if (c.letters.empty()) {
          if (c.target != 0) {
            sys.infeasible = true;
          }
          continue;
        }
        std::set<LetterCode> gens;
        for (auto l : c.letters) {
          gens.insert(l >> 1);
        }
        if (gens.size() == 1) {
          unary[*gens.begin()].push_back(std::move(c));
        } else {
          sys.at_level[*gens.rbegin()].push_back(std::move(c));
        }
      }
      std::vector<Elem> imgs(2 * sys.generators, 0);
      sys.candidates.resize(sys.generators);
      for (std::size_t k = 0; k < sys.generators; ++k) {
        for (std::size_t x = 0; x < p.order(); ++x) {
          imgs[2 * k]     = static_cast<Elem>(x);
          imgs[2 * k + 1] = p.inv(static_cast<Elem>(x));
          bool ok         = true;
          for (auto const& c : unary[k]) {
            if (evaluate_codes(c.letters, imgs.data(), p) != c.target) {
              ok = false;
              break;
            }
          }
          if (ok) {
            sys.candidates[k].push_back(static_cast<Elem>(x));
          }
        }
      }
      return sys;
    }

    // Node accounting shared by all threads of one count. Each thread flushes
    // its local tally periodically, so the budget is enforced globally.
    class NodeMeter {
     public:
      NodeMeter(std::atomic<std::uint64_t>& global, std::atomic<bool>& abort, std::uint64_t budget)
          : _global(global), _abort(abort), _budget(budget) {}

      // Returns false once the search must stop.
      bool tick() noexcept {
        ++_local;
        ++_total;
        if (_local == 4096) {
          return flush();
        }
        return true;
      }
      bool flush() noexcept {
        auto const now = _global.fetch_add(_local, std::memory_order_relaxed) + _local;
        _local         = 0;
        if (now > _budget) {
          _abort.store(true, std::memory_order_relaxed);
        }
        return !_abort.load(std::memory_order_relaxed);
      }
      std::uint64_t total() const noexcept {
        return _total;
      }
      void reset_total() noexcept {
        _total = 0;
      }

     private:
      std::atomic<std::uint64_t>& _global;
      std::atomic<bool>&          _abort;
      std::uint64_t               _budget;
      std::uint64_t               _local = 0;
      std::uint64_t               _total = 0;
    };

    // Depth-first search over generator images, levels in declaration order.
    template <typename Leaf>
    class Search {
     public:
      Search(System const& sys, FiniteGroup const& p, NodeMeter& meter, Leaf& leaf)
          : _sys(sys), _p(p), _meter(meter), _leaf(leaf), _imgs(2 * sys.generators, 0) {}

      // Tries image c for generator level; returns false when stopped.
      bool place(std::size_t level, Elem c) {
        if (!_meter.tick()) {
          return false;
        }
        _imgs[2 * level]     = c;
        _imgs[2 * level + 1] = _p.inv(c);
        for (auto const& chk : _sys.at_level[level]) {
          if (evaluate_codes(chk.letters, _imgs.data(), _p) != chk.target) {
            return true;
          }
        }
        if (level + 1 == _sys.generators) {
          return _leaf(_imgs);
        }
        for (auto next : _sys.candidates[level + 1]) {
          if (!place(level + 1, next)) {
            return false;
          }
        }
        return true;
      }

     private:
      System const&      _sys;
      FiniteGroup const& _p;
      NodeMeter&         _meter;
      Leaf&              _leaf;
      std::vector<Elem>  _imgs;
    };

    // Whether generator images generate p; memoized on the image set.
    class GenerationTest {
     public:
      explicit GenerationTest(FiniteGroup const& p) : _p(p) {}

      bool operator()(std::vector<Elem> const& imgs) {
        std::vector<Elem> key;
        for (std::size_t i = 0; i < imgs.size(); i += 2) {
          if (imgs[i] != 0) {
            key.push_back(imgs[i]);
          }
        }
        std::sort(key.begin(), key.end());
        key.erase(std::unique(key.begin(), key.end()), key.end());
        auto it = _memo.find(key);
        if (it != _memo.end()) {
          return it->second;
        }
        bool const generates = _p.closure(key).size() == _p.order();
        _memo.emplace(std::move(key), generates);
        return generates;
      }

     private:
      FiniteGroup const&                   _p;
      std::map<std::vector<Elem>, bool>    _memo;
    };

    struct CountingLeaf {
      std::uint64_t                  count = 0;
      std::optional<GenerationTest>  generation;

      bool operator()(std::vector<Elem> const& imgs) {
        if (!generation || (*generation)(imgs)) {
          ++count;
        }
        return true;
      }
    };

    std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
      std::uint64_t r;
      if (__builtin_add_overflow(a, b, &r)) {
        throw CountOverflow("homomorphism count overflows 64 bits");
      }
      return r;
    }

    HomCountReport run_count(Presentation const&         g,
                             FiniteGroup const&          p,
                             std::span<Constraint const> constraints,
                             CountOptions const&         options,
                             bool                        epimorphisms) {
      auto const     start = std::chrono::steady_clock::now();
      HomCountReport report;
      report.codomain       = p.name();
      report.codomain_order = p.order();
      report.epimorphisms   = epimorphisms;
      report.constraints.assign(constraints.begin(), constraints.end());
      auto finish = [&] {
        report.elapsed_seconds
            = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        return report;
      };

      CountQuery const query{g, p, constraints, epimorphisms};
      if (options.cache != nullptr) {
        if (auto hit = options.cache->lookup(query)) {
          report.total = hit->total;
          report.nodes = hit->nodes;
          return finish();
        }
      }

      System const sys = compile(g, p, constraints, options);
      if (sys.infeasible) {
        report.total = 0;
      } else if (sys.generators == 0) {
        report.total = (!epimorphisms || p.order() == 1) ? 1 : 0;
      } else {
        auto const&                first = sys.candidates[0];
        std::vector<std::uint64_t> partial_total(first.size(), 0);
        std::vector<std::uint64_t> partial_nodes(first.size(), 0);
        std::atomic<std::uint64_t> global{0};
        std::atomic<bool>          abort{false};
        int const                  threads = static_cast<int>(std::max<std::size_t>(1, options.workers));
        long const                 n       = static_cast<long>(first.size());

#pragma omp parallel num_threads(threads)
        {
          NodeMeter    meter(global, abort, options.node_budget);
          CountingLeaf leaf;
          if (epimorphisms) {
            leaf.generation.emplace(p);
          }
          Search<CountingLeaf> search(sys, p, meter, leaf);
#pragma omp for schedule(dynamic, 1)
          for (long i = 0; i < n; ++i) {
            if (abort.load(std::memory_order_relaxed)) {
              continue;
            }
            leaf.count = 0;
            meter.reset_total();
            search.place(0, first[i]);
            partial_total[i] = leaf.count;
            partial_nodes[i] = meter.total();
          }
          meter.flush();
        }
        if (abort.load() || global.load() > options.node_budget) {
          throw BudgetExceeded("node budget of " + std::to_string(options.node_budget)
                               + " exceeded while counting homomorphisms to " + p.name());
        }
        for (std::size_t i = 0; i < first.size(); ++i) {
          report.total = checked_add(report.total, partial_total[i]);
          report.nodes = checked_add(report.nodes, partial_nodes[i]);
        }
      }
      if (options.cache != nullptr) {
        options.cache->store(query, {report.total, report.nodes});
      }
      return finish();
    }

    struct CollectingLeaf {
      std::vector<std::vector<Elem>> found;
      std::size_t                    limit;
      bool                           overflow = false;

      bool operator()(std::vector<Elem> const& imgs) {
        if (found.size() == limit) {
          overflow = true;
          return false;
        }
        std::vector<Elem> tuple;
        tuple.reserve(imgs.size() / 2);
        for (std::size_t i = 0; i < imgs.size(); i += 2) {
          tuple.push_back(imgs[i]);
        }
        found.push_back(std::move(tuple));
        return true;
      }
    };

    std::vector<std::vector<Elem>> collect(Presentation const&         g,
                                           FiniteGroup const&          p,
                                           std::span<Constraint const> constraints,
                                           CountOptions const&         options,
                                           std::size_t                 limit,
                                           bool                        stop_at_limit) {
      System const sys = compile(g, p, constraints, options);
      if (sys.infeasible) {
        return {};
      }
      if (sys.generators == 0) {
        return {{}};
      }
      std::atomic<std::uint64_t> global{0};
      std::atomic<bool>          abort{false};
      NodeMeter                  meter(global, abort, options.node_budget);
      CollectingLeaf             leaf{{}, limit};
      Search<CollectingLeaf>     search(sys, p, meter, leaf);
      for (auto c : sys.candidates[0]) {
        if (!search.place(0, c)) {
          break;
        }
      }
      meter.flush();
      if (leaf.overflow && !stop_at_limit) {
        throw BudgetExceeded("more than " + std::to_string(limit) + " homomorphisms to " + p.name());
      }
      if (abort.load()) {
        throw BudgetExceeded("node budget of " + std::to_string(options.node_budget)
                             + " exceeded while enumerating homomorphisms to " + p.name());
      }
      return std::move(leaf.found);
    }

  }  // namespace

  HomCountReport count_homs(Presentation const&         g,
                            FiniteGroup const&          p,
                            std::span<Constraint const> constraints,
                            CountOptions const&         options) {
    return run_count(g, p, constraints, options, false);
  }

  HomCountReport count_epis(Presentation const&         g,
                            FiniteGroup const&          p,
                            std::span<Constraint const> constraints,
                            CountOptions const&         options) {
    return run_count(g, p, constraints, options, true);
  }

  std::vector<std::vector<Elem>> enumerate_homs(Presentation const&         g,
                                                FiniteGroup const&          p,
                                                std::span<Constraint const> constraints,
                                                CountOptions const&         options,
                                                std::size_t                 limit) {
    return collect(g, p, constraints, options, limit, false);
  }

  std::optional<std::vector<Elem>> find_hom(Presentation const&         g,
                                            FiniteGroup const&          p,
                                            std::span<Constraint const> constraints,
                                            CountOptions const&         options) {
    auto found = collect(g, p, constraints, options, 1, true);
    if (found.empty()) {
      return std::nullopt;
    }
    return std::move(found.front());
  }

  Elem evaluate(Word const& w, Presentation const& g, std::span<Elem const> images, FiniteGroup const& p) {
    if (images.size() != g.generators.size()) {
      throw PresentationError("wrong number of generator images");
    }
    Elem cur = 0;
    for (auto c : encode(w, g.generators)) {
      Elem x = images[c >> 1];
      cur    = p.mul(cur, (c & 1) ? p.inv(x) : x);
    }
    return cur;
  }

  ResidualVerdict residual_nontriviality(Presentation const&             g,
                                         Word const&                     w,
                                         std::vector<FiniteGroup> const& catalog,
                                         CountOptions const&             options) {
    ResidualVerdict verdict;
    for (auto const& p : catalog) {
      ++verdict.groups_checked;
      for (std::size_t t = 1; t < p.order(); ++t) {
        Constraint const c{w, static_cast<Elem>(t)};
        if (auto hom = find_hom(g, p, std::span<Constraint const>(&c, 1), options)) {
          verdict.nontrivial = true;
          verdict.witness    = p.name();
          verdict.hom        = std::move(*hom);
          verdict.image      = static_cast<Elem>(t);
          return verdict;
        }
      }
    }
    return verdict;
  }

}  // namespace ffactor
