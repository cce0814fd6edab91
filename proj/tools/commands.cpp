#include "commands.hpp"

#include <cstdlib>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <memory>
#include <set>
#include <sstream>

#include "CLI11.hpp"
#include "cache.hpp"
#include "corpus.hpp"
#include "ffactor/factor.hpp"
#include "ffactor/serialization.hpp"
#include "ffactor/whitehead.hpp"
#include "ffactor/wordmeasure.hpp"

namespace ffactor::cli {

  namespace {

    struct Context {
      JobSpec const&                  job;
      std::vector<FiniteGroup>        catalog;
      CountOptions                    options;
      std::unique_ptr<DirectoryCache> cache;
    };

    Json read_input(JobSpec const& job, std::size_t i = 0) {
      if (job.inputs.size() <= i) {
        throw FormatError(job.command + " needs --input FILE");
      }
      std::ifstream in(job.inputs[i]);
      if (!in) {
        throw FormatError("cannot read " + job.inputs[i]);
      }
      auto j = Json::parse(in, nullptr, false);
      if (j.is_discarded()) {
        throw FormatError(job.inputs[i] + " is not valid JSON");
      }
      return j;
    }

    std::string gamma_str(std::vector<Elem> const& g) {
      std::string s = "(";
      for (std::size_t i = 0; i < g.size(); ++i) {
        s += (i ? "," : "") + std::to_string(g[i]);
      }
      return s + ")";
    }

    std::vector<FiniteGroup> groups_for(Json const& input, Context const& ctx) {
      if (input.contains("group")) {
        return {group_from_json(input.at("group"))};
      }
      return ctx.catalog;
    }

    // Output: JSON document or human-readable text.
    struct Emit {
      Json        json;
      std::string text;
      int         code = exit_ok;
    };

    void print_constancy(std::ostream& s, ConstancyReport const& r) {
      s << r.group << " (order " << r.group_order << "): " << (r.constant ? "constant" : "NOT constant")
        << ", |Hom(H,P)| = " << r.gamma_count << ", |Hom(G,P)| = " << r.hom_total
        << ", partition identity " << (r.partition_identity ? "ok" : "FAILED") << '\n';
      std::size_t width = 5;
      for (auto const& c : r.counts) {
        width = std::max(width, gamma_str(c.gamma).size());
      }
      s << "  " << std::left << std::setw(static_cast<int>(width)) << "gamma" << "  " << std::right
        << std::setw(12) << "h" << "  flags\n";
      for (auto const& c : r.counts) {
        std::string flags;
        if (r.witness_pair && (c.gamma == r.witness_pair->first || c.gamma == r.witness_pair->second)) {
          flags = "witness";
        }
        s << "  " << std::left << std::setw(static_cast<int>(width)) << gamma_str(c.gamma) << "  " << std::right
          << std::setw(12) << c.extensions << "  " << flags << '\n';
      }
    }

    void print_scan(std::ostream& s, ScanVerdict const& v) {
      s << std::left << std::setw(28) << "group" << std::right << std::setw(7) << "order" << std::setw(10)
        << "gammas" << "  constant\n";
      for (auto const& r : v.reports) {
        s << std::left << std::setw(28) << r.group << std::right << std::setw(7) << r.group_order
          << std::setw(10) << r.gamma_count << "  " << (r.constant ? "yes" : "no") << '\n';
      }
      for (auto const& name : v.incomplete) {
        s << std::left << std::setw(28) << name << "  skipped: node budget exceeded\n";
      }
      s << "verdict: " << to_string(v.outcome);
      if (v.witness_group) {
        s << ", witness " << *v.witness_group << " with gamma pair " << gamma_str(v.witness_pair->first) << " vs "
          << gamma_str(v.witness_pair->second);
      } else {
        s << " (catalog up to order " << v.catalog_bound << ")";
      }
      s << '\n';
    }

    Emit cmd_homcount(Context& ctx) {
      auto const input = read_input(ctx.job);
      auto const g     = presentation_from_json(input.at("presentation"));
      std::vector<Constraint> constraints;
      if (input.contains("constraints")) {
        for (auto const& c : input.at("constraints")) {
          constraints.push_back(constraint_from_json(c, g));
        }
      }
      bool const epis = ctx.job.epimorphisms || input.value("epimorphisms", false);
      Emit       e;
      e.json = Json::array();
      std::ostringstream s;
      s << "G = " << g.str() << '\n'
        << std::left << std::setw(28) << "codomain" << std::right << std::setw(7) << "order" << std::setw(16)
        << (epis ? "epimorphisms" : "homomorphisms") << std::setw(14) << "nodes" << '\n';
      for (auto const& p : groups_for(input, ctx)) {
        for (auto const& c : constraints) {
          if (c.target >= p.order()) {
            throw FormatError("constraint target " + std::to_string(c.target) + " outside " + p.name());
          }
        }
        auto r = epis ? count_epis(g, p, constraints, ctx.options) : count_homs(g, p, constraints, ctx.options);
        e.json.push_back(to_json(r));
        s << std::left << std::setw(28) << r.codomain << std::right << std::setw(7) << r.codomain_order
          << std::setw(16) << r.total << std::setw(14) << r.nodes << '\n';
      }
      e.text = s.str();
      return e;
    }

    std::pair<Presentation, SubgroupSpec> read_pair(Json const& input, Context const& ctx) {
      auto g = presentation_from_json(input.at("G"));
      auto h = subgroup_from_json(input.at("H"), g);
      if (auto defect = embedding_defect(g, h, ctx.catalog, ctx.options)) {
        throw PresentationError("invalid subgroup embedding: " + *defect);
      }
      return {std::move(g), std::move(h)};
    }

    Emit cmd_constancy(Context& ctx) {
      auto const input  = read_input(ctx.job);
      auto const [g, h] = read_pair(input, ctx);
      Emit               e;
      std::ostringstream s;
      e.json = Json::array();
      for (auto const& p : groups_for(input, ctx)) {
        auto r = constancy_test(g, h, p, ctx.options);
        e.json.push_back(to_json(r));
        print_constancy(s, r);
      }
      e.text = s.str();
      return e;
    }

    Emit cmd_scan(Context& ctx) {
      auto const input  = read_input(ctx.job);
      auto const [g, h] = read_pair(input, ctx);
      auto const v      = measure_preservation_scan(g, h, ctx.catalog, ctx.options);
      Emit       e;
      e.json = to_json(v);
      std::ostringstream s;
      print_scan(s, v);
      e.text = s.str();
      e.code = v.outcome == ScanOutcome::not_free_factor ? exit_refuted : exit_ok;
      return e;
    }

    // Word and rank from --input {"word": ..., "rank": ...} or the command line.
    std::pair<Word, std::size_t> word_and_rank(Context const& ctx, Json* input_out = nullptr) {
      Json input = ctx.job.inputs.empty() ? Json::object() : read_input(ctx.job);
      std::string text;
      if (ctx.job.word) {
        text = *ctx.job.word;
      } else if (input.contains("word")) {
        text = input.at("word").get<std::string>();
      } else {
        throw FormatError(ctx.job.command + " needs a word");
      }
      auto w    = Word::parse(text);
      auto rank = ctx.job.rank ? *ctx.job.rank : input.value("rank", std::size_t{0});
      if (rank == 0) {
        std::set<std::string> names;
        for (auto const& l : w.letters()) {
          names.insert(l.name);
        }
        rank = std::max<std::size_t>(1, names.size());
      }
      if (input_out) {
        *input_out = std::move(input);
      }
      return {std::move(w), rank};
    }

    Emit cmd_primitive(Context& ctx) {
      auto const [w, rank] = word_and_rank(ctx);
      Word const   one[]   = {w};
      auto const   alpha   = make_alphabet(one, rank);
      auto const   g       = free_presentation(alpha);
      SubgroupSpec h{Presentation{{"h"}, {}}, {w}};
      auto const   d       = free_factor_decision(g, h, ctx.catalog, WhiteheadOracle{}, ctx.options);
      auto const   minimal = whitehead_minimize(encode(cyclic_reduce(w, alpha), alpha), rank);

      Emit e;
      e.json["word"]          = w.str();
      e.json["rank"]          = rank;
      e.json["primitive"]     = *d.oracle_verdict;
      e.json["minimal_word"]  = decode(minimal.minimal, alpha).str();
      e.json["decision"]      = to_string(d.decision);
      e.json["scan"]          = to_json(d.scan);
      std::ostringstream s;
      s << "word: " << w.str() << " in F" << rank << '\n'
        << "Whitehead minimal cyclic word: " << decode(minimal.minimal, alpha).str() << " (length "
        << minimal.minimal.size() << ")\n"
        << "primitive: " << (*d.oracle_verdict ? "yes" : "no") << '\n';
      print_scan(s, d.scan);
      s << "decision: " << to_string(d.decision) << '\n';
      e.text = s.str();
      return e;
    }

    Emit cmd_gog(Context& ctx) {
      auto const input = read_input(ctx.job);
      auto       graph = graph_from_json(input);
      auto const problems = validate(graph);
      Emit       e;
      e.json["valid"]       = problems.empty();
      e.json["diagnostics"] = problems;
      if (!problems.empty()) {
        std::ostringstream s;
        for (auto const& p : problems) {
          s << "invalid: " << p << '\n';
        }
        e.text = s.str();
        e.code = exit_error;
        return e;
      }
      if (ctx.job.normalize) {
        graph = normalize(graph);
      }
      auto const tree = canonical_tree(graph);
      auto const fp   = fundamental_presentation(graph, tree);
      Json       tree_ids = Json::array();
      for (auto i : tree.edges) {
        tree_ids.push_back(graph.edges[i].id);
      }
      Json free_vertices = Json::array();
      for (auto const& [name, group] : graph.vertices) {
        if (trivial_edge_free_factor_check(graph, name)) {
          free_vertices.push_back(name);
        }
      }
      e.json["vertices"]           = graph.vertices.size();
      e.json["edges"]              = graph.edges.size();
      e.json["tree"]               = tree_ids;
      e.json["fundamental"]        = to_json(fp);
      e.json["trivial_edge_factors"] = free_vertices;

      std::ostringstream s;
      s << "graph: " << graph.vertices.size() << " vertices, " << graph.edges.size() << " edges"
        << (ctx.job.normalize ? " (normalized)" : "") << '\n'
        << "maximal tree: " << tree_ids.dump() << '\n'
        << "presentation: " << fp.presentation.str() << '\n';
      for (std::size_t v = 0; v < fp.vertex_names.size(); ++v) {
        s << "  vertex " << fp.vertex_names[v] << ": generators";
        for (auto const& n : fp.vertex_generators[v]) {
          s << ' ' << n;
        }
        s << '\n';
      }
      for (auto const& [edge, letter] : fp.stable_letters) {
        s << "  edge " << edge << ": stable letter " << letter << '\n';
      }
      s << "vertices with trivial incident edge groups: " << free_vertices.dump() << '\n';
      e.text = s.str();
      return e;
    }

    Emit cmd_measure(Context& ctx) {
      Json       input;
      auto const [w, rank] = word_and_rank(ctx, &input);
      std::optional<std::size_t> degree = ctx.job.degree;
      if (!degree && input.contains("n")) {
        degree = input.at("n").get<std::size_t>();
      }
      Emit e;
      e.json["word"] = w.str();
      e.json["rank"] = rank;
      Json dists     = Json::array();
      std::ostringstream s;
      s << "word: " << w.str() << " in F" << rank << '\n'
        << std::left << std::setw(28) << "group" << std::right << std::setw(12) << "total" << std::setw(14)
        << "TV distance" << "  counts\n";
      for (auto const& p : ctx.catalog) {
        auto const d   = word_value_distribution(w, rank, p, ctx.options.workers);
        auto const dev = uniformity_deviation(d);
        Json       j   = to_json(d);
        j["deviation"] = to_json(dev);
        dists.push_back(j);
        std::ostringstream frac;
        frac << dev.numerator() << '/' << dev.denominator();
        s << std::left << std::setw(28) << p.name() << std::right << std::setw(12) << d.total << std::setw(14)
          << frac.str() << "  " << Json(d.counts).dump() << '\n';
      }
      e.json["distributions"] = dists;
      if (degree) {
        auto const fix                  = expected_fixed_points(w, rank, *degree, ctx.options.workers);
        e.json["degree"]                = *degree;
        e.json["expected_fixed_points"] = to_json(fix);
        s << "E[fixed points] in Sym(" << *degree << "): " << fix.numerator() << '/' << fix.denominator() << '\n';
      }
      e.text = s.str();
      return e;
    }

    struct Check {
      std::string name;
      bool        ok = false;
    };

    Emit cmd_selftest(Context& ctx) {
      std::vector<Check> checks;
      auto const         catalog = ctx.catalog;
      std::mt19937_64    rng(ctx.job.seed);
      CountOptions       serial  = ctx.options;
      serial.workers             = 1;
      serial.cache               = nullptr;
      CountOptions parallel      = serial;
      parallel.workers           = std::max<std::size_t>(2, ctx.options.workers);

      auto add = [&](std::string name, std::function<bool()> f) { checks.push_back({std::move(name), f()}); };

      add("free group counts |P|^r", [&] {
        for (std::size_t r = 0; r <= 3; ++r) {
          for (auto const& p : catalog) {
            std::uint64_t expect = 1;
            for (std::size_t i = 0; i < r; ++i) {
              expect *= p.order();
            }
            if (count_homs(free_presentation(r), p, {}, serial).total != expect) {
              return false;
            }
          }
        }
        return true;
      });
      add("backtracking equals odometer", [&] {
        for (int i = 0; i < 20; ++i) {
          auto const g = random_presentation(rng);
          for (auto const& p : catalog) {
            if (p.order() > 12) {
              continue;
            }
            if (count_homs(g, p, {}, serial).total != reference::count_assignments(g, p, {}, false)
                || count_epis(g, p, {}, serial).total != reference::count_assignments(g, p, {}, true)) {
              return false;
            }
          }
        }
        return true;
      });
      add("parallel equals serial", [&] {
        for (int i = 0; i < 20; ++i) {
          auto const g = random_presentation(rng);
          for (auto const& p : catalog) {
            auto a = count_homs(g, p, {}, serial);
            auto b = count_homs(g, p, {}, parallel);
            if (a.total != b.total || a.nodes != b.nodes) {
              return false;
            }
          }
        }
        return true;
      });
      add("partition identity", [&] {
        for (int i = 0; i < 20; ++i) {
          auto const g = random_presentation(rng);
          auto const h = random_cyclic_subgroup(rng, g);
          for (auto const& p : catalog) {
            if (!constancy_test(g, h, p, serial).partition_identity) {
              return false;
            }
          }
        }
        return true;
      });
      add("free product multiplicativity", [&] {
        Presentation const a{{"a"}, {Word::parse("a a")}};
        Presentation const b{{"b"}, {Word::parse("b b b")}};
        auto const         ab = free_product(a, b);
        for (auto const& p : catalog) {
          if (count_homs(ab, p, {}, serial).total
              != count_homs(a, p, {}, serial).total * count_homs(b, p, {}, serial).total) {
            return false;
          }
        }
        return true;
      });
      add("primitive words are never refuted", [&] {
        auto const f2 = free_presentation(std::vector<std::string>{"x", "y"});
        for (auto const& w : cyclic_word_classes(2, 4)) {
          if (!is_primitive_whitehead(w, f2.generators)) {
            continue;
          }
          SubgroupSpec h{Presentation{{"h"}, {}}, {w}};
          if (measure_preservation_scan(f2, h, catalog, serial).outcome == ScanOutcome::not_free_factor) {
            return false;
          }
        }
        return true;
      });
      add("word measure routes agree", [&] {
        for (auto const& w : cyclic_word_classes(2, 3)) {
          for (auto const& p : catalog) {
            if (p.order() > 8) {
              continue;
            }
            if (word_value_distribution(w, 2, p).counts
                != word_value_distribution_by_counting(w, 2, p, serial).counts) {
              return false;
            }
          }
        }
        return true;
      });
      if (ctx.cache) {
        add("cache hits equal recomputation", [&] {
          CountOptions cached = serial;
          cached.cache        = ctx.cache.get();
          for (int i = 0; i < 10; ++i) {
            auto const g = random_presentation(rng);
            for (auto const& p : catalog) {
              auto fresh = count_homs(g, p, {}, serial);
              auto first = count_homs(g, p, {}, cached);
              auto again = count_homs(g, p, {}, cached);
              if (fresh.total != first.total || fresh.total != again.total || fresh.nodes != again.nodes) {
                return false;
              }
            }
          }
          return true;
        });
      }

      Emit               e;
      std::ostringstream s;
      bool               all = true;
      e.json["checks"]       = Json::array();
      for (auto const& c : checks) {
        all = all && c.ok;
        Json j;
        j["name"] = c.name;
        j["ok"]   = c.ok;
        e.json["checks"].push_back(j);
        s << (c.ok ? "PASS " : "FAIL ") << c.name << '\n';
      }
      e.json["ok"] = all;
      e.text       = s.str();
      e.code       = all ? exit_ok : exit_refuted;
      return e;
    }

    std::string error_kind(std::exception const& ex) {
      if (dynamic_cast<FormatError const*>(&ex) || dynamic_cast<CLI::Error const*>(&ex)) {
        return "format";
      }
      if (dynamic_cast<WordError const*>(&ex) || dynamic_cast<PresentationError const*>(&ex)) {
        return "input";
      }
      if (dynamic_cast<GroupError const*>(&ex)) {
        return "group";
      }
      if (dynamic_cast<BudgetExceeded const*>(&ex)) {
        return "budget";
      }
      if (dynamic_cast<CountOverflow const*>(&ex)) {
        return "overflow";
      }
      return "internal";
    }

    int report_error(JobSpec const& job, std::exception const& ex, std::ostream& out, std::ostream& err) {
      if (job.json) {
        Json j;
        j["error"]["kind"]    = error_kind(ex);
        j["error"]["message"] = ex.what();
        out << j.dump(2) << '\n';
      } else {
        err << "ffactor: " << error_kind(ex) << " error: " << ex.what() << '\n';
      }
      return exit_error;
    }

    std::optional<std::string> env(char const* name) {
      if (char const* v = std::getenv(name); v != nullptr && *v != '\0') {
        return std::string(v);
      }
      return std::nullopt;
    }

  }  // namespace

  int run_job(JobSpec const& job, std::ostream& out, std::ostream& err) {
    try {
      if (job.budget_nodes == 0) {
        throw FormatError("--budget-nodes must be positive");
      }
      if (job.workers == 0) {
        throw FormatError("--workers must be positive");
      }
      Context ctx{job, {}, {}, nullptr};
      if (job.catalog) {
        ctx.catalog = catalog_from_names(*job.catalog);
      } else if (job.max_order) {
        ctx.catalog = catalog_up_to(*job.max_order);
      } else {
        ctx.catalog = default_catalog();
      }
      ctx.options.workers     = job.workers;
      ctx.options.node_budget = job.budget_nodes;
      if (job.cache_dir) {
        ctx.cache         = std::make_unique<DirectoryCache>(*job.cache_dir);
        ctx.options.cache = ctx.cache.get();
      }

      static std::map<std::string, Emit (*)(Context&)> const commands = {
          {"homcount", cmd_homcount}, {"constancy", cmd_constancy}, {"scan", cmd_scan},
          {"primitive", cmd_primitive}, {"gog", cmd_gog}, {"measure", cmd_measure},
          {"selftest", cmd_selftest}};
      auto it = commands.find(job.command);
      if (it == commands.end()) {
        throw FormatError("unknown command '" + job.command + "'");
      }
      auto const e = it->second(ctx);
      if (job.json) {
        Json doc;
        doc["command"] = job.command;
        doc["result"]  = e.json;
        out << doc.dump(2) << '\n';
      } else {
        out << e.text;
      }
      return e.code;
    } catch (std::exception const& ex) {
      return report_error(job, ex, out, err);
    }
  }

  int run(std::vector<std::string> const& args, std::ostream& out, std::ostream& err) {
    JobSpec job;
    if (auto w = env("FFACTOR_WORKERS")) {
      try {
        job.workers = std::stoul(*w);
      } catch (std::exception const&) {
        err << "ffactor: ignoring FFACTOR_WORKERS=" << *w << '\n';
      }
    }
    job.cache_dir = env("FFACTOR_CACHE_DIR");

    CLI::App app{"Free factor tests through homomorphism counts to finite groups", "ffactor"};
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all");

    auto common = [&](CLI::App* sub) -> CLI::App* {
      sub->add_option("--input", job.inputs, "Input JSON file")->check(CLI::ExistingFile);
      auto* cat = sub->add_option("--catalog", job.catalog, "Comma separated witness groups (C2,S3,Q8,...)");
      sub->add_option("--max-order", job.max_order, "Default catalog restricted to this order")->excludes(cat);
      sub->add_option("--budget-nodes", job.budget_nodes, "Search node budget per count");
      sub->add_option("--workers", job.workers, "Worker threads");
      sub->add_flag("--json", job.json, "Emit JSON");
      sub->add_option("--cache", job.cache_dir, "Count cache directory");
      sub->add_option("--seed", job.seed, "Seed for generated corpora");
      sub->callback([&job, sub] { job.command = sub->get_name(); });
      return sub;
    };

    common(app.add_subcommand("homcount", "Count homomorphisms or epimorphisms G -> P"))
        ->add_flag("--epi", job.epimorphisms, "Count epimorphisms");
    common(app.add_subcommand("constancy", "Table of extension counts over Hom(H,P)"));
    common(app.add_subcommand("scan", "Look for a catalog group refuting constancy (exit 1 if found)"));
    auto* prim = app.add_subcommand("primitive", "Whitehead primitivity with the scan verdict");
    common(prim);
    prim->add_option("word", job.word, "Word such as \"x y x^-1\"");
    prim->add_option("--rank", job.rank, "Rank of the free group");
    auto* gog = app.add_subcommand("gog", "Validate and present a graph of finite groups");
    common(gog);
    gog->add_flag("--normalize", job.normalize, "Contract tree edges with an onto edge map first");
    auto* measure = app.add_subcommand("measure", "Distribution of a word under random homomorphisms");
    common(measure);
    measure->add_option("word", job.word, "Word such as \"x y x^-1 y^-1\"");
    measure->add_option("--rank", job.rank, "Rank of the free group");
    measure->add_option("--degree", job.degree, "Expected fixed points in Sym(n)");
    common(app.add_subcommand("selftest", "Run the invariant checks at small scale"));

    try {
      std::vector<std::string> reversed(args.rbegin(), args.rend());
      app.parse(reversed);
    } catch (CLI::CallForHelp const& ex) {
      return app.exit(ex, out, err);
    } catch (CLI::CallForAllHelp const& ex) {
      return app.exit(ex, out, err);
    } catch (CLI::ParseError const& ex) {
      return report_error(job, ex, out, err);
    }
    return run_job(job, out, err);
  }

}  // namespace ffactor::cli
