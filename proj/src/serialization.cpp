#include "ffactor/serialization.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <set>

namespace ffactor {

  namespace {

    std::string trim(std::string_view s) {
      auto b = s.find_first_not_of(" \t\n");
      if (b == std::string_view::npos) {
        return {};
      }
      auto e = s.find_last_not_of(" \t\n");
      return std::string(s.substr(b, e - b + 1));
    }

    std::optional<std::size_t> parse_size(std::string_view s) {
      std::size_t v   = 0;
      auto [ptr, ec]  = std::from_chars(s.data(), s.data() + s.size(), v);
      if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty()) {
        return std::nullopt;
      }
      return v;
    }

    Json const& field(Json const& j, char const* key) {
      if (!j.is_object() || !j.contains(key)) {
        throw FormatError(std::string("missing field '") + key + "'");
      }
      return j.at(key);
    }

    std::size_t size_field(Json const& j, char const* key) {
      auto const& v = field(j, key);
      if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<long long>() >= 0)) {
        throw FormatError(std::string("field '") + key + "' must be a nonnegative integer");
      }
      return v.get<std::size_t>();
    }

    std::string string_of(Json const& j, char const* what) {
      if (!j.is_string()) {
        throw FormatError(std::string(what) + " must be a string");
      }
      return j.get<std::string>();
    }

    std::vector<Elem> elem_array(Json const& j, char const* what) {
      if (!j.is_array()) {
        throw FormatError(std::string(what) + " must be an array");
      }
      std::vector<Elem> out;
      for (auto const& x : j) {
        if (!x.is_number_integer() || x.get<long long>() < 0 || x.get<long long>() >= static_cast<long long>(max_group_order)) {
          throw FormatError(std::string(what) + " holds an invalid element index");
        }
        out.push_back(x.get<Elem>());
      }
      return out;
    }

    FiniteGroup alias(std::string const& name) {
      static constexpr std::pair<char const*, char> prefixes[] = {
          {"cyclic-", 'C'}, {"symmetric-", 'S'}, {"alternating-", 'A'}, {"dihedral-", 'D'}};
      if (name == "trivial") {
        return make_trivial();
      }
      if (name == "Q8" || name == "quaternion-8") {
        return make_quaternion8();
      }
      char                       kind = 0;
      std::optional<std::size_t> n;
      for (auto [prefix, k] : prefixes) {
        std::string_view const p(prefix);
        if (name.starts_with(p)) {
          kind = k;
          n    = parse_size(std::string_view(name).substr(p.size()));
        }
      }
      if (kind == 0 && name.size() > 1 && std::string_view("CSAD").find(name[0]) != std::string_view::npos) {
        kind = name[0];
        n    = parse_size(std::string_view(name).substr(1));
      }
      if (!n) {
        throw FormatError("unknown group '" + name + "'");
      }
      switch (kind) {
        case 'C': return make_cyclic(*n);
        case 'S': return make_symmetric(*n);
        case 'A': return make_alternating(*n);
        default: break;
      }
      return make_dihedral(*n);
    }

    Json elems(std::span<Elem const> xs) {
      Json a = Json::array();
      for (auto x : xs) {
        a.push_back(x);
      }
      return a;
    }

    Json words(std::span<Word const> ws) {
      Json a = Json::array();
      for (auto const& w : ws) {
        a.push_back(w.str());
      }
      return a;
    }

  }  // namespace

  FiniteGroup group_by_name(std::string const& raw) {
    auto const name = trim(raw);
    // Products: factors separated by 'x'.
    if (name.find('x') != std::string::npos) {
      std::vector<FiniteGroup> factors;
      std::size_t              start = 0;
      while (true) {
        auto pos = name.find('x', start);
        factors.push_back(alias(trim(std::string_view(name).substr(start, pos - start))));
        if (pos == std::string::npos) {
          break;
        }
        start = pos + 1;
      }
      FiniteGroup g = factors.front();
      for (std::size_t i = 1; i < factors.size(); ++i) {
        g = make_product(g, factors[i]);
      }
      return g;
    }
    return alias(name);
  }

  FiniteGroup group_from_json(Json const& j) {
    try {
      if (j.is_string()) {
        return group_by_name(j.get<std::string>());
      }
      auto const kind = string_of(field(j, "kind"), "kind");
      if (kind == "cyclic") {
        return make_cyclic(size_field(j, "n"));
      }
      if (kind == "symmetric") {
        return make_symmetric(size_field(j, "n"));
      }
      if (kind == "alternating") {
        return make_alternating(size_field(j, "n"));
      }
      if (kind == "dihedral") {
        return make_dihedral(size_field(j, "n"));
      }
      if (kind == "quaternion8") {
        return make_quaternion8();
      }
      if (kind == "product") {
        auto const& fs = field(j, "factors");
        if (!fs.is_array() || fs.empty()) {
          throw FormatError("product needs a nonempty factor list");
        }
        FiniteGroup g = group_from_json(fs.front());
        for (std::size_t i = 1; i < fs.size(); ++i) {
          g = make_product(g, group_from_json(fs[i]));
        }
        return g;
      }
      if (kind == "table") {
        auto const&                           rows = field(j, "table");
        std::vector<std::vector<std::size_t>> table;
        if (!rows.is_array()) {
          throw FormatError("table must be an array of rows");
        }
        for (auto const& row : rows) {
          auto r = elem_array(row, "table row");
          table.emplace_back(r.begin(), r.end());
        }
        return FiniteGroup::from_table(table, "table-" + std::to_string(table.size()));
      }
      if (kind == "perm") {
        auto const  degree = size_field(j, "degree");
        auto const& gens   = field(j, "generators");
        if (!gens.is_array()) {
          throw FormatError("generators must be an array of permutations");
        }
        std::vector<Permutation> perms;
        for (auto const& g : gens) {
          auto p = elem_array(g, "permutation");
          perms.emplace_back(p.begin(), p.end());
        }
        return from_permutations(degree, perms);
      }
      throw FormatError("unknown group kind '" + kind + "'");
    } catch (nlohmann::json::exception const& e) {
      throw FormatError(e.what());
    }
  }

  std::vector<FiniteGroup> catalog_from_names(std::string const& names) {
    std::vector<FiniteGroup> out;
    std::size_t              start = 0;
    while (start <= names.size()) {
      auto pos  = names.find(',', start);
      auto item = trim(std::string_view(names).substr(start, pos == std::string::npos ? pos : pos - start));
      if (!item.empty()) {
        out.push_back(group_by_name(item));
      }
      if (pos == std::string::npos) {
        break;
      }
      start = pos + 1;
    }
    if (out.empty()) {
      throw FormatError("catalog is empty");
    }
    sort_catalog(out);
    return out;
  }

  std::vector<FiniteGroup> catalog_up_to(std::size_t max_order) {
    auto out = default_catalog();
    std::erase_if(out, [&](FiniteGroup const& g) { return g.order() > max_order; });
    if (out.empty()) {
      throw FormatError("no catalog group has order <= " + std::to_string(max_order));
    }
    return out;
  }

  Presentation presentation_from_json(Json const& j) {
    try {
      Presentation p;
      for (auto const& g : field(j, "generators")) {
        p.generators.push_back(string_of(g, "generator"));
      }
      if (j.contains("relators")) {
        for (auto const& r : j.at("relators")) {
          p.relators.push_back(Word::parse(string_of(r, "relator"), p.generators));
        }
      }
      p.validate();
      return p;
    } catch (nlohmann::json::exception const& e) {
      throw FormatError(e.what());
    }
  }

  Json to_json(Presentation const& p) {
    Json j;
    j["generators"] = p.generators;
    j["relators"]   = words(p.relators);
    return j;
  }

  Constraint constraint_from_json(Json const& j, Presentation const& g) {
    try {
      Constraint c;
      c.word   = Word::parse(string_of(field(j, "word"), "word"), g.generators);
      c.target = static_cast<Elem>(size_field(j, "target"));
      return c;
    } catch (nlohmann::json::exception const& e) {
      throw FormatError(e.what());
    }
  }

  Json to_json(Constraint const& c) {
    Json j;
    j["word"]   = c.word.str();
    j["target"] = c.target;
    return j;
  }

  SubgroupSpec subgroup_from_json(Json const& j, Presentation const& g) {
    try {
      if (j.is_array()) {
        std::vector<Word> ws;
        for (auto const& w : j) {
          ws.push_back(Word::parse(string_of(w, "subgroup word"), g.generators));
        }
        return subgroup_of_free_group(g, ws);
      }
      SubgroupSpec h;
      h.presentation   = presentation_from_json(field(j, "presentation"));
      auto const& emb  = field(j, "embedding");
      if (emb.is_object()) {
        std::set<std::string> seen;
        for (auto const& name : h.presentation.generators) {
          if (!emb.contains(name)) {
            throw FormatError("embedding has no word for '" + name + "'");
          }
          h.embedding.push_back(Word::parse(string_of(emb.at(name), "embedding word"), g.generators));
        }
        if (emb.size() != h.presentation.generators.size()) {
          throw FormatError("embedding names a generator H does not have");
        }
      } else if (emb.is_array()) {
        for (auto const& w : emb) {
          h.embedding.push_back(Word::parse(string_of(w, "embedding word"), g.generators));
        }
      } else {
        throw FormatError("embedding must be an object or an array");
      }
      h.validate(g);
      return h;
    } catch (nlohmann::json::exception const& e) {
      throw FormatError(e.what());
    }
  }

  Json to_json(SubgroupSpec const& h) {
    Json j;
    j["presentation"] = to_json(h.presentation);
    Json emb          = Json::object();
    for (std::size_t i = 0; i < h.embedding.size(); ++i) {
      emb[h.presentation.generators[i]] = h.embedding[i].str();
    }
    j["embedding"] = emb;
    return j;
  }

  GraphOfGroups graph_from_json(Json const& j) {
    try {
      GraphOfGroups g;
      auto const&   vs = field(j, "vertices");
      if (!vs.is_object()) {
        throw FormatError("vertices must be an object");
      }
      for (auto const& [name, desc] : vs.items()) {
        g.vertices.emplace_back(name, group_from_json(desc));
      }
      if (j.contains("edges")) {
        for (auto const& e : j.at("edges")) {
          GogEdge edge{string_of(field(e, "id"), "edge id"),
                       string_of(field(e, "from"), "from"),
                       string_of(field(e, "to"), "to"),
                       group_from_json(field(e, "group")),
                       elem_array(field(e, "iota"), "iota"),
                       elem_array(field(e, "tau"), "tau")};
          g.edges.push_back(std::move(edge));
        }
      }
      return g;
    } catch (nlohmann::json::exception const& e) {
      throw FormatError(e.what());
    }
  }

  std::string to_string(ScanOutcome o) {
    return o == ScanOutcome::not_free_factor ? "NOT_FREE_FACTOR" : "NO_WITNESS_UP_TO";
  }

  std::string to_string(Decision d) {
    switch (d) {
      case Decision::free_factor: return "FREE_FACTOR";
      case Decision::not_free_factor: return "NOT_FREE_FACTOR";
      case Decision::undecided: return "UNDECIDED";
    }
    return "UNDECIDED";
  }

  Json to_json(Rational const& r) {
    Json j;
    j["num"] = r.numerator();
    j["den"] = r.denominator();
    return j;
  }

  Json to_json(HomCountReport const& r) {
    Json j;
    j["codomain"]       = r.codomain;
    j["codomain_order"] = r.codomain_order;
    j["epimorphisms"]   = r.epimorphisms;
    j["total"]          = r.total;
    Json cs             = Json::array();
    for (auto const& c : r.constraints) {
      cs.push_back(to_json(c));
    }
    j["constraints"] = cs;
    j["nodes"]       = r.nodes;
    return j;
  }

  Json to_json(ConstancyReport const& r) {
    Json j;
    j["group"]       = r.group;
    j["group_order"] = r.group_order;
    j["gamma_count"] = r.gamma_count;
    j["hom_total"]   = r.hom_total;
    j["constant"]    = r.constant;
    j["partition_identity"] = r.partition_identity;
    Json counts             = Json::array();
    for (auto const& c : r.counts) {
      Json row;
      row["gamma"] = elems(c.gamma);
      row["h"]     = c.extensions;
      counts.push_back(row);
    }
    j["counts"] = counts;
    if (r.witness_pair) {
      j["witness_pair"] = Json::array({elems(r.witness_pair->first), elems(r.witness_pair->second)});
    } else {
      j["witness_pair"] = nullptr;
    }
    return j;
  }

  Json to_json(ScanVerdict const& v) {
    Json j;
    j["outcome"]       = to_string(v.outcome);
    j["witness_group"] = v.witness_group ? Json(*v.witness_group) : Json(nullptr);
    if (v.witness_pair) {
      j["witness_pair"] = Json::array({elems(v.witness_pair->first), elems(v.witness_pair->second)});
    } else {
      j["witness_pair"] = nullptr;
    }
    j["catalog_bound"] = v.catalog_bound;
    j["incomplete"]    = v.incomplete;
    Json reports       = Json::array();
    for (auto const& r : v.reports) {
      reports.push_back(to_json(r));
    }
    j["reports"] = reports;
    return j;
  }

  Json to_json(FactorDecision const& d) {
    Json j;
    j["decision"]    = to_string(d.decision);
    j["certificate"] = d.certificate;
    j["oracle"]      = d.oracle_verdict ? Json(*d.oracle_verdict) : Json(nullptr);
    j["scan"]        = to_json(d.scan);
    return j;
  }

  Json to_json(CorestrictionCheck const& c) {
    Json j;
    j["extensions"] = c.extensions;
    j["epi_sum"]    = c.epi_sum;
    j["holds"]      = c.holds;
    Json terms      = Json::array();
    for (auto const& t : c.terms) {
      Json row;
      row["subgroup"] = elems(t.subgroup);
      row["epis"]     = t.epis;
      terms.push_back(row);
    }
    j["terms"] = terms;
    return j;
  }

  Json to_json(FundamentalPresentation const& fp) {
    Json j;
    j["presentation"] = to_json(fp.presentation);
    Json vs           = Json::array();
    for (std::size_t v = 0; v < fp.vertex_names.size(); ++v) {
      Json row;
      row["name"]       = fp.vertex_names[v];
      row["generators"] = fp.vertex_generators[v];
      row["relators"]   = words(fp.vertex_relators[v]);
      vs.push_back(row);
    }
    j["vertices"]       = vs;
    Json stable         = Json::object();
    for (auto const& [edge, letter] : fp.stable_letters) {
      stable[edge] = letter;
    }
    j["stable_letters"] = stable;
    return j;
  }

  Json to_json(WordDistribution const& d) {
    Json j;
    j["word"]     = d.word.str();
    j["rank"]     = d.rank;
    j["codomain"] = d.codomain;
    j["total"]    = d.total;
    j["counts"]   = d.counts;
    return j;
  }

}  // namespace ffactor
