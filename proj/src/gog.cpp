#include "ffactor/gog.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>

namespace ffactor {

  namespace {

    std::size_t find_root(std::vector<std::size_t>& parent, std::size_t x) {
      while (parent[x] != x) {
        parent[x] = parent[parent[x]];
        x         = parent[x];
      }
      return x;
    }

    bool is_edge_id(std::string const& id) {
      return !id.empty() && std::all_of(id.begin(), id.end(), [](unsigned char c) {
        return std::isalnum(c) || c == '_';
      });
    }

    // Problems with one edge map; "iota" or "tau" in label.
    void check_edge_map(GogEdge const&            e,
                        std::vector<Elem> const&  map,
                        FiniteGroup const&        target,
                        std::string const&        label,
                        std::vector<std::string>& out) {
      std::string const where = "edge " + e.id + ": " + label;
      if (map.size() != e.group.order()) {
        out.push_back(where + " has " + std::to_string(map.size()) + " entries, edge group has order "
                      + std::to_string(e.group.order()));
        return;
      }
      for (auto x : map) {
        if (x >= target.order()) {
          out.push_back(where + " maps outside the vertex group");
          return;
        }
      }
      for (std::size_t a = 0; a < map.size(); ++a) {
        for (std::size_t b = 0; b < map.size(); ++b) {
          if (map[e.group.mul(static_cast<Elem>(a), static_cast<Elem>(b))]
              != target.mul(map[a], map[b])) {
            out.push_back(where + " is not a homomorphism");
            return;
          }
        }
      }
      std::set<Elem> image(map.begin(), map.end());
      if (image.size() != map.size()) {
        out.push_back(where + " is not injective");
      }
    }

    // Generator names a, b, ..., z without q, then a1, b1, ...
    class NamePool {
     public:
      std::string next() {
        static constexpr std::string_view letters = "abcdefghijklmnoprstuvwxyz";
        std::string name(1, letters[_i % letters.size()]);
        if (_i >= letters.size()) {
          name += std::to_string(_i / letters.size());
        }
        ++_i;
        return name;
      }

     private:
      std::size_t _i = 0;
    };

    std::vector<std::size_t> tree_path(GraphOfGroups const& g,
                                       MaximalTree const&   t,
                                       std::size_t          from,
                                       std::size_t          to) {
      std::size_t const        none = static_cast<std::size_t>(-1);
      std::vector<std::size_t> via(g.vertices.size(), none);
      std::vector<char>        seen(g.vertices.size(), 0);
      std::vector<std::size_t> queue{from};
      seen[from] = 1;
      for (std::size_t i = 0; i < queue.size(); ++i) {
        std::size_t const u = queue[i];
        for (auto e : t.edges) {
          auto const& edge = g.edges[e];
          auto const  a    = *g.vertex_index(edge.from);
          auto const  b    = *g.vertex_index(edge.to);
          std::size_t next = none;
          if (a == u) {
            next = b;
          } else if (b == u) {
            next = a;
          }
          if (next != none && !seen[next]) {
            seen[next] = 1;
            via[next]  = e;
            queue.push_back(next);
          }
        }
      }
      if (!seen[to]) {
        throw PresentationError("tree does not connect the two vertices");
      }
      std::vector<std::size_t> path;
      for (std::size_t v = to; v != from;) {
        auto const& edge = g.edges[via[v]];
        path.push_back(via[v]);
        auto const a = *g.vertex_index(edge.from);
        v            = a == v ? *g.vertex_index(edge.to) : a;
      }
      std::reverse(path.begin(), path.end());
      return path;
    }

    void check_tree(GraphOfGroups const& g, MaximalTree const& t) {
      if (t.edges.size() + 1 != g.vertices.size()) {
        throw PresentationError("maximal tree has the wrong number of edges");
      }
      std::vector<std::size_t> parent(g.vertices.size());
      std::iota(parent.begin(), parent.end(), 0);
      for (auto e : t.edges) {
        if (e >= g.edges.size()) {
          throw PresentationError("maximal tree refers to a missing edge");
        }
        auto a = find_root(parent, *g.vertex_index(g.edges[e].from));
        auto b = find_root(parent, *g.vertex_index(g.edges[e].to));
        if (a == b) {
          throw PresentationError("maximal tree contains a cycle");
        }
        parent[a] = b;
      }
    }

  }  // namespace

  std::optional<std::size_t> GraphOfGroups::vertex_index(std::string const& name) const {
    for (std::size_t i = 0; i < vertices.size(); ++i) {
      if (vertices[i].first == name) {
        return i;
      }
    }
    return std::nullopt;
  }

  FiniteGroup const& GraphOfGroups::vertex_group(std::string const& name) const {
    auto i = vertex_index(name);
    if (!i) {
      throw PresentationError("unknown vertex '" + name + "'");
    }
    return vertices[*i].second;
  }

  bool MaximalTree::contains(std::size_t e) const {
    return std::binary_search(edges.begin(), edges.end(), e);
  }

  std::vector<std::string> validate(GraphOfGroups const& g) {
    std::vector<std::string> out;
    if (g.vertices.empty()) {
      out.push_back("graph has no vertices");
      return out;
    }
    std::set<std::string> names;
    for (auto const& [name, group] : g.vertices) {
      if (name.empty()) {
        out.push_back("vertex with empty name");
      }
      if (!names.insert(name).second) {
        out.push_back("duplicate vertex '" + name + "'");
      }
    }
    std::set<std::string> ids;
    bool                  endpoints_ok = true;
    for (auto const& e : g.edges) {
      if (!is_edge_id(e.id)) {
        out.push_back("edge id '" + e.id + "' must match [A-Za-z0-9_]+");
      }
      if (!ids.insert(e.id).second) {
        out.push_back("duplicate edge id '" + e.id + "'");
      }
      auto from = g.vertex_index(e.from);
      auto to   = g.vertex_index(e.to);
      if (!from || !to) {
        out.push_back("edge " + e.id + ": unknown endpoint");
        endpoints_ok = false;
        continue;
      }
      check_edge_map(e, e.iota, g.vertices[*from].second, "iota", out);
      check_edge_map(e, e.tau, g.vertices[*to].second, "tau", out);
    }
    if (endpoints_ok) {
      std::vector<std::size_t> parent(g.vertices.size());
      std::iota(parent.begin(), parent.end(), 0);
      for (auto const& e : g.edges) {
        parent[find_root(parent, *g.vertex_index(e.from))] = find_root(parent, *g.vertex_index(e.to));
      }
      std::size_t const root = find_root(parent, 0);
      for (std::size_t v = 1; v < g.vertices.size(); ++v) {
        if (find_root(parent, v) != root) {
          out.push_back("graph is not connected");
          break;
        }
      }
    }
    return out;
  }

  MaximalTree maximal_tree(GraphOfGroups const& g, std::string const& seed) {
    auto start = g.vertex_index(seed);
    if (!start) {
      throw PresentationError("unknown vertex '" + seed + "'");
    }
    std::vector<char>        seen(g.vertices.size(), 0);
    std::vector<std::size_t> queue{*start};
    MaximalTree              t;
    seen[*start] = 1;
    for (std::size_t i = 0; i < queue.size(); ++i) {
      std::size_t const u = queue[i];
      for (std::size_t k = 0; k < g.edges.size(); ++k) {
        auto const a = *g.vertex_index(g.edges[k].from);
        auto const b = *g.vertex_index(g.edges[k].to);
        if (a != u && b != u) {
          continue;
        }
        auto const other = a == u ? b : a;
        if (!seen[other]) {
          seen[other] = 1;
          t.edges.push_back(k);
          queue.push_back(other);
        }
      }
    }
    std::sort(t.edges.begin(), t.edges.end());
    return t;
  }

  MaximalTree canonical_tree(GraphOfGroups const& g) {
    return maximal_tree(g, g.vertices.front().first);
  }

  std::vector<MaximalTree> all_maximal_trees(GraphOfGroups const& g) {
    std::size_t const        need = g.vertices.size() - 1;
    std::vector<MaximalTree> result;
    std::vector<std::size_t> pick;
    // Depth-first choice of edge subsets of size need, rejecting cycles.
    auto rec = [&](auto&& self, std::size_t from) -> void {
      if (pick.size() == need) {
        std::vector<std::size_t> parent(g.vertices.size());
        std::iota(parent.begin(), parent.end(), 0);
        for (auto e : pick) {
          auto a = find_root(parent, *g.vertex_index(g.edges[e].from));
          auto b = find_root(parent, *g.vertex_index(g.edges[e].to));
          if (a == b) {
            return;
          }
          parent[a] = b;
        }
        result.push_back({pick});
        return;
      }
      for (std::size_t e = from; e < g.edges.size(); ++e) {
        pick.push_back(e);
        self(self, e + 1);
        pick.pop_back();
      }
    };
    rec(rec, 0);
    return result;
  }

  GraphOfGroups normalize(GraphOfGroups const& input) {
    GraphOfGroups g = input;
    while (true) {
      auto const                 t = canonical_tree(g);
      std::optional<std::size_t> target;
      for (auto e : t.edges) {
        auto const& edge = g.edges[e];
        if (edge.from == edge.to) {
          continue;
        }
        if (edge.group.order() == g.vertex_group(edge.from).order()
            || edge.group.order() == g.vertex_group(edge.to).order()) {
          target = e;
          break;
        }
      }
      if (!target) {
        return g;
      }
      GogEdge const edge       = g.edges[*target];
      bool const    iota_onto  = edge.group.order() == g.vertex_group(edge.from).order();
      std::string const removed = iota_onto ? edge.from : edge.to;
      std::string const kept    = iota_onto ? edge.to : edge.from;
      // phi: G_removed -> G_kept, identifying the two images of the edge group.
      auto const&       onto    = iota_onto ? edge.iota : edge.tau;
      auto const&       other   = iota_onto ? edge.tau : edge.iota;
      std::vector<Elem> phi(g.vertex_group(removed).order(), 0);
      for (std::size_t a = 0; a < onto.size(); ++a) {
        phi[onto[a]] = other[a];
      }
      g.edges.erase(g.edges.begin() + static_cast<std::ptrdiff_t>(*target));
      for (auto& f : g.edges) {
        if (f.from == removed) {
          f.from = kept;
          for (auto& x : f.iota) {
            x = phi[x];
          }
        }
        if (f.to == removed) {
          f.to = kept;
          for (auto& x : f.tau) {
            x = phi[x];
          }
        }
      }
      g.vertices.erase(g.vertices.begin() + static_cast<std::ptrdiff_t>(*g.vertex_index(removed)));
    }
  }

  FundamentalPresentation fundamental_presentation(GraphOfGroups const& g, MaximalTree const& t) {
    if (auto problems = validate(g); !problems.empty()) {
      throw PresentationError("invalid graph of groups: " + problems.front());
    }
    check_tree(g, t);
    FundamentalPresentation fp;
    NamePool                pool;
    for (auto const& [name, group] : g.vertices) {
      std::vector<std::string> names;
      for (std::size_t i = 0, k = group.generating_set().size(); i < k; ++i) {
        names.push_back(pool.next());
      }
      auto gp = presentation_of(group, names);
      fp.vertex_names.push_back(name);
      fp.vertex_generators.push_back(names);
      fp.vertex_relators.push_back(gp.presentation.relators);
      fp.vertex_embeddings.push_back(std::move(gp.element_words));
      for (auto& n : names) {
        fp.presentation.generators.push_back(std::move(n));
      }
      for (auto& r : gp.presentation.relators) {
        fp.presentation.relators.push_back(std::move(r));
      }
    }
    for (std::size_t k = 0; k < g.edges.size(); ++k) {
      if (!t.contains(k)) {
        auto const& id         = g.edges[k].id;
        fp.stable_letters[id] = "q_" + id;
        fp.presentation.generators.push_back("q_" + id);
      }
    }
    for (std::size_t k = 0; k < g.edges.size(); ++k) {
      auto const& e        = g.edges[k];
      auto const& from_emb = fp.vertex_embeddings[*g.vertex_index(e.from)];
      auto const& to_emb   = fp.vertex_embeddings[*g.vertex_index(e.to)];
      for (auto s : e.group.generating_set()) {
        Word const i = from_emb[e.iota[s]];
        Word const o = to_emb[e.tau[s]];
        Word       r;
        if (t.contains(k)) {
          r = i * o.inverse();
        } else {
          Word const q({{fp.stable_letters.at(e.id), 1}});
          r = q * i * q.inverse() * o.inverse();
        }
        if (!r.empty()) {
          fp.presentation.relators.push_back(std::move(r));
        }
      }
    }
    fp.presentation.validate();
    return fp;
  }

  SubgroupSpec vertex_subgroup(FundamentalPresentation const& fp, std::string const& vertex) {
    auto it = std::find(fp.vertex_names.begin(), fp.vertex_names.end(), vertex);
    if (it == fp.vertex_names.end()) {
      throw PresentationError("unknown vertex '" + vertex + "'");
    }
    auto const   i = static_cast<std::size_t>(it - fp.vertex_names.begin());
    SubgroupSpec h;
    h.presentation.generators = fp.vertex_generators[i];
    h.presentation.relators   = fp.vertex_relators[i];
    for (auto const& name : fp.vertex_generators[i]) {
      h.embedding.push_back(Word({{name, 1}}));
    }
    return h;
  }

  Subgroup vertex_intersection(GraphOfGroups const& g,
                               MaximalTree const&   t,
                               std::string const&   v,
                               std::string const&   w) {
    auto const vi = g.vertex_index(v);
    auto const wi = g.vertex_index(w);
    if (!vi || !wi) {
      throw PresentationError("unknown vertex");
    }
    FiniteGroup const& gv = g.vertices[*vi].second;
    if (*vi == *wi) {
      return whole_group(gv);
    }
    auto const        path = tree_path(g, t, *vi, *wi);
    std::vector<Elem> kept;
    for (std::size_t x = 0; x < gv.order(); ++x) {
      Elem        cur  = static_cast<Elem>(x);
      std::size_t at   = *vi;
      bool        ok   = true;
      for (auto k : path) {
        auto const& e       = g.edges[k];
        bool const  forward = *g.vertex_index(e.from) == at;
        auto const& near    = forward ? e.iota : e.tau;
        auto const& far     = forward ? e.tau : e.iota;
        auto        pre     = std::find(near.begin(), near.end(), cur);
        if (pre == near.end()) {
          ok = false;
          break;
        }
        cur = far[static_cast<std::size_t>(pre - near.begin())];
        at  = forward ? *g.vertex_index(e.to) : *g.vertex_index(e.from);
      }
      if (ok) {
        kept.push_back(static_cast<Elem>(x));
      }
    }
    return Subgroup{&gv, std::move(kept)};
  }

  bool trivial_edge_free_factor_check(GraphOfGroups const& g, std::string const& v) {
    if (!g.vertex_index(v)) {
      throw PresentationError("unknown vertex '" + v + "'");
    }
    return std::all_of(g.edges.begin(), g.edges.end(), [&](GogEdge const& e) {
      return (e.from != v && e.to != v) || e.group.order() == 1;
    });
  }

}  // namespace ffactor
