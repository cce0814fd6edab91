#include "ffactor/stallings.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <tuple>

namespace ffactor {

  namespace {

    class UnionFind {
     public:
      std::size_t add() {
        _parent.push_back(_parent.size());
        return _parent.size() - 1;
      }
      std::size_t find(std::size_t x) {
        while (_parent[x] != x) {
          _parent[x] = _parent[_parent[x]];
          x          = _parent[x];
        }
        return x;
      }
      // Keeps the smaller representative so the base stays 0.
      void unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a != b) {
          _parent[std::max(a, b)] = std::min(a, b);
        }
      }
      std::size_t size() const {
        return _parent.size();
      }

     private:
      std::vector<std::size_t> _parent;
    };

    // One folding pass. Returns true if some pair of vertices was identified.
    bool fold_once(std::set<StallingsEdge>& edges, UnionFind& uf) {
      std::set<StallingsEdge> canon;
      for (auto const& e : edges) {
        canon.insert({uf.find(e.from), uf.find(e.to), e.label});
      }
      edges = std::move(canon);
      std::map<std::tuple<std::size_t, std::size_t, bool>, std::size_t> seen;
      bool                                                              merged = false;
      for (auto const& e : edges) {
        auto out = seen.emplace(std::make_tuple(e.from, e.label, true), e.to);
        if (!out.second && uf.find(out.first->second) != uf.find(e.to)) {
          uf.unite(out.first->second, e.to);
          merged = true;
        }
        auto in = seen.emplace(std::make_tuple(e.to, e.label, false), e.from);
        if (!in.second && uf.find(in.first->second) != uf.find(e.from)) {
          uf.unite(in.first->second, e.from);
          merged = true;
        }
      }
      return merged;
    }

    // Directed step from v along letter (label, exponent) in a folded graph.
    std::optional<std::size_t> step(StallingsGraph const& g, std::size_t v, std::size_t label, int exponent) {
      for (auto const& e : g.edges) {
        if (e.label != label) {
          continue;
        }
        if (exponent > 0 && e.from == v) {
          return e.to;
        }
        if (exponent < 0 && e.to == v) {
          return e.from;
        }
      }
      return std::nullopt;
    }

    struct Traversal {
      std::vector<std::size_t>   order;        // old vertex ids in BFS order
      std::vector<std::size_t>   renumber;     // old -> new
      std::vector<Word>          prefix;       // new id -> word from base
      std::set<std::size_t>      tree_edges;   // indices into the edge list
    };

    // BFS from base; labels in order, outgoing before incoming.
    Traversal traverse(std::vector<StallingsEdge> const& edges,
                       std::size_t                       vertex_limit,
                       std::size_t                       base,
                       std::vector<std::string> const&   alphabet) {
      Traversal t;
      std::size_t const none = static_cast<std::size_t>(-1);
      t.renumber.assign(vertex_limit, none);
      t.renumber[base] = 0;
      t.order.push_back(base);
      t.prefix.push_back(Word());
      for (std::size_t i = 0; i < t.order.size(); ++i) {
        std::size_t const v = t.order[i];
        for (std::size_t label = 0; label < alphabet.size(); ++label) {
          for (int exponent : {1, -1}) {
            for (std::size_t k = 0; k < edges.size(); ++k) {
              auto const& e = edges[k];
              if (e.label != label) {
                continue;
              }
              std::size_t next;
              if (exponent > 0 && e.from == v) {
                next = e.to;
              } else if (exponent < 0 && e.to == v) {
                next = e.from;
              } else {
                continue;
              }
              if (t.renumber[next] == none) {
                t.renumber[next] = t.order.size();
                t.order.push_back(next);
                t.prefix.push_back(t.prefix[i] * Word({{alphabet[label], exponent}}));
                t.tree_edges.insert(k);
              }
            }
          }
        }
      }
      return t;
    }

  }  // namespace

  StallingsGraph stallings_fold(std::vector<Word> const& generators, std::vector<std::string> alphabet) {
    UnionFind               uf;
    std::set<StallingsEdge> edges;
    std::size_t const       base = uf.add();
    for (auto const& w : generators) {
      auto codes = encode(w, alphabet);
      if (codes.empty()) {
        continue;
      }
      std::size_t cur = base;
      for (std::size_t i = 0; i < codes.size(); ++i) {
        std::size_t const next  = i + 1 == codes.size() ? base : uf.add();
        std::size_t const label = codes[i] >> 1;
        if (codes[i] & 1) {
          edges.insert({next, cur, label});
        } else {
          edges.insert({cur, next, label});
        }
        cur = next;
      }
    }
    while (fold_once(edges, uf)) {
    }
    // Trim hanging vertices other than the base.
    for (bool trimmed = true; trimmed;) {
      trimmed = false;
      std::map<std::size_t, std::size_t> degree;
      for (auto const& e : edges) {
        ++degree[e.from];
        ++degree[e.to];
      }
      for (auto it = edges.begin(); it != edges.end();) {
        bool const hanging = (it->from != base && degree[it->from] == 1)
                             || (it->to != base && degree[it->to] == 1);
        if (hanging) {
          it      = edges.erase(it);
          trimmed = true;
        } else {
          ++it;
        }
      }
    }
    std::vector<StallingsEdge> list(edges.begin(), edges.end());
    auto                       t = traverse(list, uf.size(), base, alphabet);
    StallingsGraph             g;
    g.alphabet     = std::move(alphabet);
    g.vertex_count = t.order.size();
    g.base         = 0;
    g.folded       = true;
    for (auto const& e : list) {
      g.edges.push_back({t.renumber[e.from], t.renumber[e.to], e.label});
    }
    std::sort(g.edges.begin(), g.edges.end());
    return g;
  }

  StallingsGraph stallings_fold(std::vector<Word> const& generators, std::size_t rank) {
    return stallings_fold(generators, make_alphabet(generators, rank));
  }

  bool membership(StallingsGraph const& g, Word const& w) {
    std::size_t v = g.base;
    for (auto const& l : w.letters()) {
      auto it = std::find(g.alphabet.begin(), g.alphabet.end(), l.name);
      if (it == g.alphabet.end()) {
        return false;
      }
      auto next = step(g, v, static_cast<std::size_t>(it - g.alphabet.begin()), l.exponent);
      if (!next) {
        return false;
      }
      v = *next;
    }
    return v == g.base;
  }

  std::size_t subgroup_rank(StallingsGraph const& g) {
    return g.edges.size() + 1 - g.vertex_count;
  }

  std::optional<std::size_t> subgroup_index(StallingsGraph const& g, std::size_t rank) {
    if (g.alphabet.size() < rank) {
      return std::nullopt;
    }
    // Full degree: every label appears once outgoing and once incoming at
    // every vertex.
    std::vector<std::size_t> out(g.vertex_count, 0), in(g.vertex_count, 0);
    for (auto const& e : g.edges) {
      ++out[e.from];
      ++in[e.to];
    }
    for (std::size_t v = 0; v < g.vertex_count; ++v) {
      if (out[v] != rank || in[v] != rank) {
        return std::nullopt;
      }
    }
    return g.vertex_count;
  }

  std::vector<Word> free_basis(StallingsGraph const& g) {
    auto              t = traverse(g.edges, g.vertex_count, g.base, g.alphabet);
    std::vector<Word> basis;
    for (std::size_t k = 0; k < g.edges.size(); ++k) {
      if (t.tree_edges.contains(k)) {
        continue;
      }
      auto const& e = g.edges[k];
      basis.push_back(t.prefix[t.renumber[e.from]] * Word({{g.alphabet[e.label], 1}})
                      * t.prefix[t.renumber[e.to]].inverse());
    }
    return basis;
  }

  std::string to_dot(StallingsGraph const& g) {
    std::ostringstream os;
    os << "digraph stallings {\n";
    for (std::size_t v = 0; v < g.vertex_count; ++v) {
      os << "  v" << v << (v == g.base ? " [shape=doublecircle];\n" : " [shape=circle];\n");
    }
    for (auto const& e : g.edges) {
      os << "  v" << e.from << " -> v" << e.to << " [label=\"" << g.alphabet[e.label] << "\"];\n";
    }
    os << "}\n";
    return os.str();
  }

}  // namespace ffactor
