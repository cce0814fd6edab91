#include "ffactor/fingroup.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace ffactor {

  namespace {

    void check_order_bound(std::size_t n) {
      if (n == 0 || n > max_group_order) {
        throw GroupError("group order " + std::to_string(n) + " outside 1.."
                         + std::to_string(max_group_order));
      }
    }

    Permutation compose(Permutation const& x, Permutation const& y) {
      Permutation r(y.size());
      for (std::size_t i = 0; i < y.size(); ++i) {
        r[i] = x[y[i]];
      }
      return r;
    }

    Permutation identity_permutation(std::size_t degree) {
      Permutation p(degree);
      std::iota(p.begin(), p.end(), 0);
      return p;
    }

    bool is_permutation(Permutation const& p, std::size_t degree) {
      if (p.size() != degree) {
        return false;
      }
      std::vector<char> seen(degree, 0);
      for (auto v : p) {
        if (v >= degree || seen[v]) {
          return false;
        }
        seen[v] = 1;
      }
      return true;
    }

    bool is_even(Permutation const& p) {
      std::vector<char> seen(p.size(), 0);
      std::size_t       transpositions = 0;
      for (std::size_t i = 0; i < p.size(); ++i) {
        if (seen[i]) {
          continue;
        }
        std::size_t len = 0;
        for (std::size_t j = i; !seen[j]; j = p[j]) {
          seen[j] = 1;
          ++len;
        }
        transpositions += len - 1;
      }
      return transpositions % 2 == 0;
    }

  }  // namespace

  ////////////////////////////////////////////////////////////////////////
  // FiniteGroup
  ////////////////////////////////////////////////////////////////////////

  FiniteGroup FiniteGroup::from_table(std::vector<std::vector<std::size_t>> const& table,
                                      std::string                                  name) {
    std::size_t const n = table.size();
    check_order_bound(n);
    std::vector<Elem> flat;
    flat.reserve(n * n);
    for (auto const& row : table) {
      if (row.size() != n) {
        throw GroupError("multiplication table is not square");
      }
      for (auto v : row) {
        if (v >= n) {
          throw GroupError("multiplication table entry out of range");
        }
        flat.push_back(static_cast<Elem>(v));
      }
    }
    return from_flat_table(n, std::move(flat), std::move(name));
  }

  FiniteGroup FiniteGroup::from_flat_table(std::size_t n, std::vector<Elem> table, std::string name) {
    check_order_bound(n);
    if (table.size() != n * n) {
      throw GroupError("multiplication table has wrong size");
    }
    if (std::any_of(table.begin(), table.end(), [n](Elem v) { return v >= n; })) {
      throw GroupError("multiplication table entry out of range");
    }
    std::optional<std::size_t> e;
    for (std::size_t x = 0; x < n && !e; ++x) {
      bool is_id = true;
      for (std::size_t y = 0; y < n && is_id; ++y) {
        is_id = table[x * n + y] == y && table[y * n + x] == y;
      }
      if (is_id) {
        e = x;
      }
    }
    if (!e) {
      throw GroupError("multiplication table has no identity");
    }
    FiniteGroup g;
    g._order = n;
    g._name  = std::move(name);
    if (*e == 0) {
      g._mul = std::move(table);
    } else {
      // Swap the labels of the identity and 0.
      auto relabel = [&](std::size_t x) -> std::size_t {
        if (x == *e) {
          return 0;
        }
        return x == 0 ? *e : x;
      };
      g._mul.resize(n * n);
      for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t y = 0; y < n; ++y) {
          g._mul[relabel(x) * n + relabel(y)] = static_cast<Elem>(relabel(table[x * n + y]));
        }
      }
    }
    g.compute_inverses();
    if (auto msg = g.check_axioms(); !msg.empty()) {
      throw GroupError(msg);
    }
    return g;
  }

  FiniteGroup FiniteGroup::from_permutation_list(std::vector<Permutation> elements,
                                                 std::string              name) {
    check_order_bound(elements.size());
    std::size_t const degree = elements.front().size();
    auto              id     = identity_permutation(degree);
    auto              it     = std::find(elements.begin(), elements.end(), id);
    if (it == elements.end()) {
      throw GroupError("permutation list does not contain the identity");
    }
    std::iter_swap(elements.begin(), it);
    std::map<Permutation, Elem> index;
    for (std::size_t i = 0; i < elements.size(); ++i) {
      if (!is_permutation(elements[i], degree)) {
        throw GroupError("invalid permutation in list");
      }
      if (!index.emplace(elements[i], static_cast<Elem>(i)).second) {
        throw GroupError("duplicate permutation in list");
      }
    }
    FiniteGroup g;
    g._order = elements.size();
    g._name  = std::move(name);
    g._mul.resize(g._order * g._order);
    for (std::size_t x = 0; x < g._order; ++x) {
      for (std::size_t y = 0; y < g._order; ++y) {
        auto found = index.find(compose(elements[x], elements[y]));
        if (found == index.end()) {
          throw GroupError("permutation list is not closed under composition");
        }
        g._mul[x * g._order + y] = found->second;
      }
    }
    g._perms = std::move(elements);
    g.compute_inverses();
    return g;
  }

  void FiniteGroup::compute_inverses() {
    _inv.assign(_order, 0);
    for (std::size_t x = 0; x < _order; ++x) {
      for (std::size_t y = 0; y < _order; ++y) {
        if (_mul[x * _order + y] == 0) {
          _inv[x] = static_cast<Elem>(y);
          break;
        }
      }
    }
  }

  std::size_t FiniteGroup::element_order(Elem x) const {
    std::size_t k   = 1;
    Elem        cur = x;
    while (cur != 0) {
      cur = mul(cur, x);
      ++k;
    }
    return k;
  }

  std::vector<Elem> FiniteGroup::closure(std::span<Elem const> gens) const {
    std::vector<char> in(_order, 0);
    std::vector<Elem> result{0};
    in[0] = 1;
    for (std::size_t i = 0; i < result.size(); ++i) {
      for (auto s : gens) {
        Elem y = mul(result[i], s);
        if (!in[y]) {
          in[y] = 1;
          result.push_back(y);
        }
      }
    }
    std::sort(result.begin(), result.end());
    return result;
  }

  std::vector<Elem> FiniteGroup::generating_set() const {
    std::vector<Elem> gens;
    std::vector<Elem> current{0};
    for (std::size_t x = 1; x < _order; ++x) {
      if (!std::binary_search(current.begin(), current.end(), static_cast<Elem>(x))) {
        gens.push_back(static_cast<Elem>(x));
        current = closure(gens);
        if (current.size() == _order) {
          break;
        }
      }
    }
    return gens;
  }

  bool FiniteGroup::is_abelian() const {
    for (std::size_t x = 0; x < _order; ++x) {
      for (std::size_t y = x + 1; y < _order; ++y) {
        if (_mul[x * _order + y] != _mul[y * _order + x]) {
          return false;
        }
      }
    }
    return true;
  }

  std::string FiniteGroup::check_axioms() const {
    std::size_t const n = _order;
    if (n == 0 || _mul.size() != n * n || _inv.size() != n) {
      return "malformed group data";
    }
    for (std::size_t x = 0; x < n; ++x) {
      if (mul(0, x) != x || mul(x, 0) != x) {
        return "element 0 is not the identity";
      }
      if (mul(x, _inv[x]) != 0 || mul(_inv[x], x) != 0) {
        return "element " + std::to_string(x) + " has no inverse";
      }
    }
    // Light's test over a generating set is complete; for small groups the
    // exhaustive check is cheap enough.
    std::vector<Elem> middle;
    if (n <= 256) {
      middle.resize(n);
      std::iota(middle.begin(), middle.end(), 0);
    } else {
      middle = generating_set();
    }
    for (std::size_t x = 0; x < n; ++x) {
      for (auto g : middle) {
        Elem const xg = mul(static_cast<Elem>(x), g);
        for (std::size_t y = 0; y < n; ++y) {
          if (mul(xg, static_cast<Elem>(y)) != mul(static_cast<Elem>(x), mul(g, static_cast<Elem>(y)))) {
            return "multiplication is not associative";
          }
        }
      }
    }
    if (!_perms.empty()) {
      if (_perms.size() != n) {
        return "permutation realization has wrong size";
      }
      std::set<Permutation> distinct(_perms.begin(), _perms.end());
      if (distinct.size() != n) {
        return "permutation realization is not faithful";
      }
      for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t y = 0; y < n; ++y) {
          if (compose(_perms[x], _perms[y]) != _perms[mul(static_cast<Elem>(x), static_cast<Elem>(y))]) {
            return "permutation realization is not a homomorphism";
          }
        }
      }
    }
    return {};
  }

  ////////////////////////////////////////////////////////////////////////
  // Constructors
  ////////////////////////////////////////////////////////////////////////

  FiniteGroup make_trivial() {
    return make_cyclic(1);
  }

  FiniteGroup make_cyclic(std::size_t n) {
    if (n < 1 || n > 256) {
      throw GroupError("cyclic group order must be in 1..256");
    }
    std::vector<std::vector<std::size_t>> table(n, std::vector<std::size_t>(n));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        table[i][j] = (i + j) % n;
      }
    }
    return FiniteGroup::from_table(table, "cyclic-" + std::to_string(n));
  }

  FiniteGroup make_symmetric(std::size_t n) {
    if (n < 1 || n > 7) {
      throw GroupError("symmetric group degree must be in 1..7");
    }
    // Even permutations first, each coset in lexicographic order, so the
    // alternating group is a prefix.
    std::vector<Permutation> even;
    std::vector<Permutation> odd;
    auto                     p = identity_permutation(n);
    do {
      (is_even(p) ? even : odd).push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    even.insert(even.end(), odd.begin(), odd.end());
    return FiniteGroup::from_permutation_list(std::move(even), "symmetric-" + std::to_string(n));
  }

  FiniteGroup make_alternating(std::size_t n) {
    if (n < 1 || n > 7) {
      throw GroupError("alternating group degree must be in 1..7");
    }
    std::vector<Permutation> perms;
    auto                     p = identity_permutation(n);
    do {
      if (is_even(p)) {
        perms.push_back(p);
      }
    } while (std::next_permutation(p.begin(), p.end()));
    return FiniteGroup::from_permutation_list(std::move(perms), "alternating-" + std::to_string(n));
  }

  FiniteGroup make_dihedral(std::size_t n) {
    if (n < 1 || 2 * n > max_group_order) {
      throw GroupError("dihedral group parameter out of range");
    }
    // r^i s^j has index i + n * j; s r = r^-1 s.
    std::size_t const order = 2 * n;
    std::vector<Elem> table(order * order);
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < 2; ++b) {
        for (std::size_t c = 0; c < n; ++c) {
          for (std::size_t d = 0; d < 2; ++d) {
            std::size_t rot           = b == 0 ? (a + c) % n : (a + n - c) % n;
            table[(a + n * b) * order + c + n * d] = static_cast<Elem>(rot + n * ((b + d) % 2));
          }
        }
      }
    }
    return FiniteGroup::from_flat_table(order, std::move(table), "dihedral-" + std::to_string(n));
  }

  FiniteGroup make_quaternion8() {
    // a^i b^j with a^4 = 1, b^2 = a^2, b a b^-1 = a^-1; index i + 4 * j.
    std::vector<std::vector<std::size_t>> table(8, std::vector<std::size_t>(8));
    for (std::size_t i = 0; i < 4; ++i) {
      for (std::size_t j = 0; j < 2; ++j) {
        for (std::size_t k = 0; k < 4; ++k) {
          for (std::size_t l = 0; l < 2; ++l) {
            std::size_t r;
            if (j == 0) {
              r = (i + k) % 4 + 4 * l;
            } else if (l == 0) {
              r = (i + 4 - k) % 4 + 4;
            } else {
              r = (i + 4 - k + 2) % 4;
            }
            table[i + 4 * j][k + 4 * l] = r;
          }
        }
      }
    }
    return FiniteGroup::from_table(table, "quaternion-8");
  }

  FiniteGroup make_product(FiniteGroup const& a, FiniteGroup const& b) {
    std::size_t const na = a.order(), nb = b.order();
    check_order_bound(na * nb);
    std::size_t const n = na * nb;
    std::vector<Elem> table(n * n);
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        auto xa = static_cast<Elem>(x % na), xb = static_cast<Elem>(x / na);
        auto ya = static_cast<Elem>(y % na), yb = static_cast<Elem>(y / na);
        table[x * n + y] = static_cast<Elem>(a.mul(xa, ya) + na * b.mul(xb, yb));
      }
    }
    return FiniteGroup::from_flat_table(n, std::move(table), a.name() + " x " + b.name());
  }

  FiniteGroup from_permutations(std::size_t                     degree,
                                std::vector<Permutation> const& generators,
                                std::size_t                     max_order) {
    if (degree == 0 || degree > 65535) {
      throw GroupError("permutation degree out of range");
    }
    for (auto const& p : generators) {
      if (!is_permutation(p, degree)) {
        throw GroupError("generator is not a permutation of degree " + std::to_string(degree));
      }
    }
    std::vector<Permutation> elements{identity_permutation(degree)};
    std::set<Permutation>    seen(elements.begin(), elements.end());
    for (std::size_t i = 0; i < elements.size(); ++i) {
      for (auto const& s : generators) {
        auto q = compose(elements[i], s);
        if (seen.insert(q).second) {
          if (elements.size() >= std::min(max_order, max_group_order)) {
            throw GroupError("permutation closure exceeds order bound "
                             + std::to_string(std::min(max_order, max_group_order)));
          }
          elements.push_back(std::move(q));
        }
      }
    }
    std::string name = "perm-" + std::to_string(degree) + "-order-" + std::to_string(elements.size());
    return FiniteGroup::from_permutation_list(std::move(elements), std::move(name));
  }

  ////////////////////////////////////////////////////////////////////////
  // Subgroups
  ////////////////////////////////////////////////////////////////////////

  bool Subgroup::contains(Elem x) const {
    return std::binary_search(elements.begin(), elements.end(), x);
  }

  std::optional<std::size_t> Subgroup::index_of(Elem x) const {
    auto it = std::lower_bound(elements.begin(), elements.end(), x);
    if (it == elements.end() || *it != x) {
      return std::nullopt;
    }
    return static_cast<std::size_t>(it - elements.begin());
  }

  FiniteGroup Subgroup::as_group() const {
    std::size_t const        n = elements.size();
    std::vector<std::size_t> position(parent->order(), 0);
    for (std::size_t i = 0; i < n; ++i) {
      position[elements[i]] = i;
    }
    std::vector<std::vector<std::size_t>> table(n, std::vector<std::size_t>(n));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        table[i][j] = position[parent->mul(elements[i], elements[j])];
      }
    }
    std::string name = n == parent->order() ? parent->name()
                                            : parent->name() + "-subgroup-" + std::to_string(n);
    return FiniteGroup::from_table(table, std::move(name));
  }

  Subgroup whole_group(FiniteGroup const& g) {
    Subgroup s{&g, std::vector<Elem>(g.order())};
    std::iota(s.elements.begin(), s.elements.end(), 0);
    return s;
  }

  Subgroup trivial_subgroup(FiniteGroup const& g) {
    return Subgroup{&g, {0}};
  }

  Subgroup make_subgroup(FiniteGroup const& g, std::vector<Elem> elements) {
    std::sort(elements.begin(), elements.end());
    elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
    if (elements.empty() || elements.front() != 0) {
      throw GroupError("subgroup must contain the identity");
    }
    if (elements.back() >= g.order()) {
      throw GroupError("subgroup element out of range");
    }
    Subgroup s{&g, std::move(elements)};
    for (auto x : s.elements) {
      if (!s.contains(g.inv(x))) {
        throw GroupError("subset is not closed under inverses");
      }
      for (auto y : s.elements) {
        if (!s.contains(g.mul(x, y))) {
          throw GroupError("subset is not closed under multiplication");
        }
      }
    }
    return s;
  }

  std::vector<Subgroup> all_subgroups(FiniteGroup const& g) {
    if (g.order() > 128) {
      throw GroupError("all_subgroups requires order <= 128");
    }
    // Each subgroup is stored with a generating set; new subgroups arise as
    // closures of (generators of S) + x.
    std::map<std::vector<Elem>, std::vector<Elem>> found;
    std::vector<std::vector<Elem>>                 queue;
    found.emplace(std::vector<Elem>{0}, std::vector<Elem>{});
    queue.push_back({0});
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
      auto const        elems = queue[qi];
      auto const        gens  = found.at(elems);
      for (std::size_t x = 1; x < g.order(); ++x) {
        if (std::binary_search(elems.begin(), elems.end(), static_cast<Elem>(x))) {
          continue;
        }
        auto ext = gens;
        ext.push_back(static_cast<Elem>(x));
        auto closed = g.closure(ext);
        if (found.emplace(closed, ext).second) {
          queue.push_back(std::move(closed));
        }
      }
    }
    std::vector<Subgroup> result;
    result.reserve(found.size());
    for (auto& [elems, gens] : found) {
      result.push_back(Subgroup{&g, elems});
    }
    std::sort(result.begin(), result.end(), [](Subgroup const& a, Subgroup const& b) {
      if (a.size() != b.size()) {
        return a.size() < b.size();
      }
      return a.elements < b.elements;
    });
    return result;
  }

  ////////////////////////////////////////////////////////////////////////
  // Isomorphisms
  ////////////////////////////////////////////////////////////////////////

  Elem FiniteIso::operator()(Elem x) const {
    auto i = source.index_of(x);
    if (!i) {
      throw GroupError("element outside the domain of the isomorphism");
    }
    return map[*i];
  }

  namespace {

    // Backtracking over images of a generating set. Level k fixes the image
    // of gens[k]; the partial map is then checked on <gens[0..k]>.
    class IsoSearch {
     public:
      IsoSearch(FiniteGroup const& a, FiniteGroup const& b, std::size_t limit)
          : _a(a), _b(b), _limit(limit), _gens(a.generating_set()) {
        std::size_t const n = a.order();
        _map.assign(n, 0);
        _level_of.assign(n, _gens.size());
        _level_of[0] = 0;
        std::vector<Elem> reached{0};
        _new_elements.resize(_gens.size());
        _edges.resize(_gens.size());
        for (std::size_t k = 0; k < _gens.size(); ++k) {
          // Closure of <gens[0..k-1]> under right multiplication by gens[0..k].
          for (std::size_t i = 0; i < reached.size(); ++i) {
            for (std::size_t j = 0; j <= k; ++j) {
              Elem y = a.mul(reached[i], _gens[j]);
              if (y != 0 && _level_of[y] == _gens.size()) {
                _level_of[y] = k;
                reached.push_back(y);
                _new_elements[k].push_back({reached[i], j, y});
              }
            }
          }
          for (auto x : reached) {
            for (std::size_t j = 0; j <= k; ++j) {
              _edges[k].push_back({x, j, a.mul(x, _gens[j])});
            }
          }
          _reached.push_back(reached);
        }
        for (auto g : _gens) {
          std::vector<Elem> cands;
          auto const        ord = a.element_order(g);
          for (std::size_t y = 0; y < b.order(); ++y) {
            if (b.element_order(static_cast<Elem>(y)) == ord) {
              cands.push_back(static_cast<Elem>(y));
            }
          }
          _candidates.push_back(std::move(cands));
        }
        _images.assign(_gens.size(), 0);
      }

      std::vector<std::vector<Elem>> run() {
        if (_a.order() != _b.order()) {
          return {};
        }
        if (_gens.empty()) {
          return {{0}};
        }
        recurse(0);
        return std::move(_results);
      }

     private:
      struct Step {
        Elem        from;
        std::size_t gen;
        Elem        to;
      };

      FiniteGroup const&             _a;
      FiniteGroup const&             _b;
      std::size_t                    _limit;
      std::vector<Elem>              _gens;
      std::vector<std::size_t>       _level_of;
      std::vector<std::vector<Step>> _new_elements;
      std::vector<std::vector<Step>> _edges;
      std::vector<std::vector<Elem>> _reached;
      std::vector<std::vector<Elem>> _candidates;
      std::vector<Elem>              _images;
      std::vector<Elem>              _map;
      std::vector<std::vector<Elem>> _results;

      bool consistent(std::size_t k) {
        for (auto const& s : _new_elements[k]) {
          _map[s.to] = _b.mul(_map[s.from], _images[s.gen]);
        }
        for (auto const& s : _edges[k]) {
          if (_map[s.to] != _b.mul(_map[s.from], _images[s.gen])) {
            return false;
          }
        }
        // Injectivity on the reached subgroup.
        std::vector<char> hit(_b.order(), 0);
        for (auto x : _reached[k]) {
          if (hit[_map[x]]) {
            return false;
          }
          hit[_map[x]] = 1;
        }
        return true;
      }

      void recurse(std::size_t k) {
        for (auto c : _candidates[k]) {
          if (_results.size() >= _limit) {
            return;
          }
          _images[k] = c;
          if (!consistent(k)) {
            continue;
          }
          if (k + 1 == _gens.size()) {
            _results.push_back(_map);
          } else {
            recurse(k + 1);
          }
        }
      }
    };

    std::vector<FiniteIso> isomorphisms_limited(Subgroup const& source,
                                                Subgroup const& target,
                                                std::size_t     limit) {
      if (source.size() != target.size()) {
        return {};
      }
      auto                   a = source.as_group();
      auto                   b = target.as_group();
      IsoSearch              search(a, b, limit);
      std::vector<FiniteIso> result;
      for (auto& local : search.run()) {
        FiniteIso iso{source, target, {}};
        iso.map.reserve(local.size());
        for (auto y : local) {
          iso.map.push_back(target.elements[y]);
        }
        result.push_back(std::move(iso));
      }
      return result;
    }

  }  // namespace

  std::vector<FiniteIso> isomorphisms(Subgroup const& source, Subgroup const& target) {
    return isomorphisms_limited(source, target, static_cast<std::size_t>(-1));
  }

  std::vector<FiniteIso> automorphisms(FiniteGroup const& g) {
    if (g.order() > 64) {
      throw GroupError("automorphisms requires order <= 64");
    }
    auto w = whole_group(g);
    return isomorphisms(w, w);
  }

  std::optional<FiniteIso> find_isomorphism(FiniteGroup const& a, FiniteGroup const& b) {
    auto found = isomorphisms_limited(whole_group(a), whole_group(b), 1);
    if (found.empty()) {
      return std::nullopt;
    }
    return std::move(found.front());
  }

  void sort_catalog(std::vector<FiniteGroup>& catalog) {
    std::stable_sort(catalog.begin(), catalog.end(), [](FiniteGroup const& x, FiniteGroup const& y) {
      if (x.order() != y.order()) {
        return x.order() < y.order();
      }
      return x.name() < y.name();
    });
  }

  std::vector<FiniteGroup> default_catalog() {
    std::vector<FiniteGroup> catalog;
    for (std::size_t n : {2, 3, 4, 5, 6}) {
      catalog.push_back(make_cyclic(n));
    }
    catalog.push_back(make_product(make_cyclic(2), make_cyclic(2)));
    catalog.push_back(make_symmetric(3));
    catalog.push_back(make_dihedral(4));
    catalog.push_back(make_quaternion8());
    catalog.push_back(make_alternating(4));
    catalog.push_back(make_symmetric(4));
    sort_catalog(catalog);
    return catalog;
  }

}  // namespace ffactor
