#ifndef FFACTOR_FINGROUP_HPP_
#define FFACTOR_FINGROUP_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace ffactor {

  // Element index of a finite group. The identity is always 0.
  using Elem = std::uint16_t;

  // A permutation of {0, ..., degree-1} as an image array.
  using Permutation = std::vector<std::uint16_t>;

  inline constexpr std::size_t max_group_order = 10000;

  class GroupError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  // Exact finite group given by its full multiplication table.
  //
  // Elements are 0..order()-1 and 0 is the identity; constructors relabel
  // the input so that this holds. When a permutation realization is present,
  // mul(x, y) corresponds to the composition x o y, i.e.
  // perm(mul(x, y))[i] == perm(x)[perm(y)[i]].
  class FiniteGroup {
   public:
    FiniteGroup() = default;

    // Builds a group from a square table. Throws GroupError unless the table
    // describes a group (closure, identity, inverses, associativity).
    static FiniteGroup from_table(std::vector<std::vector<std::size_t>> const& table,
                                  std::string                                  name);
    // Same, from a row-major table of n * n entries.
    static FiniteGroup from_flat_table(std::size_t n, std::vector<Elem> table, std::string name);

    std::size_t order() const noexcept {
      return _order;
    }
    Elem mul(Elem x, Elem y) const noexcept {
      return _mul[static_cast<std::size_t>(x) * _order + y];
    }
    Elem inv(Elem x) const noexcept {
      return _inv[x];
    }
    static constexpr Elem identity() noexcept {
      return 0;
    }
    std::string const& name() const noexcept {
      return _name;
    }
    void set_name(std::string name) {
      _name = std::move(name);
    }

    // Row-major table, order() * order() entries.
    std::span<Elem const> table() const noexcept {
      return _mul;
    }

    bool has_permutations() const noexcept {
      return !_perms.empty();
    }
    Permutation const& permutation(Elem x) const {
      return _perms.at(x);
    }
    std::size_t degree() const noexcept {
      return _perms.empty() ? 0 : _perms.front().size();
    }

    // Smallest k > 0 with x^k = 1.
    std::size_t element_order(Elem x) const;

    // Elements of the subgroup generated by gens, sorted.
    std::vector<Elem> closure(std::span<Elem const> gens) const;

    // Greedy generating set: repeatedly adds the smallest element not in
    // the current closure.
    std::vector<Elem> generating_set() const;

    bool is_abelian() const;

    // Exhaustive check of the group axioms; also checks the permutation
    // realization when present. Returns an empty string when valid.
    std::string check_axioms() const;

    // Builds a group from a complete list of permutations closed under
    // composition. The identity permutation is moved to index 0.
    static FiniteGroup from_permutation_list(std::vector<Permutation> elements, std::string name);

   private:
    std::size_t              _order = 0;
    std::vector<Elem>        _mul;
    std::vector<Elem>        _inv;
    std::vector<Permutation> _perms;
    std::string              _name;

    void compute_inverses();
  };

  FiniteGroup make_trivial();
  FiniteGroup make_cyclic(std::size_t n);
  // Even permutations (lexicographic), then odd ones.
  FiniteGroup make_symmetric(std::size_t n);
  FiniteGroup make_alternating(std::size_t n);
  // Dihedral group of order 2n.
  FiniteGroup make_dihedral(std::size_t n);
  FiniteGroup make_quaternion8();
  // Direct product; element (a, b) has index a + |A| * b.
  FiniteGroup make_product(FiniteGroup const& a, FiniteGroup const& b);
  // Closure of the generated permutation group. Throws GroupError if the
  // order would exceed max_order.
  FiniteGroup from_permutations(std::size_t                     degree,
                                std::vector<Permutation> const& generators,
                                std::size_t                     max_order = max_group_order);

  // A subgroup of a finite group. parent is non-owning; the parent group
  // must outlive the subgroup.
  struct Subgroup {
    FiniteGroup const* parent = nullptr;
    std::vector<Elem>  elements;  // sorted, contains 0

    std::size_t size() const noexcept {
      return elements.size();
    }
    bool contains(Elem x) const;
    // Position of x in elements, or nullopt.
    std::optional<std::size_t> index_of(Elem x) const;
    // The subgroup as a standalone group; element i of the result is
    // elements[i].
    FiniteGroup as_group() const;

    bool operator==(Subgroup const& other) const {
      return elements == other.elements;
    }
  };

  Subgroup whole_group(FiniteGroup const& g);
  Subgroup trivial_subgroup(FiniteGroup const& g);
  // Throws GroupError if elements is not a subgroup.
  Subgroup make_subgroup(FiniteGroup const& g, std::vector<Elem> elements);

  // Every subgroup exactly once, sorted by size then element list.
  std::vector<Subgroup> all_subgroups(FiniteGroup const& g);

  // An isomorphism between two subgroups (possibly of different parents).
  // map[i] is the image of source.elements[i], as an element of the target's
  // parent.
  struct FiniteIso {
    Subgroup          source;
    Subgroup          target;
    std::vector<Elem> map;

    Elem operator()(Elem x) const;
  };

  // All isomorphisms source -> target, in lexicographic order of the images
  // of source's greedy generating set.
  std::vector<FiniteIso> isomorphisms(Subgroup const& source, Subgroup const& target);

  // All automorphisms; order(g) <= 64.
  std::vector<FiniteIso> automorphisms(FiniteGroup const& g);

  std::optional<FiniteIso> find_isomorphism(FiniteGroup const& a, FiniteGroup const& b);

  // The default witness catalog: C2, C3, C4, C5, C6, C2xC2, Sym(3), D4, Q8,
  // A4, Sym(4), sorted by order then name.
  std::vector<FiniteGroup> default_catalog();

  // Sorts by (order, name).
  void sort_catalog(std::vector<FiniteGroup>& catalog);

}  // namespace ffactor

#endif  // FFACTOR_FINGROUP_HPP_
