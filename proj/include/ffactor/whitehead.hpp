#ifndef FFACTOR_WHITEHEAD_HPP_
#define FFACTOR_WHITEHEAD_HPP_

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "ffactor/word.hpp"

namespace ffactor {

  inline constexpr std::size_t max_whitehead_rank = 4;

  // A Whitehead automorphism of the free group on x_0..x_{rank-1}, acting on
  // letter codes (see word.hpp).
  //
  // Permutation type: x_i -> x_{perm[i]}^(invert[i] ? -1 : 1).
  // Multiplier type (A, a): a is a letter, A a set of letters containing a
  // but not a^-1. Each generator x other than that of a maps to
  //   x a      if x in A, x^-1 not in A
  //   a^-1 x   if x^-1 in A, x not in A
  //   a^-1 x a if both are in A
  //   x        otherwise.
  class WhiteheadAuto {
   public:
    enum class Kind { permutation, multiplier };

    static WhiteheadAuto permutation(std::vector<std::size_t> perm, std::vector<bool> invert);
    static WhiteheadAuto multiplier(std::size_t rank, LetterCode a, std::vector<bool> in_set);

    Kind kind() const noexcept {
      return _kind;
    }
    std::size_t rank() const noexcept {
      return _images.size();
    }
    // Image of each generator, freely reduced.
    std::vector<std::vector<LetterCode>> const& images() const noexcept {
      return _images;
    }

    std::vector<LetterCode> apply(std::span<LetterCode const> w) const;
    Word                    apply(Word const& w, std::span<std::string const> alphabet) const;

    WhiteheadAuto inverse() const;
    std::string   describe(std::span<std::string const> alphabet) const;

   private:
    Kind                                 _kind = Kind::permutation;
    std::vector<std::size_t>             _perm;
    std::vector<bool>                    _invert;
    LetterCode                           _multiplier = 0;
    std::vector<bool>                    _in_set;
    std::vector<std::vector<LetterCode>> _images;

    void compute_images();
  };

  // The full Whitehead set for the rank: all signed permutations and every
  // nontrivial multiplier automorphism. rank <= max_whitehead_rank.
  std::vector<WhiteheadAuto> whitehead_automorphisms(std::size_t rank, bool include_permutations = true);

  struct WhiteheadDescent {
    std::vector<LetterCode> minimal;  // cyclically reduced, least rotation
    std::size_t             steps = 0;
  };

  // Strict descent: applies any multiplier automorphism that shortens the
  // cyclic length until none does. The result has minimal cyclic length in
  // the Aut(F)-orbit.
  WhiteheadDescent whitehead_minimize(std::span<LetterCode const> w, std::size_t rank);

  // True iff w is part of a free basis of the free group of the given rank.
  // The alphabet defaults to make_alphabet({w}, rank). The empty word is not
  // primitive.
  bool is_primitive_whitehead(Word const& w, std::size_t rank);
  bool is_primitive_whitehead(Word const& w, std::span<std::string const> alphabet);

}  // namespace ffactor

#endif  // FFACTOR_WHITEHEAD_HPP_
