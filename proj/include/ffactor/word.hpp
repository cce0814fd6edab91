#ifndef FFACTOR_WORD_HPP_
#define FFACTOR_WORD_HPP_

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace ffactor {

  class WordError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  struct Letter {
    std::string name;
    int         exponent = 1;  // +1 or -1

    bool operator==(Letter const&) const = default;
  };

  // A freely reduced word over named generators.
  //
  // Text syntax: whitespace-separated tokens, each "name", "name^-1" or
  // "name^k" for a nonzero integer k. Names match [A-Za-z][A-Za-z0-9_]*,
  // optionally followed by primes (').
  class Word {
   public:
    Word() = default;
    // Freely reduces raw.
    explicit Word(std::vector<Letter> raw);

    static Word parse(std::string_view text);
    // Also rejects letters outside alphabet.
    static Word parse(std::string_view text, std::span<std::string const> alphabet);

    std::vector<Letter> const& letters() const noexcept {
      return _letters;
    }
    std::size_t size() const noexcept {
      return _letters.size();
    }
    bool empty() const noexcept {
      return _letters.empty();
    }

    Word inverse() const;
    Word renamed(std::map<std::string, std::string> const& names) const;
    // Empty text for the empty word.
    std::string str() const;

    friend Word operator*(Word const& a, Word const& b);
    bool        operator==(Word const&) const = default;

   private:
    std::vector<Letter> _letters;
  };

  Word reduce(std::vector<Letter> raw);
  // Throws WordError on a letter whose name is not in alphabet.
  Word reduce(std::vector<Letter> raw, std::span<std::string const> alphabet);

  // Cyclically reduced conjugate, rotated to the lexicographically least
  // rotation under x1 < x1^-1 < x2 < ... with generators ordered by alphabet
  // (or by name when no alphabet is given).
  Word cyclic_reduce(Word const& w);
  Word cyclic_reduce(Word const& w, std::span<std::string const> alphabet);

  bool is_generator_name(std::string_view name);

  // Sorted distinct generator names of the words, padded with x1, x2, ...
  // (skipping names already used) up to rank. Throws WordError if the words
  // use more than rank names.
  std::vector<std::string> make_alphabet(std::span<Word const> words, std::size_t rank);

  // Integer letter form: 2 * generator + (exponent < 0). The inverse of
  // letter c is c ^ 1.
  using LetterCode = std::uint32_t;

  std::vector<LetterCode> encode(Word const& w, std::span<std::string const> alphabet);
  Word                    decode(std::span<LetterCode const> codes, std::span<std::string const> alphabet);

  // Free reduction of a code sequence.
  std::vector<LetterCode> free_reduce(std::span<LetterCode const> codes);
  // Cyclic reduction without rotation.
  std::vector<LetterCode> cyclic_core(std::span<LetterCode const> codes);
  // Lexicographically least rotation of a cyclically reduced code sequence.
  std::vector<LetterCode> least_rotation(std::span<LetterCode const> codes);

}  // namespace ffactor

#endif  // FFACTOR_WORD_HPP_
