#ifndef FFACTOR_PRESENTATION_HPP_
#define FFACTOR_PRESENTATION_HPP_

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ffactor/fingroup.hpp"
#include "ffactor/word.hpp"

namespace ffactor {

  class PresentationError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  // A finitely presented group <generators | relators>.
  struct Presentation {
    std::vector<std::string> generators;
    std::vector<Word>        relators;

    // Throws PresentationError on duplicate or invalid generator names, or a
    // relator letter that is not a declared generator.
    void validate() const;

    std::optional<std::size_t> generator_index(std::string const& name) const;
    bool                       is_free() const noexcept {
      return relators.empty();
    }
    std::string str() const;

    bool operator==(Presentation const&) const = default;
  };

  // <x1, ..., x_rank | >.
  Presentation free_presentation(std::size_t rank);
  Presentation free_presentation(std::vector<std::string> names);

  // Concatenates generators and relators. Names of b that clash with a name
  // already in use get primes appended; renamed, if given, receives b's
  // renaming.
  Presentation free_product(Presentation const&                  a,
                            Presentation const&                  b,
                            std::map<std::string, std::string>* renamed = nullptr);

  // Presentation of a finite group on its greedy generating set with one
  // relator w(x) s w(x s)^-1 per Cayley graph edge off the breadth-first
  // spanning tree (cyclically reduced, deduplicated).
  struct GroupPresentation {
    Presentation      presentation;
    std::vector<Elem> generator_elements;  // element named by each generator
    std::vector<Word> element_words;       // a word for every element
  };

  // names supplies one name per generator; when shorter, the remaining
  // generators are named prefix1, prefix2, ...
  GroupPresentation presentation_of(FiniteGroup const&       g,
                                    std::vector<std::string> names  = {},
                                    std::string const&       prefix = "g");

}  // namespace ffactor

#endif  // FFACTOR_PRESENTATION_HPP_
