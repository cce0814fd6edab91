#ifndef FFACTOR_TOOLS_CORPUS_HPP_
#define FFACTOR_TOOLS_CORPUS_HPP_

#include <cstdint>
#include <random>
#include <vector>

#include "ffactor/presentation.hpp"
#include "ffactor/subgroup.hpp"

namespace ffactor::cli {

  // Uniform reduced word of the given length over the generators.
  Word random_word(std::mt19937_64& rng, std::vector<std::string> const& generators, std::size_t length);

  // 1..max_generators generators (x, y, z, ...) and up to max_relators
  // nonempty relators of length at most max_relator_length.
  Presentation random_presentation(std::mt19937_64& rng,
                                   std::size_t      max_generators     = 3,
                                   std::size_t      max_relators       = 2,
                                   std::size_t      max_relator_length = 4);

  // <h | > sent to a random nonempty word of length at most max_length.
  SubgroupSpec random_cyclic_subgroup(std::mt19937_64& rng, Presentation const& g, std::size_t max_length = 3);

  // One representative per cyclically reduced word of length 1..max_length
  // in F_rank up to rotation and inversion, shortest first.
  std::vector<Word> cyclic_word_classes(std::size_t rank, std::size_t max_length);

}  // namespace ffactor::cli

#endif  // FFACTOR_TOOLS_CORPUS_HPP_
