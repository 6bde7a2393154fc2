#ifndef ASPHERE_FUZZ_HPP_
#define ASPHERE_FUZZ_HPP_

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "asphere/complex2.hpp"
#include "asphere/freegroup.hpp"
#include "asphere/intlinalg.hpp"
#include "asphere/presentation.hpp"

// Seeded generators for randomized fixtures; shared by the tests and the
// CLI's `fuzz:<n>` input.
namespace asphere::fuzz {

  using Rng = std::mt19937_64;

  std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi);

  std::vector<Letter> random_letters(Rng& rng, GenIndex n, std::size_t length);
  Word                random_word(Rng& rng, GenIndex n, std::size_t max_length);
  NielsenMove         random_move(Rng& rng, GenIndex n);
  BaseChange          random_base_change(Rng& rng, GenIndex n, std::size_t length);

  ElementaryOp    random_row_op(Rng& rng, std::size_t n, long long max_coefficient);
  // Product of `ops` random elementary matrices, determinant +-1.
  SparseIntMatrix random_unimodular(Rng& rng, std::size_t n, std::size_t ops);
  // Square matrix whose Smith form is not all ones.
  SparseIntMatrix random_non_unimodular(Rng& rng, std::size_t n, std::size_t ops);
  SparseIntMatrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols,
                                long long bound);

  // r_j = x_j times commutators of short random words.
  Presentation random_homology_trivial(Rng& rng, GenIndex n,
                                       std::size_t commutators = 1,
                                       std::size_t word_length = 2);
  // A homology-trivial presentation pushed through a random base change and
  // a relator shuffle: balanced, unimodular, usually not normalized.
  Presentation random_unimodular_presentation(Rng& rng, GenIndex n,
                                              std::size_t moves = 4);
  Presentation random_presentation(Rng& rng, GenIndex max_generators,
                                   std::size_t max_relators,
                                   std::size_t max_length);

  // 2..max_stages nested 1-vertex subcomplexes ending with the whole complex.
  std::vector<SubcomplexSpec> random_filtration(Rng& rng, Presentation const& p,
                                                std::size_t max_stages);

}  // namespace asphere::fuzz

#endif  // ASPHERE_FUZZ_HPP_
