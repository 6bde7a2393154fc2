#include "asphere/fuzz.hpp"

#include <algorithm>

namespace asphere::fuzz {

  std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
  }

  namespace {
    int random_sign(Rng& rng) {
      return uniform(rng, 0, 1) == 0 ? -1 : 1;
    }
  }  // namespace

  std::vector<Letter> random_letters(Rng& rng, GenIndex n, std::size_t length) {
    std::vector<Letter> raw;
    raw.reserve(length);
    for (std::size_t k = 0; k < length; ++k) {
      raw.push_back(Letter{static_cast<GenIndex>(uniform(rng, 1, n)), random_sign(rng)});
    }
    return raw;
  }

  Word random_word(Rng& rng, GenIndex n, std::size_t max_length) {
    return Word(random_letters(rng, n, uniform(rng, 0, max_length)));
  }

  NielsenMove random_move(Rng& rng, GenIndex n) {
    auto const i = static_cast<GenIndex>(uniform(rng, 1, n));
    switch (n < 2 ? uniform(rng, 0, 1) : uniform(rng, 0, 2)) {
      case 0:
        return NielsenMove::invert(i);
      case 1:
        return NielsenMove::swap(i, static_cast<GenIndex>(uniform(rng, 1, n)));
      default: {
        GenIndex j = i;
        while (j == i) {
          j = static_cast<GenIndex>(uniform(rng, 1, n));
        }
        return NielsenMove::right_multiply(i, j);
      }
    }
  }

  BaseChange random_base_change(Rng& rng, GenIndex n, std::size_t length) {
    BaseChange bc;
    for (std::size_t k = 0; k < length; ++k) {
      bc.push_back(random_move(rng, n));
    }
    return bc;
  }

  ElementaryOp random_row_op(Rng& rng, std::size_t n, long long max_coefficient) {
    std::size_t const i = uniform(rng, 1, n);
    switch (n < 2 ? uniform(rng, 0, 1) : uniform(rng, 0, 2)) {
      case 0:
        return ElementaryOp::negate(i);
      case 1:
        return ElementaryOp::swap(i, uniform(rng, 1, n));
      default: {
        std::size_t j = i;
        while (j == i) {
          j = uniform(rng, 1, n);
        }
        long long k = static_cast<long long>(
            uniform(rng, 1, static_cast<std::size_t>(max_coefficient)));
        return ElementaryOp::add_multiple(i, j, random_sign(rng) * k);
      }
    }
  }

  SparseIntMatrix random_unimodular(Rng& rng, std::size_t n, std::size_t ops) {
    SparseIntMatrix m = SparseIntMatrix::identity(n);
    for (std::size_t k = 0; k < ops; ++k) {
      apply_row_op(random_row_op(rng, n, 3), m);
    }
    return m;
  }

  SparseIntMatrix random_non_unimodular(Rng& rng, std::size_t n, std::size_t ops) {
    // diag(1, ..., 1, d) with |d| != 1 (d = 0 allowed), scrambled on both sides.
    SparseIntMatrix m = SparseIntMatrix::identity(n);
    long long const choices[] = {0, 2, 3, -2, 4, 6, -5};
    std::size_t const pos     = uniform(rng, 1, n);
    m.set(pos, pos, choices[uniform(rng, 0, std::size(choices) - 1)]);
    for (std::size_t k = 0; k < ops; ++k) {
      apply_row_op(random_row_op(rng, n, 3), m);
      RowOpLog col;
      col.push_back(random_row_op(rng, n, 3));
      m = apply_col_ops(col, std::move(m));
    }
    return m;
  }

  SparseIntMatrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols,
                                long long bound) {
    SparseIntMatrix m(rows, cols);
    auto const      width = static_cast<std::size_t>(2 * bound);
    for (std::size_t i = 1; i <= rows; ++i) {
      for (std::size_t j = 1; j <= cols; ++j) {
        m.set(i, j, static_cast<long long>(uniform(rng, 0, width)) - bound);
      }
    }
    return m;
  }

  Presentation random_homology_trivial(Rng& rng, GenIndex n,
                                       std::size_t commutators,
                                       std::size_t word_length) {
    std::vector<Word> rels;
    for (GenIndex j = 1; j <= n; ++j) {
      Word r = Word::generator(j);
      for (std::size_t c = 0; c < commutators; ++c) {
        Word const u = random_word(rng, n, word_length);
        Word const v = random_word(rng, n, word_length);
        r            = multiply(r, commutator(u, v));
      }
      rels.push_back(std::move(r));
    }
    return Presentation(n, std::move(rels));
  }

  Presentation random_unimodular_presentation(Rng& rng, GenIndex n, std::size_t moves) {
    Presentation const base = random_homology_trivial(rng, n, 1, 2);
    BaseChange const   bc   = random_base_change(rng, n, moves);
    std::vector<Word>  rels;
    for (auto const& r : base.relators()) {
      rels.push_back(apply_base_change(bc, r));
    }
    std::shuffle(rels.begin(), rels.end(), rng);
    return Presentation(n, std::move(rels));
  }

  Presentation random_presentation(Rng& rng, GenIndex max_generators,
                                   std::size_t max_relators,
                                   std::size_t max_length) {
    auto const        n = static_cast<GenIndex>(uniform(rng, 1, max_generators));
    std::size_t const m = uniform(rng, 0, max_relators);
    std::vector<Word> rels;
    for (std::size_t j = 0; j < m; ++j) {
      rels.push_back(random_word(rng, n, max_length));
    }
    return Presentation(n, std::move(rels));
  }

  std::vector<SubcomplexSpec> random_filtration(Rng& rng, Presentation const& p,
                                                std::size_t max_stages) {
    std::size_t const stages = uniform(rng, 2, std::max<std::size_t>(2, max_stages));
    SubcomplexSpec    current{p.generators(), {}, {}};
    std::vector<SubcomplexSpec> out;
    for (std::size_t s = 0; s + 1 < stages; ++s) {
      for (GenIndex i = 1; i <= p.generators(); ++i) {
        if (uniform(rng, 0, 2) == 0) {
          current.generators.insert(i);
        }
      }
      for (std::size_t j = 1; j <= p.relator_count(); ++j) {
        if (uniform(rng, 0, 2) == 0) {
          current.relators.insert(j);
          for (auto const& l : p.relator(j)) {
            current.generators.insert(l.index);
          }
        }
      }
      out.push_back(current);
    }
    out.push_back(full_spec(p));
    return out;
  }

}  // namespace asphere::fuzz
