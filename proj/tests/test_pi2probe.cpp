#include "doctest.h"

#include "asphere/fuzz.hpp"
#include "asphere/pi2probe.hpp"
#include "support.hpp"

using namespace asphere;
using namespace asphere::testing;

namespace {

  FreeGroupRingElement element(std::initializer_list<std::pair<Word, long long>> terms) {
    FreeGroupRingElement e;
    for (auto const& [w, c] : terms) {
      e[w] += c;
    }
    return e;
  }

}  // namespace

TEST_CASE("coset enumeration examples") {
  CosetTable const one = coset_enumerate(fixture("trivial.pres"), 100);
  CHECK(one.complete());
  CHECK(one.cosets() == 1);

  CosetTable const two = coset_enumerate(fixture("x2.pres"), 100);
  CHECK(two.complete());
  CHECK(two.cosets() == 2);
  CHECK(two.act(1, Word::generator(1)) == 2);
  CHECK(two.act(1, power(Word::generator(1), 2)) == 1);

  CosetTable const free = coset_enumerate(fixture("free2.pres"), 100);
  CHECK(free.status() == CosetTable::Status::Overflow);
  CHECK(free.limit() == 100);
}

TEST_CASE("finite groups enumerate to their order") {
  // S3 = <a, b | a^2, b^3, (ab)^2>, Q8, and Z/5 x Z/3.
  CHECK(coset_enumerate(pres("gens: a b\nrel r1: a^2\nrel r2: b^3\nrel r3: a b a b\n"), 1000)
            .cosets()
        == 6);
  CHECK(coset_enumerate(pres("gens: i j\nrel r1: i^4\nrel r2: i^2 j^-2\nrel r3: j^-1 i j i\n"), 1000)
            .cosets()
        == 8);
  CHECK(coset_enumerate(pres("gens: a b\nrel r1: a^5\nrel r2: b^3\nrel r3: a b a^-1 b^-1\n"), 1000)
            .cosets()
        == 15);
  CHECK(coset_enumerate(fixture("ab2.pres"), 1000).cosets() == 1);
  CHECK(coset_enumerate(fixture("torus.pres"), 500).status() == CosetTable::Status::Overflow);
}

TEST_CASE("fox derivative examples") {
  Word const x = Word::generator(1);
  CHECK(fox_derivative(x, 1) == element({{Word{}, 1}}));
  CHECK(fox_derivative(power(x, 2), 1) == element({{Word{}, 1}, {x, 1}}));
  Word const a = Word::generator(1), b = Word::generator(2);
  Word const c = commutator(a, b);
  CHECK(fox_derivative(c, 1) == element({{Word{}, 1}, {multiply(multiply(a, b), invert(a)), -1}}));
  CHECK(augmentation(fox_derivative(c, 1)) == 0);
}

TEST_CASE("fox calculus identities") {
  fuzz::Rng rng(60);
  for (int trial = 0; trial < 300; ++trial) {
    GenIndex const n = 3;
    Word const     r = fuzz::random_word(rng, n, 12);
    // sum_i (dr/dx_i)(x_i - 1) = r - 1
    FreeGroupRingElement lhs;
    for (GenIndex i = 1; i <= n; ++i) {
      CHECK(augmentation(fox_derivative(r, i)) == exponent_sum(r, i));
      lhs = add(lhs, multiply(fox_derivative(r, i),
                              element({{Word::generator(i), 1}, {Word{}, -1}})));
    }
    CHECK(lhs == add(element({{r, 1}}), element({{Word{}, -1}})));
  }
}

TEST_CASE("lifted boundary examples") {
  Presentation const x  = fixture("trivial.pres");
  SparseIntMatrix    m1 = lifted_boundary(x, coset_enumerate(x, 10));
  CHECK(m1 == SparseIntMatrix::identity(1));
  CHECK(integer_kernel(m1).empty());

  Presentation const rp2 = fixture("x2.pres");
  SparseIntMatrix    m2  = lifted_boundary(rp2, coset_enumerate(rp2, 10));
  CHECK(m2 == SparseIntMatrix::from_dense(2, 2, {1, 1, 1, 1}));
  CHECK(integer_kernel(m2).size() == 1);

  Presentation const ht = fixture("commutator.pres");
  CHECK(lifted_boundary(ht, coset_enumerate(ht, 1000)) == exponent_matrix(ht));

  CHECK(kind_of([] {
          Presentation const t = fixture("torus.pres");
          lifted_boundary(t, coset_enumerate(t, 50));
        })
        == ErrorKind::IncompleteTable);
}

TEST_CASE("trivial quotients lift to the exponent matrix") {
  fuzz::Rng rng(61);
  for (int trial = 0; trial < 30; ++trial) {
    Presentation const p = fuzz::random_unimodular_presentation(rng, fuzz::uniform(rng, 1, 3));
    CosetTable const   t = coset_enumerate(p, 2000);
    if (t.complete() && t.cosets() == 1) {
      CHECK(lifted_boundary(p, t) == exponent_matrix(p));
    }
  }
}

TEST_CASE("fox matrix augments to the exponent matrix") {
  Presentation const p = pres("gens: a b\nrel r1: a^2\nrel r2: b^3\nrel r3: a b a b\n");
  CosetTable const   t = coset_enumerate(p, 100);
  FoxMatrix const    f = fox_matrix(p, t);
  SparseIntMatrix const c = exponent_matrix(p);
  for (GenIndex i = 1; i <= 2; ++i) {
    for (std::size_t j = 1; j <= 3; ++j) {
      Integer sum = 0;
      for (auto const& [g, k] : f[i - 1][j - 1]) {
        sum += k;
      }
      CHECK(sum == c.at(i, j));
    }
  }
}

TEST_CASE("verdicts") {
  auto v = asphericity_verdict(fixture("x2.pres"), 100);
  CHECK(v.kind == Pi2Verdict::Kind::NotAspherical);
  CHECK(v.kernel_rank == std::size_t{1});
  CHECK(v.witness.size() == 2);
  CHECK(asphericity_verdict(fixture("trivial.pres"), 100).kind == Pi2Verdict::Kind::Aspherical);
  CHECK(asphericity_verdict(fixture("free2.pres"), 100).kind == Pi2Verdict::Kind::Aspherical);
  CHECK(asphericity_verdict(fixture("torus.pres"), 100).kind == Pi2Verdict::Kind::Inconclusive);
  // S3 has a nonzero kernel: a finite nontrivial group is never aspherical.
  v = asphericity_verdict(pres("gens: a b\nrel r1: a^2\nrel r2: b^3\nrel r3: a b a b\n"), 100);
  CHECK(v.kind == Pi2Verdict::Kind::NotAspherical);
  CHECK(to_string(Pi2Verdict::Kind::Inconclusive) == "Inconclusive");
}

TEST_CASE("every NotAspherical verdict carries a checked witness") {
  fuzz::Rng rng(62);
  for (int trial = 0; trial < 40; ++trial) {
    Presentation const p = fuzz::random_presentation(rng, 2, 3, 6);
    Pi2Verdict const   v = asphericity_verdict(p, 300);
    if (v.kind != Pi2Verdict::Kind::NotAspherical) {
      continue;
    }
    SparseIntMatrix const m = lifted_boundary(p, *v.table);
    bool nonzero = false;
    for (auto const& x : v.witness) {
      nonzero = nonzero || x != 0;
    }
    CHECK(nonzero);
    for (auto const& x : multiply(m, v.witness)) {
      CHECK(x == 0);
    }
  }
}
