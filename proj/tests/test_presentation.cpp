#include "doctest.h"

#include "asphere/fuzz.hpp"
#include "support.hpp"

using namespace asphere;
using namespace asphere::testing;

namespace {

  // Exponent sum by counting letters one at a time.
  SparseIntMatrix scan_exponents(Presentation const& p) {
    SparseIntMatrix m(p.generators(), p.relator_count());
    for (std::size_t j = 1; j <= p.relator_count(); ++j) {
      for (auto const& l : p.relator(j)) {
        m.add(l.index, j, l.sign);
      }
    }
    return m;
  }

}  // namespace

TEST_CASE("exponent matrix examples") {
  CHECK(exponent_matrix(pres("gens: x\nrel r: x\n")) == SparseIntMatrix::identity(1));
  SparseIntMatrix const c = exponent_matrix(fixture("ab2.pres"));
  CHECK(c == SparseIntMatrix::from_dense(2, 2, {0, -1, -1, 0}));
  SparseIntMatrix const g = exponent_matrix(fixture("free2.pres"));
  CHECK(g.rows() == 2);
  CHECK(g.cols() == 0);
}

TEST_CASE("exponent matrix matches a letter scan") {
  fuzz::Rng rng(30);
  for (int trial = 0; trial < 300; ++trial) {
    Presentation const p = fuzz::random_presentation(rng, 5, 5, 12);
    CHECK(exponent_matrix(p) == scan_exponents(p));
  }
}

TEST_CASE("relators must stay in the window") {
  CHECK(kind_of([] { Presentation(1, {Word{Letter{2, 1}}}); })
        == ErrorKind::InvalidPresentation);
}

TEST_CASE("incidence is rebuilt from the relators") {
  Presentation const p = fixture("three.pres");
  CHECK(p.incidence(1) == std::set<std::size_t>{1, 3});
  CHECK(p.incidence(2) == std::set<std::size_t>{1, 2});
}

TEST_CASE("local finiteness") {
  CHECK(is_locally_finite(fixture("cyclic10.pres")).holds);
  CHECK(is_locally_finite(Presentation{}).holds);
  CHECK(is_locally_finite(finite_stream(fixture("three.pres")), 3).holds);

  // x_1 lands in every relator x_1 x_k; the producer claims at most 3.
  StreamedPresentation hub{3, [](GenIndex n) {
                             std::vector<Word> rels;
                             for (GenIndex k = 2; k <= n; ++k) {
                               rels.push_back(Word{Letter{1, 1}, Letter{k, 1}});
                             }
                             return Presentation(n, rels);
                           }};
  LocalFiniteness const lf = is_locally_finite(hub, 8);
  CHECK_FALSE(lf.holds);
  CHECK(lf.offending_generator == GenIndex{1});
  CHECK(lf.offending_window == GenIndex{5});
  CHECK(lf.max_incidence == 4);
}

TEST_CASE("truncation keeps relators inside the window") {
  Presentation const p = fixture("cyclic10.pres");
  Presentation const t = truncate(p, 4);
  CHECK(t.generators() == 4);
  CHECK(t.relator_count() == 3);
  CHECK(t.relator(1) == p.relator(1));
}

TEST_CASE("homology-trivial unit predicate") {
  CHECK(is_homology_trivial_unit(fixture("trivial.pres")));
  CHECK_FALSE(is_homology_trivial_unit(fixture("ab2.pres")));
  CHECK(is_homology_trivial_unit(fixture("commutator.pres")));
  CHECK(kind_of([] { is_homology_trivial_unit(fixture("torus.pres")); })
        == ErrorKind::WindowMismatch);
  fuzz::Rng rng(31);
  for (int trial = 0; trial < 50; ++trial) {
    Presentation const p = fuzz::random_homology_trivial(rng, 4);
    CHECK(is_homology_trivial_unit(p));
    CHECK(smith_normal_form(exponent_matrix(p)).all_ones());
  }
}

TEST_CASE("normalize examples") {
  Presentation const ht   = fixture("commutator.pres");
  auto const         same = normalize(ht);
  CHECK(same.base_change.empty());
  CHECK(same.new_relators == ht.relators());

  auto const cert = normalize(fixture("ab2.pres"));
  CHECK(cert.exponent_check);
  CHECK(is_homology_trivial_unit(normalized(fixture("ab2.pres"), cert)));

  auto const inv = normalize(fixture("xinv.pres"));
  CHECK(inv.base_change == BaseChange({NielsenMove::invert(1)}));
  CHECK(inv.new_relators == std::vector{Word::generator(1)});

  CHECK(kind_of([] { normalize(fixture("x2.pres")); }) == ErrorKind::NotUnimodular);
  CHECK(kind_of([] { normalize(fixture("torus.pres")); }) == ErrorKind::NotUnimodular);
}

TEST_CASE("normalize is stable") {
  fuzz::Rng rng(32);
  for (int trial = 0; trial < 100; ++trial) {
    Presentation const p    = fuzz::random_unimodular_presentation(rng, fuzz::uniform(rng, 1, 5));
    auto const         cert = normalize(p);
    REQUIRE(cert.exponent_check);
    Presentation const np = normalized(p, cert);
    CHECK(normalize(np).base_change.empty());
    CHECK(apply_row_ops(cert.row_log, exponent_matrix(p)) == exponent_matrix(np));
    BaseChange const back = cert.base_change.inverse();
    for (std::size_t j = 1; j <= p.relator_count(); ++j) {
      CHECK(np.relator(j) == apply_base_change(cert.base_change, p.relator(j)));
      CHECK(apply_base_change(back, np.relator(j)) == p.relator(j));
    }
  }
}

TEST_CASE("lifted row operations are abelianization equivariant") {
  fuzz::Rng rng(33);
  for (int trial = 0; trial < 300; ++trial) {
    Presentation const p = fuzz::random_presentation(rng, 5, 5, 10);
    GenIndex const     n = p.generators();
    RowOpLog           log;
    for (std::size_t k = 0; k < 8; ++k) {
      log.push_back(fuzz::random_row_op(rng, n, 3));
    }
    BaseChange const  bc = lift_row_ops(log);
    std::vector<Word> rels;
    for (auto const& r : p.relators()) {
      rels.push_back(apply_base_change(bc, r));
    }
    CHECK(exponent_matrix(Presentation(n, rels)) == apply_row_ops(log, exponent_matrix(p)));
  }
}

TEST_CASE("subpresentation") {
  Presentation const p = fixture("three.pres");
  CHECK(subpresentation(p, all_generators(p), all_relators(p)) == p);
  Presentation const skeleton = subpresentation(p, all_generators(p), {});
  CHECK(skeleton.generators() == 3);
  CHECK(skeleton.relator_count() == 0);

  Presentation const q = pres("gens: a b\nrel r1: a b a^-1\n");
  CHECK(kind_of([&] { subpresentation(q, {1}, {1}); }) == ErrorKind::DanglingRelator);

  // y, z renumbered to g1, g2.
  Presentation const yz = subpresentation(p, {2, 3}, {2});
  CHECK(yz.generators() == 2);
  CHECK(yz.relator(1) == word("g1 g1 g2 g1^-1 g2^-1"));
}
