#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "algebroid/catalog.hpp"

using namespace algd;

TEST_CASE("group algebra tables are consistent") {
  for (int n = 1; n <= 4; ++n) {
    FiniteCocomm U = catalog::group_algebra(n);
    AxiomReport rep = check_finite_cocomm(U);
    INFO(U.name, "\n", rep.summary());
    CHECK(rep.all_pass());
    // translation of a group-like is g^{-1} (x) g
    for (int i = 0; i < n; ++i)
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
          CHECK(U.trans[i][a][b] ==
                Rational((a == (n - i) % n && b == i) ? 1 : 0));
  }
}

TEST_CASE("the dual of QC2 is the algebra of orthogonal idempotents") {
  FiniteCocomm U = catalog::group_algebra(2);
  HopfPtr D = finite_dual(U);
  CHECK(check_axioms(D).all_pass());
  RingElement e0 = RingElement::variable(D->total, 0);
  RingElement e1 = RingElement::variable(D->total, 1);
  CHECK(e0 * e0 == e0);
  CHECK(e1 * e1 == e1);
  CHECK((e0 * e1).is_zero());
  CHECK(e0 + e1 == RingElement::one(D->total));
  // the nontrivial group-like of U pairs to the character table: the
  // functionals mapsto their values on g^1 are (1, -1) after the change to
  // the character basis chi_0 = e0 + e1, chi_1 = e0 - e1
  std::vector<Rational> chi1 = dual_functional(U, D, e0 - e1);
  CHECK(chi1[0] == Rational(1));
  CHECK(chi1[1] == Rational(-1));
}

TEST_CASE("duals of QC_n pass the axiom suite with oracle-matched tables") {
  for (int n = 2; n <= 4; ++n) {
    FiniteCocomm U = catalog::group_algebra(n);
    HopfPtr D = finite_dual(U);
    AxiomReport rep = check_axioms(D);
    INFO(U.name, " dual\n", rep.summary());
    CHECK(rep.all_pass());
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        RingElement prod =
            RingElement::variable(D->total, i) * RingElement::variable(D->total, j);
        std::vector<Rational> got = dual_functional(U, D, prod);
        for (int k = 0; k < n; ++k) {
          // brute-force convolution: (f_i * f_j)(u_k) = sum cop[k][a][b] f_i(u_a) f_j(u_b)
          Rational want = U.cop[k][i][j];
          CHECK(got[k] == want);
        }
      }
  }
}

TEST_CASE("convolution unit: the counit is the unit of the dual") {
  FiniteCocomm U = catalog::group_algebra(3);
  HopfPtr D = finite_dual(U);
  std::vector<Rational> unit_values = dual_functional(U, D, RingElement::one(D->total));
  for (int i = 0; i < U.n; ++i) CHECK(unit_values[i] == U.counit[i]);
}

TEST_CASE("dual of dual recovers the group algebra through evaluation") {
  for (int n = 2; n <= 4; ++n) {
    FiniteCocomm U = catalog::group_algebra(n);
    FiniteCocomm Ud = dual_as_cocommutative(U);
    CHECK(check_finite_cocomm(Ud).all_pass());
    FiniteCocomm Udd = dual_as_cocommutative(Ud);
    CHECK(Udd.unit == U.unit);
    CHECK(Udd.counit == U.counit);
    CHECK(Udd.mult == U.mult);
    CHECK(Udd.cop == U.cop);
  }
}

TEST_CASE("the trivial case: QC1 dualizes to the trivial algebroid") {
  FiniteCocomm U = catalog::group_algebra(1);
  HopfPtr D = finite_dual(U);
  CHECK(check_axioms(D).all_pass());
  CHECK(RingElement::variable(D->total, 0) == RingElement::one(D->total));
}

TEST_CASE("sigma is an A-ring map into the convolution algebra") {
  HopfPtr H = catalog::malgrange(2);
  DiffResult Dm = differentiate(H, Flavor::S);
  Envelope U = build_enveloping(Dm.lr);
  SigmaMap sigma(U, H, Dm.basis);

  std::vector<NCElement> samples{U.one(), U.gen(0), U.gen(2),
                                 U.mul(U.gen(0), U.gen(1)),
                                 U.mul(U.embed_base(parse_element("X", U.A)), U.gen(1))};
  std::vector<RingElement> args{parse_element("y1*y2", H->total),
                                parse_element("y0 + x0^2", H->total),
                                parse_element("y1inv", H->total)};
  for (const NCElement& u : samples)
    for (const NCElement& v : samples) {
      NCElement uv = U.mul(u, v);
      for (const RingElement& x : args) {
        // (sigma(u) * sigma(v))(x) = sigma(v)(x_1 t(sigma(u)(x_2)))
        RingElement rhs = RingElement::zero(H->base);
        for (const auto& term : H->tensor().terms(H->delta(x))) {
          RingElement inner = sigma.eval(u, RingElement(H->total, term.right));
          rhs += sigma.eval(v, RingElement(H->total, term.left) * H->tgt.apply(inner))
                     .scaled(term.coeff);
        }
        CHECK(sigma.eval(uv, x) == rhs);
      }
    }
}

TEST_CASE("lift of the zero morphism from a zero-anchor line") {
  AlgebraPtr A = catalog::base_QX();
  LieRinehart L0 = make_lie_rinehart(
      "zero_line", A, {"Z"}, {AlgebraDerivation::zero(A)},
      {{{RingElement::zero(A)}}});
  HopfPtr H = catalog::malgrange(1, true, A);
  DiffResult D = differentiate(H, Flavor::S);
  EpsDerivation zero = D.basis[0].scaled(RingElement::zero(A));
  LiftReport rep = lift_lr_morphism(L0, H, {zero}, 2);
  CHECK(rep.ok);
  CHECK(rep.violations.empty());
}

TEST_CASE("lift of the canonical identification for the quotient algebra") {
  AlgebraPtr A = catalog::base_QX();
  HopfPtr Hq = catalog::malgrange_quotient(A);
  DiffResult D = differentiate(Hq, Flavor::S);
  LieRinehart L = catalog::quotient_lr(A);
  // e0 -> d_y0, e1 -> d_y1 is the canonical identification
  LiftReport rep = lift_lr_morphism(L, Hq, {D.basis[0], D.basis[1]}, 3);
  CHECK(rep.ok);
}

TEST_CASE("lift rejects maps that are not Lie-Rinehart morphisms") {
  AlgebraPtr A = catalog::base_QX();
  HopfPtr H = catalog::malgrange(1, true, A);
  DiffResult D = differentiate(H, Flavor::S);
  LieRinehart L = catalog::quotient_lr(A);
  // swapping the basis breaks anchor compatibility (e0 has anchor d, d_y1 has 0)
  CHECK_THROWS_AS(lift_lr_morphism(L, H, {D.basis[1], D.basis[0]}, 2), algebra_error);
}
