#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "algebroid/catalog.hpp"

using namespace algd;

namespace {

Rational binom(int n, int k) {
  if (k < 0 || k > n) return Rational(0);
  Rational r(1);
  for (int i = 0; i < k; ++i) r *= Rational(n - i, i + 1);
  r.canonicalize();
  return r;
}

/// the closed-form bracket components of the jet Lie-Rinehart algebra, for
/// coefficient sequences a, b over A = Q[X]
std::vector<RingElement> closed_form_bracket(const AlgebraPtr& A,
                                             const std::vector<RingElement>& a,
                                             const std::vector<RingElement>& b) {
  AlgebraDerivation d = AlgebraDerivation::checked(A, {RingElement::one(A)}, "d");
  int r = static_cast<int>(a.size()) - 1;
  std::vector<RingElement> out(r + 1, RingElement::zero(A));
  out[0] = a[0] * d.apply(b[0]) - b[0] * d.apply(a[0]);
  for (int n = 1; n <= r; ++n) {
    RingElement acc = a[0] * d.apply(b[n]) - b[0] * d.apply(a[n]);
    for (int i = 1; i <= n; ++i) {
      int j = n - i + 1;
      if (j >= 0 && j <= r) {
        RingElement term = (a[i] * b[j] - b[i] * a[j]).scaled(binom(n, i));
        acc += term;
      }
    }
    out[n] = acc;
  }
  return out;
}

}  // namespace

TEST_CASE("pair groupoid differentiates to the full derivation algebra") {
  HopfPtr H = catalog::pair_groupoid();
  DiffResult D = differentiate(H, Flavor::S);
  CHECK(D.lr.rank() == 1);
  // anchor is an isomorphism onto Der(Q[X]): delta |-> delta o t sends the
  // basis derivation to d/dX, and q * basis to q d/dX
  CHECK(anchor(D.basis[0]).images()[0] == RingElement::one(H->base));
  RingElement q = parse_element("X^2 + 1", H->base);
  EpsDerivation scaled = D.basis[0].scaled(q);
  CHECK(anchor(scaled).images()[0] == q);
}

TEST_CASE("malgrange truncations differentiate to free rank r+1") {
  for (int r = 1; r <= 4; ++r) {
    HopfPtr H = catalog::malgrange(r);
    DiffResult D = differentiate(H, Flavor::S);
    CHECK(D.lr.rank() == r + 1);
    for (int k = 0; k <= r; ++k)
      CHECK(H->total->vars()[D.free_vars[k]] == "y" + std::to_string(k));
    CHECK(check_lie_rinehart(D.lr).all_pass());
  }
}

TEST_CASE("the bracket matches the closed binomial form on polynomial sequences") {
  HopfPtr H = catalog::malgrange(4);
  DiffResult D = differentiate(H, Flavor::S);
  const AlgebraPtr& A = H->base;
  std::vector<RingElement> a{parse_element("X", A), parse_element("1", A),
                             parse_element("X^2", A), parse_element("0", A),
                             parse_element("2", A)};
  std::vector<RingElement> b{parse_element("1", A), parse_element("X", A),
                             parse_element("3", A), parse_element("X - 1", A),
                             parse_element("0", A)};
  EpsDerivation da = D.combine(a);
  EpsDerivation db = D.combine(b);
  EpsDerivation br = eps_bracket(da, db);
  std::vector<RingElement> got = D.coordinates(br);
  std::vector<RingElement> want = closed_form_bracket(A, a, b);
  for (int n = 0; n <= 4; ++n) CHECK(got[n] == want[n]);

  // antisymmetry: [d, d] = 0
  CHECK(eps_bracket(da, da).is_zero());
}

TEST_CASE("anchor evaluations") {
  HopfPtr H = catalog::malgrange(2);
  DiffResult D = differentiate(H, Flavor::S);
  // a |-> a0 d: only the y0-dual basis vector has a nonzero anchor
  CHECK(anchor(D.basis[0]).images()[0] == RingElement::one(H->base));
  CHECK(anchor(D.basis[1]).images()[0].is_zero());
  CHECK(anchor(D.basis[2]).images()[0].is_zero());
  // delta with delta(y0) = 0 has the zero anchor
  EpsDerivation d = D.combine({RingElement::zero(H->base),
                               parse_element("X^3", H->base),
                               RingElement::one(H->base)});
  CHECK(anchor(d).images()[0].is_zero());
}

TEST_CASE("bracket evaluation is representative independent") {
  HopfPtr H = catalog::malgrange(2);
  DiffResult D = differentiate(H, Flavor::S);
  const TensorModel& tm = H->tensor();
  RingElement dy2 = H->delta_var(H->total->var_index_checked("y2"));
  auto terms = tm.terms(dy2);
  // another representative of the same class: add (t(X)_l - s(X)_r) * y1_l
  RingElement tX = H->tgt.apply(RingElement::variable(H->base, 0));
  RingElement sX = H->src.apply(RingElement::variable(H->base, 0));
  Poly shift = (tm.include_left(tX).poly() - tm.include_right(sX).poly()) *
               tm.include_left(RingElement::variable(H->total, "y1")).poly();
  Poly rep2 = dy2.poly() + shift;
  auto terms2 = tm.raw_terms(rep2);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      RingElement v1 = eps_convolution_on_terms(D.basis[i], D.basis[j], terms);
      RingElement v2 = eps_convolution_on_terms(D.basis[i], D.basis[j], terms2);
      CHECK(v1 == v2);
    }
}

TEST_CASE("L on morphisms: identity, inclusion, projection") {
  HopfMorphism id2 = catalog::identity_morphism(catalog::malgrange(2));
  DiffResult D2 = differentiate(id2.dom, Flavor::S);
  LRMorphism lid = l_on_morphism(id2, D2, D2);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      CHECK(lid.matrix[i][j] ==
            (i == j ? RingElement::one(id2.dom->base) : RingElement::zero(id2.dom->base)));

  HopfMorphism incl = catalog::malgrange_inclusion(1, 2);
  DiffResult Dc = differentiate(incl.cod, Flavor::S);
  DiffResult Dd = differentiate(incl.dom, Flavor::S);
  LRMorphism l = l_on_morphism(incl, Dc, Dd);  // L(H2) -> L(H1): drop y2
  CHECK(l.matrix.size() == 3);
  CHECK(check_lr_morphism(l).all_pass());
  const AlgebraPtr& A = incl.dom->base;
  CHECK(l.matrix[0] == std::vector<RingElement>{RingElement::one(A), RingElement::zero(A)});
  CHECK(l.matrix[1] == std::vector<RingElement>{RingElement::zero(A), RingElement::one(A)});
  CHECK(l.matrix[2] == std::vector<RingElement>{RingElement::zero(A), RingElement::zero(A)});
}

TEST_CASE("non-morphisms are rejected with the failed condition") {
  HopfPtr H1 = catalog::malgrange(1);
  HopfPtr H2 = catalog::malgrange(2);
  // same base is required
  CHECK_THROWS_AS(l_on_morphism(HopfMorphism{"broken", catalog::malgrange(1),
                                             catalog::malgrange(2),
                                             AlgebraMap::identity(catalog::malgrange(1)->total)},
                                differentiate(catalog::malgrange(2), Flavor::S),
                                differentiate(catalog::malgrange(1), Flavor::S)),
                  algebra_error);
}

TEST_CASE("Kaehler module: pi and psi") {
  HopfPtr H = catalog::malgrange(2);
  KaehlerPresentation K = kaehler_module(H);
  CHECK(K.basis == std::vector<std::string>{"q_y0", "q_y1", "q_y2"});
  // pi^s o s = 0
  RingElement sX = H->src.apply(RingElement::variable(H->base, 0));
  for (const RingElement& c : K.pi(sX)) CHECK(c.is_zero());
  // pi(y1inv) = -pi(y1)
  auto p1 = K.pi(RingElement::variable(H->total, "y1"));
  auto p1i = K.pi(RingElement::variable(H->total, "y1inv"));
  for (size_t k = 0; k < p1.size(); ++k) CHECK(p1i[k] == -p1[k]);
  // psi(y1) = y1 (x) q_y1
  auto psi1 = K.psi(RingElement::variable(H->total, "y1"));
  CHECK(psi1[0].is_zero());
  CHECK(psi1[1] == RingElement::variable(H->total, "y1"));
  CHECK(psi1[2].is_zero());
  // the Leibniz property of pi on generator products
  RingElement u = RingElement::variable(H->total, "y1");
  RingElement v = RingElement::variable(H->total, "y2");
  auto puv = K.pi(u * v);
  auto eu = H->counit.apply(u);
  auto ev = H->counit.apply(v);
  auto pu = K.pi(u);
  auto pv = K.pi(v);
  for (size_t k = 0; k < puv.size(); ++k) CHECK(puv[k] == pu[k] * ev + eu * pv[k]);
}

TEST_CASE("isotropy: pair groupoid is trivial, malgrange has rank r") {
  AlgebraPtr Q = PresentedAlgebra::rationals();
  {
    HopfPtr H = catalog::pair_groupoid();
    AlgebraMap x = AlgebraMap::checked(H->base, Q,
                                       {RingElement::constant(Q, Rational(2))}, "x");
    IsotropyLieAlgebra iso = isotropy(H, x);
    CHECK(iso.rank() == 0);
  }
  {
    HopfPtr H = catalog::malgrange(3);
    AlgebraMap x = AlgebraMap::checked(H->base, Q,
                                       {RingElement::constant(Q, Rational(1))}, "x");
    IsotropyLieAlgebra iso = isotropy(H, x);
    CHECK(iso.rank() == 3);
    // [d, d] = 0 in the isotropy algebra
    for (int i = 0; i < 3; ++i)
      for (int k = 0; k < 3; ++k) CHECK(iso.c[i][i][k] == Rational(0));
    std::string why;
    CHECK(isotropy_nabla_matches(iso, &why));
  }
}

TEST_CASE("split_tau: Euler derivation from the Laurent coaction") {
  HopfPtr B = catalog::laurent_hopf_algebra();
  AlgebraPtr A = PresentedAlgebra::make("A1", {"X"}, {}, {});
  SplitAlgebroid sp = build_split_algebroid("laurent_line", B, A, {"g*X"});
  CHECK(check_axioms(sp.split).all_pass());
  DiffResult DB = differentiate(B, Flavor::S);
  CHECK(DB.lr.rank() == 1);  // delta(g) free, delta(ginv) = -delta(g)
  EpsDerivation tau = split_tau(sp, DB.basis[0]);
  AlgebraDerivation w = anchor(tau);
  // varpi(delta)(X) = delta(g) X: the Euler derivation
  CHECK(w.images()[0] == RingElement::variable(A, 0));
  // delta = 0 gives the zero derivation
  EpsDerivation zero = split_tau(sp, DB.basis[0].scaled(RingElement::zero(B->base)));
  CHECK(zero.is_zero());
}

TEST_CASE("flavor bridge: composing with S transports Der^s onto Der^t") {
  HopfPtr H = catalog::malgrange(2);
  DiffResult Ds = differentiate(H, Flavor::S);
  DiffResult Dt = differentiate(H, Flavor::T);
  CHECK(Dt.lr.rank() == Ds.lr.rank());
  for (const EpsDerivation& d : Ds.basis) {
    EpsDerivation dt = compose_antipode(d);
    CHECK(dt.flavor() == Flavor::T);
  }
  // the transported bracket matches the target-flavor bracket
  for (int i = 0; i < Ds.lr.rank(); ++i)
    for (int j = 0; j < Ds.lr.rank(); ++j) {
      EpsDerivation lhs = eps_bracket(compose_antipode(Ds.basis[i]),
                                      compose_antipode(Ds.basis[j]));
      EpsDerivation rhs = compose_antipode(eps_bracket(Ds.basis[i], Ds.basis[j]));
      CHECK(lhs == rhs);
    }
}

TEST_CASE("tau is an anti-homomorphism on the gl2 matrix units") {
  SplitAlgebroid sp = catalog::gl2_plane();
  DiffResult DB = differentiate(sp.B, Flavor::S);
  REQUIRE(DB.lr.rank() == 4);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      EpsDerivation lhs = eps_bracket(split_tau(sp, DB.basis[i]),
                                      split_tau(sp, DB.basis[j]));
      EpsDerivation rhs = split_tau(sp, eps_bracket(DB.basis[j], DB.basis[i]));
      CHECK(lhs == rhs);
    }
}
