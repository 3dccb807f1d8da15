#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "algebroid/catalog.hpp"

using namespace algd;

namespace {

/// rank-2 fixture with a nonzero structure constant and a nonzero anchor:
/// [f0, f1] = f1, w(f0) = d/dX, w(f1) = 0
LieRinehart affine_line_lr() {
  AlgebraPtr A = catalog::base_QX();
  auto z = RingElement::zero(A);
  auto one = RingElement::one(A);
  std::vector<std::vector<std::vector<RingElement>>> c(
      2, std::vector<std::vector<RingElement>>(2, std::vector<RingElement>(2, z)));
  c[0][1][1] = one;
  c[1][0][1] = -one;
  std::vector<AlgebraDerivation> anchors{
      AlgebraDerivation::checked(A, {one}, "aff anchor"), AlgebraDerivation::zero(A)};
  return make_lie_rinehart("aff1", A, {"f0", "f1"}, std::move(anchors), std::move(c));
}

RawWord random_word(std::mt19937& rng, const Envelope& U, int maxlen) {
  std::uniform_int_distribution<int> len(1, maxlen);
  std::uniform_int_distribution<int> gen(0, U.rank() - 1);
  std::uniform_int_distribution<int> kind(0, 3);
  std::uniform_int_distribution<int> coeff(-3, 3);
  std::uniform_int_distribution<int> deg(0, 2);
  RawWord w;
  int L = len(rng);
  for (int i = 0; i < L; ++i) {
    if (kind(rng) == 0) {
      Poly p = Poly::zero(U.A->nvars());
      Monomial m(U.A->nvars(), 0u);
      if (U.A->nvars() > 0) m[0] = static_cast<unsigned>(deg(rng));
      p += Poly::monomial(m, Rational(coeff(rng) == 0 ? 1 : coeff(rng)));
      w.push_back(NCAtom::base(RingElement(U.A, p)));
    } else {
      w.push_back(NCAtom::generator(gen(rng)));
    }
  }
  return w;
}

}  // namespace

TEST_CASE("the Weyl relations: D x - x D = 1 in right-coefficient form") {
  Envelope U = build_enveloping(catalog::weyl_lr());
  NCElement e = parse_nc("D.iA(X) - iA(X).D", U);
  CHECK(e == U.embed_base(RingElement::one(U.A)));
  // x D = D x - 1 gathers coefficients on the right
  NCElement xd = parse_nc("iA(X).D", U);
  NCElement expect;
  expect.add({0}, parse_element("X", U.A));
  expect.add({}, parse_element("-1", U.A));
  CHECK(xd == expect);
}

TEST_CASE("abelian rank-2 with zero anchor is a polynomial ring") {
  AlgebraPtr A = catalog::base_QX();
  auto z = RingElement::zero(A);
  std::vector<std::vector<std::vector<RingElement>>> c(
      2, std::vector<std::vector<RingElement>>(2, std::vector<RingElement>(2, z)));
  LieRinehart L = make_lie_rinehart("ab2", A, {"e1", "e2"},
                                    {AlgebraDerivation::zero(A), AlgebraDerivation::zero(A)},
                                    std::move(c));
  Envelope U = build_enveloping(L);
  CHECK(U.mul(U.gen(1), U.gen(0)) == U.mul(U.gen(0), U.gen(1)));
  CHECK(U.mul(U.embed_base(parse_element("X", A)), U.gen(0)) ==
        U.mul(U.gen(0), U.embed_base(parse_element("X", A))));
}

TEST_CASE("nonabelian rewriting: f1 f0 = f0 f1 - f1") {
  Envelope U = build_enveloping(affine_line_lr());
  NCElement got = U.mul(U.gen(1), U.gen(0));
  NCElement expect;
  expect.add({0, 1}, RingElement::one(U.A));
  expect.add({1}, -RingElement::one(U.A));
  CHECK(got == expect);
  // e2 e1 e2 style words match exhaustive randomized rewriting
  RawWord w{NCAtom::generator(1), NCAtom::generator(0), NCAtom::generator(1)};
  NCElement base = U.normalize_word(w);
  std::mt19937 rng(41);
  for (int t = 0; t < 20; ++t) {
    auto strat = [&](size_t n) { return static_cast<size_t>(rng() % n); };
    CHECK(U.normalize_word(w, strat) == base);
  }
}

TEST_CASE("confluence fuzzing on the bundled envelopes") {
  for (const LieRinehart& L :
       {catalog::weyl_lr(), catalog::quotient_lr(), affine_line_lr()}) {
    Envelope U = build_enveloping(L);
    std::mt19937 rng(1234);
    for (int t = 0; t < 60; ++t) {
      RawWord w = random_word(rng, U, 4);
      std::mt19937 r1(100 + t), r2(200 + t);
      auto s1 = [&](size_t n) { return static_cast<size_t>(r1() % n); };
      auto s2 = [&](size_t n) { return static_cast<size_t>(r2() % n); };
      NCElement a = U.normalize_word(w, s1);
      NCElement b = U.normalize_word(w, s2);
      CHECK(a == b);
    }
  }
}

TEST_CASE("translation map generator values") {
  Envelope U = build_enveloping(catalog::weyl_lr());
  RingElement a = parse_element("X^2", U.A);
  // iota_A(a)_- (x) iota_A(a)_+ = 1 (x) a = a (x) 1
  TensorNC ta = U.translation(U.embed_base(a));
  TensorNC expect;
  expect.add({}, {}, a);
  CHECK(ta == expect);
  // iota_L(X)_- (x) iota_L(X)_+ = 1 (x) D - D (x) 1
  TensorNC td = U.translation(U.gen(0));
  TensorNC expect2;
  expect2.add({}, {0}, RingElement::one(U.A));
  expect2.add({0}, {}, -RingElement::one(U.A));
  CHECK(td == expect2);
  // u_- u_+ = eps(u) 1 for u = D D
  NCElement dd = U.mul(U.gen(0), U.gen(0));
  TensorNC tdd = U.translation(dd);
  NCElement folded;
  for (const auto& [k, c] : tdd.terms) {
    RawWord w = U.word_atoms(k.first, RingElement::one(U.A));
    RawWord r = U.word_atoms(k.second, c);
    w.insert(w.end(), r.begin(), r.end());
    folded = folded + U.normalize_word(w);
  }
  CHECK(folded.is_zero());  // eps(DD) = 0
}

TEST_CASE("the full cocommutative identity suite on random samples") {
  for (const LieRinehart& L : {catalog::weyl_lr(), affine_line_lr()}) {
    Envelope U = build_enveloping(L);
    std::mt19937 rng(77);
    std::vector<NCElement> samples;
    for (int i = 0; i < 12; ++i)
      samples.push_back(U.normalize_word(random_word(rng, U, 3)));
    AxiomReport rep = check_cocomm_identities(U, samples);
    INFO(L.name, ":\n", rep.summary());
    CHECK(rep.all_pass());
  }
}

TEST_CASE("primitive elements of V_A(L)") {
  for (const LieRinehart& L :
       {catalog::weyl_lr(), catalog::quotient_lr(), affine_line_lr()}) {
    Envelope U = build_enveloping(L);
    std::vector<NCElement> prims = primitives(U, 2);
    REQUIRE(static_cast<int>(prims.size()) == L.rank());
    for (int i = 0; i < L.rank(); ++i) CHECK(prims[i] == U.gen(i));
    // iota_L(X)^2 is not primitive: Delta has the cross term 2 X (x) X
    NCElement sq = U.mul(U.gen(0), U.gen(0));
    TensorNC d = U.delta(sq);
    TensorNC primpart;
    primpart.add(Word{0, 0}, {}, RingElement::one(U.A));
    primpart.add({}, Word{0, 0}, RingElement::one(U.A));
    CHECK(d != primpart);
    auto cross = d.terms.find({Word{0}, Word{0}});
    REQUIRE(cross != d.terms.end());
    CHECK(cross->second == RingElement::constant(U.A, Rational(2)));
    // the induced Lie-Rinehart structure is the input one
    LieRinehart P = primitive_lie_rinehart(U, prims);
    for (int i = 0; i < L.rank(); ++i) {
      CHECK(P.anchor[i] == L.anchor[i]);
      for (int j = 0; j < L.rank(); ++j)
        for (int k = 0; k < L.rank(); ++k) CHECK(P.c[i][j][k] == L.c[i][j][k]);
    }
  }
}

TEST_CASE("the primitive anchor law eps(t(a)X) 1 = t(a)X - X t(a)") {
  Envelope U = build_enveloping(affine_line_lr());
  RingElement a = parse_element("X^2 + X", U.A);
  for (int g = 0; g < U.rank(); ++g) {
    NCElement lhs = U.embed_base(U.counit(U.mul(U.embed_base(a), U.gen(g))));
    NCElement rhs = U.mul(U.embed_base(a), U.gen(g)) - U.mul(U.gen(g), U.embed_base(a));
    CHECK(lhs == rhs);
  }
}

TEST_CASE("NC parser round-trips printed elements") {
  Envelope U = build_enveloping(affine_line_lr());
  std::mt19937 rng(5);
  for (int t = 0; t < 15; ++t) {
    NCElement e = U.normalize_word(random_word(rng, U, 3));
    CHECK(parse_nc(e.str(U), U) == e);
  }
  CHECK(parse_nc("iA(0)", U).is_zero());
  CHECK(parse_nc("f0^2", U) == U.mul(U.gen(0), U.gen(0)));
  CHECK_THROWS_AS(parse_nc("f7", U), parse_error);
}

TEST_CASE("degree cap on primitive searches") {
  Envelope U = build_enveloping(catalog::weyl_lr());
  CHECK_THROWS_AS(primitives(U, 5), algebra_error);
}
