#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include "algebroid/catalog.hpp"

using namespace algd;

namespace {

LieRinehart broken_jacobi() {
  AlgebraPtr A = catalog::base_QX();
  auto z = RingElement::zero(A);
  auto one = RingElement::one(A);
  std::vector<std::vector<std::vector<RingElement>>> c(
      3, std::vector<std::vector<RingElement>>(3, std::vector<RingElement>(3, z)));
  // [e1,e2] = e3, [e2,e3] = e1, [e3,e1] = e1: Jacobi fails
  c[0][1][2] = one;
  c[1][0][2] = -one;
  c[1][2][0] = one;
  c[2][1][0] = -one;
  c[2][0][0] = one;
  c[0][2][0] = -one;
  std::vector<AlgebraDerivation> anchors(3, AlgebraDerivation::zero(A));
  return make_lie_rinehart("broken", A, {"e1", "e2", "e3"}, std::move(anchors),
                           std::move(c));
}

}  // namespace

TEST_CASE("the rank-1 derivation algebra and bundled examples pass") {
  CHECK(check_lie_rinehart(catalog::weyl_lr()).all_pass());
  CHECK(check_lie_rinehart(catalog::quotient_lr()).all_pass());
}

TEST_CASE("the rank-2 closed-form bracket matches the Leibniz extension") {
  LieRinehart L = catalog::quotient_lr();
  const AlgebraPtr& A = L.base;
  AlgebraDerivation d = AlgebraDerivation::checked(A, {RingElement::one(A)}, "d");
  std::vector<RingElement> a{parse_element("X^2", A), parse_element("X", A)};
  std::vector<RingElement> b{parse_element("X + 1", A), parse_element("2*X^3", A)};
  auto got = L.bracket_vectors(a, b);
  CHECK(got[0] == a[0] * d.apply(b[0]) - b[0] * d.apply(a[0]));
  CHECK(got[1] == a[0] * d.apply(b[1]) - b[0] * d.apply(a[1]));
}

TEST_CASE("broken structure constants fail Jacobi with the offending triple") {
  AxiomReport rep = check_lie_rinehart(broken_jacobi());
  bool jacobi_failed = false;
  for (const auto& c : rep.checks)
    if (c.name == "jacobi" && !c.pass) {
      jacobi_failed = true;
      CHECK(c.counterexample == "(e1,e2,e3)");
    }
  CHECK(jacobi_failed);
}

TEST_CASE("identity morphism passes, zero map fails anchor compatibility") {
  LieRinehart W = catalog::weyl_lr();
  LRMorphism id{"id", W, W, {{RingElement::one(W.base)}}};
  CHECK(check_lr_morphism(id).all_pass());

  LRMorphism zero{"zero", W, W, {{RingElement::zero(W.base)}}};
  AxiomReport rep = check_lr_morphism(zero);
  bool anchor_failed = false;
  for (const auto& c : rep.checks)
    if (c.name == "anchor_compat" && !c.pass) anchor_failed = true;
  CHECK(anchor_failed);
}

TEST_CASE("the bracket is Q-bilinear and satisfies the Leibniz identity exactly") {
  LieRinehart L = catalog::quotient_lr();
  const AlgebraPtr& A = L.base;
  auto e0 = L.basis_vector(0);
  auto e1 = L.basis_vector(1);
  RingElement a = parse_element("X^2 - 1", A);
  // [e0, a e1] = a [e0, e1] + w(e0)(a) e1
  auto ae1 = e1;
  ae1[1] = a;
  auto lhs = L.bracket_vectors(e0, ae1);
  auto rhs = L.bracket_vectors(e0, e1);
  for (auto& x : rhs) x = a * x;
  rhs[1] += L.anchor[0].apply(a);
  CHECK(lhs == rhs);
}

TEST_CASE("JSON serialization carries exact rationals as strings") {
  LieRinehart L = catalog::quotient_lr();
  AxiomReport rep = check_lie_rinehart(L);
  auto j = nlohmann::json::parse(lie_rinehart_to_json(L, &rep));
  CHECK(j["rank"] == 2);
  CHECK(j["basis"].size() == 2);
  CHECK(j["anchor"]["e0"]["X"] == "1");
  CHECK(j["checks"].size() == rep.checks.size());
}
