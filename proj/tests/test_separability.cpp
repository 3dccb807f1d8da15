#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "algebroid/catalog.hpp"
#include "algebroid/separability.hpp"

using namespace algd;

namespace {

Matrix poly_matrix(const AlgebraPtr& A, const std::vector<std::vector<std::string>>& rows) {
  Matrix m;
  for (const auto& row : rows) {
    std::vector<RingElement> r;
    for (const auto& e : row) r.push_back(parse_element(e, A));
    m.push_back(std::move(r));
  }
  return m;
}

}  // namespace

TEST_CASE("Smith normal form over Q[X]") {
  AlgebraPtr A = catalog::base_QX();
  {
    // x-column with a unit row is split-injective
    Matrix M = poly_matrix(A, {{"X"}, {"1"}});
    SplitInjectivity si = is_split_injective(M, A);
    CHECK(si.split_injective);
    REQUIRE(si.retraction.has_value());
    Matrix prod = matrix_mul(*si.retraction, M);
    CHECK(prod == matrix_identity(A, 1));
  }
  {
    // multiplication by X alone is injective but not split
    Matrix M = poly_matrix(A, {{"X"}});
    CHECK_FALSE(is_split_injective(M, A).split_injective);
    CHECK_FALSE(is_surjective(M, A));
  }
  {
    Matrix M = poly_matrix(A, {{"1", "0"}, {"0", "1"}, {"X", "X^2"}});
    SplitInjectivity si = is_split_injective(M, A);
    CHECK(si.split_injective);
    CHECK(matrix_mul(*si.retraction, M) == matrix_identity(A, 2));
  }
  {
    // invariant factors of diag-like data
    Matrix M = poly_matrix(A, {{"X^2 - 1", "X - 1"}, {"X + 1", "1"}});
    SmithResult s = smith_normal_form(M, A);
    REQUIRE(s.invariant_factors.size() == 2);
    CHECK(s.invariant_factors[0].poly().is_constant());
    Matrix EM = matrix_mul(s.E, M);
    CHECK(matrix_mul(EM, s.F) == s.D);
  }
  {
    // zero matrix from a nonzero domain is not split-injective
    Matrix M = poly_matrix(A, {{"0"}, {"0"}});
    CHECK_FALSE(is_split_injective(M, A).split_injective);
  }
}

TEST_CASE("Smith normal form over Q") {
  AlgebraPtr Q = PresentedAlgebra::rationals();
  Matrix M = poly_matrix(Q, {{"2", "0"}, {"1", "3"}, {"0", "0"}});
  SplitInjectivity si = is_split_injective(M, Q);
  CHECK(si.split_injective);
  CHECK(matrix_mul(*si.retraction, M) == matrix_identity(Q, 2));
  CHECK_FALSE(is_surjective(M, Q));
  CHECK(is_surjective(poly_matrix(Q, {{"1", "0", "2"}, {"0", "5", "1"}}), Q));
}

TEST_CASE("q_map matrices for the bundled morphisms") {
  {
    HopfMorphism id2 = catalog::identity_morphism(catalog::malgrange(2));
    KaehlerPresentation K = kaehler_module(id2.dom);
    Matrix M = q_map(id2, K, K);
    CHECK(M == matrix_identity(id2.dom->base, 3));
  }
  {
    HopfMorphism incl = catalog::malgrange_inclusion(1, 2);
    Matrix M = q_map(incl, kaehler_module(incl.dom), kaehler_module(incl.cod));
    REQUIRE(M.size() == 3);
    REQUIRE(M[0].size() == 2);
    const AlgebraPtr& A = incl.dom->base;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 2; ++j)
        CHECK(M[i][j] == (i == j ? RingElement::one(A) : RingElement::zero(A)));
  }
  {
    HopfMorphism uc = catalog::unit_counit(catalog::malgrange(1));
    KaehlerPresentation K = kaehler_module(uc.dom);
    Matrix M = q_map(uc, K, K);
    for (const auto& row : M)
      for (const auto& e : row) CHECK(e.is_zero());
  }
}

TEST_CASE("separability verdicts and certificates") {
  {
    SeparabilityReport rep = separability_report(make_morphism("inclusion:1:2"));
    CHECK(rep.condition_a);
    CHECK(rep.condition_b);
    CHECK(rep.condition_d);
    CHECK(rep.consistent);
    REQUIRE(rep.retraction.has_value());
    Matrix prod = matrix_mul(*rep.retraction, rep.q_matrix);
    CHECK(prod == matrix_identity(rep.q_matrix[0][0].ring(),
                                  static_cast<int>(prod.size())));
  }
  {
    SeparabilityReport rep = separability_report(make_morphism("unit_counit:malgrange:1"));
    CHECK_FALSE(rep.condition_a);
    CHECK_FALSE(rep.condition_b);
    CHECK_FALSE(rep.condition_d);
    CHECK(rep.consistent);
  }
  {
    SeparabilityReport rep = separability_report(make_morphism("identity:malgrange:2"));
    CHECK(rep.separable());
    CHECK(rep.consistent);
  }
  {
    SeparabilityReport rep = separability_report(make_morphism("projection:2"));
    CHECK_FALSE(rep.separable());
    CHECK(rep.consistent);
  }
}

TEST_CASE("JSON report carries the certificates") {
  SeparabilityReport rep = separability_report(make_morphism("inclusion:1:2"));
  std::string j = separability_to_json(rep);
  CHECK(j.find("retraction") != std::string::npos);
  CHECK(j.find("\"separable\": true") != std::string::npos);
}
