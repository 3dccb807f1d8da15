#ifndef ALGEBROID_SEPARABILITY_HPP
#define ALGEBROID_SEPARABILITY_HPP

#include <optional>
#include <string>
#include <vector>

#include "algebroid/differentiation.hpp"

namespace algd {

using Matrix = std::vector<std::vector<RingElement>>;

Matrix matrix_mul(const Matrix& a, const Matrix& b);
Matrix matrix_identity(const AlgebraPtr& A, int n);

/// Smith normal form over Q or Q[X]: E * M * F = D with E, F invertible and
/// D diagonal with the divisibility chain.
struct SmithResult {
  Matrix D, E, F;
  std::vector<RingElement> invariant_factors;
  bool all_units() const;
};

SmithResult smith_normal_form(const Matrix& M, const AlgebraPtr& A);

/// Decides split-injectivity of the map A^p -> A^q given by the q x p matrix
/// M; returns the retraction R with R M = I when it exists.
struct SplitInjectivity {
  bool split_injective = false;
  std::optional<Matrix> retraction;
};

SplitInjectivity is_split_injective(const Matrix& M, const AlgebraPtr& A);

/// Surjectivity of the map A^p -> A^q given by the q x p matrix (cokernel
/// vanishing), via Smith normal form.
bool is_surjective(const Matrix& M, const AlgebraPtr& A);

/// Matrix of Q(phi): Q(K) -> Q(H) in the pi^s bases, for phi: K -> H.
Matrix q_map(const HopfMorphism& phi, const KaehlerPresentation& QK,
             const KaehlerPresentation& QH);

struct SeparabilityReport {
  std::string morphism;
  bool condition_a = false;  // Q(phi) split-injective
  bool condition_b = false;  // L(phi) surjective
  bool condition_d = false;  // Der^s(phi)(H) surjective
  bool consistent = false;
  Matrix q_matrix;
  std::optional<Matrix> retraction;
  bool separable() const { return condition_a && condition_b && condition_d; }
};

SeparabilityReport separability_report(const HopfMorphism& phi);

std::string separability_to_json(const SeparabilityReport& r);

}  // namespace algd

#endif
