#ifndef ALGEBROID_LIE_RINEHART_HPP
#define ALGEBROID_LIE_RINEHART_HPP

#include <string>
#include <vector>

#include "algebroid/algebra.hpp"
#include "algebroid/hopf.hpp"

namespace algd {

/// Lie-Rinehart algebra over A on a finite free A-module basis: anchor
/// images and structure constants, with the bracket of general elements
/// extended by the Leibniz rule.
struct LieRinehart {
  std::string name;
  AlgebraPtr base;
  std::vector<std::string> basis;
  std::vector<AlgebraDerivation> anchor;                  // per basis element
  std::vector<std::vector<std::vector<RingElement>>> c;   // [i][j][k]

  int rank() const { return static_cast<int>(basis.size()); }

  std::vector<RingElement> basis_vector(int i) const;
  AlgebraDerivation anchor_of(const std::vector<RingElement>& coeffs) const;
  /// [sum a_i e_i, sum b_j e_j] with the Leibniz extension.
  std::vector<RingElement> bracket_vectors(const std::vector<RingElement>& a,
                                           const std::vector<RingElement>& b) const;
};

LieRinehart make_lie_rinehart(std::string name, AlgebraPtr base,
                              std::vector<std::string> basis,
                              std::vector<AlgebraDerivation> anchor,
                              std::vector<std::vector<std::vector<RingElement>>> c);

/// Antisymmetry, Jacobi on basis triples, anchor a morphism of Lie algebras,
/// and the Leibniz identity with A-generator coefficients.
AxiomReport check_lie_rinehart(const LieRinehart& L);

/// A-linear morphism of Lie-Rinehart algebras in basis coordinates:
/// f(e_i) = sum_j matrix[i][j] e'_j.
struct LRMorphism {
  std::string name;
  LieRinehart dom, cod;
  std::vector<std::vector<RingElement>> matrix;
};

AxiomReport check_lr_morphism(const LRMorphism& f);

std::string lie_rinehart_to_json(const LieRinehart& L, const AxiomReport* checks = nullptr);

}  // namespace algd

#endif
