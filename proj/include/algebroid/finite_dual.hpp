#ifndef ALGEBROID_FINITE_DUAL_HPP
#define ALGEBROID_FINITE_DUAL_HPP

#include <string>
#include <vector>

#include "algebroid/differentiation.hpp"
#include "algebroid/enveloping.hpp"

namespace algd {

/// Cocommutative Hopf algebroid with a finite free right A-basis, stored as
/// structure tables.  The full dual construction is implemented over the
/// trivial base, which covers every bundled example; the translation table is
/// recovered from the inverse of the canonical map beta.
struct FiniteCocomm {
  std::string name;
  int n = 0;
  std::vector<std::string> basis;
  std::vector<Rational> unit;                            // coordinates of 1
  std::vector<std::vector<std::vector<Rational>>> mult;  // u_i u_j = sum_k mult[i][j][k] u_k
  std::vector<Rational> counit;
  std::vector<std::vector<std::vector<Rational>>> cop;   // Delta(u_i) = sum cop[i][j][k] u_j (x) u_k
  std::vector<std::vector<std::vector<Rational>>> trans; // (u_i)_- (x) (u_i)_+
};

/// Validates the shape, computes the translation table by inverting beta.
FiniteCocomm make_finite_cocomm(std::string name, std::vector<std::string> basis,
                                std::vector<Rational> unit,
                                std::vector<std::vector<std::vector<Rational>>> mult,
                                std::vector<Rational> counit,
                                std::vector<std::vector<std::vector<Rational>>> cop);

AxiomReport check_finite_cocomm(const FiniteCocomm& U);

/// The commutative Hopf algebroid on the dual basis, with product the
/// convolution dual to Delta, coproduct dual to multiplication and antipode
/// through the translation map.  Rank cap 16.
HopfPtr finite_dual(const FiniteCocomm& U);

/// The dual of U repackaged as table data (valid when U is commutative and
/// cocommutative, e.g. a group algebra of an abelian group); supports the
/// dual-of-dual comparison.
FiniteCocomm dual_as_cocommutative(const FiniteCocomm& U);

/// Value vector of an element of finite_dual(U) as a functional on U.
std::vector<Rational> dual_functional(const FiniteCocomm& U, const HopfPtr& dual,
                                      const RingElement& x);

/// sigma: V_A(L) -> *H from Lie-Rinehart data, evaluated against H through
/// the convolution (f*g)(x) = g(x_1 t(f(x_2))); sigma(iota_A(a)) = a eps and
/// sigma(iota_L(X)) = -h(X).
class SigmaMap {
 public:
  SigmaMap(Envelope U, HopfPtr H, std::vector<EpsDerivation> h_images);

  RingElement eval_word(const Word& w, const RingElement& x) const;
  RingElement eval(const NCElement& u, const RingElement& x) const;

  const Envelope& envelope() const { return U_; }
  const HopfPtr& hopf() const { return H_; }

 private:
  Envelope U_;
  HopfPtr H_;
  std::vector<EpsDerivation> h_;
};

struct LiftReport {
  bool ok = true;
  int words_checked = 0;
  std::vector<std::string> violations;
};

/// Lifts an LR morphism h: L -> L(H) to sigma: V_A(L) -> *H and verifies
/// both compatibility relations on every PBW basis word up to degree_cap,
/// against base generator pairs and total generator pairs.
LiftReport lift_lr_morphism(const LieRinehart& L, const HopfPtr& H,
                            const std::vector<EpsDerivation>& h_images, int degree_cap);

}  // namespace algd

#endif
