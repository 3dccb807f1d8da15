#ifndef ALGEBROID_DIFFERENTIATION_HPP
#define ALGEBROID_DIFFERENTIATION_HPP

#include <map>
#include <string>
#include <vector>

#include "algebroid/hopf.hpp"
#include "algebroid/lie_rinehart.hpp"
#include "algebroid/linsolve.hpp"

namespace algd {

enum class Flavor { S, T };

std::string flavor_name(Flavor f);

/// eps-derivation of H with values in the base: Q-linear, kills the source
/// (flavor S) or the target (flavor T), and satisfies
/// d(uv) = eps(u) d(v) + d(u) eps(v).  Stored by generator images; evaluation
/// extends through the eps-weighted Leibniz expansion.
class EpsDerivation {
 public:
  EpsDerivation() = default;
  static EpsDerivation checked(HopfPtr parent, Flavor flavor,
                               std::vector<RingElement> images, const std::string& what);

  const HopfPtr& parent() const { return parent_; }
  Flavor flavor() const { return flavor_; }
  const std::vector<RingElement>& images() const { return images_; }

  RingElement eval(const RingElement& u) const;
  RingElement eval_raw(const Poly& representative) const;

  EpsDerivation operator+(const EpsDerivation& o) const;
  EpsDerivation operator-(const EpsDerivation& o) const;
  EpsDerivation scaled(const RingElement& a) const;
  bool operator==(const EpsDerivation& o) const;
  bool is_zero() const;

 private:
  HopfPtr parent_;
  Flavor flavor_ = Flavor::S;
  std::vector<RingElement> images_;
};

/// The Lie bracket [d, d'] = d*d' - d'*d, with * the source-flavor product
/// d*d': u -> d(u_1 t(d'(u_2))) and the target-flavor variant
/// u -> d(s(d'(u_1)) u_2).
EpsDerivation eps_bracket(const EpsDerivation& a, const EpsDerivation& b);

/// Same pairing, evaluated against an explicit list of coproduct
/// representative terms for one generator (used to test representative
/// independence).
RingElement eps_convolution_on_terms(const EpsDerivation& a, const EpsDerivation& b,
                                     const std::vector<TensorModel::Term>& terms);

/// Anchor: d o t for flavor S, d o s for flavor T.
AlgebraDerivation anchor(const EpsDerivation& d);

/// d o S swaps the flavor; bridges Der^s and Der^t.
EpsDerivation compose_antipode(const EpsDerivation& d);

/// The Lie-Rinehart algebra L(H) = Der^p(H, A_eps) with a chosen free basis
/// dual to the free generator images.
struct DiffResult {
  HopfPtr H;
  Flavor flavor = Flavor::S;
  std::vector<int> free_vars;  // H variable indices, lexicographic by name
  std::vector<EpsDerivation> basis;
  LieRinehart lr;

  std::vector<RingElement> coordinates(const EpsDerivation& d) const;
  EpsDerivation combine(const std::vector<RingElement>& coords) const;
};

DiffResult differentiate(const HopfPtr& H, Flavor flavor);

/// L(phi): L(K) -> L(H) for phi: H -> K, in the bases of the two
/// DiffResults; throws naming the failed condition when phi is not a Hopf
/// algebroid morphism.
LRMorphism l_on_morphism(const HopfMorphism& phi, const DiffResult& diff_cod,
                         const DiffResult& diff_dom);

/// Q(H) = I/I^2 with the class map pi^s and the universal derivation psi^s.
struct KaehlerPresentation {
  HopfPtr H;
  std::vector<int> basis_vars;
  std::vector<std::string> basis;                     // q_<var>
  std::vector<std::vector<RingElement>> pi_images;    // per H var, A-coords
  std::vector<std::vector<RingElement>> psi_images;   // per H var, H-coeffs

  std::vector<RingElement> pi(const RingElement& u) const;   // coords of pi^s(u)
  std::vector<RingElement> psi(const RingElement& u) const;  // psi^s(u)
};

KaehlerPresentation kaehler_module(const HopfPtr& H);

/// Isotropy Lie algebra at a Q-point x of A, together with the isotropy
/// Hopf algebra H_x and the data needed to verify the nabla isomorphism.
struct IsotropyLieAlgebra {
  HopfPtr H;
  AlgebraMap point;                           // A -> Q
  AlgebraPtr rationals;
  std::vector<int> free_vars;
  std::vector<std::vector<Rational>> basis;   // values on H variables
  std::vector<std::vector<std::vector<Rational>>> c;  // structure constants
  HopfPtr isotropy_hopf;                      // H_x over the trivial base

  int rank() const { return static_cast<int>(basis.size()); }
  Rational eval(int basis_index, const Poly& representative) const;
};

IsotropyLieAlgebra isotropy(const HopfPtr& H, const AlgebraMap& x);

/// Checks that transporting the isotropy bracket along nabla matches the
/// bracket of L(H_x) computed independently.
bool isotropy_nabla_matches(const IsotropyLieAlgebra& iso, std::string* detail = nullptr);

/// Split Hopf algebroid H = B (x) A of a comodule algebra (Exam of a Hopf
/// algebra acting on an algebra); B sits over the trivial base.
struct SplitAlgebroid {
  HopfPtr split;                  // the algebroid (A, B (x) A)
  HopfPtr B;
  AlgebraPtr A;
  std::vector<int> bvar_to_total, avar_to_total;
  AlgebraMap coaction;            // A -> total, a -> a_(-1) (x) a_(0)
};

/// Coaction images are expression strings parsed over the total algebra
/// (B-variables then A-variables).
SplitAlgebroid build_split_algebroid(const std::string& name, const HopfPtr& B,
                                     const AlgebraPtr& A,
                                     const std::vector<std::string>& coaction_exprs);

/// tau(delta) = delta (x) A, a target-flavor eps-derivation of the split
/// algebroid; anchor(tau(delta))(a) = delta(a_(-1)) a_0.
EpsDerivation split_tau(const SplitAlgebroid& sp, const EpsDerivation& delta_B);

}  // namespace algd

#endif
