#ifndef ALGEBROID_HOPF_HPP
#define ALGEBROID_HOPF_HPP

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "algebroid/algebra.hpp"

namespace algd {

struct AxiomCheck {
  std::string name;
  bool pass;
  std::string counterexample;  // offending generator or message
};

struct AxiomReport {
  std::vector<AxiomCheck> checks;
  bool all_pass() const;
  std::string summary() const;
  void add(std::string name, bool pass, std::string detail = "");
};

/// Explicit model of H (x)_A H: one commutative algebra on two disjoint
/// copies of the variables of H, relations copied legwise, plus the transfer
/// relations t(a)_left - s(a)_right for each base generator.  Left-leg
/// variables are declared first, so degrevlex rewrites left legs into right
/// legs.
class TensorModel {
 public:
  TensorModel() = default;
  TensorModel(const std::string& name, AlgebraPtr H, const AlgebraMap& src,
              const AlgebraMap& tgt, bool op_transfer = false);

  const AlgebraPtr& model() const { return model_; }
  const AlgebraPtr& total() const { return H_; }

  RingElement include_left(const RingElement& h) const;
  RingElement include_right(const RingElement& h) const;
  RingElement tensor(const RingElement& a, const RingElement& b) const;

  struct Term {
    Rational coeff;
    Poly left;   // monomial over H variables
    Poly right;  // monomial over H variables
  };
  std::vector<Term> terms(const RingElement& t) const;
  /// Split a raw model polynomial without normalizing it first.
  std::vector<Term> raw_terms(const Poly& p) const;

  std::string str(const RingElement& t) const;

 private:
  AlgebraPtr model_, H_;
  std::vector<int> left_map_, right_map_;  // H var -> model var
};

/// H (x)_A H (x)_A H with transfers (t(a))_1 - (s(a))_2 and
/// (t(a))_2 - (s(a))_3.
class TripleModel {
 public:
  TripleModel() = default;
  TripleModel(const std::string& name, AlgebraPtr H, const AlgebraMap& src,
              const AlgebraMap& tgt);
  const AlgebraPtr& model() const { return model_; }
  const std::vector<int>& leg_map(int leg) const { return maps_[leg]; }

 private:
  AlgebraPtr model_, H_;
  std::vector<int> maps_[3];
};

/// Sum of simple tensors over H, the model-independent input format for
/// coproduct data.
using TensorExpr = std::vector<std::pair<RingElement, RingElement>>;

class HopfAlgebroid;
using HopfPtr = std::shared_ptr<HopfAlgebroid>;

/// Commutative Hopf algebroid presentation (A, H) with structure maps given
/// on generators.
class HopfAlgebroid {
 public:
  std::string name;
  AlgebraPtr base;   // A
  AlgebraPtr total;  // H
  AlgebraMap src;    // s: A -> H
  AlgebraMap tgt;    // t: A -> H
  AlgebraMap counit; // eps: H -> A
  AlgebraMap coproduct;  // H -> tensor().model()
  std::optional<AlgebraMap> antipode;
  bool verified = false;

  const TensorModel& tensor() const { return tensor_; }
  const TensorModel& op_tensor() const;  // for the anti-cocommutativity law
  const TripleModel& triple() const;

  RingElement delta(const RingElement& u) const { return coproduct.apply(u); }
  RingElement delta_var(int v) const { return coproduct.images()[v]; }
  RingElement eps(const RingElement& u) const { return counit.apply(u); }
  RingElement s_of(const RingElement& a) const { return src.apply(a); }
  RingElement t_of(const RingElement& a) const { return tgt.apply(a); }

  friend HopfPtr build_hopf_algebroid(std::string, AlgebraPtr, AlgebraPtr,
                                      std::vector<RingElement>, std::vector<RingElement>,
                                      std::vector<RingElement>, std::vector<TensorExpr>,
                                      std::optional<std::vector<RingElement>>);

 private:
  TensorModel tensor_;
  mutable std::optional<TensorModel> op_tensor_;
  mutable std::optional<TripleModel> triple_;
};

/// Validates all maps on relations, builds the tensor model, returns the
/// (unverified) presentation.  Images are indexed by generator: s, t by base
/// variables; counit, coproduct, antipode by total variables.
HopfPtr build_hopf_algebroid(std::string name, AlgebraPtr base, AlgebraPtr total,
                             std::vector<RingElement> s_images,
                             std::vector<RingElement> t_images,
                             std::vector<RingElement> counit_images,
                             std::vector<TensorExpr> coproduct_images,
                             std::optional<std::vector<RingElement>> antipode_images);

/// Generator-level axiom suite; marks the presentation verified iff all pass.
AxiomReport check_axioms(const HopfPtr& H);

/// Solve the antipode laws S(u_1)u_2 = t(eps(u)) and u_1 S(u_2) = s(eps(u))
/// for S on generators, triangularly; installs and returns the solved map.
/// `order` permutes the generator scan (the solved map must not depend on it).
AlgebraMap derive_antipode(const HopfPtr& H, const std::vector<int>& order = {});

/// Morphism (id_A, phi): (A, H) -> (A, K) of Hopf algebroids over a fixed base.
struct HopfMorphism {
  std::string name;
  HopfPtr dom, cod;
  AlgebraMap phi;  // H -> K
};

AxiomReport check_hopf_morphism(const HopfMorphism& f);

}  // namespace algd

#endif
