#ifndef ALGEBROID_ALGEBRA_HPP
#define ALGEBROID_ALGEBRA_HPP

#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "algebroid/groebner.hpp"
#include "algebroid/poly.hpp"

namespace algd {

class PresentedAlgebra;
using AlgebraPtr = std::shared_ptr<const PresentedAlgebra>;

struct parse_error : std::runtime_error {
  size_t position;
  parse_error(const std::string& msg, size_t pos)
      : std::runtime_error(msg), position(pos) {}
};

struct algebra_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Finitely presented commutative Q-algebra.  Equality of elements goes
/// through the reduced degrevlex Groebner basis of the relation ideal,
/// computed once at construction; instances are immutable afterwards.
class PresentedAlgebra : public std::enable_shared_from_this<PresentedAlgebra> {
 public:
  static AlgebraPtr make(std::string name, std::vector<std::string> vars,
                         std::vector<std::pair<std::string, std::string>> inverse_pairs,
                         std::vector<Poly> relations);
  static AlgebraPtr make_parsed(std::string name, std::vector<std::string> vars,
                                std::vector<std::pair<std::string, std::string>> inverse_pairs,
                                const std::vector<std::string>& relation_exprs);
  /// The rationals, presented with no generators.
  static AlgebraPtr rationals(std::string name = "Q");

  const std::string& name() const { return name_; }
  const std::vector<std::string>& vars() const { return vars_; }
  int nvars() const { return static_cast<int>(vars_.size()); }
  int var_index(const std::string& v) const;          // -1 if absent
  int var_index_checked(const std::string& v) const;  // throws
  const std::vector<Poly>& relations() const { return relations_; }
  const std::vector<Poly>& groebner() const { return groebner_; }
  const std::vector<std::pair<int, int>>& inverse_pairs() const { return inverse_pairs_; }
  /// Index of the declared inverse of variable v, or -1.
  int inverse_of(int v) const;
  bool trivial() const { return vars_.empty(); }

  Poly normal_form(const Poly& p) const { return reduce(p, groebner_); }

 private:
  PresentedAlgebra() = default;
  std::string name_;
  std::vector<std::string> vars_;
  std::map<std::string, int> var_index_;
  std::vector<std::pair<int, int>> inverse_pairs_;
  std::vector<int> inverse_of_;
  std::vector<Poly> relations_;
  std::vector<Poly> groebner_;
};

/// Element of a PresentedAlgebra, stored in Groebner normal form.
class RingElement {
 public:
  RingElement() = default;
  RingElement(AlgebraPtr ring, Poly representative);

  static RingElement zero(const AlgebraPtr& ring);
  static RingElement one(const AlgebraPtr& ring);
  static RingElement constant(const AlgebraPtr& ring, const Rational& c);
  static RingElement variable(const AlgebraPtr& ring, const std::string& name);
  static RingElement variable(const AlgebraPtr& ring, int index);

  const AlgebraPtr& ring() const { return ring_; }
  const Poly& poly() const { return poly_; }
  bool is_zero() const { return poly_.is_zero(); }
  bool is_constant() const { return poly_.is_constant(); }
  Rational constant_value() const { return poly_.constant_value(); }

  RingElement operator+(const RingElement& o) const;
  RingElement operator-(const RingElement& o) const;
  RingElement operator-() const;
  RingElement operator*(const RingElement& o) const;
  RingElement& operator+=(const RingElement& o);
  RingElement& operator-=(const RingElement& o);
  RingElement scaled(const Rational& c) const;
  RingElement pow(unsigned e) const;
  bool operator==(const RingElement& o) const;
  bool operator!=(const RingElement& o) const { return !(*this == o); }
  bool operator<(const RingElement& o) const { return poly_ < o.poly_; }

  /// Multiplicative inverse when the element is a single term in invertible
  /// variables; nullopt otherwise.
  std::optional<RingElement> invert() const;

  std::string str() const;

 private:
  void check_same_ring(const RingElement& o) const;
  AlgebraPtr ring_;
  Poly poly_;
};

/// parse_element per the expression grammar; returns the normal form.
RingElement parse_element(const std::string& text, const AlgebraPtr& ring);

/// Formal partial derivative of e by the named variable.  Inverse-pair
/// partners differentiate through d(v_inv) = -v_inv^2 dv; any other variable
/// entangled in a relation is rejected.
RingElement derive_poly(const RingElement& e, const std::string& var);

/// Algebra morphism given by generator images; `checked` verifies that every
/// domain relation maps to zero in the codomain.
class AlgebraMap {
 public:
  AlgebraMap() = default;
  static AlgebraMap checked(AlgebraPtr domain, AlgebraPtr codomain,
                            std::vector<RingElement> images, const std::string& what);
  static AlgebraMap unchecked(AlgebraPtr domain, AlgebraPtr codomain,
                              std::vector<RingElement> images);
  static AlgebraMap identity(const AlgebraPtr& a);

  const AlgebraPtr& domain() const { return domain_; }
  const AlgebraPtr& codomain() const { return codomain_; }
  const std::vector<RingElement>& images() const { return images_; }
  const RingElement& image(int var) const { return images_[var]; }

  RingElement apply(const RingElement& e) const;
  /// Apply to a raw polynomial representative over the domain variables.
  RingElement apply_raw(const Poly& representative) const;

  bool well_defined(std::string* violated_relation = nullptr) const;

 private:
  AlgebraPtr domain_, codomain_;
  std::vector<RingElement> images_;
  std::vector<Poly> image_polys_;  // cached for substitution
};

/// g after f (apply f first).
AlgebraMap compose(const AlgebraMap& g, const AlgebraMap& f);

/// Q-linear derivation of an algebra with values in itself, by generator
/// images: D(e) = sum_v (de/dv) D(v).
class AlgebraDerivation {
 public:
  AlgebraDerivation() = default;
  static AlgebraDerivation checked(AlgebraPtr ring, std::vector<RingElement> images,
                                   const std::string& what);
  static AlgebraDerivation zero(const AlgebraPtr& ring);

  const AlgebraPtr& ring() const { return ring_; }
  const std::vector<RingElement>& images() const { return images_; }
  RingElement apply(const RingElement& e) const;
  bool well_defined(std::string* violated_relation = nullptr) const;

  AlgebraDerivation operator+(const AlgebraDerivation& o) const;
  AlgebraDerivation scaled(const RingElement& a) const;  // a*D
  /// Commutator [this, o] = this o - o this.
  AlgebraDerivation bracket(const AlgebraDerivation& o) const;
  bool operator==(const AlgebraDerivation& o) const;

 private:
  AlgebraPtr ring_;
  std::vector<RingElement> images_;
};

}  // namespace algd

#endif
