#ifndef ALGEBROID_POLY_HPP
#define ALGEBROID_POLY_HPP

#include <map>
#include <string>
#include <vector>

#include "algebroid/rational.hpp"

namespace algd {

/// Exponent vector; entry k is the exponent of variable k in the owning ring.
using Monomial = std::vector<unsigned>;

unsigned total_degree(const Monomial& m);

/// Degree-reverse-lexicographic order with variable 0 largest.
/// a < b iff deg a < deg b, or degrees agree and the last index where they
/// differ has a larger exponent in a.
bool degrevlex_less(const Monomial& a, const Monomial& b);

struct DegRevLexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const {
    return degrevlex_less(b, a);
  }
};

bool monomial_divides(const Monomial& d, const Monomial& m);
Monomial monomial_quotient(const Monomial& m, const Monomial& d);
Monomial monomial_lcm(const Monomial& a, const Monomial& b);
bool monomial_coprime(const Monomial& a, const Monomial& b);

/// Sparse multivariate polynomial over Q.  Terms are kept with the leading
/// monomial first; zero coefficients are never stored.  The number of
/// variables is fixed by the caller and shared by all monomial keys.
class Poly {
 public:
  using Terms = std::map<Monomial, Rational, DegRevLexGreater>;

  Poly() = default;
  static Poly zero(int nvars);
  static Poly constant(int nvars, const Rational& c);
  static Poly variable(int nvars, int index, unsigned power = 1);
  static Poly monomial(Monomial m, const Rational& c);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Rational constant_value() const;  // requires is_constant
  int nvars() const;                // -1 when zero (no terms)

  const Terms& terms() const { return terms_; }
  const Monomial& leading_monomial() const;
  const Rational& leading_coefficient() const;
  unsigned degree() const;  // total degree; 0 for the zero polynomial

  void add_term(const Monomial& m, const Rational& c);

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator-() const;
  Poly operator*(const Poly& o) const;
  Poly scaled(const Rational& c) const;
  Poly times_monomial(const Monomial& m, const Rational& c) const;
  Poly pow(unsigned e, int nvars) const;

  bool operator==(const Poly& o) const { return terms_ == o.terms_; }
  bool operator!=(const Poly& o) const { return !(*this == o); }
  bool operator<(const Poly& o) const { return terms_ < o.terms_; }

  /// Formal partial derivative with respect to variable index.
  Poly derivative(int var) const;

  /// Substitute images[k] for variable k; images live in a ring with
  /// image_nvars variables.
  Poly substitute(const std::vector<Poly>& images, int image_nvars) const;

  /// Re-index variables: new monomials place old variable k at var_map[k]
  /// inside a ring with new_nvars variables.
  Poly map_vars(const std::vector<int>& var_map, int new_nvars) const;

  /// Variables that actually occur.
  std::vector<int> support(int nvars) const;

 private:
  Terms terms_;
};

/// Render with the given variable names; inverse operation of the expression
/// parser in algebra.hpp.
std::string poly_to_string(const Poly& p, const std::vector<std::string>& vars);

}  // namespace algd

#endif
