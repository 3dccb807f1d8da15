#ifndef ALGEBROID_RATIONAL_HPP
#define ALGEBROID_RATIONAL_HPP

#include <gmpxx.h>
#include <string>

namespace algd {

/// Exact rational scalar; GMP keeps the fraction reduced with positive denominator.
using Rational = mpq_class;

inline std::string to_string(const Rational& q) { return q.get_str(); }

inline Rational rational_of(long num, long den = 1) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

}  // namespace algd

#endif
