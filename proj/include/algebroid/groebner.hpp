#ifndef ALGEBROID_GROEBNER_HPP
#define ALGEBROID_GROEBNER_HPP

#include <vector>

#include "algebroid/poly.hpp"

namespace algd {

/// Remainder of p under multivariate division by basis (degrevlex).
Poly reduce(const Poly& p, const std::vector<Poly>& basis);

Poly s_polynomial(const Poly& f, const Poly& g);

/// Reduced Groebner basis via Buchberger with the product and chain
/// criteria; generators equal to zero are dropped, output is monic and
/// inter-reduced.
std::vector<Poly> groebner_basis(std::vector<Poly> gens);

/// Criteria-free saturation of S-polynomials; not inter-reduced.  Kept as an
/// independent ideal-membership oracle for the test suites.
std::vector<Poly> naive_spoly_saturation(std::vector<Poly> gens,
                                         int max_basis = 256);

bool in_ideal(const Poly& p, const std::vector<Poly>& groebner);

}  // namespace algd

#endif
