// Multivariate gcd over Q (primitive PRS with recursive contents) and the
// light factorization helpers built on it.
#pragma once

#include "cspace/poly.hpp"

namespace cspace {

// gcd up to a rational unit; result is integer-primitive with positive
// structural leading coefficient. gcd(0,0) == 0.
Polynomial poly_gcd(const Polynomial& a, const Polynomial& b);

// p viewed in (Q[others])[var]: content (gcd of coefficients) and primitive part.
Polynomial mv_content_in(const Polynomial& p, int var);
Polynomial mv_primitive_in(const Polynomial& p, int var);

// Pseudo-division in `var`: lc_var(b)^(deg a - deg b + 1) * a == q*b + r with
// deg_var(r) < deg_var(b).
std::pair<Polynomial, Polynomial> pseudo_divmod(const Polynomial& a, const Polynomial& b, int var);

// Squarefree part of p as a polynomial in `var` over the fraction field of
// the remaining variables (primitive in var).
Polynomial mv_squarefree_in(const Polynomial& p, int var);

// Proper factor discovery for splitting purposes (not a full factorization):
// monomial parts, univariate factors, per-variable contents, two-term
// difference-of-squares patterns. Returned factors are nonconstant, proper
// divisors or equal-support irreducibles of p, integer-primitive.
std::vector<Polynomial> candidate_factors(const Polynomial& p);

}  // namespace cspace
