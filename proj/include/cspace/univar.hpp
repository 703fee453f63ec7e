// Dense univariate polynomials over Q: gcd, squarefree decomposition, Sturm
// root counting, and complete factorization into irreducibles (rational root
// extraction plus Berlekamp mod p with Hensel lifting and Zassenhaus subset
// recombination; intended for the small degrees arising at desk scale).
#pragma once

#include <utility>
#include <vector>

#include "cspace/poly.hpp"

namespace cspace {

struct UPoly {
    std::vector<Rat> c;  // c[i] * x^i, trailing zeros stripped

    UPoly() = default;
    explicit UPoly(std::vector<Rat> coeffs) : c(std::move(coeffs)) { normalize(); }

    void normalize() {
        while (!c.empty() && sgn(c.back()) == 0) c.pop_back();
    }
    bool is_zero() const { return c.empty(); }
    int degree() const { return static_cast<int>(c.size()) - 1; }  // -1 for zero
    const Rat& lc() const { return c.back(); }

    bool operator==(const UPoly& o) const { return c == o.c; }
};

UPoly u_add(const UPoly& a, const UPoly& b);
UPoly u_sub(const UPoly& a, const UPoly& b);
UPoly u_mul(const UPoly& a, const UPoly& b);
UPoly u_scale(const UPoly& a, const Rat& s);
std::pair<UPoly, UPoly> u_divmod(const UPoly& a, const UPoly& b);  // quotient, remainder
UPoly u_derivative(const UPoly& a);
Rat u_eval(const UPoly& a, const Rat& x);
UPoly u_monic(const UPoly& a);
UPoly u_gcd(const UPoly& a, const UPoly& b);  // monic gcd
UPoly u_primitive(const UPoly& a);            // integer-primitive, positive leading coeff

// Distinct-root ("squarefree") part, monic.
UPoly u_squarefree_part(const UPoly& a);

// Yun-style squarefree decomposition: list of (factor, multiplicity) with
// factors squarefree, pairwise coprime, product^mult == a up to a constant.
std::vector<std::pair<UPoly, int>> u_squarefree_decomposition(const UPoly& a);

// Number of distinct real roots (Sturm; input need not be squarefree).
int u_count_real_roots(const UPoly& a);
// ... in the half-open interval (lo, hi].
int u_count_real_roots_in(const UPoly& a, const Rat& lo, const Rat& hi);

// All rational roots (each listed once).
std::vector<Rat> u_rational_roots(const UPoly& a);

// Full factorization over Q: constant * prod factor^mult, factors
// integer-primitive irreducible with positive leading coefficient.
struct UFactorization {
    Rat constant;
    std::vector<std::pair<UPoly, int>> factors;
};
UFactorization u_factor(const UPoly& a);

bool u_is_irreducible(const UPoly& a);

// Bridges to the multivariate world. from: p must use only variable `var`.
UPoly upoly_from(const Polynomial& p, int var);
Polynomial upoly_to(const RingPtr& ring, int var, const UPoly& u);

}  // namespace cspace
