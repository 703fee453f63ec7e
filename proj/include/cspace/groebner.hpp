// Buchberger engine over Q plus the ideal calculus built on it: elimination,
// saturation (Rabinowitsch), membership, radical membership, sum /
// intersection / quotient, equality, and Krull dimension.
//
// Determinism contract: reduction tries divisors in list order; pair
// selection uses the normal strategy with index tie-breaks; reduced bases are
// monic and sorted by leading monomial, so equal ideals produce identical
// bases under the same order.
#pragma once

#include <utility>
#include <vector>

#include "cspace/budget.hpp"
#include "cspace/poly.hpp"

namespace cspace {

struct Ideal {
    RingPtr ring;
    std::vector<Polynomial> gens;

    Ideal() = default;
    Ideal(RingPtr r, std::vector<Polynomial> g);

    bool is_zero_ideal() const { return gens.empty(); }
};

Ideal make_ideal(const RingPtr& ring, const std::vector<Polynomial>& gens);

struct GroebnerBasis {
    RingPtr ring;
    MonomialOrder order;
    std::vector<Polynomial> elems;  // reduced: monic, mutually irreducible, sorted by lm
    bool reduced = false;

    bool contains_one() const;
};

// Reduced Groebner basis of <I> under `ord`.
GroebnerBasis buchberger(const Ideal& I, const MonomialOrder& ord, Budget budget);

// Normal form of f against the (not necessarily Groebner) list G, divisors
// tried in list order. Also returns the quotients: f == sum q_i g_i + r.
std::pair<Polynomial, std::vector<Polynomial>> reduce(const Polynomial& f,
                                                      const std::vector<Polynomial>& G,
                                                      const MonomialOrder& ord, Budget budget);

Polynomial normal_form(const Polynomial& f, const GroebnerBasis& gb, Budget budget);

bool ideal_membership(const Polynomial& f, const Ideal& I, Budget budget);

// f in sqrt(I), via 1 in I + <1 - y f> in an extended ring.
bool radical_membership(const Polynomial& f, const Ideal& I, Budget budget);

// Exact division: returns q with f == q * g, throws std::domain_error if g
// does not divide f.
Polynomial exact_divide(const Polynomial& f, const Polynomial& g);

// I ∩ Q[ring minus front_vars]; the result lives in the shrunken ring.
Ideal eliminate(const Ideal& I, const std::vector<int>& front_vars, Budget budget);

// I : f^inf  via eliminate(I + <f*u - 1>, {u}).
Ideal saturate(const Ideal& I, const Polynomial& f, Budget budget);

// Smallest m with I : f^m == I : f^inf (0 when f is already a nonzerodivisor).
int saturation_exponent(const Ideal& I, const Polynomial& f, const Ideal& saturation, Budget budget);

Ideal ideal_sum(const Ideal& A, const Ideal& B);
Ideal ideal_intersect(const Ideal& A, const Ideal& B, Budget budget);
Ideal ideal_quotient(const Ideal& A, const Ideal& B, Budget budget);  // A : B

bool ideal_equal(const Ideal& A, const Ideal& B, Budget budget);
bool ideal_contains(const Ideal& A, const Ideal& B, Budget budget);  // A ⊇ B

bool is_unit_ideal(const Ideal& I, Budget budget);

// Krull dimension of V(I) over the algebraic closure; -1 for the unit ideal;
// #vars for the zero ideal.
int dimension(const Ideal& I, Budget budget);

// A maximal subset of variables independent modulo the leading-term ideal
// (its size equals the dimension). Deterministic: lexicographically first
// among maximum-cardinality sets.
std::vector<int> max_independent_set(const Ideal& I, Budget budget);

// Canonical generators: reduced degrevlex basis rescaled to primitive integer
// form (positive leading coefficient) — the printable form of an ideal.
std::vector<Polynomial> canonical_generators(const Ideal& I, Budget budget);

// A (greedily) irredundant generating subset: drops generators lying in the
// ideal of the remaining ones. Keeps Jacobian minor counts small.
Ideal slim_generators(const Ideal& I, Budget budget);

}  // namespace cspace
