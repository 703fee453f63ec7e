// Zero-dimensional ideal tools: quotient-ring staircase, minimal polynomials
// of ring elements by linear algebra, Seidenberg radical, and complete
// primary splitting via eliminant / primitive-element factorization.
#pragma once

#include <cstdint>

#include "cspace/groebner.hpp"
#include "cspace/univar.hpp"

namespace cspace {

struct not_zero_dimensional : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct QuotientBasis {
    GroebnerBasis gb;
    std::vector<Monomial> monos;  // standard monomials, deterministic order
};

// Throws not_zero_dimensional when the staircase is infinite.
QuotientBasis quotient_basis(const Ideal& I, Budget budget);

inline int vector_space_dimension(const QuotientBasis& qb) {
    return static_cast<int>(qb.monos.size());
}

// Minimal polynomial of (f mod I): least-degree monic m with m(f) in I.
UPoly minpoly_element(const QuotientBasis& qb, const Polynomial& f, Budget budget);

// Radical of a zero-dimensional ideal: I plus the squarefree parts of the
// minimal polynomials of all variables.
Ideal zero_dim_radical(const Ideal& I, Budget budget);

// Complete primary decomposition of a zero-dimensional ideal. Components are
// certified primary (their radicals are maximal). Deterministic given seed.
struct ZeroDimComponent {
    Ideal primary;
    Ideal radical;
    bool is_prime;  // primary == radical
    int point_count;        // distinct points over the algebraic closure
    int real_point_count;   // distinct real points
};
std::vector<ZeroDimComponent> zero_dim_decompose(const Ideal& I, std::uint64_t seed,
                                                 Budget budget);

// Rational coordinates of the single point of a maximal ideal, when all of
// its coordinates are rational; empty optional otherwise.
std::optional<std::vector<Rat>> rational_point_of_maximal(const Ideal& maximal, Budget budget);

}  // namespace cspace
