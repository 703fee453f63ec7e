// Radicality testing and irredundant primary decomposition at desk scale.
//
// The radical is computed by independent-set reduction (Krick-Logar): a
// maximal independent set U makes I zero-dimensional over Q(U); squarefree
// eliminants of the dependent variables plus contraction recover the radical
// of the saturated part, and recursion on I + <h> (h the contraction
// denominator) covers the components that meet V(h).
//
// Decomposition is a splitting worklist: factor splits, singular-locus
// splits, and complete zero-dimensional decomposition, glued by the exact
// splitting lemma I = (I : f^inf) ∩ (I + <f^m>) at the stabilizing exponent.
#pragma once

#include <cstdint>
#include <optional>

#include "cspace/groebner.hpp"

namespace cspace {

struct decompose_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Ideal radical(const Ideal& I, Budget budget);

bool is_radical(const Ideal& I, Budget budget);

struct PrimaryComponent {
    Ideal primary;
    Ideal associated_prime;  // radical of `primary`
    int dim = 0;
    bool is_prime = false;        // primary == associated_prime as ideals
    bool prime_certified = false; // primality proven (zero-dimensional or principal case)
};

struct Decomposition {
    Ideal input;
    std::vector<PrimaryComponent> components;
    std::uint64_t seed = 0;
};

// Irredundant primary decomposition. Throws decompose_error when the
// splitting strategies stall ("not decomposable at desk scale").
Decomposition primary_decomposition(const Ideal& I, std::uint64_t seed, Budget budget);

// Pairs (i, j), i != j, with associated_prime(i) ⊇ associated_prime(j):
// component i's variety sits inside component j's variety (i is embedded).
std::vector<std::pair<std::size_t, std::size_t>> component_inclusions(const Decomposition& d,
                                                                      Budget budget);

}  // namespace cspace
