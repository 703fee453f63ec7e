// Exact multivariate polynomials over Q with deterministic canonical form.
//
// Terms are stored sorted (descending structural exponent order) with no zero
// coefficients; two polynomials over equal rings compare equal iff their term
// maps coincide. Values are immutable after construction and safe to share
// between threads; all operations are pure.
#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "cspace/monomial.hpp"
#include "cspace/order.hpp"
#include "cspace/rational.hpp"
#include "cspace/ring.hpp"

namespace cspace {

struct ring_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct Term {
    Monomial mono;
    Rat coef;
};

class Polynomial {
  public:
    Polynomial() = default;
    explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}

    static Polynomial zero(const RingPtr& ring) { return Polynomial(ring); }
    static Polynomial constant(const RingPtr& ring, const Rat& c);
    static Polynomial variable(const RingPtr& ring, int var);
    static Polynomial monomial(const RingPtr& ring, Monomial m, const Rat& c);

    const RingPtr& ring() const { return ring_; }
    const std::vector<Term>& terms() const { return terms_; }
    std::size_t nterms() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }
    Rat constant_value() const;  // requires is_constant()

    std::int32_t total_degree() const;
    std::int32_t degree_in(int var) const;
    bool uses_var(int var) const;

    Polynomial operator-() const;
    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial scaled(const Rat& c) const;
    Polynomial mul_term(const Monomial& m, const Rat& c) const;
    Polynomial pow(unsigned e) const;

    bool operator==(const Polynomial& o) const;
    bool operator!=(const Polynomial& o) const { return !(*this == o); }
    // deterministic structural order (for canonical sorting of generator lists)
    bool operator<(const Polynomial& o) const;

    Polynomial derivative(int var) const;

    // Full evaluation; point has one entry per ring variable.
    Rat eval(const std::vector<Rat>& point) const;

    // Substitute rationals for a subset of variables (others untouched).
    Polynomial substitute(const std::vector<std::pair<int, Rat>>& assignments) const;

    // Leading term w.r.t. a monomial order (poly must be nonzero).
    const Term& leading_term(const MonomialOrder& ord) const;

    // Integer content of the coefficient list times sign of the structural
    // leading coefficient; primitive_part() == *this / content_signed().
    Rat content_signed() const;
    Polynomial primitive_part() const;

    // Canonical text, terms descending in `ord`.
    std::string str(const MonomialOrder& ord = MonomialOrder::degrevlex()) const;

    // Move this polynomial into a ring that contains all variables it uses
    // (matched by name). Works in both directions (extension or restriction).
    Polynomial map_to(const RingPtr& target) const;

    // Construction from raw term map (normalizes).
    static Polynomial from_terms(const RingPtr& ring, std::map<Monomial, Rat> acc);

  private:
    RingPtr ring_;
    std::vector<Term> terms_;
};

void check_same_ring(const Polynomial& a, const Polynomial& b);

// Parses the canonical grammar: signed terms, coefficients "p/q", variables
// by ring name, explicit '*' and '^'. Example: "4*t3 + t5 - 1/2".
Polynomial parse_poly(const RingPtr& ring, const std::string& text);

}  // namespace cspace
