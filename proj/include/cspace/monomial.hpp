// Monomials as fixed-capacity exponent vectors with a cached total degree.
// Rings are capped at kMaxVars variables (base joint variables plus the
// handful of auxiliary ones the ideal calculus appends).
#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>

namespace cspace {

class Monomial {
  public:
    static constexpr std::size_t kMaxVars = 16;

    Monomial() { exp_.fill(0); }
    explicit Monomial(std::size_t nvars) : n_(static_cast<std::uint16_t>(nvars)) {
        if (nvars > kMaxVars) throw std::length_error("ring exceeds the monomial variable cap");
        exp_.fill(0);
    }

    std::size_t size() const { return n_; }
    std::int32_t operator[](std::size_t i) const { return exp_[i]; }

    void set(std::size_t i, std::int32_t e) {
        if (e < 0 || e > 30000) throw std::overflow_error("monomial exponent out of range");
        deg_ += e - exp_[i];
        exp_[i] = static_cast<std::int16_t>(e);
    }
    void bump(std::size_t i, std::int32_t delta) { set(i, exp_[i] + delta); }

    std::int32_t degree() const { return deg_; }
    bool is_one() const { return deg_ == 0; }

    bool operator==(const Monomial& o) const { return deg_ == o.deg_ && exp_ == o.exp_; }
    bool operator!=(const Monomial& o) const { return !(*this == o); }

    // structural order for canonical term storage (exponent lex)
    bool operator<(const Monomial& o) const { return exp_ < o.exp_; }

  private:
    std::array<std::int16_t, kMaxVars> exp_;
    std::uint16_t n_ = 0;
    std::int32_t deg_ = 0;

    friend Monomial mono_mul(const Monomial&, const Monomial&);
    friend Monomial mono_div(const Monomial&, const Monomial&);
    friend Monomial mono_lcm(const Monomial&, const Monomial&);
    friend Monomial mono_gcd(const Monomial&, const Monomial&);
    friend bool mono_divides(const Monomial&, const Monomial&);
    friend bool mono_coprime(const Monomial&, const Monomial&);
};

inline Monomial mono_mul(const Monomial& a, const Monomial& b) {
    Monomial r = a;
    for (std::size_t i = 0; i < r.n_; ++i)
        r.exp_[i] = static_cast<std::int16_t>(r.exp_[i] + b.exp_[i]);
    r.deg_ += b.deg_;
    return r;
}

inline bool mono_divides(const Monomial& a, const Monomial& b) {
    // a | b
    if (a.deg_ > b.deg_) return false;
    for (std::size_t i = 0; i < a.n_; ++i)
        if (a.exp_[i] > b.exp_[i]) return false;
    return true;
}

inline Monomial mono_div(const Monomial& a, const Monomial& b) {
    Monomial r = a;
    for (std::size_t i = 0; i < r.n_; ++i)
        r.exp_[i] = static_cast<std::int16_t>(r.exp_[i] - b.exp_[i]);
    r.deg_ -= b.deg_;
    return r;
}

inline Monomial mono_lcm(const Monomial& a, const Monomial& b) {
    Monomial r = a;
    for (std::size_t i = 0; i < r.n_; ++i) {
        if (b.exp_[i] > r.exp_[i]) {
            r.deg_ += b.exp_[i] - r.exp_[i];
            r.exp_[i] = b.exp_[i];
        }
    }
    return r;
}

inline Monomial mono_gcd(const Monomial& a, const Monomial& b) {
    Monomial r = a;
    for (std::size_t i = 0; i < r.n_; ++i) {
        if (b.exp_[i] < r.exp_[i]) {
            r.deg_ -= r.exp_[i] - b.exp_[i];
            r.exp_[i] = b.exp_[i];
        }
    }
    return r;
}

inline bool mono_coprime(const Monomial& a, const Monomial& b) {
    for (std::size_t i = 0; i < a.n_; ++i)
        if (a.exp_[i] > 0 && b.exp_[i] > 0) return false;
    return true;
}

}  // namespace cspace
