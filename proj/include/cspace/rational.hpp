// Exact rational scalars (GMP-backed) plus small deterministic RNG helpers.
#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace cspace {

using Int = mpz_class;
using Rat = mpq_class;

inline Rat make_rat(long num, long den = 1) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

// Parses "p", "-p", "p/q". Throws std::invalid_argument on malformed input.
Rat parse_rat(const std::string& text);

// "p/q" with "/q" omitted when q == 1.
std::string rat_str(const Rat& r);

inline Int rat_num(const Rat& r) { return r.get_num(); }
inline Int rat_den(const Rat& r) { return r.get_den(); }

inline bool is_zero(const Rat& r) { return sgn(r) == 0; }
inline bool is_one(const Rat& r) { return r == 1; }

Rat rat_pow(const Rat& base, unsigned long exp);

// SplitMix64: deterministic, seed-stable across platforms. Used wherever the
// toolkit needs a "generic" choice (linear forms, Moebius maps, coordinate
// changes); the seed is always recorded in the output that depends on it.
class SplitMix64 {
  public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform in [lo, hi] inclusive.
    long next_long(long lo, long hi) {
        if (lo > hi) throw std::invalid_argument("empty range");
        const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
        return lo + static_cast<long>(next() % span);
    }

    // Nonzero rational with |numerator| <= max_num and denominator <= max_den.
    Rat next_rat(long max_num = 12, long max_den = 12) {
        while (true) {
            long n = next_long(-max_num, max_num);
            if (n == 0) continue;
            long d = next_long(1, max_den);
            return make_rat(n, d);
        }
    }

  private:
    std::uint64_t state_;
};

}  // namespace cspace
