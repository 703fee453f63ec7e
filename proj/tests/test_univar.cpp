#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cspace/univar.hpp"

using namespace cspace;

namespace {

UPoly up(std::initializer_list<long> coeffs) {
    std::vector<Rat> c;
    for (long x : coeffs) c.emplace_back(x);
    return UPoly(std::move(c));
}

// brute-force oracle for real-root counting on polynomials of degree <= 4:
// factor completely, count distinct real roots of each irreducible factor by
// degree/discriminant analysis
int oracle_real_roots(const UPoly& f) {
    int count = 0;
    for (const auto& [q, mult] : u_factor(f).factors) {
        if (q.degree() == 1) {
            count += 1;
        } else if (q.degree() == 2) {
            Rat a = q.c[2], b = q.c[1], c = q.c[0];
            Rat disc = b * b - 4 * a * c;
            if (sgn(disc) > 0) count += 2;
            if (sgn(disc) == 0) count += 1;  // cannot happen for irreducible
        } else if (q.degree() == 3) {
            // an irreducible cubic over Q has either 1 or 3 real roots;
            // discriminant > 0 -> 3 distinct real roots
            Rat a = q.c[3], b = q.c[2], c = q.c[1], d = q.c[0];
            Rat disc = 18 * a * b * c * d - 4 * b * b * b * d + b * b * c * c -
                       4 * a * c * c * c - 27 * a * a * d * d;
            count += sgn(disc) > 0 ? 3 : 1;
        } else if (q.degree() == 4) {
            // quartic: count sign changes of the derivative sequence values at
            // critical rationals is messy; use interval bisection with the
            // bound 1 + max|c_i/lead| and exact sign evaluation
            Rat bound(1);
            for (int i = 0; i < 4; ++i) {
                Rat r = abs(q.c[static_cast<std::size_t>(i)] / q.c[4]);
                if (r > bound) bound = r;
            }
            bound += 1;
            // count roots by sampling signs on a fine grid plus endpoint logic;
            // grid of 4096 cells is enough for coefficient range used below
            int changes = 0;
            Rat step = (bound * 2) / 4096;
            Rat x = -bound;
            int prev = sgn(u_eval(q, x));
            for (int i = 1; i <= 4096; ++i) {
                x += step;
                int s = sgn(u_eval(q, x));
                if (s == 0) {
                    // exact rational root of an irreducible quartic: impossible
                    continue;
                }
                if (prev != 0 && s != prev) ++changes;
                prev = s;
            }
            count += changes;
        }
    }
    return count;
}

}  // namespace

TEST_CASE("division and gcd") {
    UPoly f = up({-1, 0, 1});  // x^2 - 1
    UPoly g = up({-1, 1});     // x - 1
    auto [q, r] = u_divmod(f, g);
    CHECK(r.is_zero());
    CHECK(q == up({1, 1}));
    CHECK(u_gcd(f, g) == u_monic(g));
    CHECK(u_gcd(up({1, 0, 1}), up({-1, 1})).degree() == 0);
}

TEST_CASE("squarefree decomposition") {
    // (x-1)^2 (x+2)
    UPoly f = u_mul(u_mul(up({-1, 1}), up({-1, 1})), up({2, 1}));
    auto dec = u_squarefree_decomposition(f);
    REQUIRE(dec.size() == 2);
    CHECK(dec[0].first == u_monic(up({2, 1})));
    CHECK(dec[0].second == 1);
    CHECK(dec[1].first == u_monic(up({-1, 1})));
    CHECK(dec[1].second == 2);
    CHECK(u_squarefree_part(f).degree() == 2);
}

TEST_CASE("sturm counting basics") {
    CHECK(u_count_real_roots(up({-1, 0, 1})) == 2);   // x^2-1
    CHECK(u_count_real_roots(up({1, 0, 1})) == 0);    // x^2+1
    CHECK(u_count_real_roots(up({0, 0, 1})) == 1);    // x^2 (distinct roots)
    CHECK(u_count_real_roots(up({0, -1, 0, 1})) == 3);  // x^3 - x
    CHECK(u_count_real_roots_in(up({0, -1, 0, 1}), Rat(0), Rat(2)) == 1);  // (0,2]: root 1
}

TEST_CASE("rational roots and factorization") {
    // 6x^3 + 5x^2 - 3x - 2 = (x+1)(2x-1)(3x+2)... check: roots -1, 1/2, -2/3
    UPoly f = u_mul(u_mul(up({1, 1}), up({-1, 2})), up({2, 3}));
    auto roots = u_rational_roots(f);
    REQUIRE(roots.size() == 3);
    CHECK(roots[0] == Rat(-1));
    CHECK(roots[1] == Rat(-2, 3));
    CHECK(roots[2] == Rat(1, 2));

    auto fac = u_factor(f);
    CHECK(fac.factors.size() == 3);

    // irreducible quadratic and quartic
    CHECK(u_is_irreducible(up({1, 1, 1})));        // x^2+x+1
    CHECK(u_is_irreducible(up({2, 0, 0, 0, 1})));  // x^4+2 (Eisenstein at 2)
    CHECK(!u_is_irreducible(up({-4, 0, 1})));      // x^2-4

    // x^4 - 10x^2 + 1 = minimal polynomial of sqrt(2)+sqrt(3): irreducible
    CHECK(u_is_irreducible(up({1, 0, -10, 0, 1})));
    // x^4 + 4 = (x^2-2x+2)(x^2+2x+2): no rational roots but reducible
    auto f44 = u_factor(up({4, 0, 0, 0, 1}));
    REQUIRE(f44.factors.size() == 2);
    CHECK(f44.factors[0].first.degree() == 2);
    CHECK(f44.factors[1].first.degree() == 2);
}

TEST_CASE("factorization reassembles the input") {
    SplitMix64 rng(2024);
    for (int iter = 0; iter < 60; ++iter) {
        std::vector<Rat> c;
        int deg = static_cast<int>(rng.next_long(1, 6));
        for (int i = 0; i <= deg; ++i) c.emplace_back(rng.next_long(-8, 8));
        UPoly f(std::move(c));
        if (f.degree() < 1) continue;
        auto fac = u_factor(f);
        UPoly prod({fac.constant});
        for (const auto& [q, m] : fac.factors)
            for (int i = 0; i < m; ++i) prod = u_mul(prod, q);
        CHECK(prod == f);
        for (const auto& [q, m] : fac.factors) CHECK(u_is_irreducible(q));
    }
}

TEST_CASE("sturm counts match the degree<=4 factorization oracle on 100 random polynomials") {
    SplitMix64 rng(77);
    int tested = 0;
    while (tested < 100) {
        std::vector<Rat> c;
        int deg = static_cast<int>(rng.next_long(1, 4));
        for (int i = 0; i <= deg; ++i) c.emplace_back(rng.next_long(-6, 6));
        UPoly f(std::move(c));
        if (f.degree() < 1) continue;
        ++tested;
        CHECK(u_count_real_roots(f) == oracle_real_roots(f));
    }
}

TEST_CASE("upoly bridges") {
    auto ring = make_ring({"x", "y"});
    auto p = parse_poly(ring, "x^2 - 3*x + 2");
    UPoly u = upoly_from(p, 0);
    CHECK(u.degree() == 2);
    CHECK(upoly_to(ring, 0, u) == p);
    CHECK_THROWS_AS(upoly_from(parse_poly(ring, "x*y"), 0), std::invalid_argument);
}
