#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cspace/zerodim.hpp"

using namespace cspace;

namespace {

RingPtr xy() { return make_ring({"x", "y"}); }

Ideal ideal_of(const RingPtr& r, std::initializer_list<std::string> gens) {
    std::vector<Polynomial> v;
    for (const auto& s : gens) v.push_back(parse_poly(r, s));
    return Ideal(r, std::move(v));
}

Budget big() { return Budget(100'000'000); }

}  // namespace

TEST_CASE("quotient basis and vector space dimension") {
    auto r = xy();
    auto qb = quotient_basis(ideal_of(r, {"x^2", "y"}), big());
    CHECK(vector_space_dimension(qb) == 2);  // 1, x
    auto qb2 = quotient_basis(ideal_of(r, {"x^2 + 1", "y^3 - y"}), big());
    CHECK(vector_space_dimension(qb2) == 6);
    CHECK_THROWS_AS(quotient_basis(ideal_of(r, {"x"}), big()), not_zero_dimensional);
}

TEST_CASE("minimal polynomials of elements") {
    auto r = xy();
    auto qb = quotient_basis(ideal_of(r, {"x^2 - 2", "y - 1"}), big());
    UPoly mx = minpoly_element(qb, Polynomial::variable(r, 0), big());
    CHECK(mx.degree() == 2);
    CHECK(mx.c[0] == Rat(-2));
    CHECK(is_zero(mx.c[1]));
    UPoly my = minpoly_element(qb, Polynomial::variable(r, 1), big());
    CHECK(my.degree() == 1);
}

TEST_CASE("zero dimensional radical") {
    auto r = xy();
    Ideal I = ideal_of(r, {"x^2", "y^2"});
    Ideal R = zero_dim_radical(I, big());
    CHECK(ideal_equal(R, ideal_of(r, {"x", "y"}), big()));
    // already radical stays put
    Ideal J = ideal_of(r, {"x^2 - 1", "y"});
    CHECK(ideal_equal(zero_dim_radical(J, big()), J, big()));
}

TEST_CASE("zero dimensional decomposition splits rational points") {
    auto r = xy();
    Ideal I = ideal_of(r, {"x^2 - 4*x + 3", "y - 2"});  // points (1,2), (3,2)
    auto comps = zero_dim_decompose(I, 0, big());
    REQUIRE(comps.size() == 2);
    for (const auto& c : comps) {
        CHECK(c.is_prime);
        CHECK(c.point_count == 1);
        CHECK(c.real_point_count == 1);
        auto pt = rational_point_of_maximal(c.radical, big());
        REQUIRE(pt.has_value());
        CHECK((*pt)[1] == Rat(2));
    }
}

TEST_CASE("galois orbits are kept whole and counted correctly") {
    auto r = xy();
    // x^2 = 2, y = x: one orbit of two points, both real
    Ideal I = ideal_of(r, {"x^2 - 2", "y - x"});
    auto comps = zero_dim_decompose(I, 0, big());
    REQUIRE(comps.size() == 1);
    CHECK(comps[0].is_prime);
    CHECK(comps[0].point_count == 2);
    CHECK(comps[0].real_point_count == 2);
    CHECK(!rational_point_of_maximal(comps[0].radical, big()).has_value());

    // x^2 = 2, y^2 = 2: FOUR points in TWO orbits (y = x and y = -x)
    Ideal J = ideal_of(r, {"x^2 - 2", "y^2 - 2"});
    auto comps2 = zero_dim_decompose(J, 0, big());
    CHECK(comps2.size() == 2);

    // complex pair: x^2 + 1, y: one orbit, no real points
    Ideal K = ideal_of(r, {"x^2 + 1", "y"});
    auto comps3 = zero_dim_decompose(K, 0, big());
    REQUIRE(comps3.size() == 1);
    CHECK(comps3[0].point_count == 2);
    CHECK(comps3[0].real_point_count == 0);
}

TEST_CASE("primary non-prime components are certified") {
    auto r = xy();
    Ideal I = ideal_of(r, {"x^2", "y"});
    auto comps = zero_dim_decompose(I, 0, big());
    REQUIRE(comps.size() == 1);
    CHECK(!comps[0].is_prime);
    CHECK(ideal_equal(comps[0].radical, ideal_of(r, {"x", "y"}), big()));
    CHECK(ideal_equal(comps[0].primary, I, big()));
}

TEST_CASE("mixed fat and reduced points reassemble the ideal") {
    auto r = xy();
    // <x^2, xy> + <(x-1)> style: V = {x=0 fat at origin?} use a crafted one:
    // I = <x^2 (x-1), x^2 y, y^2 (x-1), ...> keep simple: product ideal
    Ideal A = ideal_of(r, {"x^2", "y"});        // fat point at origin
    Ideal B = ideal_of(r, {"x - 1", "y - 1"});  // reduced point (1,1)
    Ideal I = ideal_intersect(A, B, big());
    auto comps = zero_dim_decompose(I, 0, big());
    REQUIRE(comps.size() == 2);
    std::optional<Ideal> meet;
    int fat = 0;
    for (const auto& c : comps) {
        if (!c.is_prime) ++fat;
        meet = meet ? ideal_intersect(*meet, c.primary, big()) : c.primary;
    }
    CHECK(fat == 1);
    CHECK(ideal_equal(*meet, I, big()));
}
