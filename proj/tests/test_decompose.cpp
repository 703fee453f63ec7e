#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cspace/decompose.hpp"
#include "cspace/zerodim.hpp"

using namespace cspace;

namespace {

RingPtr xy() { return make_ring({"x", "y"}); }

Ideal ideal_of(const RingPtr& r, std::initializer_list<std::string> gens) {
    std::vector<Polynomial> v;
    for (const auto& s : gens) v.push_back(parse_poly(r, s));
    return Ideal(r, std::move(v));
}

Budget big() { return Budget(200'000'000); }

}  // namespace

TEST_CASE("radical of principal and toy ideals") {
    auto r = xy();
    CHECK(ideal_equal(radical(ideal_of(r, {"x^2"}), big()), ideal_of(r, {"x"}), big()));
    CHECK(ideal_equal(radical(ideal_of(r, {"x^2", "x*y"}), big()), ideal_of(r, {"x"}), big()));
    CHECK(ideal_equal(radical(ideal_of(r, {"x", "y"}), big()), ideal_of(r, {"x", "y"}), big()));
    // dim-1 with multiplicity: (x-y)^2
    CHECK(ideal_equal(radical(ideal_of(r, {"(x - y)^2"}), big()), ideal_of(r, {"x - y"}), big()));
    // mixed: x^2 y
    CHECK(ideal_equal(radical(ideal_of(r, {"x^2*y"}), big()), ideal_of(r, {"x*y"}), big()));
}

TEST_CASE("radical invariants") {
    auto r = xy();
    for (auto gens : {std::vector<std::string>{"x^2", "x*y"}, {"x^3 - x^2"}, {"x^2 + y^2"},
                      {"x^2 - y^3"}}) {
        std::vector<Polynomial> v;
        for (auto& s : gens) v.push_back(parse_poly(r, s));
        Ideal I(r, v);
        Ideal R = radical(I, big());
        CHECK(ideal_contains(R, I, big()));                       // sqrt(I) contains I
        CHECK(ideal_equal(radical(R, big()), R, big()));          // idempotent
        CHECK(is_radical(R, big()));
        for (const auto& g : R.gens) CHECK(radical_membership(g, I, big()));
    }
}

TEST_CASE("is_radical basics") {
    auto r = xy();
    CHECK_FALSE(is_radical(ideal_of(r, {"x^2"}), big()));
    CHECK(is_radical(ideal_of(r, {"x"}), big()));
    CHECK(is_radical(ideal_of(r, {"x*y"}), big()));
    CHECK_THROWS_AS(is_radical(ideal_of(r, {"1"}), big()), std::invalid_argument);
}

TEST_CASE("primary decomposition of the toy ledger ideal <x^2, xy>") {
    auto r = xy();
    Ideal I = ideal_of(r, {"x^2", "x*y"});
    Decomposition d = primary_decomposition(I, 0, big());
    REQUIRE(d.components.size() == 2);

    // sorted: dim 1 first
    const auto& curve = d.components[0];
    const auto& fat = d.components[1];
    CHECK(curve.dim == 1);
    CHECK(curve.is_prime);
    CHECK(ideal_equal(curve.primary, ideal_of(r, {"x"}), big()));
    CHECK(fat.dim == 0);
    CHECK(!fat.is_prime);
    CHECK(fat.prime_certified);
    CHECK(ideal_equal(fat.primary, ideal_of(r, {"x^2", "y"}), big()));
    CHECK(ideal_equal(fat.associated_prime, ideal_of(r, {"x", "y"}), big()));

    // the embedded component is reported: sqrt(P_fat) contains P_curve
    auto inc = component_inclusions(d, big());
    REQUIRE(inc.size() == 1);
    CHECK(inc[0].first == 1);
    CHECK(inc[0].second == 0);
}

TEST_CASE("primary decomposition of <xy>") {
    auto r = xy();
    Decomposition d = primary_decomposition(ideal_of(r, {"x*y"}), 0, big());
    REQUIRE(d.components.size() == 2);
    for (const auto& c : d.components) {
        CHECK(c.dim == 1);
        CHECK(c.is_prime);
    }
    CHECK(component_inclusions(d, big()).empty());
}

TEST_CASE("decomposition intersection reproduces the input (validated internally too)") {
    auto r = xy();
    for (auto gens : {std::vector<std::string>{"x^2", "x*y"}, {"x*y"},
                      {"x^2 - 1", "y^2 - 1"}, {"x^2*y"}}) {
        std::vector<Polynomial> v;
        for (auto& s : gens) v.push_back(parse_poly(r, s));
        Ideal I(r, v);
        Decomposition d = primary_decomposition(I, 0, big());
        std::optional<Ideal> meet;
        for (const auto& c : d.components)
            meet = meet ? ideal_intersect(*meet, c.primary, big()) : c.primary;
        REQUIRE(meet.has_value());
        CHECK(ideal_equal(*meet, I, big()));
        // associated primes pairwise distinct
        for (std::size_t i = 0; i < d.components.size(); ++i)
            for (std::size_t j = i + 1; j < d.components.size(); ++j)
                CHECK(!ideal_equal(d.components[i].associated_prime,
                                   d.components[j].associated_prime, big()));
        // dropping any component changes the intersection
        if (d.components.size() > 1) {
            for (std::size_t skip = 0; skip < d.components.size(); ++skip) {
                std::optional<Ideal> partial;
                for (std::size_t i = 0; i < d.components.size(); ++i) {
                    if (i == skip) continue;
                    partial = partial ? ideal_intersect(*partial, d.components[i].primary, big())
                                      : d.components[i].primary;
                }
                CHECK(!ideal_equal(*partial, I, big()));
            }
        }
    }
}

TEST_CASE("radical consistency with decomposition") {
    auto r = xy();
    Ideal I = ideal_of(r, {"x^2", "x*y"});
    Decomposition d = primary_decomposition(I, 0, big());
    std::optional<Ideal> meet;
    for (const auto& c : d.components)
        meet = meet ? ideal_intersect(*meet, c.associated_prime, big()) : c.associated_prime;
    CHECK(ideal_equal(*meet, radical(I, big()), big()));
}
