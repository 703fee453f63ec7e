#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cspace/poly.hpp"

using namespace cspace;

namespace {

RingPtr xy() { return make_ring({"x", "y"}); }

Polynomial P(const RingPtr& r, const std::string& s) { return parse_poly(r, s); }

}  // namespace

TEST_CASE("rational parsing and printing") {
    CHECK(rat_str(parse_rat("4/6")) == "2/3");
    CHECK(rat_str(parse_rat("-8/2")) == "-4");
    CHECK(rat_str(Rat(0)) == "0");
    CHECK_THROWS_AS(parse_rat("1.5"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rat(""), std::invalid_argument);
}

TEST_CASE("arithmetic basics") {
    auto r = xy();
    auto x = Polynomial::variable(r, 0);
    auto y = Polynomial::variable(r, 1);

    CHECK((x + (-x)).is_zero());                       // additive inverse
    CHECK((x + y) * (x - y) == x * x - y * y);         // difference of squares
    CHECK((x * y).total_degree() == 2);
    CHECK(P(r, "x^2 - y^2") == (x + y) * (x - y));
}

TEST_CASE("hand multiplication oracle: (t4*t5 + 8) * t4") {
    auto r = make_t_ring(6);
    auto f = P(r, "t4*t5 + 8");
    auto g = P(r, "t4");
    CHECK(f * g == P(r, "t4^2*t5 + 8*t4"));
}

TEST_CASE("ring mismatch is rejected") {
    auto a = Polynomial::variable(xy(), 0);
    auto b = Polynomial::variable(make_ring({"z"}), 0);
    CHECK_THROWS_AS(a + b, ring_error);
}

TEST_CASE("canonical text round-trips") {
    auto r = make_ring({"t3", "t5"});
    auto f = P(r, "4*t3 + t5");
    CHECK(f.str() == "4*t3 + t5");
    CHECK(parse_poly(r, f.str()) == f);

    auto g = P(r, "-1/2*t3^3 + t3*t5 - 7");
    CHECK(parse_poly(r, g.str(MonomialOrder::lex())) == g);
    CHECK(Polynomial::zero(r).str() == "0");
}

TEST_CASE("evaluation and substitution") {
    auto r = xy();
    auto f = P(r, "x^2*y - 3*x + 1/2");
    CHECK(f.eval({Rat(2), Rat(-1)}) == Rat(-19, 2));
    auto g = f.substitute({{0, Rat(2)}});
    CHECK(g == P(r, "4*y - 11/2"));
}

TEST_CASE("derivative follows the product rule on random instances") {
    auto r = xy();
    SplitMix64 rng(42);
    for (int iter = 0; iter < 40; ++iter) {
        std::map<Monomial, Rat> fa, ga;
        for (int t = 0; t < 4; ++t) {
            Monomial m(2);
            m.set(0, static_cast<int>(rng.next_long(0, 3)));
            m.set(1, static_cast<int>(rng.next_long(0, 3)));
            fa[m] += rng.next_rat(5, 3);
            Monomial m2(2);
            m2.set(0, static_cast<int>(rng.next_long(0, 3)));
            m2.set(1, static_cast<int>(rng.next_long(0, 3)));
            ga[m2] += rng.next_rat(5, 3);
        }
        auto f = Polynomial::from_terms(r, std::move(fa));
        auto g = Polynomial::from_terms(r, std::move(ga));
        for (int v = 0; v < 2; ++v) {
            CHECK((f * g).derivative(v) == f.derivative(v) * g + f * g.derivative(v));
        }
    }
}

TEST_CASE("commutativity, associativity, distributivity on random instances") {
    auto r = xy();
    SplitMix64 rng(7);
    auto rand_poly = [&]() {
        std::map<Monomial, Rat> acc;
        for (int t = 0; t < 3; ++t) {
            Monomial m(2);
            m.set(0, static_cast<int>(rng.next_long(0, 2)));
            m.set(1, static_cast<int>(rng.next_long(0, 2)));
            acc[m] += rng.next_rat(9, 4);
        }
        return Polynomial::from_terms(r, std::move(acc));
    };
    for (int iter = 0; iter < 30; ++iter) {
        auto a = rand_poly(), b = rand_poly(), c = rand_poly();
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
    }
}

TEST_CASE("primitive part and content") {
    auto r = xy();
    auto f = P(r, "4/3*x - 2/3*y");
    auto p = f.primitive_part();
    CHECK(p == P(r, "2*x - y"));
    CHECK(p.scaled(f.content_signed()) == f);
    CHECK(P(r, "-2*x").primitive_part() == P(r, "x"));  // sign normalized
}

TEST_CASE("map_to moves polynomials between rings by variable name") {
    auto small = xy();
    auto big = make_ring({"w", "x", "y"});
    auto f = P(small, "x*y - 2");
    auto lifted = f.map_to(big);
    CHECK(lifted == P(big, "x*y - 2"));
    CHECK(lifted.map_to(small) == f);
    CHECK_THROWS_AS(P(big, "w").map_to(small), ring_error);
}
