#include "heckemu/pointparse.hpp"

#include <doctest.h>

using namespace heckemu;

TEST_CASE("parse_rational") {
    CHECK(parse_rational("3/2") == Rational(3, 2));
    CHECK(parse_rational("-7/4") == Rational(-7, 4));
    CHECK(parse_rational("5") == Rational(5));
    CHECK_THROWS_AS(parse_rational("1.5"), parse_error);
    CHECK_THROWS_AS(parse_rational(""), parse_error);
}

TEST_CASE("parse_point grammar") {
    SUBCASE("(1,q)") {
        TorusPoint p = parse_point("(1,q)");
        REQUIRE(p.coords.size() == 2);
        CHECK(p.coords[0].is_identity());
        CHECK(p.coords[1] == Monomial::q_power(1));
    }
    SUBCASE("units and negative exponents") {
        TorusPoint p = parse_point("(q^3,t3*q^-3)");
        CHECK(p.coords[0] == Monomial::q_power(3));
        Monomial expect = Monomial::q_power(-3);
        expect.zeta = 8;
        CHECK(p.coords[1] == expect);
    }
    SUBCASE("half-integer powers via rational exponents") {
        TorusPoint p = parse_point("(q^2,q^2,t4*q^7/2,q)");
        CHECK(p.coords[2].vexp == 7);
        CHECK(p.coords[2].zeta == 6);
    }
    SUBCASE("session-root powers round-trip") {
        TorusPoint p = parse_point("(z^8*v^-6, v^6)");
        CHECK(p.coords[0].zeta == 8);
        CHECK(p.coords[0].vexp == -6);
        CHECK(p.coords[1] == Monomial::v_power(6));
    }
    SUBCASE("leading minus") {
        TorusPoint p = parse_point("(-q^-3,q)");
        CHECK(p.coords[0].zeta == 12);
        CHECK(p.coords[0].vexp == -6);
    }
    SUBCASE("v-exponents directly") {
        TorusPoint p = parse_point("(v^3,-v)");
        CHECK(p.coords[0] == Monomial::v_power(3));
        CHECK(p.coords[1].vexp == 1);
        CHECK(p.coords[1].zeta == 12);
    }
    SUBCASE("rejects malformed input") {
        CHECK_THROWS_AS(parse_point("(q,"), parse_error);
        CHECK_THROWS_AS(parse_point("q,q"), parse_error);
        CHECK_THROWS_AS(parse_point("(x)"), parse_error);
        CHECK_THROWS_AS(parse_point("(q) extra"), parse_error);
        CHECK_THROWS_AS(parse_point("(t5*q)"), parse_error);  // 5 does not divide 24
    }
}

TEST_CASE("paper coordinate order: G2 points are (long, short)") {
    RootSystemSpec g2{RootFamily::G2, 2};
    TorusPoint p = point_from_paper(g2, parse_point("(q^3,q)"));
    CHECK(p.coords[0] == Monomial::q_power(1));   // short first internally
    CHECK(p.coords[1] == Monomial::q_power(3));
    RootSystemSpec f4{RootFamily::F4, 4};
    TorusPoint pf = point_from_paper(f4, parse_point("(q^2,1,q,1)"));
    CHECK(pf.coords[0] == Monomial::q_power(2));  // Bourbaki order kept
}
