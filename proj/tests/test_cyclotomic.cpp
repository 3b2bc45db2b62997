#include "heckemu/cyclotomic.hpp"

#include <doctest.h>

#include <random>

using namespace heckemu;

TEST_CASE("roots of unity embed at the expected exponents") {
    CHECK(zeta_order() == 24);
    CHECK(zeta_degree() == 8);
    CHECK(CycRational::root_of_unity(3, 1) == CycRational::zeta(8));
    CHECK(CycRational::root_of_unity(4, 1) == CycRational::zeta(6));
    CHECK(CycRational::root_of_unity(2, 1) == CycRational(-1));
}

TEST_CASE("zeta3 + zeta3^2 + 1 = 0") {
    CycRational t = CycRational::root_of_unity(3, 1);
    CHECK((t + t * t + CycRational(1)).is_zero());
}

TEST_CASE("i * i = -1") {
    CycRational i = CycRational::root_of_unity(4, 1);
    CHECK(i * i == CycRational(-1));
}

TEST_CASE("(1 - zeta3)(1 - zeta3^2) = 3") {
    // hand oracle: expand to 1 - (z + z^2) + z^3 = 2 - (-1) = 3
    CycRational t = CycRational::root_of_unity(3, 1);
    CycRational prod = (CycRational(1) - t) * (CycRational(1) - t * t);
    CHECK(prod.is_rational());
    CHECK(prod.rational_part() == 3);
}

TEST_CASE("division by zero is refused") {
    CHECK_THROWS_AS(CycRational(1) / CycRational(0), division_by_zero);
    CHECK_THROWS_AS(CycRational(0).inverse(), division_by_zero);
}

TEST_CASE("field axioms on random samples") {
    std::mt19937_64 rng(7);
    auto sample = [&rng] {
        CycRational x;
        for (int k = 0; k < 3; ++k)
            x += CycRational::zeta(long(rng() % 24)) * CycRational(Rational(long(rng() % 19) - 9));
        return x;
    };
    for (int trial = 0; trial < 50; ++trial) {
        CycRational a = sample(), b = sample(), c = sample();
        CHECK((a + b) * c == a * c + b * c);
        CHECK(a * (b * c) == (a * b) * c);
        CHECK(a + b == b + a);
        if (!a.is_zero()) {
            CHECK(a * a.inverse() == CycRational(1));
            CHECK((a / a) == CycRational(1));
        }
    }
}

TEST_CASE("pow matches repeated multiplication") {
    CycRational z = CycRational::zeta(5) + CycRational(2);
    CycRational acc(1);
    for (int k = 0; k < 6; ++k) acc *= z;
    CHECK(z.pow(6) == acc);
    CHECK(z.pow(-3) == acc.inverse() * z.pow(3));
}

TEST_CASE("alternative session orders stay consistent") {
    ScopedZetaOrder scope(8);
    CHECK(zeta_degree() == 4);
    CycRational i = CycRational::root_of_unity(4, 1);
    CHECK(i * i == CycRational(-1));
    CHECK_THROWS(CycRational::root_of_unity(3, 1));  // 3 does not divide 8
}

TEST_CASE("cyclotomic polynomials") {
    CHECK(cyclotomic_poly(1) == std::vector<Integer>{-1, 1});
    CHECK(cyclotomic_poly(2) == std::vector<Integer>{1, 1});
    CHECK(cyclotomic_poly(6) == std::vector<Integer>{1, -1, 1});
    CHECK(cyclotomic_poly(12) == std::vector<Integer>{1, 0, -1, 0, 1});
    CHECK(cyclotomic_poly(24) == std::vector<Integer>{1, 0, 0, 0, -1, 0, 0, 0, 1});
}
