#include <catch2/catch_amalgamated.hpp>

#include "pgn/quadext.hpp"

#include <cmath>
#include <random>

using pgn::QuadExt;
using pgn::Rational;

TEST_CASE("normalization folds square factors and rational roots") {
    // sqrt(4) = 2 is rational: 1 + 2*sqrt(4) = 5
    QuadExt a(Rational(1), Rational(2), Rational(4));
    CHECK(a.is_rational());
    CHECK(a.a() == Rational(5));
    CHECK(a.r() == Rational(0));

    // sqrt(8) = 2 sqrt(2)
    QuadExt b(Rational(0), Rational(1), Rational(8));
    CHECK(b.b() == Rational(2));
    CHECK(b.r() == Rational(2));

    // mu0(2, 1/2) = (-7 + sqrt(21))/4, canonical as given
    QuadExt c(Rational(-7, 4), Rational(1, 4), Rational(21));
    CHECK(c.a() == Rational(-7, 4));
    CHECK(c.b() == Rational(1, 4));
    CHECK(c.r() == Rational(21));

    // rational discriminant: sqrt(21/4) = sqrt(21)/2
    QuadExt d(Rational(0), Rational(1), Rational(21, 4));
    CHECK(d.b() == Rational(1, 2));
    CHECK(d.r() == Rational(21));

    CHECK_THROWS_AS(QuadExt(Rational(0), Rational(1), Rational(-2)), std::domain_error);
}

TEST_CASE("normalization is idempotent") {
    QuadExt v(Rational(3, 5), Rational(7, 2), Rational(12));
    QuadExt again(v.a(), v.b(), v.r());
    CHECK(v == again);
}

TEST_CASE("arithmetic follows the field rules") {
    QuadExt sqrt2 = pgn::qx_sqrt(Rational(2));
    QuadExt x = QuadExt(1) + sqrt2;        // 1 + sqrt2
    QuadExt y = QuadExt(3) - sqrt2;        // 3 - sqrt2
    CHECK(x + y == QuadExt(4));
    CHECK(x * (QuadExt(1) - sqrt2) == QuadExt(-1));
    QuadExt inv = QuadExt(1) / x;
    CHECK(inv == QuadExt(-1) + sqrt2);
    CHECK(inv * x == QuadExt(1));
    CHECK_THROWS_AS(x / QuadExt(0), std::domain_error);

    QuadExt sqrt3 = pgn::qx_sqrt(Rational(3));
    CHECK_THROWS_AS(sqrt2 + sqrt3, std::domain_error);
    CHECK_NOTHROW(sqrt2 + QuadExt(Rational(1, 2)));
}

TEST_CASE("exact sign") {
    CHECK(QuadExt(Rational(0), Rational(0), Rational(2)).sign() == 0);
    // (-7 + sqrt(21))/4 < 0 since 49 > 21
    CHECK(QuadExt(Rational(-7, 4), Rational(1, 4), Rational(21)).sign() == -1);
    // (3 sqrt(21) - 8)/5 > 0 since 9*21 > 64
    CHECK(QuadExt(Rational(-8, 5), Rational(3, 5), Rational(21)).sign() == 1);
    // exact zero from a difference: sqrt(2)*sqrt(2) - 2
    QuadExt s2 = pgn::qx_sqrt(Rational(2));
    CHECK((s2 * s2 - QuadExt(2)).sign() == 0);
}

TEST_CASE("sign agrees with floating evaluation on random samples") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> coeff(-50, 50), den(1, 20), disc(0, 60);
    int checked = 0;
    for (int i = 0; i < 10000; ++i) {
        QuadExt v(Rational(coeff(rng), den(rng)), Rational(coeff(rng), den(rng)),
                  Rational(disc(rng)));
        double approx = v.to_double();
        if (std::fabs(approx) < 1e-9) continue;   // too close to call in floating point
        CHECK(v.sign() == (approx > 0 ? 1 : -1));
        ++checked;
    }
    CHECK(checked > 9000);
}

TEST_CASE("field axioms on random samples sharing a discriminant") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<int> coeff(-20, 20), den(1, 12);
    auto draw = [&] {
        return QuadExt(Rational(coeff(rng), den(rng)), Rational(coeff(rng), den(rng)),
                       Rational(7));
    };
    for (int i = 0; i < 300; ++i) {
        QuadExt x = draw(), y = draw(), z = draw();
        CHECK((x + y) + z == x + (y + z));
        CHECK(x * (y + z) == x * y + x * z);
        if (!x.is_zero()) CHECK(x * (QuadExt(1) / x) == QuadExt(1));
    }
}

TEST_CASE("exact text form") {
    CHECK(QuadExt(Rational(-8, 5), Rational(3, 5), Rational(21)).str() == "(3*sqrt(21)-8)/5");
    CHECK(QuadExt(Rational(-1, 4)).str() == "-1/4");
    CHECK(pgn::qx_sqrt(Rational(2)).str() == "sqrt(2)");
}
