#include <catch2/catch_amalgamated.hpp>

#include "pgn/extreal.hpp"

using pgn::ExtReal;
using pgn::QuadExt;
using pgn::Rational;

TEST_CASE("one-sided limit arithmetic") {
    ExtReal inf = ExtReal::pos_inf();
    ExtReal ninf = ExtReal::neg_inf();
    ExtReal two(QuadExt(2));

    CHECK((inf + two).is_pos_inf());
    CHECK((inf - two).is_pos_inf());
    CHECK((ninf + two).is_neg_inf());
    CHECK((inf * two).is_pos_inf());
    CHECK((inf * ExtReal(QuadExt(-3))).is_neg_inf());
    CHECK(two / inf == ExtReal(QuadExt(0)));
    CHECK((inf / two).is_pos_inf());

    CHECK_THROWS_AS(inf - inf, std::domain_error);
    CHECK_THROWS_AS(inf + ninf, std::domain_error);
    CHECK_THROWS_AS(inf * ExtReal(QuadExt(0)), std::domain_error);
    CHECK_THROWS_AS(inf / inf, std::domain_error);
    CHECK_THROWS_AS(two / ExtReal(QuadExt(0)), std::domain_error);
}

TEST_CASE("ordering with infinities") {
    ExtReal inf = ExtReal::pos_inf();
    ExtReal ninf = ExtReal::neg_inf();
    ExtReal x(QuadExt(Rational(5, 7)));
    CHECK(ninf < x);
    CHECK(x < inf);
    CHECK(!(inf < inf));
    CHECK(inf == ExtReal::pos_inf());
    CHECK(x.str() == "5/7");
    CHECK(inf.str() == "inf");
    CHECK(ninf.str() == "-inf");
}
