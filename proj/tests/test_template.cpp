#include <catch2/catch_amalgamated.hpp>

#include "pgn/constructions.hpp"

using namespace pgn;

TEST_CASE("trivial template validates and evaluates to zero") {
    Template t = trivial_template(3);
    CHECK(validate(t).ok());
    for (auto q : {Rational(0), Rational(1, 3), Rational(5), Rational(40)}) {
        auto vals = evaluate(t, QuadExt(q));
        for (const auto& v : vals) CHECK(v.is_zero());
    }
    CHECK_THROWS_AS(evaluate(t, QuadExt(-1)), std::domain_error);
}

TEST_CASE("validator reports forced violations") {
    Template t = trivial_template(2);

    SECTION("slope outside the admissible set") {
        t.period.back().values = {QuadExt(-3), QuadExt(1), QuadExt(2)};
        // also breaks (i) and self-similarity; clause iii must be among them
        auto rep = validate(t);
        REQUIRE(!rep.ok());
        bool has_iii = false;
        for (const auto& v : rep.violations) has_iii |= (v.clause == "iii");
        CHECK(has_iii);
    }
    SECTION("component sum nonzero") {
        for (auto& bp : t.preperiod) bp.values = {QuadExt(1), QuadExt(1), QuadExt(1)};
        for (auto& bp : t.period) bp.values = {QuadExt(1), QuadExt(1), QuadExt(1)};
        auto rep = validate(t);
        REQUIRE(!rep.ok());
        bool has_i = false;
        for (const auto& v : rep.violations) has_i |= (v.clause == "i");
        CHECK(has_i);
    }
    SECTION("ordering violated") {
        Template s = build_simultaneous(2, QuadExt(Rational(1, 2)), mu0(2, Rational(1, 2)));
        std::swap(s.period[1].values[0], s.period[1].values[2]);
        auto rep = validate(s);
        REQUIRE(!rep.ok());
        bool has_ii = false;
        for (const auto& v : rep.violations) has_ii |= (v.clause == "ii");
        CHECK(has_ii);
    }
    SECTION("scale ratio checked") {
        t.lambda = QuadExt(3);
        auto rep = validate(t);
        REQUIRE(!rep.ok());
        CHECK(rep.violations.front().clause == "self-similarity");
    }
}

TEST_CASE("convexity clause catches an illegal partial-sum kink") {
    // On [1,2] let P_1 fall with -1/2 while P_2 = P_3 rise with 1/4 and
    // P_1 < P_2 throughout: F_1 slope -1/2 is outside {1, -2} for n = 2.
    Template t;
    t.n = 2;
    auto vals = [](Rational a, Rational b, Rational c) {
        return std::vector<QuadExt>{QuadExt(a), QuadExt(b), QuadExt(c)};
    };
    t.preperiod = {{QuadExt(0), vals(0, 0, 0)},
                   {QuadExt(1), vals(Rational(-1), Rational(1, 2), Rational(1, 2))}};
    t.period = {{QuadExt(1), vals(Rational(-1), Rational(1, 2), Rational(1, 2))},
                {QuadExt(2), vals(Rational(-3, 2), Rational(3, 4), Rational(3, 4))}};
    t.lambda = QuadExt(Rational(3, 2));
    auto rep = validate(t);
    REQUIRE(!rep.ok());
    bool has_iv = false;
    for (const auto& v : rep.violations) has_iv |= (v.clause == "iv");
    CHECK(has_iv);
}

TEST_CASE("evaluate scales self-similarly across periods") {
    Template t = build_simultaneous(2, QuadExt(Rational(1, 2)), QuadExt(Rational(-1, 4)));
    QuadExt q0 = t.period.front().q;
    auto at_q0 = evaluate(t, q0);
    CHECK(at_q0[0] == QuadExt(Rational(-1, 4)) * q0);
    CHECK(at_q0[1] == QuadExt(Rational(-1, 4)) * q0);
    CHECK(at_q0[2] == QuadExt(Rational(1, 2)) * q0);

    QuadExt lam2 = t.lambda * t.lambda;
    auto far = evaluate(t, lam2 * q0);
    for (std::size_t j = 0; j < far.size(); ++j) CHECK(far[j] == lam2 * at_q0[j]);

    // interior point three periods out
    QuadExt mid = t.period[1].q * t.lambda * t.lambda * t.lambda;
    auto there = evaluate(t, mid);
    auto base = evaluate(t, t.period[1].q);
    QuadExt lam3 = lam2 * t.lambda;
    for (std::size_t j = 0; j < there.size(); ++j) CHECK(there[j] == lam3 * base[j]);
}

TEST_CASE("normalization drops coincident breakpoints") {
    Template t = trivial_template(2);
    t.period.insert(t.period.begin() + 1, t.period.front());
    Template nt = normalized(t);
    CHECK(nt.period.size() == 2);
    t.period[1].values[0] = QuadExt(1);
    CHECK_THROWS_AS(normalized(t), std::invalid_argument);
}

TEST_CASE("ratio extremes sit at breakpoints (monotone ratio property)") {
    Template t = build_simultaneous(3, QuadExt(Rational(1, 2)), QuadExt(Rational(-1, 6)));
    auto limits = phi_limits(t);
    auto segs = detail::segments_of(normalized(t).period);
    for (const auto& s : segs) {
        QuadExt len = s.b - s.a;
        for (int step = 1; step <= 100; ++step) {
            QuadExt q = s.a + len * QuadExt(Rational(step, 101));
            auto vals = evaluate(t, q);
            for (int j = 0; j < 4; ++j) {
                QuadExt ratio = vals[j] / q;
                CHECK((ratio - limits.lower[j]).sign() >= 0);
                CHECK((ratio - limits.upper[j]).sign() <= 0);
            }
        }
    }
}

TEST_CASE("phi limits and rates ignore the preperiod") {
    // Re-root the template one period later: the preperiod grows by one
    // period, the pattern is unchanged, so every limit must be unchanged.
    Template t = build_dual(2, QuadExt(Rational(-1, 2)), QuadExt(Rational(3, 10)));
    Template shifted = t;
    shifted.preperiod = t.preperiod;
    for (std::size_t i = 1; i < t.period.size(); ++i) shifted.preperiod.push_back(t.period[i]);
    shifted.period.clear();
    for (const auto& bp : t.period) {
        Breakpoint scaled{bp.q * t.lambda, bp.values};
        for (auto& v : scaled.values) v *= t.lambda;
        shifted.period.push_back(std::move(scaled));
    }
    REQUIRE(validate(shifted).ok());

    auto l1 = phi_limits(t), l2 = phi_limits(shifted);
    for (int j = 0; j < 3; ++j) {
        CHECK(l1.lower[j] == l2.lower[j]);
        CHECK(l1.upper[j] == l2.upper[j]);
    }
    auto [lo1, hi1] = contraction_rates(t);
    auto [lo2, hi2] = contraction_rates(shifted);
    CHECK(lo1 == lo2);
    CHECK(hi1 == hi2);
    for (int d = 0; d < 2; ++d)
        CHECK(intermediate_exponent(t, d) == intermediate_exponent(shifted, d));
}

TEST_CASE("phi limit ranges and monotonicity") {
    for (auto t : {build_simultaneous(2, QuadExt(Rational(1, 2)), QuadExt(Rational(-2, 5))),
                   build_dual(3, QuadExt(Rational(-1)), QuadExt(Rational(2, 5))),
                   trivial_template(4)}) {
        auto l = phi_limits(t);
        for (int j = 0; j <= t.n; ++j) {
            CHECK((l.lower[j] - l.upper[j]).sign() <= 0);
            CHECK((l.lower[j] + QuadExt(t.n)).sign() >= 0);
            CHECK((l.upper[j] - QuadExt(1)).sign() <= 0);
            if (j > 0) {
                CHECK((l.lower[j] - l.lower[j - 1]).sign() >= 0);
                CHECK((l.upper[j] - l.upper[j - 1]).sign() >= 0);
            }
        }
    }
}

TEST_CASE("any single-value perturbation is caught by some clause") {
    // nudging one coordinate breaks the zero sum at that breakpoint (or a
    // slope, or self-similarity); the validator must never stay silent
    const QuadExt nudge(Rational(1, 997));
    for (auto base : {build_simultaneous(2, QuadExt(Rational(1, 2)), mu0(2, Rational(1, 2))),
                      build_dual(3, QuadExt(Rational(-1)), QuadExt(Rational(2, 5)))}) {
        for (std::size_t i = 0; i < base.period.size(); ++i)
            for (int j = 0; j <= base.n; ++j) {
                Template t = base;
                t.period[i].values[j] += nudge;
                CHECK(!validate(t).ok());
            }
        for (std::size_t i = 0; i < base.preperiod.size(); ++i) {
            Template t = base;
            t.preperiod[i].values[0] -= nudge;
            CHECK(!validate(t).ok());
        }
        Template t = base;
        t.lambda += nudge;
        CHECK(!validate(t).ok());
    }
}

TEST_CASE("contraction rate envelopes") {
    for (auto t : {build_simultaneous(3, QuadExt(Rational(3, 5)), mu0(3, Rational(3, 5))),
                   build_dual(4, QuadExt(Rational(-3)), QuadExt(Rational(4, 5))),
                   trivial_template(2)}) {
        auto profile = contraction_profile(t);
        QuadExt total(0), len(0);
        for (const auto& p : profile) {
            CHECK(p.delta >= 0);
            CHECK(p.delta <= t.n);
            total += QuadExt(p.delta) * (p.to - p.from);
            len += p.to - p.from;
        }
        QuadExt avg = total / len;
        auto [lo, hi] = contraction_rates(t);
        CHECK((lo - hi).sign() <= 0);
        CHECK(lo.sign() >= 0);
        CHECK((hi - QuadExt(t.n)).sign() <= 0);
        CHECK((lo - avg).sign() <= 0);   // the average is one of the h values
        CHECK((hi - avg).sign() >= 0);
    }
}

TEST_CASE("brute-force running averages converge to the claimed rates") {
    // independent oracle: integrate the local rate across eight unrolled
    // periods and track the running average at every breakpoint; its late
    // extremes must bracket onto (delta_lower, delta_upper)
    for (auto t : {build_simultaneous(2, QuadExt(Rational(1, 2)), QuadExt(Rational(-2, 5))),
                   build_dual(3, QuadExt(Rational(-1)), QuadExt(Rational(2, 5)))}) {
        auto profile = contraction_profile(t);
        auto [lo, hi] = contraction_rates(t);
        QuadExt q0 = profile.front().from;
        QuadExt scale(1), integral(0);
        QuadExt run_min, run_max;
        bool tracking = false;
        for (int period = 0; period < 12; ++period) {
            for (const auto& piece : profile) {
                integral += QuadExt(piece.delta) * (piece.to - piece.from) * scale;
                QuadExt q = piece.to * scale;
                QuadExt avg = integral / (q - q0);
                if (period >= 11) {
                    if (!tracking || (avg - run_min).sign() < 0) run_min = avg;
                    if (!tracking || (avg - run_max).sign() > 0) run_max = avg;
                    tracking = true;
                }
            }
            scale *= t.lambda;
        }
        QuadExt tol(Rational(1, 500));
        CHECK((abs(run_min - lo) - tol).sign() < 0);
        CHECK((abs(run_max - hi) - tol).sign() < 0);
    }
}

TEST_CASE("component sum vanishes at every breakpoint of every construction") {
    for (auto t : {build_simultaneous(4, QuadExt(Rational(3, 10)), QuadExt(Rational(-3, 40))),
                   build_dual(4, QuadExt(Rational(-2)), QuadExt(Rational(3, 5)))}) {
        for (const auto* list : {&t.preperiod, &t.period})
            for (const auto& bp : *list) {
                QuadExt sum(0);
                for (const auto& v : bp.values) sum += v;
                CHECK(sum.is_zero());
            }
    }
}
