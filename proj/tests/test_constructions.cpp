#include <catch2/catch_amalgamated.hpp>

#include "pgn/constructions.hpp"

#include <random>

using namespace pgn;

namespace {

QuadExt qx(const char* s) { return QuadExt(Rational::parse(s)); }

}

TEST_CASE("parameter derivation and range rejection") {
    SimParams p = sim_params(2, qx("1/2"), qx("-1/4"));
    CHECK(p.theta == qx("-1/4"));
    CHECK(p.sigma.is_zero());

    // at mu = mu0 the derived sigma closes the quadratic identity
    QuadExt m0 = mu0(2, Rational(1, 2));
    SimParams q = sim_params(2, qx("1/2"), m0);
    QuadExt res = (q.theta - QuadExt(1)) * (q.theta - QuadExt(1)) -
                  (q.mu - QuadExt(1)) * (q.t - QuadExt(1));
    CHECK(res.sign() == 0);

    CHECK_THROWS_WITH(sim_params(2, qx("1/2"), qx("-3/4")),
                      Catch::Matchers::ContainsSubstring("below mu0"));
    CHECK_THROWS_WITH(sim_params(2, qx("1/2"), qx("-1/5")),
                      Catch::Matchers::ContainsSubstring("above -t/n"));

    DualParams d = dual_params(2, qx("-1/2"), qx("1/4"));
    CHECK(d.vartheta == qx("1/4"));
    CHECK(d.gamma.is_zero());
    CHECK_THROWS_WITH(dual_params(2, qx("-1/2"), qx("1/5")),
                      Catch::Matchers::ContainsSubstring("below -s/n"));
    CHECK_THROWS_WITH(dual_params(2, qx("-1/2"), qx("1/2")),
                      Catch::Matchers::ContainsSubstring("above nu0"));
}

TEST_CASE("derived parameters keep the stated ordering") {
    // -n <= -2/(n-1) <= mu0 <= mu <= -t/n <= theta <= t <= 1, and the dual
    // mirror -n <= s <= vartheta <= -s/n <= nu <= nu0 <= 1
    for (int n = 2; n <= 5; ++n)
        for (int k = 1; k <= 9; k += 2)
            for (int j = 0; j <= 4; j += 2) {
                Rational t(k, 10);
                QuadExt m0 = mu0(n, t);
                QuadExt mu = m0 + (QuadExt(-t / Rational(n)) - m0) * QuadExt(Rational(j, 4));
                SimParams p = sim_params(n, QuadExt(t), mu);
                CHECK((m0 + QuadExt(Rational(2, n - 1))).sign() >= 0);
                CHECK((p.mu - m0).sign() >= 0);
                CHECK((QuadExt(-t / Rational(n)) - p.mu).sign() >= 0);
                CHECK((p.theta + QuadExt(t / Rational(n))).sign() >= 0);
                CHECK((QuadExt(t) - p.theta).sign() >= 0);
                CHECK((p.sigma).sign() >= 0);

                Rational s(-k * n, 10);
                QuadExt v0 = nu0(n, s);
                QuadExt nu = QuadExt(-s / Rational(n)) +
                             (v0 - QuadExt(-s / Rational(n))) * QuadExt(Rational(j, 4));
                DualParams d = dual_params(n, QuadExt(s), nu);
                CHECK((d.vartheta - QuadExt(s)).sign() >= 0);
                CHECK((QuadExt(-s / Rational(n)) - d.vartheta).sign() >= 0);
                CHECK((d.nu - QuadExt(-s / Rational(n))).sign() >= 0);
                CHECK((v0 - d.nu).sign() >= 0);
                CHECK((QuadExt(1) - v0).sign() >= 0);
                CHECK(d.gamma.sign() <= 0);
            }
}

TEST_CASE("simultaneous construction: worked point") {
    Template t = build_simultaneous(2, qx("1/2"), qx("-1/4"));
    REQUIRE(validate(t).ok());
    QuadExt q0 = t.period.front().q;

    // switch-point ratios collapse to (5/4, 5/4, 5/2, 5/2)
    REQUIRE(t.period.size() == 3);
    CHECK(t.period[1].q / q0 == qx("5/4"));
    CHECK(t.period[2].q / q0 == qx("5/2"));
    CHECK(t.lambda == qx("5/2"));

    auto l = phi_limits(t);
    CHECK(l.lower[0] == qx("-1/4"));
    CHECK(l.upper[0] == qx("0"));
    CHECK(l.lower[1] == qx("-1/4"));   // the lower limit of P_n
    CHECK(l.upper[1] == qx("0"));
    CHECK(l.lower[2] == qx("0"));
    CHECK(l.upper[2] == qx("1/2"));

    auto profile = contraction_profile(t);
    REQUIRE(profile.size() == 2);
    CHECK(profile[0].delta == 2);
    CHECK(profile[0].to / q0 == qx("5/4"));
    CHECK(profile[1].delta == 1);

    auto [lo, hi] = contraction_rates(t);
    CHECK(lo == qx("7/6"));
    CHECK(hi == qx("4/3"));
}

TEST_CASE("simultaneous construction: closed forms across the grid") {
    for (int n = 2; n <= 4; ++n)
        for (int k = 2; k <= 8; k += 3) {
            QuadExt t(Rational(k, 10));
            QuadExt m0 = mu0(n, Rational(k, 10));
            QuadExt top = -t / QuadExt(n);
            for (int j = 0; j <= 2; ++j) {
                QuadExt mu = m0 + (top - m0) * QuadExt(Rational(j, 2));
                Template tpl = build_simultaneous(n, t, mu);
                REQUIRE(validate(tpl).ok());
                SimParams p = sim_params(n, t, mu);
                auto l = phi_limits(tpl);
                // the stated limit profile
                for (int i = 0; i < n - 1; ++i) {
                    CHECK(l.lower[i] == mu);
                    CHECK(l.upper[i] ==
                          (QuadExt(n) * mu + t) / (QuadExt(n + 1) + t - mu));
                }
                CHECK(l.upper[n - 1] == p.sigma);
                CHECK(l.lower[n] == p.sigma);
                CHECK(l.upper[n] == t);
                QuadExt middle_lower = QuadExt(Rational(-1, n)) +
                              QuadExt(Rational(n + 1, n)) * (QuadExt(1) - t) /
                                  (QuadExt(1 + n) + QuadExt(n - 1) * t +
                                   QuadExt(n * (n - 1)) * mu);
                CHECK(l.lower[n - 1] == middle_lower);
            }
        }
}

TEST_CASE("switch point ordering and coincidences") {
    int n = 3;
    Rational t(2, 5);
    QuadExt tq(t);
    QuadExt m0 = mu0(n, t);
    QuadExt top = -tq / QuadExt(n);

    SECTION("interior mu keeps all five breakpoints") {
        QuadExt mu = m0 + (top - m0) / QuadExt(2);
        Template tpl = build_simultaneous(n, tq, mu);
        CHECK(tpl.period.size() == 5);
        for (std::size_t i = 0; i + 1 < tpl.period.size(); ++i)
            CHECK((tpl.period[i + 1].q - tpl.period[i].q).sign() > 0);
    }
    SECTION("mu = mu0 merges the glued stretch away") {
        Template tpl = build_simultaneous(n, tq, m0);
        CHECK(tpl.period.size() == 4);
    }
    SECTION("mu = -t/n pushes the handoff to the period end") {
        Template tpl = build_simultaneous(n, tq, top);
        CHECK(tpl.period.size() == 3);
    }
}

TEST_CASE("dual construction: worked point") {
    Template t = build_dual(2, qx("-1/2"), qx("1/4"));
    REQUIRE(validate(t).ok());
    QuadExt q1 = t.period.back().q;
    REQUIRE(t.period.size() == 3);
    CHECK(t.period.front().q / q1 == qx("1/2"));
    CHECK(t.period[1].q / q1 == qx("3/4"));

    auto l = phi_limits(t);
    CHECK(l.lower[0] == qx("-1/2"));
    CHECK(l.upper[0] == qx("0"));
    CHECK(l.lower[1] == qx("0"));
    CHECK(l.upper[1] == qx("1/4"));
    CHECK(l.lower[2] == qx("0"));
    CHECK(l.upper[2] == qx("1/4"));

    auto profile = contraction_profile(t);
    REQUIRE(profile.size() == 2);
    CHECK(profile[0].delta == 2);
    CHECK(profile[1].delta == 0);

    auto [lo, hi] = contraction_rates(t);
    CHECK(lo == qx("1"));
    CHECK(hi == qx("4/3"));
}

TEST_CASE("dual construction: closed forms across the grid") {
    for (int n = 2; n <= 4; ++n)
        for (int k = 2; k <= 8; k += 3) {
            Rational s(-k * n, 10);
            QuadExt sq(s);
            QuadExt v0 = nu0(n, s);
            QuadExt bot = -sq / QuadExt(n);
            for (int j = 0; j <= 2; ++j) {
                QuadExt nu = bot + (v0 - bot) * QuadExt(Rational(j, 2));
                Template tpl = build_dual(n, sq, nu);
                REQUIRE(validate(tpl).ok());
                DualParams p = dual_params(n, sq, nu);
                auto l = phi_limits(tpl);
                CHECK(l.lower[0] == sq);
                CHECK(l.upper[0] == p.gamma);
                CHECK(l.lower[1] == p.gamma);
                for (int i = 2; i <= n; ++i) {
                    CHECK(l.upper[i] == nu);
                    CHECK(l.lower[i] ==
                          (QuadExt(n) * nu + sq) / (QuadExt(n + 1) + sq - nu));
                }
                QuadExt hi2 = QuadExt(Rational(-1, n)) +
                              QuadExt(Rational(n + 1, n)) * (QuadExt(1) - sq) /
                                  (QuadExt(1 + n) + QuadExt(n - 1) * sq +
                                   QuadExt(n * (n - 1)) * nu);
                CHECK(l.upper[1] == hi2);
            }
        }
}

TEST_CASE("extended simultaneous construction") {
    int n = 3;
    QuadExt t(Rational(1, 2)), mu(Rational(-1, 6));
    SimParams p = sim_params(n, t, mu);
    REQUIRE(p.sigma.sign() == 0);   // mu = -t/n here, so only eta = 0

    QuadExt mu2 = mu0(n, Rational(1, 2));   // interior sigma > 0
    SimParams p2 = sim_params(n, t, mu2);
    REQUIRE(p2.sigma.sign() > 0);

    SECTION("eta = sigma reproduces the base construction exactly") {
        Template base = build_simultaneous(n, t, mu2);
        Template ext = build_simultaneous_extended(n, t, mu2, p2.sigma);
        REQUIRE(base.period.size() == ext.period.size());
        for (std::size_t i = 0; i < base.period.size(); ++i) {
            CHECK(base.period[i].q == ext.period[i].q);
            for (int j = 0; j <= n; ++j)
                CHECK(base.period[i].values[j] == ext.period[i].values[j]);
        }
    }
    SECTION("interior eta pins the lower limit of the top component") {
        QuadExt eta = p2.sigma / QuadExt(2);
        Template ext = build_simultaneous_extended(n, t, mu2, eta);
        REQUIRE(validate(ext).ok());
        auto l = phi_limits(ext);
        CHECK(l.lower[n] == eta);
        CHECK(l.upper[n] == t);
        for (int i = 0; i < n - 1; ++i) CHECK(l.lower[i] == mu2);
        CHECK(l.upper[n - 1] == p2.sigma);
    }
    SECTION("eta = 0 gives the Dirichlet value of the dual-hat exponent") {
        Template ext = build_simultaneous_extended(n, t, mu2, QuadExt(0));
        REQUIRE(validate(ext).ok());
        auto l = phi_limits(ext);
        CHECK(l.lower[n].is_zero());
    }
    SECTION("eta out of range rejected") {
        CHECK_THROWS_AS(build_simultaneous_extended(n, t, mu2, QuadExt(Rational(-1, 100))),
                        std::domain_error);
        CHECK_THROWS_AS(
            build_simultaneous_extended(n, t, mu2, p2.sigma + QuadExt(Rational(1, 100))),
            std::domain_error);
    }
}

TEST_CASE("extended dual construction") {
    int n = 3;
    QuadExt s(Rational(-1));
    QuadExt v0 = nu0(n, Rational(-1));
    DualParams p = dual_params(n, s, v0);
    REQUIRE(p.gamma.sign() < 0);

    SECTION("eta = gamma reproduces the base construction exactly") {
        Template base = build_dual(n, s, v0);
        Template ext = build_dual_extended(n, s, v0, p.gamma);
        REQUIRE(base.period.size() == ext.period.size());
        for (std::size_t i = 0; i < base.period.size(); ++i) {
            CHECK(base.period[i].q == ext.period[i].q);
            for (int j = 0; j <= n; ++j)
                CHECK(base.period[i].values[j] == ext.period[i].values[j]);
        }
    }
    SECTION("interior eta pins the upper limit of the bottom component") {
        QuadExt eta = p.gamma / QuadExt(2);
        Template ext = build_dual_extended(n, s, v0, eta);
        REQUIRE(validate(ext).ok());
        auto l = phi_limits(ext);
        CHECK(l.upper[0] == eta);
        CHECK(l.lower[0] == s);
        for (int i = 2; i <= n; ++i) CHECK(l.upper[i] == v0);
        CHECK(l.lower[1] == p.gamma);
    }
    SECTION("eta = 0 restores the Dirichlet value of the hat exponent") {
        Template ext = build_dual_extended(n, s, v0, QuadExt(0));
        REQUIRE(validate(ext).ok());
        auto l = phi_limits(ext);
        CHECK(l.upper[0].is_zero());
    }
}

TEST_CASE("trivial template sits at the flat extreme") {
    for (int n = 2; n <= 4; ++n) {
        Template t = trivial_template(n);
        auto [lo, hi] = contraction_rates(t);
        CHECK(lo == QuadExt(n));   // every slope is 0 < 1, so the rate is constant n
        CHECK(hi == QuadExt(n));
        auto l = phi_limits(t);
        for (int j = 0; j <= n; ++j) {
            CHECK(l.lower[j].is_zero());
            CHECK(l.upper[j].is_zero());
        }
    }
}

TEST_CASE("degenerate parameters rejected with the collapse named") {
    CHECK_THROWS_WITH(build_simultaneous(2, QuadExt(0), QuadExt(0)),
                      Catch::Matchers::ContainsSubstring("period collapses at t=0"));
    CHECK_THROWS_AS(build_simultaneous(2, QuadExt(1), QuadExt(Rational(-1, 2))),
                    std::domain_error);
    CHECK_THROWS_WITH(build_dual(2, QuadExt(0), QuadExt(0)),
                      Catch::Matchers::ContainsSubstring("period collapses at s=0"));
    CHECK_THROWS_AS(build_dual(2, QuadExt(-2), QuadExt(1)), std::domain_error);
}

TEST_CASE("parameter chains hold with exact signs") {
    std::mt19937_64 rng(2024);
    std::uniform_int_distribution<int> numer(1, 199), denom(200, 400);
    for (int n = 2; n <= 6; ++n) {
        for (int i = 0; i < 50; ++i) {
            Rational t(numer(rng), denom(rng));   // strictly inside (0, 1)
            QuadExt m0 = g(n, t);
            QuadExt middle(-(t * t + Rational(2 * n + 1) * t) / (Rational(n * n) - t));
            CHECK((-QuadExt(t) / QuadExt(n) - m0).sign() >= 0);
            CHECK((m0 - middle).sign() >= 0);
            CHECK((middle + QuadExt(Rational(2, n - 1) * t)).sign() >= 0);

            Rational s = -t;   // same magnitudes on the dual side
            QuadExt n0 = g(n, s);
            QuadExt dmiddle(-(s * s + Rational(2 * n + 1) * s) / (Rational(n * n) - s));
            CHECK((QuadExt(Rational(-2, n - 1) * s) - dmiddle).sign() >= 0);
            CHECK((dmiddle - n0).sign() >= 0);
            CHECK((n0 + QuadExt(s) / QuadExt(n)).sign() >= 0);
        }
        // outer members meet only at the documented endpoints
        CHECK(g(n, Rational(0)).is_zero());
        CHECK(g(n, Rational(1)) == QuadExt(Rational(-2, n - 1)));
        CHECK(g(n, Rational(-n)) == QuadExt(1));
    }
}

TEST_CASE("handoff point moves monotonically with mu") {
    // d q~3 / d mu has the stated positive sign for fixed t
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<int> numer(1, 99);
    for (int n = 2; n <= 4; ++n)
        for (int i = 0; i < 40; ++i) {
            Rational t(numer(rng), 100);
            QuadExt m0 = g(n, t);
            QuadExt top = QuadExt(-t / Rational(n));
            QuadExt mu = m0 + (top - m0) / QuadExt(3);
            QuadExt deriv = QuadExt(n - 1) *
                            (QuadExt(Rational(2 * n - 1)) * QuadExt(t) + QuadExt(2 * n + 1) +
                             QuadExt(2 * n * (n - 1)) * mu) /
                            (QuadExt(n + 1) * (QuadExt(1) - QuadExt(t)));
            CHECK(deriv.sign() > 0);
        }
}
