#pragma once

#include "pgn/dimension.hpp"
#include "pgn/json_io.hpp"

#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace pgn {

/// What a verification run may additionally assert beyond the universal
/// sign-correct inequalities.
enum class Expectation {
    None,          // any valid template
    Simultaneous,  // built by the simultaneous constructor: its equalities must be exact
    Dual,          // built by the dual constructor
};

struct NamedCheck {
    std::string name;
    CheckResult result;
    bool expect_equality;
};

struct VerifyReport {
    ValidationReport validation;
    bool valid = false;
    PhiLimits limits;
    ClassicalExponents exponents;
    QuadExt rate_lower, rate_upper;
    std::vector<NamedCheck> checks;
    bool pass = false;

    std::string text() const {
        std::ostringstream out;
        if (!valid) {
            out << "INVALID template: " << validation.summary() << "\n";
            return out.str();
        }
        out << "template: valid\n";
        out << "omega=" << exponents.omega.str() << " omega_hat=" << exponents.omega_hat.str()
            << " omega_star=" << exponents.omega_star.str()
            << " omega_hat_star=" << exponents.omega_hat_star.str() << "\n";
        out << "delta_lower=" << rate_lower.str() << " delta_upper=" << rate_upper.str() << "\n";
        for (const auto& c : checks) {
            out << c.name << "=" << to_string(c.result.status)
                << " residual=" << c.result.residual.str();
            if (c.expect_equality && c.result.status != CheckStatus::Equality) out << "  [expected equality]";
            if (c.result.status == CheckStatus::Violated) out << "  [violated]";
            out << "\n";
        }
        out << (pass ? "PASS" : "FAIL") << "\n";
        return out.str();
    }

    Json json() const {
        Json j;
        j["valid"] = valid;
        if (!valid) {
            Json v = Json::array();
            for (const auto& e : validation.violations)
                v.push_back(Json{{"clause", e.clause}, {"q", to_json(e.q)}, {"detail", e.detail}});
            j["violations"] = v;
            j["pass"] = false;
            return j;
        }
        j["exponents"] = Json{{"omega", to_json(exponents.omega)},
                              {"omega_hat", to_json(exponents.omega_hat)},
                              {"omega_star", to_json(exponents.omega_star)},
                              {"omega_hat_star", to_json(exponents.omega_hat_star)}};
        if (exponents.intermediate) {
            Json arr = Json::array();
            for (const auto& w : *exponents.intermediate) arr.push_back(to_json(w));
            j["intermediate"] = arr;
        }
        Json lo = Json::array(), hi = Json::array();
        for (const auto& v : limits.lower) lo.push_back(to_json(v));
        for (const auto& v : limits.upper) hi.push_back(to_json(v));
        j["psi_lower"] = lo;
        j["psi_upper"] = hi;
        j["delta_lower"] = to_json(rate_lower);
        j["delta_upper"] = to_json(rate_upper);
        Json cs = Json::array();
        for (const auto& c : checks)
            cs.push_back(Json{{"name", c.name},
                              {"status", to_string(c.result.status)},
                              {"residual", to_json(c.result.residual)},
                              {"expect_equality", c.expect_equality}});
        j["checks"] = cs;
        j["pass"] = pass;
        return j;
    }
};

/// Runs the whole battery: validity, limit extraction, transference, every
/// inequality with its signed residual, the identity chains, and (when the
/// construction parameters are known) the contraction-rate cross-check.
/// pass == true iff the template is valid, no inequality is violated, and
/// every equality expected for the declared construction is exact.
inline VerifyReport run_verify(const Template& t, Expectation expect = Expectation::None,
                               const std::optional<DimensionBounds>& bounds = std::nullopt) {
    VerifyReport rep;
    rep.validation = validate(t);
    rep.valid = rep.validation.ok();
    if (!rep.valid) return rep;

    rep.limits = phi_limits(t);
    rep.exponents = to_classical(rep.limits, t.n);
    rep.exponents.intermediate = intermediate_exponents(t);
    auto [lo, hi] = contraction_rates(t);
    rep.rate_lower = lo;
    rep.rate_upper = hi;

    const bool sim = expect == Expectation::Simultaneous;
    const bool dual = expect == Expectation::Dual;
    auto add = [&](const std::string& name, const CheckResult& r, bool eq) {
        rep.checks.push_back({name, r, eq});
    };

    add("SS1", check_SS1(rep.limits, t.n), sim);
    add("SS2", check_SS2(rep.limits, t.n), dual);
    add("BL1", check_BL1(rep.exponents, t.n), sim);
    add("BL2", check_BL2(rep.exponents, t.n), dual);
    auto kh = check_khintchine(rep.exponents, t.n);
    add("khintchine-left", kh.left, false);
    add("khintchine-right", kh.right, false);
    auto sp = check_splitting(rep.exponents, t.n);
    add("split-hat-upper", sp.first_upper, sim);
    add("split-hat-lower", sp.first_lower, sim);
    add("split-hatstar-upper", sp.second_upper, dual);
    add("split-hatstar-lower", sp.second_lower, dual);
    for (const auto& c : check_chain(rep.exponents, t.n)) {
        bool eq = (dual && c.name.rfind("rise", 0) == 0) || (sim && c.name.rfind("fall", 0) == 0);
        add("chain-" + c.name, c.result, eq);
    }
    if (bounds) {
        auto [first, second] = crosscheck_rates(t, *bounds);
        add("rate-vs-hausdorff-bound", first, true);
        add("rate-vs-packing-bound", second, true);
    }

    rep.pass = true;
    for (const auto& c : rep.checks) {
        if (c.result.status == CheckStatus::Violated) rep.pass = false;
        if (c.expect_equality && c.result.status != CheckStatus::Equality) rep.pass = false;
    }
    return rep;
}

} // namespace pgn
