#pragma once

#include "pgn/verify.hpp"

#include <cstdio>
#include <cstdlib>
#include <thread>
#include <vector>

namespace pgn {

/// Resolves the second construction parameter from its symbolic form.
/// Accepted: "mu0" / "-t/n" (simultaneous), "nu0" / "-s/n" (dual),
/// "interpolate k/m" for the convex mix between the two, or a rational.
inline QuadExt resolve_second_parameter(bool dual, int n, const Rational& first,
                                        const std::string& rule) {
    QuadExt boundary = g(n, first);                     // mu0 resp. nu0
    QuadExt inner = QuadExt(-first / Rational(n));      // -t/n resp. -s/n
    if (!dual) {
        if (rule == "mu0") return boundary;
        if (rule == "-t/n") return inner;
    } else {
        if (rule == "nu0") return boundary;
        if (rule == "-s/n") return inner;
    }
    if (rule.rfind("interpolate ", 0) == 0) {
        Rational f = Rational::parse(rule.substr(12));
        return dual ? inner + (boundary - inner) * QuadExt(f)
                    : boundary + (inner - boundary) * QuadExt(f);
    }
    return QuadExt(Rational::parse(rule));
}

/// Resolves the eta parameter of the extended builders: "sigma"/"gamma" for
/// the unmodified construction, "0" for the Dirichlet endpoint,
/// "interpolate k/m" for the fraction k/m of the way towards the extreme,
/// or a rational.
inline QuadExt resolve_eta(bool dual, const QuadExt& extreme, const std::string& rule) {
    if ((!dual && rule == "sigma") || (dual && rule == "gamma")) return extreme;
    if ((!dual && rule == "sigma/2") || (dual && rule == "gamma/2")) return extreme / QuadExt(2);
    if (rule.rfind("interpolate ", 0) == 0)
        return extreme * QuadExt(Rational::parse(rule.substr(12)));
    return QuadExt(Rational::parse(rule));
}

struct SweepSpec {
    bool dual = false;
    std::vector<int> ns;
    std::vector<Rational> explicit_grid;   // absolute t (or s) values
    int grid_count = 0;                    // used when explicit_grid is empty
    std::string rule = "mu0";              // second-parameter rule
    std::string eta_rule;                  // empty: plain construction
    bool csv = true;
};

namespace detail {

inline std::string dec15(const ExtReal& v) {
    if (v.is_pos_inf()) return "inf";
    if (v.is_neg_inf()) return "-inf";
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.15g", v.to_double());
    return buf;
}

inline std::string dec15(const QuadExt& v) { return dec15(ExtReal(v)); }

inline int sweep_threads() {
    if (const char* env = std::getenv("PGN_THREADS")) {
        int k = std::atoi(env);
        if (k >= 1) return k;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? (int)hw : 1;
}

} // namespace detail

inline const char* sweep_csv_header() {
    return "kind,n,param1,param2_exact,param2_dec,eta_exact,eta_dec,"
           "coupling_exact,coupling_dec,"
           "psi_lo_first_exact,psi_lo_first_dec,psi_hi_first_exact,psi_hi_first_dec,"
           "psi_lo_last_exact,psi_lo_last_dec,psi_hi_last_exact,psi_hi_last_dec,"
           "omega_exact,omega_dec,omega_hat_exact,omega_hat_dec,"
           "omega_star_exact,omega_star_dec,omega_hat_star_exact,omega_hat_star_dec,"
           "primary_exact,primary_dec,packing_first_exact,packing_first_dec,"
           "packing_second_exact,packing_second_dec,"
           "hausdorff_lb_exact,hausdorff_lb_dec,packing_lb_exact,packing_lb_dec,"
           "delta_lower_exact,delta_lower_dec,delta_upper_exact,delta_upper_dec,"
           "status_slope_form,status_exponent_form,status_hat_identity,"
           "status_rate_crosscheck,skip_reason";
}

namespace detail {

inline std::string sweep_row_csv(const SweepSpec& spec, int n, const Rational& first) {
    std::ostringstream row;
    row << (spec.dual ? "dual" : "sim") << "," << n << "," << first.str() << ",";
    auto skip = [&](const std::string& why) {
        std::ostringstream s;
        s << (spec.dual ? "dual" : "sim") << "," << n << "," << first.str() << ",";
        for (int i = 0; i < 40; ++i) s << ",";
        s << why;
        return s.str();
    };
    try {
        QuadExt second = resolve_second_parameter(spec.dual, n, first, spec.rule);
        QuadExt firstq{first};
        QuadExt coupling;   // sigma resp. gamma
        Template tpl;
        std::optional<QuadExt> eta;
        DimensionBounds bounds{};
        if (!spec.dual) {
            SimParams p = sim_params(n, firstq, second);
            coupling = p.sigma;
            if (!spec.eta_rule.empty()) {
                eta = resolve_eta(false, p.sigma, spec.eta_rule);
                tpl = build_simultaneous_extended(n, firstq, second, *eta);
            } else {
                tpl = build_simultaneous(n, firstq, second);
            }
            bounds = sim_dimension_bounds(n, firstq, second);
        } else {
            DualParams p = dual_params(n, firstq, second);
            coupling = p.gamma;
            if (!spec.eta_rule.empty()) {
                eta = resolve_eta(true, p.gamma, spec.eta_rule);
                tpl = build_dual_extended(n, firstq, second, *eta);
            } else {
                tpl = build_dual(n, firstq, second);
            }
            bounds = dual_dimension_bounds(n, firstq, second);
        }
        Expectation expect = eta ? Expectation::None
                                 : (spec.dual ? Expectation::Dual : Expectation::Simultaneous);
        // the rate cross-check only applies to the unmodified constructions
        auto rep = run_verify(tpl, expect, eta ? std::nullopt : std::make_optional(bounds));

        row << second.str() << "," << dec15(second) << ",";
        if (eta) row << eta->str() << "," << dec15(*eta) << ",";
        else row << ",,";
        row << coupling.str() << "," << dec15(coupling) << ",";
        auto qx_cols = [&](const QuadExt& v) { row << v.str() << "," << dec15(v) << ","; };
        qx_cols(rep.limits.lower.front());
        qx_cols(rep.limits.upper.front());
        qx_cols(rep.limits.lower.back());
        qx_cols(rep.limits.upper.back());
        auto er_cols = [&](const ExtReal& v) { row << v.str() << "," << dec15(v) << ","; };
        er_cols(rep.exponents.omega);
        er_cols(rep.exponents.omega_hat);
        er_cols(rep.exponents.omega_star);
        er_cols(rep.exponents.omega_hat_star);
        qx_cols(bounds.primary);
        qx_cols(bounds.packing_first);
        qx_cols(bounds.packing_second);
        qx_cols(bounds.hausdorff_lb);
        qx_cols(bounds.packing_lb);
        qx_cols(rep.rate_lower);
        qx_cols(rep.rate_upper);
        auto status_of = [&](const std::string& name) -> std::string {
            for (const auto& c : rep.checks)
                if (c.name == name) return to_string(c.result.status);
            return "";
        };
        row << status_of(spec.dual ? "SS2" : "SS1") << ","
            << status_of(spec.dual ? "BL2" : "BL1") << ","
            << status_of(spec.dual ? "split-hatstar-upper" : "split-hat-upper") << ",";
        std::string cross;
        if (!eta) {
            std::string a = status_of("rate-vs-hausdorff-bound");
            std::string b = status_of("rate-vs-packing-bound");
            cross = (a == "Equality" && b == "Equality") ? "Equality" : a + "/" + b;
        }
        row << cross << ",";
        return row.str();
    } catch (const std::exception& e) {
        return skip(e.what());
    }
}

inline Json sweep_row_json(const SweepSpec& spec, int n, const Rational& first) {
    Json j;
    j["kind"] = spec.dual ? "dual" : "sim";
    j["n"] = n;
    j["param1"] = first.str();
    try {
        QuadExt second = resolve_second_parameter(spec.dual, n, first, spec.rule);
        QuadExt firstq{first};
        Template tpl;
        std::optional<QuadExt> eta;
        DimensionBounds bounds{};
        if (!spec.dual) {
            SimParams p = sim_params(n, firstq, second);
            j["coupling"] = to_json(p.sigma);
            if (!spec.eta_rule.empty()) {
                eta = resolve_eta(false, p.sigma, spec.eta_rule);
                tpl = build_simultaneous_extended(n, firstq, second, *eta);
            } else {
                tpl = build_simultaneous(n, firstq, second);
            }
            bounds = sim_dimension_bounds(n, firstq, second);
        } else {
            DualParams p = dual_params(n, firstq, second);
            j["coupling"] = to_json(p.gamma);
            if (!spec.eta_rule.empty()) {
                eta = resolve_eta(true, p.gamma, spec.eta_rule);
                tpl = build_dual_extended(n, firstq, second, *eta);
            } else {
                tpl = build_dual(n, firstq, second);
            }
            bounds = dual_dimension_bounds(n, firstq, second);
        }
        j["param2"] = to_json(second);
        if (eta) j["eta"] = to_json(*eta);
        Expectation expect = eta ? Expectation::None
                                 : (spec.dual ? Expectation::Dual : Expectation::Simultaneous);
        auto rep = run_verify(tpl, expect, eta ? std::nullopt : std::make_optional(bounds));
        j["bounds"] = Json{{"primary", to_json(bounds.primary)},
                           {"packing_first", to_json(bounds.packing_first)},
                           {"packing_second", to_json(bounds.packing_second)},
                           {"hausdorff_lb", to_json(bounds.hausdorff_lb)},
                           {"packing_lb", to_json(bounds.packing_lb)}};
        Json rj = rep.json();
        for (auto& [k, v] : rj.items()) j[k] = v;
    } catch (const std::exception& e) {
        j["skipped"] = e.what();
    }
    return j;
}

} // namespace detail

/// Evaluates every grid point (in parallel when PGN_THREADS allows) and
/// assembles the table in deterministic grid order.
inline std::string run_sweep(const SweepSpec& spec) {
    std::vector<std::pair<int, Rational>> points;
    for (int n : spec.ns) {
        if (!spec.explicit_grid.empty()) {
            for (const auto& v : spec.explicit_grid) points.push_back({n, v});
        } else {
            for (int i = 1; i <= spec.grid_count; ++i) {
                Rational f(i, spec.grid_count + 1);
                points.push_back({n, spec.dual ? f * Rational(-n) : f});
            }
        }
    }
    std::vector<std::string> rows(points.size());
    std::vector<Json> jrows(points.size());
    int workers = std::min<int>(detail::sweep_threads(), (int)points.size());
    if (workers < 1) workers = 1;
    auto work = [&](int w) {
        for (std::size_t i = w; i < points.size(); i += workers) {
            if (spec.csv)
                rows[i] = detail::sweep_row_csv(spec, points[i].first, points[i].second);
            else
                jrows[i] = detail::sweep_row_json(spec, points[i].first, points[i].second);
        }
    };
    if (workers == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        for (int w = 0; w < workers; ++w) pool.emplace_back(work, w);
        for (auto& th : pool) th.join();
    }
    if (spec.csv) {
        std::string out = sweep_csv_header();
        out += "\n";
        for (const auto& r : rows) { out += r; out += "\n"; }
        return out;
    }
    Json arr = Json::array();
    for (auto& r : jrows) arr.push_back(std::move(r));
    return arr.dump(2) + "\n";
}

} // namespace pgn
