#pragma once

#include "pgn/analysis.hpp"
#include "pgn/functions.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace pgn {

/// The four classical exponents, plus the intermediate ones when computed.
struct ClassicalExponents {
    ExtReal omega, omega_hat, omega_star, omega_hat_star;
    std::optional<std::vector<ExtReal>> intermediate;   // omega_0 .. omega_{n-1}
};

enum class CheckStatus { Equality, StrictInequality, Violated };

inline std::string to_string(CheckStatus s) {
    switch (s) {
    case CheckStatus::Equality: return "Equality";
    case CheckStatus::StrictInequality: return "StrictInequality";
    default: return "Violated";
    }
}

/// Signed residual of one inequality, oriented so that the asserted
/// inequality reads residual >= 0.
struct CheckResult {
    CheckStatus status;
    ExtReal residual;
};

namespace detail {

inline CheckResult classify(const ExtReal& residual) {
    int s = residual.sign();
    CheckStatus st = s == 0 ? CheckStatus::Equality
                            : (s > 0 ? CheckStatus::StrictInequality : CheckStatus::Violated);
    return {st, residual};
}

} // namespace detail

/// Transference between the extremal slopes of the outer components and the
/// classical exponents: (1+omega)(n+psi_lo_1) = (1+omega_hat)(n+psi_hi_1) =
/// n+1 and (1+omega_star)(1-psi_hi_{n+1}) = (1+omega_hat_star)(1-psi_lo_{n+1})
/// = n+1, with psi_lo_1 = -n meaning omega = inf (and its three analogues).
inline ClassicalExponents to_classical(const PhiLimits& limits, int n) {
    auto first_kind = [n](const QuadExt& psi) -> ExtReal {
        QuadExt den = QuadExt(n) + psi;
        if (den.sign() == 0) return ExtReal::pos_inf();
        return ExtReal((QuadExt(1) - psi) / den);
    };
    auto second_kind = [n](const QuadExt& psi) -> ExtReal {
        QuadExt den = QuadExt(1) - psi;
        if (den.sign() == 0) return ExtReal::pos_inf();
        return ExtReal((QuadExt(n) + psi) / den);
    };
    ClassicalExponents e;
    e.omega = first_kind(limits.lower.front());
    e.omega_hat = first_kind(limits.upper.front());
    e.omega_star = second_kind(limits.upper.back());
    e.omega_hat_star = second_kind(limits.lower.back());
    return e;
}

inline ClassicalExponents to_classical(const Template& t) {
    auto e = to_classical(phi_limits(t), t.n);
    e.intermediate = intermediate_exponents(t);
    return e;
}

/// omega >= (omega_hat_star - 1) omega_star /
///          (((n-2) omega_hat_star + 1) omega_star + (n-1) omega_hat_star).
inline CheckResult check_BL1(const ClassicalExponents& e, int n) {
    ExtReal rhs;
    if (e.omega_hat_star.is_pos_inf()) {
        // forces omega_star = inf as well
        rhs = (n == 2) ? ExtReal::pos_inf() : ExtReal(QuadExt(Rational(1, n - 2)));
    } else if (e.omega_star.is_pos_inf()) {
        QuadExt hs = e.omega_hat_star.finite();
        rhs = ExtReal((hs - QuadExt(1)) / (QuadExt(n - 2) * hs + QuadExt(1)));
    } else {
        QuadExt ws = e.omega_star.finite(), hs = e.omega_hat_star.finite();
        rhs = ExtReal((hs - QuadExt(1)) * ws /
                      ((QuadExt(n - 2) * hs + QuadExt(1)) * ws + QuadExt(n - 1) * hs));
    }
    if (e.omega.is_pos_inf() && rhs.is_pos_inf())
        throw std::domain_error("BL1 indeterminate: omega and bound both infinite");
    return detail::classify(e.omega - rhs);
}

/// omega_star >= ((n-1) omega + omega_hat + n - 2) / (1 - omega_hat).
inline CheckResult check_BL2(const ClassicalExponents& e, int n) {
    ExtReal rhs;
    if (e.omega.is_pos_inf() || e.omega_hat == ExtReal(QuadExt(1))) {
        rhs = ExtReal::pos_inf();
    } else {
        QuadExt w = e.omega.finite(), h = e.omega_hat.finite();
        rhs = ExtReal((QuadExt(n - 1) * w + h + QuadExt(n - 2)) / (QuadExt(1) - h));
    }
    if (e.omega_star.is_pos_inf() && rhs.is_pos_inf())
        throw std::domain_error("BL2 indeterminate: omega_star and bound both infinite");
    return detail::classify(e.omega_star - rhs);
}

/// n psi_lo_1 + psi_hi_{n+1} <=
///   -psi_lo_{n+1} ((n+1)/(n-1) + psi_lo_1 + 2 psi_hi_{n+1}/(n-1)),
/// reported as residual RHS - LHS so that >= 0 means the estimate holds.
inline CheckResult check_SS1(const PhiLimits& l, int n) {
    QuadExt lhs = QuadExt(n) * l.lower.front() + l.upper.back();
    QuadExt rhs = -l.lower.back() * (QuadExt(Rational(n + 1, n - 1)) + l.lower.front() +
                                     QuadExt(Rational(2, n - 1)) * l.upper.back());
    return detail::classify(ExtReal(rhs - lhs));
}

/// n psi_hi_{n+1} + psi_lo_1 >=
///   -psi_hi_1 ((n+1)/(n-1) + psi_hi_{n+1} + 2 psi_lo_1/(n-1)).
inline CheckResult check_SS2(const PhiLimits& l, int n) {
    QuadExt lhs = QuadExt(n) * l.upper.back() + l.lower.front();
    QuadExt rhs = -l.upper.front() * (QuadExt(Rational(n + 1, n - 1)) + l.upper.back() +
                                      QuadExt(Rational(2, n - 1)) * l.lower.front());
    return detail::classify(ExtReal(lhs - rhs));
}

struct KhintchinePair {
    CheckResult left;    // omega_star >= n omega + n - 1
    CheckResult right;   // omega >= omega_star / ((n-1) omega_star + n)
};

inline KhintchinePair check_khintchine(const ClassicalExponents& e, int n) {
    KhintchinePair out{};
    if (e.omega_star.is_pos_inf() && e.omega.is_pos_inf())
        throw std::domain_error("Khintchine indeterminate: both exponents infinite");
    ExtReal left_rhs = e.omega.is_pos_inf() ? ExtReal::pos_inf()
                                            : ExtReal(QuadExt(n) * e.omega.finite() + QuadExt(n - 1));
    out.left = detail::classify(e.omega_star - left_rhs);
    ExtReal right_rhs =
        e.omega_star.is_pos_inf()
            ? ExtReal(QuadExt(Rational(1, n - 1)))
            : ExtReal(e.omega_star.finite() /
                      (QuadExt(n - 1) * e.omega_star.finite() + QuadExt(n)));
    out.right = detail::classify(e.omega - right_rhs);
    return out;
}

/// The two split chains:
///   (1+1/omega_star)/(1+1/omega) >= omega_hat >= (1 - 1/omega_hat_star)/(n-1)
///   (1+omega_star)/(1+omega)     >= omega_hat_star >= (n-1)/(1-omega_hat)
struct SplittingChecks {
    CheckResult first_upper, first_lower;
    CheckResult second_upper, second_lower;
};

inline SplittingChecks check_splitting(const ClassicalExponents& e, int n) {
    SplittingChecks out{};
    ExtReal one(QuadExt(1));

    ExtReal inv_ws = e.omega_star.is_pos_inf() ? ExtReal(QuadExt(0)) : one / e.omega_star;
    ExtReal inv_w = e.omega.is_pos_inf() ? ExtReal(QuadExt(0)) : one / e.omega;
    out.first_upper = detail::classify((one + inv_ws) / (one + inv_w) - e.omega_hat);

    ExtReal inv_hs = e.omega_hat_star.is_pos_inf() ? ExtReal(QuadExt(0)) : one / e.omega_hat_star;
    out.first_lower = detail::classify(e.omega_hat - (one - inv_hs) / ExtReal(QuadExt(n - 1)));

    if (e.omega_star.is_pos_inf() && e.omega.is_pos_inf())
        throw std::domain_error("splitting indeterminate: omega and omega_star both infinite");
    ExtReal second_bound = e.omega_star.is_pos_inf()
                               ? ExtReal::pos_inf()
                               : (one + e.omega_star) / (one + e.omega);
    if (second_bound.is_pos_inf() && e.omega_hat_star.is_pos_inf())
        throw std::domain_error("splitting indeterminate: infinite bound vs infinite exponent");
    out.second_upper = detail::classify(second_bound - e.omega_hat_star);

    ExtReal lower2 = (e.omega_hat == one)
                         ? ExtReal::pos_inf()
                         : ExtReal(QuadExt(n - 1) / (QuadExt(1) - e.omega_hat.finite()));
    if (lower2.is_pos_inf() && e.omega_hat_star.is_pos_inf())
        throw std::domain_error("splitting indeterminate: infinite bound vs infinite exponent");
    out.second_lower = detail::classify(e.omega_hat_star - lower2);
    return out;
}

struct SurfacePoint {
    bool member = false;
    bool limit_convention = false;   // a path-limit convention was applied
    ExtReal completed;               // the exponent the surface determines
    ExtReal hat_partner;             // the remaining hat exponent
};

/// Equality surface of the first estimate: for w_star in [n, inf] and
/// w in [rho1, rho2], the missing exponents are
/// w_hat_star = w_star(w+1)/(w_star - (n-2) w w_star - (n-1) w) and
/// omega_hat = (1 + 1/w_star)/(1 + 1/w).
inline SurfacePoint equality_surface_BL1(int n, const ExtReal& w_star, const ExtReal& w) {
    SurfacePoint out;
    if (w_star.is_neg_inf() || w.is_neg_inf()) return out;
    if (w_star.is_finite() && w_star < ExtReal(QuadExt(n))) return out;
    auto [r1, r2] = rho(n, w_star);
    if (w < r1 || w > r2) return out;
    out.member = true;

    ExtReal one(QuadExt(1));
    if (w_star.is_pos_inf() && w.is_pos_inf()) {
        out.completed = ExtReal::pos_inf();   // only reachable for n = 2 along rho2
        out.limit_convention = true;
        out.hat_partner = one;
        return out;
    }
    if (w_star.is_pos_inf()) {
        QuadExt wv = w.finite();
        QuadExt den = QuadExt(1) - QuadExt(n - 2) * wv;
        out.completed = den.sign() == 0 ? ExtReal::pos_inf() : ExtReal((wv + QuadExt(1)) / den);
        if (den.sign() == 0) out.limit_convention = true;
    } else {
        QuadExt ws = w_star.finite(), wv = w.finite();
        QuadExt den = ws - QuadExt(n - 2) * wv * ws - QuadExt(n - 1) * wv;
        if (den.sign() == 0) throw std::domain_error("degenerate denominator on BL1 surface");
        out.completed = ExtReal(ws * (wv + QuadExt(1)) / den);
    }
    ExtReal inv_ws = w_star.is_pos_inf() ? ExtReal(QuadExt(0)) : one / w_star;
    ExtReal inv_w = w.is_pos_inf() ? ExtReal(QuadExt(0)) : one / w;
    out.hat_partner = (one + inv_ws) / (one + inv_w);
    return out;
}

/// Equality surface of the second estimate: for w in [1/n, inf] and
/// w_star in [tau1, tau2], w_hat = (w_star - (n-1) w - n + 2)/(1 + w_star)
/// and omega_hat_star = (1 + w_star)/(1 + w). At (inf, inf) the tau2-path
/// limits w_hat -> 1, w_hat_star -> inf are applied and flagged.
inline SurfacePoint equality_surface_BL2(int n, const ExtReal& w, const ExtReal& w_star) {
    SurfacePoint out;
    if (w.is_neg_inf() || w_star.is_neg_inf()) return out;
    if (w.is_finite() && w < ExtReal(QuadExt(Rational(1, n)))) return out;
    auto [t1, t2] = tau(n, w);
    if (w_star < t1 || w_star > t2) return out;
    out.member = true;

    if (w.is_pos_inf()) {   // membership then forces w_star = inf
        out.completed = ExtReal(QuadExt(1));
        out.hat_partner = ExtReal::pos_inf();
        out.limit_convention = true;
        return out;
    }
    QuadExt wv = w.finite();
    if (w_star.is_pos_inf()) {
        out.completed = ExtReal(QuadExt(1));
        out.hat_partner = ExtReal::pos_inf();
        out.limit_convention = true;
        return out;
    }
    QuadExt ws = w_star.finite();
    out.completed = ExtReal((ws - QuadExt(n - 1) * wv - QuadExt(n - 2)) / (QuadExt(1) + ws));
    out.hat_partner = ExtReal((QuadExt(1) + ws) / (QuadExt(1) + wv));
    return out;
}

struct ChainCheck {
    std::string name;
    CheckResult result;
};

namespace detail {

inline ExtReal chain_ratio(const ExtReal& num, const ExtReal& den) {
    if (den.sign() == 0) return ExtReal::pos_inf();
    return num / den;
}

} // namespace detail

/// Identity chains on the intermediate exponents. All four families hold as
/// ">=" for every template; the first two become identities exactly on the
/// dual equality manifold, the last two on the simultaneous one.
///   rise-first: omega_1 = (omega + omega_hat)/(1 - omega_hat)
///   rise[d]:    omega_{d+1} = ((n-d) omega_d + 1)/(n-d-1),  1 <= d <= n-2
///   fall[d]:    omega_{d-1} = d omega_d/(omega_d + d + 1),  1 <= d <= n-2
///   fall-last:  omega_{n-2} = (omega_hat_star - 1) omega_star /
///                             (omega_star + omega_hat_star)
inline std::vector<ChainCheck> check_chain(const ClassicalExponents& e, int n) {
    if (!e.intermediate || (int)e.intermediate->size() != n)
        throw std::domain_error("chain check requires the n intermediate exponents");
    const auto& om = *e.intermediate;
    std::vector<ChainCheck> out;
    ExtReal one(QuadExt(1));

    ExtReal rise_first_rhs = (e.omega_hat == one)
                                 ? ExtReal::pos_inf()
                                 : (e.omega + e.omega_hat) / (one - e.omega_hat);
    if (om[1].is_pos_inf() && rise_first_rhs.is_pos_inf())
        out.push_back({"rise-first", {CheckStatus::Equality, ExtReal(QuadExt(0))}});
    else
        out.push_back({"rise-first", detail::classify(om[1] - rise_first_rhs)});

    for (int d = 1; d <= n - 2; ++d) {
        ExtReal rhs = om[d].is_pos_inf()
                          ? ExtReal::pos_inf()
                          : ExtReal((QuadExt(n - d) * om[d].finite() + QuadExt(1)) /
                                    QuadExt(n - d - 1));
        if (om[d + 1].is_pos_inf() && rhs.is_pos_inf())
            out.push_back({"rise[" + std::to_string(d) + "]",
                           {CheckStatus::Equality, ExtReal(QuadExt(0))}});
        else
            out.push_back({"rise[" + std::to_string(d) + "]", detail::classify(om[d + 1] - rhs)});
    }

    for (int d = 1; d <= n - 2; ++d) {
        ExtReal rhs = om[d].is_pos_inf()
                          ? ExtReal(QuadExt(d))
                          : ExtReal(QuadExt(d) * om[d].finite() /
                                    (om[d].finite() + QuadExt(d + 1)));
        out.push_back({"fall[" + std::to_string(d) + "]", detail::classify(om[d - 1] - rhs)});
    }

    ExtReal fall_last_rhs;
    if (e.omega_hat_star.is_pos_inf())
        fall_last_rhs = e.omega_star.is_pos_inf() ? ExtReal::pos_inf() : e.omega_star;
    else if (e.omega_star.is_pos_inf())
        fall_last_rhs = ExtReal(e.omega_hat_star.finite() - QuadExt(1));
    else
        fall_last_rhs =
            ExtReal((e.omega_hat_star.finite() - QuadExt(1)) * e.omega_star.finite() /
                    (e.omega_star.finite() + e.omega_hat_star.finite()));
    if (om[n - 2].is_pos_inf() && fall_last_rhs.is_pos_inf())
        out.push_back({"fall-last", {CheckStatus::Equality, ExtReal(QuadExt(0))}});
    else
        out.push_back({"fall-last", detail::classify(om[n - 2] - fall_last_rhs)});
    return out;
}

} // namespace pgn
