#pragma once

#include "pgn/constructions.hpp"
#include "pgn/exponents.hpp"

namespace pgn {

/// Closed-form lower bounds for the Hausdorff and packing dimensions of the
/// level sets behind a construction. These are reported as lower bounds for
/// set dimensions, never as the dimensions themselves.
struct DimensionBounds {
    enum class Kind { Simultaneous, Dual };
    Kind kind;
    QuadExt primary;          // A (simultaneous) or D (dual)
    QuadExt packing_first;    // B or E
    QuadExt packing_second;   // C or F
    QuadExt hausdorff_lb;     // n-2+A or D
    QuadExt packing_lb;       // max(B,C) or max(E,F)
};

inline DimensionBounds sim_dimension_bounds(int n, const QuadExt& t, const QuadExt& mu) {
    sim_params(n, t, mu);   // range validation only
    if ((t - QuadExt(1)).sign() == 0) throw std::domain_error("bounds diverge at t=1");
    if (t.sign() == 0) throw std::domain_error("bounds indeterminate at t=0");
    const QuadExt one(1);
    QuadExt P = one + t + QuadExt(n - 1) * mu;
    QuadExt A = (one - t) / (QuadExt(2) * t + QuadExt(n - 1) * mu) / QuadExt(n + 1) *
                (QuadExt(3) * t + QuadExt(2 * (n - 1)) * mu - QuadExt(n) +
                 QuadExt(n) * P * P / (one - t));
    QuadExt B = QuadExt(n) - (QuadExt(2) - A) * QuadExt(n + 1) /
                                 (QuadExt(n + 1) + QuadExt(2) * t + QuadExt(n - 1) * mu);
    QuadExt C = QuadExt(n - 2) + A * QuadExt(n + 1) /
                                     (QuadExt(n + 1) + QuadExt(n - 1) * t +
                                      QuadExt(n * (n - 1)) * mu);
    DimensionBounds out{DimensionBounds::Kind::Simultaneous, A, B, C, QuadExt(n - 2) + A,
                        (B - C).sign() >= 0 ? B : C};
    return out;
}

inline DimensionBounds dual_dimension_bounds(int n, const QuadExt& s, const QuadExt& nu) {
    dual_params(n, s, nu);   // range validation only
    if ((s + QuadExt(n)).sign() == 0) throw std::domain_error("bounds diverge at s=-n");
    if (s.sign() == 0) throw std::domain_error("bounds indeterminate at s=0");
    const QuadExt one(1);
    QuadExt D = QuadExt(n) - (s - s * s) / (QuadExt(2) * s + QuadExt(n - 1) * nu);
    QuadExt E = QuadExt(n) - (QuadExt(n) - D) * QuadExt(n + 1) * (s + QuadExt(n - 1) * nu + one) /
                                 ((one - s) * (QuadExt(n + 1) + s - nu));
    QuadExt F = D * QuadExt(n + 1) / (QuadExt(n + 1) + QuadExt(2) * s + QuadExt(n - 1) * nu);
    DimensionBounds out{DimensionBounds::Kind::Dual, D, E, F, D,
                        (E - F).sign() >= 0 ? E : F};
    return out;
}

/// The template's long-run contraction averages must reproduce the closed
/// forms exactly: delta_lo = hausdorff_lb and delta_hi = packing_lb.
inline std::pair<CheckResult, CheckResult> crosscheck_rates(const Template& t,
                                                            const DimensionBounds& bounds) {
    auto [lo, hi] = contraction_rates(t);
    CheckResult first = detail::classify(ExtReal(lo - bounds.hausdorff_lb));
    CheckResult second = detail::classify(ExtReal(hi - bounds.packing_lb));
    return {first, second};
}

} // namespace pgn
