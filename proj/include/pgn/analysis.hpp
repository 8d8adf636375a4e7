#pragma once

#include "pgn/template_model.hpp"

#include <vector>

namespace pgn {

/// Extremal average slopes of the components: psi_lo[j] = liminf P_j(q)/q,
/// psi_hi[j] = limsup P_j(q)/q (0-indexed by component).
struct PhiLimits {
    std::vector<QuadExt> lower;
    std::vector<QuadExt> upper;
};

/// On a linear piece, P(q)/q = slope + c/q is monotone, so the extreme
/// ratios over one period sit at breakpoints; the scaled later periods
/// repeat the same ratios and the preperiod never matters in the limit.
inline PhiLimits phi_limits(const Template& t) {
    require_valid(t);
    Template nt = normalized(t);
    const int m = nt.components();
    PhiLimits out;
    out.lower.assign(m, QuadExt(0));
    out.upper.assign(m, QuadExt(0));
    for (int j = 0; j < m; ++j) {
        bool first = true;
        for (const auto& bp : nt.period) {
            QuadExt ratio = bp.values[j] / bp.q;
            if (first || (ratio - out.lower[j]).sign() < 0) out.lower[j] = ratio;
            if (first || (ratio - out.upper[j]).sign() > 0) out.upper[j] = ratio;
            first = false;
        }
    }
    return out;
}

struct ContractionPiece {
    QuadExt from, to;   // subinterval of [q0, q1]
    int delta;          // local contraction rate, in [0, n]
};

using ContractionProfile = std::vector<ContractionPiece>;

/// Right-sided local rate on each period segment: delta = kappa - 1 with
/// kappa the largest j whose slope stays below 1; if every component has
/// slope < 1 then kappa = n + 1.
inline ContractionProfile contraction_profile(const Template& t) {
    require_valid(t);
    Template nt = normalized(t);
    auto segs = detail::segments_of(nt.period);
    ContractionProfile profile;
    for (const auto& s : segs) {
        int kappa = 0;
        for (int j = 0; j < nt.components(); ++j)
            if ((s.slopes[j] - QuadExt(1)).sign() < 0) kappa = j + 1;
        int delta = kappa - 1;
        if (!profile.empty() && profile.back().delta == delta &&
            (profile.back().to - s.a).sign() == 0)
            profile.back().to = s.b;
        else
            profile.push_back({s.a, s.b, delta});
    }
    return profile;
}

/// Long-run lower/upper averages of the contraction rate. With the period
/// rescaled to [1, lambda], the running average tends to
/// h(x) = (avg + integral_1^x delta) / x, whose extremes over a period sit
/// at profile breakpoints because sign(h') = sign(delta(x) - h(x)).
inline std::pair<QuadExt, QuadExt> contraction_rates(const Template& t) {
    auto profile = contraction_profile(t);
    const QuadExt q0 = normalized(t).period.front().q;
    QuadExt total(0);
    for (const auto& p : profile) total += QuadExt(p.delta) * (p.to - p.from);
    QuadExt period_len = profile.back().to - profile.front().from;
    QuadExt avg = total / period_len;

    QuadExt lo = avg, hi = avg;   // h at the period endpoints equals avg
    QuadExt cumulative(0);
    for (const auto& p : profile) {
        cumulative += QuadExt(p.delta) * (p.to - p.from);
        QuadExt h = (avg * q0 + cumulative) / p.to;
        if ((h - lo).sign() < 0) lo = h;
        if ((h - hi).sign() > 0) hi = h;
    }
    return {lo, hi};
}

/// Intermediate approximation exponent omega_d, 0 <= d <= n-1, from
/// 1/(1+omega_d) = liminf_q (n - d - sum_{j=d+2}^{n+1} P_j(q)/q)/(n+1).
/// d = 0 recovers omega, d = n-1 recovers omega_star. Infinite when the
/// liminf vanishes.
inline ExtReal intermediate_exponent(const Template& t, int d) {
    if (d < 0 || d > t.n - 1) throw std::domain_error("intermediate exponent index out of range");
    require_valid(t);
    Template nt = normalized(t);
    bool first = true;
    QuadExt tail_max(0);
    for (const auto& bp : nt.period) {
        QuadExt sum(0);
        for (int j = d + 1; j < nt.components(); ++j) sum += bp.values[j];
        QuadExt ratio = sum / bp.q;
        if (first || (ratio - tail_max).sign() > 0) tail_max = ratio;
        first = false;
    }
    QuadExt denom = QuadExt(t.n - d) - tail_max;
    if (denom.sign() == 0) return ExtReal::pos_inf();
    return ExtReal(QuadExt(t.n + 1) / denom - QuadExt(1));
}

inline std::vector<ExtReal> intermediate_exponents(const Template& t) {
    std::vector<ExtReal> out;
    out.reserve(t.n);
    for (int d = 0; d < t.n; ++d) out.push_back(intermediate_exponent(t, d));
    return out;
}

} // namespace pgn
