#pragma once

#include "pgn/analysis.hpp"
#include "pgn/functions.hpp"

#include <cassert>
#include <stdexcept>
#include <vector>

namespace pgn {

/// Parameters (t, mu) of the simultaneous-side construction, with the
/// derived quantities theta = -(t+(n-1)mu) and
/// sigma = (1-n)(t+n*mu)/(n+1+2t+(n-1)mu).
struct SimParams {
    int n;
    QuadExt t, mu;
    QuadExt theta, sigma;
};

/// Parameters (s, nu) of the dual-side construction, with
/// vartheta = -(s+(n-1)nu) and gamma = (1-n)(s+n*nu)/(n+1+2s+(n-1)nu).
struct DualParams {
    int n;
    QuadExt s, nu;
    QuadExt vartheta, gamma;
};

inline SimParams sim_params(int n, const QuadExt& t, const QuadExt& mu) {
    if (n < 2) throw std::domain_error("n must be >= 2");
    if (!t.is_rational()) throw std::domain_error("t must be rational");
    if (t.sign() < 0 || (t - QuadExt(1)).sign() > 0) throw std::domain_error("t outside [0, 1]");
    QuadExt lower = mu0(n, t.a());
    if ((mu - lower).sign() < 0)
        throw std::domain_error("mu below mu0 (non-existence region)");
    if ((mu + t / QuadExt(n)).sign() > 0)
        throw std::domain_error("mu above -t/n (Khintchine bound)");
    SimParams p{n, t, mu, QuadExt(0), QuadExt(0)};
    p.theta = -(t + QuadExt(n - 1) * mu);
    p.sigma = QuadExt(1 - n) * (t + QuadExt(n) * mu) /
              (QuadExt(n + 1) + QuadExt(2) * t + QuadExt(n - 1) * mu);
    return p;
}

inline DualParams dual_params(int n, const QuadExt& s, const QuadExt& nu) {
    if (n < 2) throw std::domain_error("n must be >= 2");
    if (!s.is_rational()) throw std::domain_error("s must be rational");
    if ((s + QuadExt(n)).sign() < 0 || s.sign() > 0) throw std::domain_error("s outside [-n, 0]");
    if ((nu + s / QuadExt(n)).sign() < 0)
        throw std::domain_error("nu below -s/n (Khintchine bound)");
    QuadExt upper = nu0(n, s.a());
    if ((nu - upper).sign() > 0)
        throw std::domain_error("nu above nu0 (non-existence region)");
    DualParams p{n, s, nu, QuadExt(0), QuadExt(0)};
    p.vartheta = -(s + QuadExt(n - 1) * nu);
    p.gamma = QuadExt(1 - n) * (s + QuadExt(n) * nu) /
              (QuadExt(n + 1) + QuadExt(2) * s + QuadExt(n - 1) * nu);
    return p;
}

namespace detail {

struct SegmentPlan {
    QuadExt to;
    std::vector<QuadExt> slopes;
};

inline std::vector<Breakpoint> integrate_plan(const QuadExt& q_start,
                                              std::vector<QuadExt> v_start,
                                              const std::vector<SegmentPlan>& plan) {
    std::vector<Breakpoint> bps;
    bps.push_back({q_start, v_start});
    for (const auto& seg : plan) {
        const QuadExt& q = bps.back().q;
        int cmp = (seg.to - q).sign();
        if (cmp == 0) continue;   // zero-length segment, skip
        if (cmp < 0) throw std::logic_error("construction produced decreasing breakpoints");
        QuadExt len = seg.to - q;
        std::vector<QuadExt> vals = bps.back().values;
        for (std::size_t j = 0; j < vals.size(); ++j) vals[j] += seg.slopes[j] * len;
        bps.push_back({seg.to, std::move(vals)});
    }
    return bps;
}

/// Slope vector with value `head` on components [0, split) and `tail` after.
inline std::vector<QuadExt> split_slopes(int m, int split, const QuadExt& head, const QuadExt& tail) {
    std::vector<QuadExt> s(m, tail);
    for (int j = 0; j < split; ++j) s[j] = head;
    return s;
}

inline std::vector<QuadExt> scaled_values(const std::vector<QuadExt>& ratios, const QuadExt& q) {
    std::vector<QuadExt> out;
    out.reserve(ratios.size());
    for (const auto& r : ratios) out.push_back(r * q);
    return out;
}

inline void check_period_closes(const Template& t) {
    const auto& first = t.period.front();
    const auto& last = t.period.back();
    for (std::size_t j = 0; j < first.values.size(); ++j)
        if ((last.values[j] - t.lambda * first.values[j]).sign() != 0)
            throw std::logic_error("construction does not close up self-similarly");
}

} // namespace detail

/// All components identically zero; the associated exponents sit at the
/// Dirichlet point (1/n, 1/n, n, n).
inline Template trivial_template(int n) {
    if (n < 2) throw std::domain_error("n must be >= 2");
    Template t;
    t.n = n;
    std::vector<QuadExt> zeros(n + 1, QuadExt(0));
    t.preperiod = {{QuadExt(0), zeros}, {QuadExt(1), zeros}};
    t.period = {{QuadExt(1), zeros}, {QuadExt(2), zeros}};
    t.lambda = QuadExt(2);
    return t;
}

/// Simultaneous-side self-similar template. The period runs
/// q0 <= q~1 <= q~2 <= q~3 <= q1 with the one decaying component handed
/// from P_{n+1} to P_n to the glued block P_1..P_n and back.
inline Template build_simultaneous(int n, const QuadExt& t, const QuadExt& mu) {
    if (t.sign() == 0) throw std::domain_error("period collapses at t=0");
    if ((t - QuadExt(1)).sign() == 0) throw std::domain_error("degenerate preperiod at t=1");
    SimParams p = sim_params(n, t, mu);
    const int m = n + 1;
    const QuadExt one(1), np1(n + 1);
    const QuadExt q0 = np1;   // clears the n+1 denominators below

    const QuadExt qpp = (one - p.theta) * QuadExt(n) / np1 * q0;
    const QuadExt qp = (QuadExt(n) + t) / np1 * q0;
    const QuadExt minus_n(-n), plus(1);
    const QuadExt inv_n(Rational(-1, n)), pack(Rational(-2, n - 1));

    std::vector<detail::SegmentPlan> pre_plan = {
        {qpp, detail::split_slopes(m, n, inv_n, plus)},
        {qp, detail::split_slopes(m, n - 1, pack, plus)},
        {q0, detail::split_slopes(m, n, plus, minus_n)},
    };
    auto preperiod = detail::integrate_plan(QuadExt(0), std::vector<QuadExt>(m, QuadExt(0)), pre_plan);

    const QuadExt qt1 = (np1 + QuadExt(2) * t + QuadExt(n - 1) * mu) / np1 * q0;
    const QuadExt qt2 = (t - mu + np1) / np1 * q0;
    const QuadExt qt3 = (one + t + QuadExt(n - 1) * mu) *
                        (one + QuadExt(n) + QuadExt(n - 1) * (t + QuadExt(n) * mu)) /
                        (np1 * (one - t)) * q0;
    const QuadExt q1 = (one - p.theta) / (one - t) * q0;

    std::vector<QuadExt> start_ratios(m, mu);
    start_ratios[n - 1] = p.theta;
    start_ratios[n] = t;
    auto start_vals = detail::scaled_values(start_ratios, q0);

    std::vector<detail::SegmentPlan> period_plan = {
        {qt1, detail::split_slopes(m, n, plus, minus_n)},
        {qt2, [&] {
             auto s = detail::split_slopes(m, n - 1, plus, plus);
             s[n - 1] = minus_n;
             return s;
         }()},
        {qt3, detail::split_slopes(m, n, inv_n, plus)},
        {q1, [&] {
             auto s = detail::split_slopes(m, n - 1, pack, plus);
             return s;
         }()},
    };

    Template out;
    out.n = n;
    out.preperiod = std::move(preperiod);
    out.period = detail::integrate_plan(q0, start_vals, period_plan);
    out.lambda = q1 / q0;
    detail::check_period_closes(out);
    return normalized(out);
}

/// Dual-side self-similar template; same skeleton run in reverse with the
/// roles of the first two and the last n components exchanged, so the
/// period runs q0 <= q~3 <= q~2 <= q~1 <= q1.
inline Template build_dual(int n, const QuadExt& s, const QuadExt& nu) {
    if (s.sign() == 0) throw std::domain_error("period collapses at s=0");
    if ((s + QuadExt(n)).sign() == 0) throw std::domain_error("degenerate at s=-n");
    DualParams p = dual_params(n, s, nu);
    const int m = n + 1;
    const QuadExt one(1), np1(n + 1);
    const QuadExt q0 = np1;
    const QuadExt q1 = q0 * (one - s) / (one - p.vartheta);

    const QuadExt qp = (one - s) / np1 * q0;
    const QuadExt qpp = (QuadExt(2) - s - p.vartheta) / np1 * q0;
    const QuadExt minus_n(-n), plus(1);
    const QuadExt inv_n(Rational(-1, n)), pack(Rational(-2, n - 1));

    auto dual_slopes = [&](QuadExt s1, QuadExt s2, QuadExt rest) {
        std::vector<QuadExt> v(m, rest);
        v[0] = s1;
        v[1] = s2;
        return v;
    };

    std::vector<detail::SegmentPlan> pre_plan = {
        {qp, dual_slopes(minus_n, plus, plus)},
        {qpp, dual_slopes(plus, minus_n, plus)},
        {q0, dual_slopes(plus, plus, pack)},
    };
    auto preperiod = detail::integrate_plan(QuadExt(0), std::vector<QuadExt>(m, QuadExt(0)), pre_plan);

    const QuadExt qt1 = (np1 + QuadExt(2) * s + QuadExt(n - 1) * nu) / np1 * q1;
    const QuadExt qt2 = (np1 + s - nu) / np1 * q1;
    const QuadExt qt3 = (one + s + QuadExt(n - 1) * nu) *
                        (one + QuadExt(n) + QuadExt(n - 1) * (s + QuadExt(n) * nu)) /
                        (np1 * (one - s)) * q1;

    std::vector<QuadExt> start_ratios(m, nu);
    start_ratios[0] = s;
    start_ratios[1] = p.vartheta;
    auto start_vals = detail::scaled_values(start_ratios, q0);

    std::vector<detail::SegmentPlan> period_plan = {
        {qt3, dual_slopes(plus, plus, pack)},
        {qt2, dual_slopes(plus, inv_n, inv_n)},
        {qt1, dual_slopes(plus, minus_n, plus)},
        {q1, dual_slopes(minus_n, plus, plus)},
    };

    Template out;
    out.n = n;
    out.preperiod = std::move(preperiod);
    out.period = detail::integrate_plan(q0, start_vals, period_plan);
    out.lambda = q1 / q0;
    detail::check_period_closes(out);
    return normalized(out);
}

/// Variant of the simultaneous template that pins the lower extremal slope
/// of P_{n+1} to a prescribed eta in [0, sigma]: P_n and P_{n+1} stay glued
/// past q~1 on a slope -(n-1)/2 stretch down to the ratio eta, and the
/// remaining switch points are re-solved so the period still closes.
inline Template build_simultaneous_extended(int n, const QuadExt& t, const QuadExt& mu,
                                            const QuadExt& eta) {
    if (t.sign() == 0) throw std::domain_error("period collapses at t=0");
    if ((t - QuadExt(1)).sign() == 0) throw std::domain_error("degenerate preperiod at t=1");
    SimParams p = sim_params(n, t, mu);
    if (eta.sign() < 0 || (eta - p.sigma).sign() > 0)
        throw std::domain_error("eta outside [0, sigma]");
    const int m = n + 1;
    const QuadExt one(1), np1(n + 1);
    const QuadExt q0 = np1;

    const QuadExt qpp = (one - p.theta) * QuadExt(n) / np1 * q0;
    const QuadExt qp = (QuadExt(n) + t) / np1 * q0;
    const QuadExt minus_n(-n), plus(1);
    const QuadExt inv_n(Rational(-1, n)), pack(Rational(-2, n - 1));
    const QuadExt glide(Rational(-(n - 1), 2));

    std::vector<detail::SegmentPlan> pre_plan = {
        {qpp, detail::split_slopes(m, n, inv_n, plus)},
        {qp, detail::split_slopes(m, n - 1, pack, plus)},
        {q0, detail::split_slopes(m, n, plus, minus_n)},
    };
    auto preperiod = detail::integrate_plan(QuadExt(0), std::vector<QuadExt>(m, QuadExt(0)), pre_plan);

    const QuadExt qt1 = (np1 + QuadExt(2) * t + QuadExt(n - 1) * mu) / np1 * q0;
    const QuadExt rt = qt1 * (QuadExt(2) * p.sigma + QuadExt(n - 1)) /
                       (QuadExt(2) * eta + QuadExt(n - 1));
    const QuadExt qt2 = (rt * (QuadExt(n) + eta) + (one - mu) * q0) / np1;
    const QuadExt q1 = rt * (one - eta) / (one - t);
    const QuadExt v2 = mu * q0 + (qt2 - q0);   // value where P_n lands on the glued low block
    const QuadExt qt3 = QuadExt(n) / np1 * (v2 + qt2 / QuadExt(n) + (one - p.theta) * q1);

    std::vector<QuadExt> start_ratios(m, mu);
    start_ratios[n - 1] = p.theta;
    start_ratios[n] = t;
    auto start_vals = detail::scaled_values(start_ratios, q0);

    auto top_glide = [&] {
        auto s = detail::split_slopes(m, n - 1, plus, glide);
        return s;
    }();
    auto hand_down = [&] {
        auto s = detail::split_slopes(m, n - 1, plus, plus);
        s[n - 1] = minus_n;
        return s;
    }();

    std::vector<detail::SegmentPlan> period_plan = {
        {qt1, detail::split_slopes(m, n, plus, minus_n)},
        {rt, top_glide},
        {qt2, hand_down},
        {qt3, detail::split_slopes(m, n, inv_n, plus)},
        {q1, detail::split_slopes(m, n - 1, pack, plus)},
    };

    Template out;
    out.n = n;
    out.preperiod = std::move(preperiod);
    out.period = detail::integrate_plan(q0, start_vals, period_plan);
    out.lambda = q1 / q0;
    detail::check_period_closes(out);
    return normalized(out);
}

/// Dual analogue: pins the upper extremal slope of P_1 to eta in [gamma, 0]
/// by letting P_1 and P_2 ride together on a -(n-1)/2 stretch before they
/// split at q~1.
inline Template build_dual_extended(int n, const QuadExt& s, const QuadExt& nu,
                                    const QuadExt& eta) {
    if (s.sign() == 0) throw std::domain_error("period collapses at s=0");
    if ((s + QuadExt(n)).sign() == 0) throw std::domain_error("degenerate at s=-n");
    DualParams p = dual_params(n, s, nu);
    if ((eta - p.gamma).sign() < 0 || eta.sign() > 0)
        throw std::domain_error("eta outside [gamma, 0]");
    const int m = n + 1;
    const QuadExt one(1), np1(n + 1);
    const QuadExt minus_n(-n), plus(1);
    const QuadExt inv_n(Rational(-1, n)), pack(Rational(-2, n - 1));
    const QuadExt glide(Rational(-(n - 1), 2));

    // period solved as a fraction of q1, then q1 fixed so that q0 = n+1
    const QuadExt qt1_u = (np1 + QuadExt(2) * s + QuadExt(n - 1) * nu) / np1;
    const QuadExt rt_u = qt1_u * (QuadExt(2) * p.gamma + QuadExt(n - 1)) /
                         (QuadExt(2) * eta + QuadExt(n - 1));
    const QuadExt qt2_u = (rt_u * (QuadExt(n) + eta) + (one - nu)) / np1;
    const QuadExt q0_u = rt_u * (one - eta) / (one - s);
    const QuadExt v2_u = eta * rt_u + QuadExt(n) * (rt_u - qt2_u);
    const QuadExt qt3_u = QuadExt(n) / np1 * (v2_u + qt2_u / QuadExt(n) + (one - p.vartheta) * q0_u);

    const QuadExt q0 = np1;
    const QuadExt q1 = q0 / q0_u;

    const QuadExt qp = (one - s) / np1 * q0;
    const QuadExt qpp = (QuadExt(2) - s - p.vartheta) / np1 * q0;

    auto dual_slopes = [&](QuadExt s1, QuadExt s2, QuadExt rest) {
        std::vector<QuadExt> v(m, rest);
        v[0] = s1;
        v[1] = s2;
        return v;
    };

    std::vector<detail::SegmentPlan> pre_plan = {
        {qp, dual_slopes(minus_n, plus, plus)},
        {qpp, dual_slopes(plus, minus_n, plus)},
        {q0, dual_slopes(plus, plus, pack)},
    };
    auto preperiod = detail::integrate_plan(QuadExt(0), std::vector<QuadExt>(m, QuadExt(0)), pre_plan);

    std::vector<QuadExt> start_ratios(m, nu);
    start_ratios[0] = s;
    start_ratios[1] = p.vartheta;
    auto start_vals = detail::scaled_values(start_ratios, q0);

    std::vector<detail::SegmentPlan> period_plan = {
        {qt3_u * q1, dual_slopes(plus, plus, pack)},
        {qt2_u * q1, dual_slopes(plus, inv_n, inv_n)},
        {rt_u * q1, dual_slopes(plus, minus_n, plus)},
        {qt1_u * q1, dual_slopes(glide, glide, plus)},
        {q1, dual_slopes(minus_n, plus, plus)},
    };

    Template out;
    out.n = n;
    out.preperiod = std::move(preperiod);
    out.period = detail::integrate_plan(q0, start_vals, period_plan);
    out.lambda = q1 / q0;
    detail::check_period_closes(out);
    return normalized(out);
}

} // namespace pgn
