#pragma once

#include "pgn/extreal.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace pgn {

struct Breakpoint {
    QuadExt q;
    std::vector<QuadExt> values;   // n+1 components, ordered
};

/// Self-similar periodic piecewise-linear system: a preperiod on [0, q0]
/// followed by one period on [q0, q1] that repeats forever scaled by
/// lambda = q1/q0 in each step. Components are linear between breakpoints.
struct Template {
    int n = 2;
    std::vector<Breakpoint> preperiod;   // first q = 0, last q = q0
    std::vector<Breakpoint> period;      // first q = q0, last q = q1
    QuadExt lambda;                      // q1 / q0 > 1

    int components() const { return n + 1; }
    const Breakpoint& start() const { return period.front(); }
    const Breakpoint& end() const { return period.back(); }
};

struct Violation {
    std::string clause;   // "structure", "i".."iv", "self-similarity"
    QuadExt q;
    std::string detail;
};

struct ValidationReport {
    std::vector<Violation> violations;
    bool ok() const { return violations.empty(); }
    std::string summary() const {
        std::string s;
        for (const auto& v : violations) {
            if (!s.empty()) s += "; ";
            s += "[" + v.clause + "] at q=" + v.q.str() + ": " + v.detail;
        }
        return s.empty() ? "valid" : s;
    }
};

namespace detail {

inline bool same_values(const std::vector<QuadExt>& x, const std::vector<QuadExt>& y) {
    if (x.size() != y.size()) return false;
    for (std::size_t i = 0; i < x.size(); ++i)
        if ((x[i] - y[i]).sign() != 0) return false;
    return true;
}

inline std::vector<Breakpoint> dedup_breakpoints(const std::vector<Breakpoint>& in,
                                                 ValidationReport* report) {
    std::vector<Breakpoint> out;
    for (const auto& bp : in) {
        if (!out.empty() && (bp.q - out.back().q).sign() == 0) {
            if (!same_values(bp.values, out.back().values) && report)
                report->violations.push_back(
                    {"structure", bp.q, "coincident breakpoints with different values"});
            continue;
        }
        if (!out.empty() && (bp.q - out.back().q).sign() < 0 && report)
            report->violations.push_back({"structure", bp.q, "breakpoints out of order"});
        out.push_back(bp);
    }
    return out;
}

} // namespace detail

/// Collapses zero-length segments (coincident breakpoints). Values at a
/// collapsed pair must agree; otherwise the template was malformed.
inline Template normalized(const Template& t) {
    Template out = t;
    ValidationReport scratch;
    out.preperiod = detail::dedup_breakpoints(t.preperiod, &scratch);
    out.period = detail::dedup_breakpoints(t.period, &scratch);
    if (!scratch.ok())
        throw std::invalid_argument("cannot normalize template: " + scratch.summary());
    return out;
}

namespace detail {

struct Segment {
    QuadExt a, b;                       // endpoints, a < b
    const std::vector<QuadExt>* va;     // values at a
    const std::vector<QuadExt>* vb;     // values at b
    std::vector<QuadExt> slopes;
};

inline std::vector<Segment> segments_of(const std::vector<Breakpoint>& bps) {
    std::vector<Segment> segs;
    for (std::size_t i = 0; i + 1 < bps.size(); ++i) {
        Segment s{bps[i].q, bps[i + 1].q, &bps[i].values, &bps[i + 1].values, {}};
        QuadExt len = s.b - s.a;
        s.slopes.reserve(bps[i].values.size());
        for (std::size_t j = 0; j < bps[i].values.size(); ++j)
            s.slopes.push_back((bps[i + 1].values[j] - bps[i].values[j]) / len);
        segs.push_back(std::move(s));
    }
    return segs;
}

inline bool slope_allowed(int n, const QuadExt& slope) {
    if (!slope.is_rational()) return false;
    if (slope == QuadExt(1)) return true;
    for (int k = 0; k <= n; ++k)
        if (slope == QuadExt(Rational(-k, n + 1 - k))) return true;
    return false;
}

} // namespace detail

/// Checks the defining conditions of a self-similar periodic n-template:
/// (i) zero component sum, (ii) ordering, (iii) slope range/set,
/// (iv) convexity of the partial sums F_j with slopes in {j, j-1-n} on
/// intervals where P_j < P_{j+1}, plus the self-similarity junction.
/// Violations are collected, not thrown.
inline ValidationReport validate(const Template& t) {
    ValidationReport report;
    const int m = t.components();

    if (t.n < 2) {
        report.violations.push_back({"structure", QuadExt(0), "n must be >= 2"});
        return report;
    }
    for (const auto* list : {&t.preperiod, &t.period})
        for (const auto& bp : *list)
            if ((int)bp.values.size() != m) {
                report.violations.push_back(
                    {"structure", bp.q, "breakpoint does not carry n+1 values"});
                return report;
            }
    if (t.preperiod.size() < 2 || t.period.size() < 2) {
        report.violations.push_back(
            {"structure", QuadExt(0), "preperiod and period need at least two breakpoints"});
        return report;
    }

    std::vector<Breakpoint> pre = detail::dedup_breakpoints(t.preperiod, &report);
    std::vector<Breakpoint> per = detail::dedup_breakpoints(t.period, &report);
    if (!report.ok()) return report;
    if (pre.size() < 2 || per.size() < 2) {
        report.violations.push_back({"structure", QuadExt(0), "degenerate after normalization"});
        return report;
    }

    if (pre.front().q.sign() != 0)
        report.violations.push_back({"structure", pre.front().q, "preperiod must start at q = 0"});
    const QuadExt q0 = per.front().q;
    const QuadExt q1 = per.back().q;
    if (q0.sign() <= 0)
        report.violations.push_back({"structure", q0, "period must start at q0 > 0"});
    if ((pre.back().q - q0).sign() != 0 || !detail::same_values(pre.back().values, per.front().values))
        report.violations.push_back({"structure", q0, "preperiod end does not match period start"});
    if (!report.ok()) return report;

    if ((t.lambda - q1 / q0).sign() != 0)
        report.violations.push_back({"self-similarity", q1, "lambda != q1/q0"});
    if ((t.lambda - QuadExt(1)).sign() <= 0)
        report.violations.push_back({"self-similarity", q1, "scale ratio must exceed 1"});
    for (int j = 0; j < m; ++j)
        if ((per.back().values[j] - t.lambda * per.front().values[j]).sign() != 0) {
            report.violations.push_back(
                {"self-similarity", q1, "values at q1 are not lambda times values at q0"});
            break;
        }

    // (i) and (ii) at every breakpoint
    auto check_point = [&](const Breakpoint& bp) {
        QuadExt sum(0);
        for (const auto& v : bp.values) sum += v;
        if (sum.sign() != 0)
            report.violations.push_back({"i", bp.q, "component sum " + sum.str() + " != 0"});
        for (int j = 0; j + 1 < m; ++j)
            if ((bp.values[j] - bp.values[j + 1]).sign() > 0) {
                report.violations.push_back({"ii", bp.q, "components out of order"});
                break;
            }
    };
    for (const auto& bp : pre) check_point(bp);
    for (std::size_t i = 1; i < per.size(); ++i) check_point(per[i]);

    auto pre_segs = detail::segments_of(pre);
    auto per_segs = detail::segments_of(per);

    // (iii) slopes within [-n, 1] and the finite set {1} u {-k/(n+1-k)}
    for (const auto* segs : {&pre_segs, &per_segs})
        for (const auto& s : *segs)
            for (int j = 0; j < m; ++j)
                if (!detail::slope_allowed(t.n, s.slopes[j]))
                    report.violations.push_back(
                        {"iii", s.a, "slope " + s.slopes[j].str() + " of component " +
                                         std::to_string(j + 1) + " not admissible"});

    // (iv): on segments where P_j < P_{j+1}, F_j' must lie in {j, j-1-n};
    // at breakpoints with P_j < P_{j+1}, F_j' may only jump upward.
    auto fsum_slope = [&](const detail::Segment& s, int j) {
        QuadExt f(0);
        for (int i = 0; i < j; ++i) f += s.slopes[i];
        return f;
    };
    auto separated_on = [&](const detail::Segment& s, int j) {
        // strict somewhere on the open segment; by linearity this is
        // "not identical", given the ordering already holds
        return ((*s.va)[j - 1] - (*s.va)[j]).sign() != 0 ||
               ((*s.vb)[j - 1] - (*s.vb)[j]).sign() != 0;
    };
    std::vector<detail::Segment> chain;
    chain.insert(chain.end(), pre_segs.begin(), pre_segs.end());
    chain.insert(chain.end(), per_segs.begin(), per_segs.end());
    // wrap: right of q1 the scaled first period segment continues
    detail::Segment wrap = per_segs.front();
    wrap.a = q1;
    wrap.b = q1 * t.lambda;
    wrap.va = &per.back().values;
    chain.push_back(wrap);

    for (int j = 1; j <= t.n; ++j) {
        const QuadExt hi(j), lo(j - 1 - t.n);
        for (const auto& s : chain) {
            if (!separated_on(s, j)) continue;
            QuadExt fs = fsum_slope(s, j);
            if ((fs - hi).sign() != 0 && (fs - lo).sign() != 0)
                report.violations.push_back(
                    {"iv", s.a, "F_" + std::to_string(j) + " slope " + fs.str() +
                                    " outside {" + lo.str() + ", " + hi.str() + "}"});
        }
        for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
            const auto& left = chain[i];
            const auto& right = chain[i + 1];
            if ((left.b - right.a).sign() != 0) continue;   // paranoid
            const auto& vals = *right.va;
            if ((vals[j - 1] - vals[j]).sign() >= 0) continue;  // glued at the junction
            QuadExt fl = fsum_slope(left, j), fr = fsum_slope(right, j);
            if ((fl - fr).sign() > 0)
                report.violations.push_back(
                    {"iv", right.a, "F_" + std::to_string(j) + " slope decreases across breakpoint"});
        }
    }

    return report;
}

inline void require_valid(const Template& t) {
    auto report = validate(t);
    if (!report.ok()) throw std::domain_error("invalid template: " + report.summary());
}

namespace detail {

inline std::vector<QuadExt> interpolate(const std::vector<Breakpoint>& bps, const QuadExt& q) {
    for (std::size_t i = 0; i + 1 < bps.size(); ++i) {
        const auto& a = bps[i];
        const auto& b = bps[i + 1];
        if ((q - a.q).sign() >= 0 && (b.q - q).sign() >= 0) {
            QuadExt w = (q - a.q) / (b.q - a.q);
            std::vector<QuadExt> out;
            out.reserve(a.values.size());
            for (std::size_t j = 0; j < a.values.size(); ++j)
                out.push_back(a.values[j] + w * (b.values[j] - a.values[j]));
            return out;
        }
    }
    throw std::domain_error("interpolation point outside breakpoint range");
}

} // namespace detail

/// Exact values P_1(q)..P_{n+1}(q). Points beyond the stored period are
/// reached by unscaling into [q0, q1] and rescaling the result.
inline std::vector<QuadExt> evaluate(const Template& t, const QuadExt& q) {
    if (q.sign() < 0) throw std::domain_error("evaluate: q must be >= 0");
    Template nt = normalized(t);
    const QuadExt q0 = nt.period.front().q;
    if ((q - q0).sign() <= 0) return detail::interpolate(nt.preperiod, q);
    QuadExt scale(1);
    QuadExt q1 = nt.period.back().q;
    while ((q - q1 * scale).sign() > 0) scale *= nt.lambda;
    auto vals = detail::interpolate(nt.period, q / scale);
    for (auto& v : vals) v *= scale;
    return vals;
}

} // namespace pgn
