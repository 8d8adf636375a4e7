#pragma once

#include "pgn/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <string>
#include <vector>

namespace pgn {

struct RenderOptions {
    int periods = 2;
    double width = 900;
    double height = 540;
};

namespace detail {

inline std::string fmt(double v) {
    std::ostringstream s;
    s.setf(std::ios::fixed);
    s.precision(2);
    s << v;
    return s.str();
}

} // namespace detail

/// Figure-style sketch: the component polylines over the preperiod and the
/// requested number of periods, dotted rays through the origin for every
/// extremal average slope (and the period-start anchor ratios), and the
/// period breakpoints marked on the axis with q0, q~1, ..., q1 labels.
/// Floating point is used here for layout only.
inline std::string render_svg(const Template& t, const RenderOptions& opts = {}) {
    require_valid(t);
    if (opts.periods < 1) throw std::domain_error("render needs at least one period");
    if (opts.width < 100 || opts.height < 100) throw std::domain_error("degenerate canvas");
    Template nt = normalized(t);
    const int m = nt.components();

    // unroll breakpoints: preperiod, then `periods` scaled copies of the period
    std::vector<Breakpoint> drawn = nt.preperiod;
    QuadExt scale(1);
    for (int k = 0; k < opts.periods; ++k) {
        for (std::size_t i = 1; i < nt.period.size(); ++i) {
            Breakpoint bp{nt.period[i].q * scale, nt.period[i].values};
            for (auto& v : bp.values) v *= scale;
            drawn.push_back(std::move(bp));
        }
        scale *= nt.lambda;
    }

    const double xmax = drawn.back().q.to_double();
    double ymin = 0, ymax = 0;
    for (const auto& bp : drawn)
        for (const auto& v : bp.values) {
            ymin = std::min(ymin, v.to_double());
            ymax = std::max(ymax, v.to_double());
        }
    if (ymax - ymin < 1e-9) { ymax += 1; ymin -= 1; }   // all-zero template
    const double mgn = 46;
    const double sx = (opts.width - 2 * mgn) / xmax;
    const double sy = (opts.height - 2 * mgn) / (ymax - ymin);
    auto X = [&](double q) { return mgn + q * sx; };
    auto Y = [&](double v) { return opts.height - mgn - (v - ymin) * sy; };
    const double y0 = Y(0);

    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << opts.width << "\" height=\""
        << opts.height << "\" viewBox=\"0 0 " << opts.width << " " << opts.height << "\">\n";
    svg << "  <line class=\"axis\" x1=\"" << detail::fmt(X(0)) << "\" y1=\"" << detail::fmt(y0)
        << "\" x2=\"" << detail::fmt(X(xmax)) << "\" y2=\"" << detail::fmt(y0)
        << "\" stroke=\"black\"/>\n";
    svg << "  <line class=\"axis\" x1=\"" << detail::fmt(X(0)) << "\" y1=\""
        << detail::fmt(Y(ymin)) << "\" x2=\"" << detail::fmt(X(0)) << "\" y2=\""
        << detail::fmt(Y(ymax)) << "\" stroke=\"black\"/>\n";

    // dotted rays: one per distinct slope among the extremal averages and
    // the ratios at the period start
    auto limits = phi_limits(nt);
    std::vector<std::pair<QuadExt, std::string>> rays;
    auto add_ray = [&](const QuadExt& slope, const std::string& tag) {
        for (auto& r : rays)
            if (r.first == slope) {
                r.second += "; " + tag;
                return;
            }
        rays.push_back({slope, tag});
    };
    for (int j = 0; j < m; ++j) add_ray(limits.lower[j], "min P" + std::to_string(j + 1) + "/q");
    for (int j = 0; j < m; ++j) add_ray(limits.upper[j], "max P" + std::to_string(j + 1) + "/q");
    const auto& start = nt.period.front();
    for (int j = 0; j < m; ++j)
        add_ray(start.values[j] / start.q, "P" + std::to_string(j + 1) + "(q0)/q0");
    std::sort(rays.begin(), rays.end(),
              [](const auto& a, const auto& b) { return (a.first - b.first).sign() < 0; });
    for (const auto& [slope, tag] : rays) {
        double v = slope.to_double() * xmax;
        svg << "  <line class=\"ray\" x1=\"" << detail::fmt(X(0)) << "\" y1=\"" << detail::fmt(y0)
            << "\" x2=\"" << detail::fmt(X(xmax)) << "\" y2=\"" << detail::fmt(Y(v))
            << "\" stroke=\"gray\" stroke-dasharray=\"3,4\"/>\n";
        svg << "  <text class=\"ray-label\" x=\"" << detail::fmt(X(xmax) + 3) << "\" y=\""
            << detail::fmt(Y(v)) << "\" font-size=\"9\">" << tag << "</text>\n";
    }

    // component groups; a component glued to its predecessor over the whole
    // range draws underneath it, and the representative gets the thick stroke
    std::vector<int> run(m, 1);
    for (int j = 1; j < m; ++j) {
        bool same = true;
        for (const auto& bp : drawn)
            if ((bp.values[j] - bp.values[j - 1]).sign() != 0) { same = false; break; }
        if (same) run[j] = 0;
    }
    for (int j = 0; j < m; ++j)
        if (run[j]) {
            int width_count = 1;
            for (int k = j + 1; k < m && run[k] == 0; ++k) ++width_count;
            run[j] = width_count;
        }
    for (int j = 0; j < m; ++j) {
        double stroke = run[j] > 1 ? 1.2 + 0.7 * (run[j] - 1) : 1.2;
        svg << "  <g class=\"component\" data-name=\"P" << (j + 1) << "\""
            << (run[j] == 0 ? " data-glued=\"1\"" : "") << ">\n    <polyline class=\"comp-line\" fill=\"none\" stroke=\"black\" stroke-width=\""
            << detail::fmt(stroke) << "\" points=\"";
        for (const auto& bp : drawn)
            svg << detail::fmt(X(bp.q.to_double())) << "," << detail::fmt(Y(bp.values[j].to_double())) << " ";
        svg << "\"/>\n  </g>\n";
    }

    // breakpoint markers for every drawn period, labels on the first one
    std::size_t per_bps = nt.period.size();
    std::size_t first_period_at = nt.preperiod.size() - 1;
    for (std::size_t i = first_period_at; i < drawn.size(); ++i) {
        double x = X(drawn[i].q.to_double());
        svg << "  <circle class=\"breakpoint\" cx=\"" << detail::fmt(x) << "\" cy=\""
            << detail::fmt(y0) << "\" r=\"2.2\"/>\n";
        std::size_t idx = i - first_period_at;
        if (idx < per_bps) {
            std::string label = idx == 0 ? "q0"
                                : idx == per_bps - 1 ? "q1"
                                                     : "q~" + std::to_string(idx);
            svg << "  <text class=\"bp-label\" x=\"" << detail::fmt(x) << "\" y=\""
                << detail::fmt(y0 + 14) << "\" font-size=\"10\" text-anchor=\"middle\">" << label
                << "</text>\n";
        }
    }
    svg << "</svg>\n";
    return svg.str();
}

} // namespace pgn
