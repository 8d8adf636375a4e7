#pragma once

#include "pgn/extreal.hpp"

#include <stdexcept>
#include <utility>

namespace pgn {

/// g_n(x) for n >= 2 and rational x in [-n, 1]. Specializes to the two
/// extremal parameter boundaries: mu0(n, t) = g(n, t), nu0(n, s) = g(n, s).
inline QuadExt g(int n, const Rational& x) {
    if (n < 2) throw std::domain_error("g: n must be >= 2");
    if (x < Rational(-n) || x > Rational(1)) throw std::domain_error("g: x outside [-n, 1]");
    Rational radicand = (Rational(1) - x) * (Rational(4 * n - 5) * x + Rational(4 * n * n - 4 * n + 1));
    QuadExt root = qx_sqrt(radicand);
    QuadExt numerator = QuadExt(Rational(3 - 2 * n) * x + Rational(1 - 2 * n)) + root;
    return numerator / QuadExt(Rational(2 * (n - 1) * (n - 1)));
}

inline QuadExt mu0(int n, const Rational& t) { return g(n, t); }
inline QuadExt nu0(int n, const Rational& s) { return g(n, s); }

namespace detail {

inline Rational require_rational(const ExtReal& x, const char* who) {
    if (!x.finite().is_rational())
        throw std::domain_error(std::string(who) + ": argument must be rational");
    return x.finite().a();
}

} // namespace detail

/// The pair (rho1, rho2) for x >= n, with rho1(n,inf) = 1/(n-1) and
/// rho2(n,inf) = 1/(n-2) (read as +inf when n = 2).
inline std::pair<ExtReal, ExtReal> rho(int n, const ExtReal& x) {
    if (n < 2) throw std::domain_error("rho: n must be >= 2");
    if (x.is_neg_inf()) throw std::domain_error("rho: x below n");
    if (x.is_pos_inf()) {
        ExtReal second = (n == 2) ? ExtReal::pos_inf() : ExtReal(QuadExt(Rational(1, n - 2)));
        return {ExtReal(QuadExt(Rational(1, n - 1))), second};
    }
    Rational v = detail::require_rational(x, "rho");
    if (v < Rational(n)) throw std::domain_error("rho: x below n");
    Rational rho1 = v / (Rational(n - 1) * v + Rational(n));
    QuadExt w = qx_sqrt(Rational(4 * n - 4) * v + Rational(1));
    QuadExt num = QuadExt(Rational(2 * n - 4) * v * v + Rational(1)) +
                  (QuadExt(Rational(2 * n - 1)) - w) * QuadExt(v) - w;
    Rational den = Rational(2) * (Rational((n - 2) * (n - 2)) * v * v +
                                  Rational(2 * n * n - 6 * n + 3) * v + Rational(n * n - 2 * n));
    return {ExtReal(QuadExt(rho1)), ExtReal(num / QuadExt(den))};
}

/// The pair (tau1, tau2) for x >= 1/n; both extend to +inf at x = inf.
inline std::pair<ExtReal, ExtReal> tau(int n, const ExtReal& x) {
    if (n < 2) throw std::domain_error("tau: n must be >= 2");
    if (x.is_neg_inf()) throw std::domain_error("tau: x below 1/n");
    if (x.is_pos_inf()) return {ExtReal::pos_inf(), ExtReal::pos_inf()};
    Rational v = detail::require_rational(x, "tau");
    if (v < Rational(1, n)) throw std::domain_error("tau: x below 1/n");
    Rational tau1 = Rational(n) * v + Rational(n - 1);
    QuadExt w = qx_sqrt(v * (v + Rational(4 * n - 4)));
    QuadExt half_w = w / QuadExt(2);
    QuadExt tau2 = QuadExt(v * v / Rational(2)) +
                   (QuadExt(Rational(2 * n - 1, 2)) + half_w) * QuadExt(v) +
                   half_w + QuadExt(Rational(n - 2));
    return {ExtReal(QuadExt(tau1)), ExtReal(tau2)};
}

} // namespace pgn
