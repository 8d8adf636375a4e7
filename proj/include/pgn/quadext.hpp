#pragma once

#include "pgn/rational.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

namespace pgn {

namespace detail {

/// Splits m >= 0 as s * f^2 with s square-free; returns (s, f).
/// Trial division, then an exact perfect-square test on the remainder.
inline std::pair<BigInt, BigInt> squarefree_split(BigInt m) {
    if (m < 0) throw std::domain_error("squarefree_split of negative integer");
    BigInt s = 1, f = 1;
    if (m == 0) return {BigInt(0), BigInt(1)};
    for (BigInt p = 2; p * p <= m && p <= 1000000; p == 2 ? p = 3 : p += 2) {
        if (m % p != 0) continue;
        int e = 0;
        while (m % p == 0) { m /= p; ++e; }
        for (int i = 0; i < e / 2; ++i) f *= p;
        if (e % 2 == 1) s *= p;
    }
    if (m > 1) {
        BigInt r = boost::multiprecision::sqrt(m);
        if (r * r == m) f *= r;
        else s *= m;
    }
    return {s, f};
}

} // namespace detail

/// Exact element a + b*sqrt(r) of a real quadratic extension of Q.
/// Canonical form: r is a square-free integer >= 2, or r = 0 with b = 0
/// for plain rationals. Two values mix in arithmetic only when their
/// discriminants agree or one of them is rational.
class QuadExt {
public:
    QuadExt() : a_(0), b_(0), r_(0) {}
    QuadExt(Rational rational_value) : a_(std::move(rational_value)), b_(0), r_(0) {}
    QuadExt(std::int64_t n) : a_(n), b_(0), r_(0) {}

    /// Canonicalizing constructor: folds square factors of r into b,
    /// collapses to the rational form when sqrt(r) is rational.
    QuadExt(Rational a, Rational b, Rational r) : a_(std::move(a)), b_(std::move(b)), r_(0) {
        if (r.sign() < 0) throw std::domain_error("negative discriminant");
        if (r.is_zero()) { b_ = Rational(0); return; }   // sqrt(0) = 0
        if (b_.is_zero()) return;
        // a + b*sqrt(p/q) = a + (b/q)*sqrt(p*q)
        BigInt radicand = r.num() * r.den();
        auto [s, f] = detail::squarefree_split(radicand);
        Rational scaled = b_ * Rational(f, r.den());
        if (s == 1) {
            a_ += scaled;
            b_ = Rational(0);
        } else {
            b_ = scaled;
            if (b_.is_zero()) return;
            r_ = Rational(s);
        }
    }

    const Rational& a() const { return a_; }
    const Rational& b() const { return b_; }
    const Rational& r() const { return r_; }

    bool is_rational() const { return b_.is_zero(); }
    bool is_zero() const { return a_.is_zero() && b_.is_zero(); }

    /// Exact sign, decided from the signs of a, b and a^2 vs b^2 r.
    int sign() const {
        if (b_.is_zero()) return a_.sign();
        if (a_.is_zero()) return b_.sign();
        int sa = a_.sign(), sb = b_.sign();
        if (sa == sb) return sa;
        int cmp_sq = (a_ * a_ - b_ * b_ * r_).sign();
        if (cmp_sq == 0) return 0;
        return cmp_sq > 0 ? sa : sb;
    }

    QuadExt operator-() const { return QuadExt(-a_, -b_, r_, raw_tag{}); }

    friend QuadExt operator+(const QuadExt& x, const QuadExt& y) {
        Rational r = common_discriminant(x, y);
        return make(x.a_ + y.a_, x.b_ + y.b_, r);
    }
    friend QuadExt operator-(const QuadExt& x, const QuadExt& y) {
        Rational r = common_discriminant(x, y);
        return make(x.a_ - y.a_, x.b_ - y.b_, r);
    }
    friend QuadExt operator*(const QuadExt& x, const QuadExt& y) {
        Rational r = common_discriminant(x, y);
        return make(x.a_ * y.a_ + x.b_ * y.b_ * r, x.a_ * y.b_ + x.b_ * y.a_, r);
    }
    friend QuadExt operator/(const QuadExt& x, const QuadExt& y) {
        if (y.is_zero()) throw std::domain_error("division by zero");
        Rational r = common_discriminant(x, y);
        // conjugate rationalization: 1/(c+d*sqrt(r)) = (c-d*sqrt(r))/(c^2-d^2 r)
        Rational norm = y.a_ * y.a_ - y.b_ * y.b_ * r;
        Rational na = (x.a_ * y.a_ - x.b_ * y.b_ * r) / norm;
        Rational nb = (x.b_ * y.a_ - x.a_ * y.b_) / norm;
        return make(na, nb, r);
    }

    QuadExt& operator+=(const QuadExt& y) { return *this = *this + y; }
    QuadExt& operator-=(const QuadExt& y) { return *this = *this - y; }
    QuadExt& operator*=(const QuadExt& y) { return *this = *this * y; }
    QuadExt& operator/=(const QuadExt& y) { return *this = *this / y; }

    friend bool operator==(const QuadExt& x, const QuadExt& y) {
        return x.a_ == y.a_ && x.b_ == y.b_ && x.r_ == y.r_;
    }
    friend bool operator!=(const QuadExt& x, const QuadExt& y) { return !(x == y); }
    friend bool operator<(const QuadExt& x, const QuadExt& y) { return (x - y).sign() < 0; }
    friend bool operator>(const QuadExt& x, const QuadExt& y) { return y < x; }
    friend bool operator<=(const QuadExt& x, const QuadExt& y) { return (x - y).sign() <= 0; }
    friend bool operator>=(const QuadExt& x, const QuadExt& y) { return (x - y).sign() >= 0; }

    double to_double() const {
        double v = a_.to_double();
        if (!b_.is_zero()) v += b_.to_double() * std::sqrt(r_.to_double());
        return v;
    }

    /// Human-readable exact form, e.g. "(3*sqrt(21)-8)/5" or "-1/4".
    std::string str() const {
        if (b_.is_zero()) return a_.str();
        BigInt d = a_.den() * b_.den() / boost::multiprecision::gcd(a_.den(), b_.den());
        BigInt an = a_.num() * (d / a_.den());
        BigInt bn = b_.num() * (d / b_.den());
        std::string core = (bn == 1 ? "" : bn == -1 ? "-" : bn.str() + "*");
        core += "sqrt(" + r_.str() + ")";
        if (an > 0) core += "+" + an.str();
        else if (an < 0) core += an.str();
        if (d == 1) return a_.is_zero() ? core : "(" + core + ")";
        return "(" + core + ")/" + d.str();
    }

private:
    struct raw_tag {};
    QuadExt(Rational a, Rational b, Rational r, raw_tag)
        : a_(std::move(a)), b_(std::move(b)), r_(std::move(r)) {}

    static QuadExt make(Rational a, Rational b, Rational r) {
        if (b.is_zero()) return QuadExt(std::move(a), Rational(0), Rational(0), raw_tag{});
        return QuadExt(std::move(a), std::move(b), std::move(r), raw_tag{});
    }

    static Rational common_discriminant(const QuadExt& x, const QuadExt& y) {
        if (x.b_.is_zero()) return y.r_;
        if (y.b_.is_zero()) return x.r_;
        if (x.r_ != y.r_)
            throw std::domain_error("incompatible discriminants: sqrt(" + x.r_.str() +
                                    ") vs sqrt(" + y.r_.str() + ")");
        return x.r_;
    }

    Rational a_, b_, r_;
};

inline QuadExt qx_normalize(const Rational& a, const Rational& b, const Rational& r) {
    return QuadExt(a, b, r);
}

inline int qx_sign(const QuadExt& x) { return x.sign(); }

/// sqrt of a non-negative rational as an exact QuadExt.
inline QuadExt qx_sqrt(const Rational& x) {
    if (x.sign() < 0) throw std::domain_error("square root of negative rational");
    return QuadExt(Rational(0), Rational(1), x);
}

inline QuadExt abs(const QuadExt& x) { return x.sign() < 0 ? -x : x; }

} // namespace pgn
