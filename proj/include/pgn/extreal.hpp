#pragma once

#include "pgn/quadext.hpp"

#include <stdexcept>
#include <string>

namespace pgn {

/// QuadExt extended by +inf / -inf. Only one-sided limit arithmetic is
/// defined: inf +- finite works, while inf - inf, 0 * inf and inf / inf
/// throw instead of silently resolving.
class ExtReal {
public:
    ExtReal() : kind_(Kind::Finite), value_() {}
    ExtReal(QuadExt v) : kind_(Kind::Finite), value_(std::move(v)) {}
    ExtReal(Rational v) : kind_(Kind::Finite), value_(std::move(v)) {}
    ExtReal(std::int64_t v) : kind_(Kind::Finite), value_(v) {}

    static ExtReal pos_inf() { return ExtReal(Kind::PosInf); }
    static ExtReal neg_inf() { return ExtReal(Kind::NegInf); }

    bool is_finite() const { return kind_ == Kind::Finite; }
    bool is_pos_inf() const { return kind_ == Kind::PosInf; }
    bool is_neg_inf() const { return kind_ == Kind::NegInf; }

    const QuadExt& finite() const {
        if (!is_finite()) throw std::domain_error("infinite value where finite expected");
        return value_;
    }

    int sign() const {
        switch (kind_) {
        case Kind::PosInf: return 1;
        case Kind::NegInf: return -1;
        default: return value_.sign();
        }
    }

    ExtReal operator-() const {
        if (is_pos_inf()) return neg_inf();
        if (is_neg_inf()) return pos_inf();
        return ExtReal(-value_);
    }

    friend ExtReal operator+(const ExtReal& x, const ExtReal& y) {
        if (x.is_finite() && y.is_finite()) return ExtReal(x.value_ + y.value_);
        if (x.is_finite()) return y;
        if (y.is_finite()) return x;
        if (x.kind_ == y.kind_) return x;
        throw std::domain_error("indeterminate inf - inf");
    }
    friend ExtReal operator-(const ExtReal& x, const ExtReal& y) { return x + (-y); }
    friend ExtReal operator*(const ExtReal& x, const ExtReal& y) {
        if (x.is_finite() && y.is_finite()) return ExtReal(x.value_ * y.value_);
        int sx = x.sign(), sy = y.sign();
        if (sx == 0 || sy == 0) throw std::domain_error("indeterminate 0 * inf");
        return sx * sy > 0 ? pos_inf() : neg_inf();
    }
    friend ExtReal operator/(const ExtReal& x, const ExtReal& y) {
        if (!x.is_finite() && !y.is_finite()) throw std::domain_error("indeterminate inf / inf");
        if (x.is_finite() && y.is_finite()) return ExtReal(x.value_ / y.value_);
        if (x.is_finite()) return ExtReal(QuadExt(0));   // finite / inf
        int s = y.sign();
        if (s == 0) throw std::domain_error("division by zero");
        return x.sign() * s > 0 ? pos_inf() : neg_inf();
    }

    friend bool operator==(const ExtReal& x, const ExtReal& y) {
        if (x.kind_ != y.kind_) return false;
        return x.kind_ != Kind::Finite || x.value_ == y.value_;
    }
    friend bool operator!=(const ExtReal& x, const ExtReal& y) { return !(x == y); }
    friend bool operator<(const ExtReal& x, const ExtReal& y) {
        if (x == y) return false;
        if (x.is_neg_inf() || y.is_pos_inf()) return true;
        if (x.is_pos_inf() || y.is_neg_inf()) return false;
        return x.value_ < y.value_;
    }
    friend bool operator>(const ExtReal& x, const ExtReal& y) { return y < x; }
    friend bool operator<=(const ExtReal& x, const ExtReal& y) { return !(y < x); }
    friend bool operator>=(const ExtReal& x, const ExtReal& y) { return !(x < y); }

    std::string str() const {
        if (is_pos_inf()) return "inf";
        if (is_neg_inf()) return "-inf";
        return value_.str();
    }

    double to_double() const {
        if (is_pos_inf()) return std::numeric_limits<double>::infinity();
        if (is_neg_inf()) return -std::numeric_limits<double>::infinity();
        return value_.to_double();
    }

private:
    enum class Kind { Finite, PosInf, NegInf };
    explicit ExtReal(Kind k) : kind_(k), value_() {}

    Kind kind_;
    QuadExt value_;
};

} // namespace pgn
