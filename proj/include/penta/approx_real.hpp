#pragma once

#include <algorithm>
#include <cmath>
#include <ostream>
#include <sstream>
#include <string>

#include "penta/errors.hpp"

namespace penta {

inline constexpr double kDefaultTolerance = 1e-9;

/// Double with mixed absolute/relative tolerance equality:
/// a == b  iff  |a-b| <= tol * max(1, |a|, |b|).
class ApproxReal {
public:
    ApproxReal() : v_(0), tol_(kDefaultTolerance) {}
    ApproxReal(double v, double tol = kDefaultTolerance) : v_(v), tol_(tol) {}  // NOLINT

    double value() const { return v_; }
    double tolerance() const { return tol_; }
    bool is_zero() const { return std::fabs(v_) <= tol_; }

    ApproxReal inv() const {
        if (is_zero()) throw DivisionByZero("inverse of (numerically) zero real");
        return ApproxReal(1.0 / v_, tol_);
    }

    friend ApproxReal operator+(const ApproxReal& a, const ApproxReal& b) {
        return ApproxReal(a.v_ + b.v_, std::max(a.tol_, b.tol_));
    }
    friend ApproxReal operator-(const ApproxReal& a, const ApproxReal& b) {
        return ApproxReal(a.v_ - b.v_, std::max(a.tol_, b.tol_));
    }
    friend ApproxReal operator*(const ApproxReal& a, const ApproxReal& b) {
        return ApproxReal(a.v_ * b.v_, std::max(a.tol_, b.tol_));
    }
    friend ApproxReal operator/(const ApproxReal& a, const ApproxReal& b) { return a * b.inv(); }
    ApproxReal operator-() const { return ApproxReal(-v_, tol_); }
    ApproxReal& operator+=(const ApproxReal& b) { *this = *this + b; return *this; }
    ApproxReal& operator*=(const ApproxReal& b) { *this = *this * b; return *this; }

    friend bool operator==(const ApproxReal& a, const ApproxReal& b) {
        double tol = std::max(a.tol_, b.tol_);
        double scale = std::max({1.0, std::fabs(a.v_), std::fabs(b.v_)});
        return std::fabs(a.v_ - b.v_) <= tol * scale;
    }
    friend bool operator!=(const ApproxReal& a, const ApproxReal& b) { return !(a == b); }

    friend std::ostream& operator<<(std::ostream& os, const ApproxReal& x) { return os << x.v_; }
    std::string str() const {
        std::ostringstream os;
        os.precision(17);
        os << v_;
        return os.str();
    }

private:
    double v_;
    double tol_;
};

inline bool is_zero(const ApproxReal& x) { return x.is_zero(); }
inline ApproxReal ring_inv(const ApproxReal& x) { return x.inv(); }
inline ApproxReal zero_like(const ApproxReal& x) { return ApproxReal(0, x.tolerance()); }
inline ApproxReal one_like(const ApproxReal& x) { return ApproxReal(1, x.tolerance()); }
inline std::string scalar_str(const ApproxReal& x) { return x.str(); }

}  // namespace penta
