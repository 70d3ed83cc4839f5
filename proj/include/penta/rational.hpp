#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <ostream>
#include <string>

#include "penta/errors.hpp"

namespace penta {

/// Exact rational number, always reduced, denominator > 0.
/// Thin wrapper over GMP's mpq_class so equality and arithmetic are exact.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}  // NOLINT(google-explicit-constructor)
    Rational(long num, long den) {
        if (den == 0) throw DivisionByZero("rational with zero denominator");
        v_ = mpq_class(num, den);
        v_.canonicalize();
    }
    explicit Rational(const mpq_class& v) : v_(v) { v_.canonicalize(); }

    /// Parses "p/q" or "p" (canonical reduced form).
    static Rational parse(const std::string& s) {
        mpq_class v;
        if (v.set_str(s, 10) != 0) throw Error("bad rational literal: '" + s + "'");
        if (v.get_den() == 0) throw DivisionByZero("rational literal with zero denominator");
        v.canonicalize();
        return Rational(v);
    }

    std::string str() const { return v_.get_str(); }

    bool is_zero() const { return v_ == 0; }
    bool is_one() const { return v_ == 1; }
    int sign() const { return sgn(v_); }

    mpz_class numerator() const { return v_.get_num(); }
    mpz_class denominator() const { return v_.get_den(); }
    double to_double() const { return v_.get_d(); }

    Rational inv() const {
        if (is_zero()) throw DivisionByZero("inverse of zero rational");
        return Rational(1 / v_);
    }

    friend Rational operator+(const Rational& a, const Rational& b) { return Rational(a.v_ + b.v_); }
    friend Rational operator-(const Rational& a, const Rational& b) { return Rational(a.v_ - b.v_); }
    friend Rational operator*(const Rational& a, const Rational& b) { return Rational(a.v_ * b.v_); }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.is_zero()) throw DivisionByZero();
        return Rational(a.v_ / b.v_);
    }
    Rational operator-() const { return Rational(mpq_class(-v_)); }
    Rational& operator+=(const Rational& b) { v_ += b.v_; return *this; }
    Rational& operator-=(const Rational& b) { v_ -= b.v_; return *this; }
    Rational& operator*=(const Rational& b) { v_ *= b.v_; return *this; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }

    friend std::ostream& operator<<(std::ostream& os, const Rational& x) { return os << x.v_; }

    /// acc += a * b without wrapper temporaries (hot path of series products).
    friend void addmul(Rational& acc, const Rational& a, const Rational& b) {
        acc.v_ += a.v_ * b.v_;
    }

private:
    mpq_class v_;
};

inline bool is_zero(const Rational& x) { return x.is_zero(); }
inline Rational ring_inv(const Rational& x) { return x.inv(); }
inline Rational zero_like(const Rational&) { return Rational(); }
inline Rational one_like(const Rational&) { return Rational(1); }
inline std::string scalar_str(const Rational& x) { return x.str(); }

}  // namespace penta
