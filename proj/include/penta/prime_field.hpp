#pragma once

#include <cstdint>
#include <ostream>
#include <string>

#include "penta/errors.hpp"

namespace penta {

inline constexpr std::uint64_t kDefaultPrime = 2147483647ULL;  // 2^31 - 1

/// Element of Z/p for a prime modulus p < 2^32 (products fit in 64 bits).
/// Each value carries its modulus; mixing moduli is an error, and inverting
/// the zero residue raises instead of wrapping.
class PrimeFieldElem {
public:
    PrimeFieldElem() : r_(0), p_(kDefaultPrime) {}
    PrimeFieldElem(std::int64_t v, std::uint64_t p) : p_(p) {
        if (p < 2 || p >= (1ULL << 32)) throw Error("prime modulus out of supported range [2, 2^32)");
        std::int64_t m = v % static_cast<std::int64_t>(p);
        if (m < 0) m += static_cast<std::int64_t>(p);
        r_ = static_cast<std::uint64_t>(m);
    }

    std::uint64_t residue() const { return r_; }
    std::uint64_t modulus() const { return p_; }
    bool is_zero() const { return r_ == 0; }

    PrimeFieldElem inv() const {
        if (r_ == 0) throw DivisionByZero("inverse of zero residue mod " + std::to_string(p_));
        // extended Euclid
        std::int64_t a = static_cast<std::int64_t>(r_), m = static_cast<std::int64_t>(p_);
        std::int64_t s0 = 1, s1 = 0, r0 = a, r1 = m;
        while (r1 != 0) {
            std::int64_t q = r0 / r1;
            std::int64_t t = r0 - q * r1; r0 = r1; r1 = t;
            t = s0 - q * s1; s0 = s1; s1 = t;
        }
        if (r0 != 1) throw DivisionByZero("residue not invertible (modulus not prime?)");
        return PrimeFieldElem(s0, p_);
    }

    friend PrimeFieldElem operator+(const PrimeFieldElem& a, const PrimeFieldElem& b) {
        a.check(b);
        std::uint64_t s = a.r_ + b.r_;
        if (s >= a.p_) s -= a.p_;
        return raw(s, a.p_);
    }
    friend PrimeFieldElem operator-(const PrimeFieldElem& a, const PrimeFieldElem& b) {
        a.check(b);
        std::uint64_t s = a.r_ + a.p_ - b.r_;
        if (s >= a.p_) s -= a.p_;
        return raw(s, a.p_);
    }
    friend PrimeFieldElem operator*(const PrimeFieldElem& a, const PrimeFieldElem& b) {
        a.check(b);
        return raw((a.r_ * b.r_) % a.p_, a.p_);
    }
    friend PrimeFieldElem operator/(const PrimeFieldElem& a, const PrimeFieldElem& b) {
        return a * b.inv();
    }
    PrimeFieldElem operator-() const { return raw(r_ == 0 ? 0 : p_ - r_, p_); }
    PrimeFieldElem& operator+=(const PrimeFieldElem& b) { *this = *this + b; return *this; }
    PrimeFieldElem& operator*=(const PrimeFieldElem& b) { *this = *this * b; return *this; }

    friend bool operator==(const PrimeFieldElem& a, const PrimeFieldElem& b) {
        a.check(b);
        return a.r_ == b.r_;
    }
    friend bool operator!=(const PrimeFieldElem& a, const PrimeFieldElem& b) { return !(a == b); }

    friend std::ostream& operator<<(std::ostream& os, const PrimeFieldElem& x) { return os << x.r_; }
    std::string str() const { return std::to_string(r_); }

private:
    static PrimeFieldElem raw(std::uint64_t r, std::uint64_t p) {
        PrimeFieldElem e;
        e.r_ = r;
        e.p_ = p;
        return e;
    }
    void check(const PrimeFieldElem& b) const {
        if (p_ != b.p_)
            throw IncompatibleRings("mixed prime moduli " + std::to_string(p_) + " and " +
                                    std::to_string(b.p_));
    }

    std::uint64_t r_;
    std::uint64_t p_;
};

inline bool is_zero(const PrimeFieldElem& x) { return x.is_zero(); }
inline PrimeFieldElem ring_inv(const PrimeFieldElem& x) { return x.inv(); }
inline PrimeFieldElem zero_like(const PrimeFieldElem& x) { return PrimeFieldElem(0, x.modulus()); }
inline PrimeFieldElem one_like(const PrimeFieldElem& x) { return PrimeFieldElem(1, x.modulus()); }
inline std::string scalar_str(const PrimeFieldElem& x) { return x.str(); }

}  // namespace penta
