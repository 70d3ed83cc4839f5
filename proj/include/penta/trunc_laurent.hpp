#pragma once

#include <climits>
#include <map>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "penta/errors.hpp"
#include "penta/rational.hpp"

namespace penta {

/// Knowledge bound used for exactly-known series (polynomials, monomials).
inline constexpr long kExactOrder = LONG_MAX / 4;
inline constexpr long kDefaultLaurentFloor = -1024;

/// Truncated formal Laurent series in q with Rational coefficients, stored
/// densely from the lowest exponent.
///
/// The truncation order N means "coefficients of q^e for e > N are unknown",
/// not zero. Every operation propagates the honest knowledge bound, so an
/// equality can never be claimed beyond what both operands actually track.
class TruncLaurent {
public:
    TruncLaurent() : trunc_(kExactOrder) {}
    TruncLaurent(const Rational& c) : trunc_(kExactOrder) {  // NOLINT
        if (!c.is_zero()) {
            min_ = 0;
            c_.push_back(c);
        }
    }
    TruncLaurent(long n) : TruncLaurent(Rational(n)) {}  // NOLINT

    static TruncLaurent monomial(const Rational& c, long exp) {
        TruncLaurent s;
        if (!c.is_zero()) {
            s.min_ = exp;
            s.c_.push_back(c);
        }
        return s;
    }
    /// The formal variable q.
    static TruncLaurent q() { return monomial(Rational(1), 1); }

    bool exact() const { return trunc_ >= kExactOrder; }
    long trunc() const { return trunc_; }
    bool is_zero() const { return c_.empty(); }

    /// Lowest exponent (requires a nonzero known coefficient).
    long min_exp() const {
        if (c_.empty()) throw Error("min_exp of zero series");
        return min_;
    }
    /// Lowest exponent that could carry a nonzero coefficient; kExactOrder
    /// stands in for "none possible" (exact zero).
    long low_bound() const {
        if (!c_.empty()) return min_;
        return exact() ? kExactOrder : trunc_ + 1;
    }
    long max_known_exp() const {
        return c_.empty() ? LONG_MIN : min_ + static_cast<long>(c_.size()) - 1;
    }

    Rational coeff(long exp) const {
        if (c_.empty() || exp < min_ || exp > max_known_exp()) return Rational();
        return c_[static_cast<size_t>(exp - min_)];
    }
    /// Nonzero coefficients in exponent order.
    std::map<long, Rational> coeffs() const {
        std::map<long, Rational> out;
        for (size_t i = 0; i < c_.size(); ++i)
            if (!c_[i].is_zero()) out.emplace(min_ + static_cast<long>(i), c_[i]);
        return out;
    }

    /// Copy with knowledge clipped to order n (a no-op if already coarser).
    TruncLaurent truncated(long n) const {
        TruncLaurent r = *this;
        if (n < r.trunc_) {
            r.trunc_ = n;
            r.clip();
        }
        return r;
    }

    friend TruncLaurent operator+(const TruncLaurent& a, const TruncLaurent& b) {
        if (a.c_.empty() && a.exact()) return b;
        if (b.c_.empty() && b.exact()) return a;
        TruncLaurent r;
        r.trunc_ = std::min(a.trunc_, b.trunc_);
        if (a.c_.empty() && b.c_.empty()) return r;
        long lo = a.c_.empty() ? b.min_ : (b.c_.empty() ? a.min_ : std::min(a.min_, b.min_));
        long hi = std::max(a.max_known_exp(), b.max_known_exp());
        hi = std::min(hi, r.trunc_);
        if (hi < lo) return r;
        r.min_ = lo;
        r.c_.assign(static_cast<size_t>(hi - lo + 1), Rational());
        for (size_t i = 0; i < a.c_.size(); ++i) {
            long e = a.min_ + static_cast<long>(i);
            if (e > hi) break;
            r.c_[static_cast<size_t>(e - lo)] += a.c_[i];
        }
        for (size_t i = 0; i < b.c_.size(); ++i) {
            long e = b.min_ + static_cast<long>(i);
            if (e > hi) break;
            r.c_[static_cast<size_t>(e - lo)] += b.c_[i];
        }
        r.strip();
        return r;
    }
    friend TruncLaurent operator-(const TruncLaurent& a, const TruncLaurent& b) { return a + (-b); }
    TruncLaurent operator-() const {
        TruncLaurent r = *this;
        for (auto& c : r.c_) c = -c;
        return r;
    }

    friend TruncLaurent operator*(const TruncLaurent& a, const TruncLaurent& b) {
        TruncLaurent r;
        r.trunc_ = std::min(sat_add(a.trunc_, b.low_bound()), sat_add(b.trunc_, a.low_bound()));
        if (a.c_.empty() || b.c_.empty()) return r;
        long lo = a.min_ + b.min_;
        long hi = a.max_known_exp() + b.max_known_exp();
        hi = std::min(hi, r.trunc_);
        if (hi < lo) return r;
        r.min_ = lo;
        r.c_.assign(static_cast<size_t>(hi - lo + 1), Rational());
        for (size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i].is_zero()) continue;
            long ea = a.min_ + static_cast<long>(i);
            long width = hi - ea - b.min_ + 1;
            if (width <= 0) break;
            size_t jmax = std::min(b.c_.size(), static_cast<size_t>(width));
            for (size_t j = 0; j < jmax; ++j) {
                if (b.c_[j].is_zero()) continue;
                addmul(r.c_[static_cast<size_t>(ea + b.min_ + static_cast<long>(j) - lo)],
                       a.c_[i], b.c_[j]);
            }
        }
        r.strip();
        return r;
    }
    /// In-place sum; reuses this series' storage where the ranges overlap.
    TruncLaurent& operator+=(const TruncLaurent& b) {
        long t = std::min(trunc_, b.trunc_);
        trunc_ = t;
        clip();
        if (b.c_.empty()) return *this;
        long blo = b.min_, bhi = std::min(b.max_known_exp(), t);
        if (bhi < blo) return *this;
        if (c_.empty()) {
            min_ = blo;
            c_.assign(static_cast<size_t>(bhi - blo + 1), Rational());
        } else {
            long lo = std::min(min_, blo), hi = std::max(max_known_exp(), bhi);
            if (lo < min_) {
                c_.insert(c_.begin(), static_cast<size_t>(min_ - lo), Rational());
                min_ = lo;
            }
            if (hi > max_known_exp())
                c_.resize(static_cast<size_t>(hi - min_ + 1), Rational());
        }
        for (long e = blo; e <= bhi; ++e)
            c_[static_cast<size_t>(e - min_)] += b.c_[static_cast<size_t>(e - b.min_)];
        strip();
        return *this;
    }
    TruncLaurent& operator*=(const TruncLaurent& b) { *this = *this * b; return *this; }

    /// Copy shifted by q^e (optionally negated); cheap offset bookkeeping.
    TruncLaurent shifted(long e, bool negate = false) const {
        TruncLaurent r = *this;
        r.min_ += e;
        r.trunc_ = sat_add(r.trunc_, e);
        if (negate)
            for (auto& c : r.c_) c = -c;
        return r;
    }

    /// Multiplicative inverse. The result is expanded up to this series'
    /// own truncation order; exact inputs must either be monomials or be
    /// truncated first, since their inverse is an infinite series.
    TruncLaurent inverse(long floor = kDefaultLaurentFloor) const {
        if (c_.empty()) {
            if (exact()) throw DivisionByZero("inverse of zero series");
            throw DivisionByZero("inverse of series with no known nonzero term (trunc " +
                                 std::to_string(trunc_) + ")");
        }
        long a0 = min_;
        if (-a0 < floor)
            throw TruncationUnderflow("inverse needs exponent " + std::to_string(-a0) +
                                      " below floor " + std::to_string(floor));
        if (exact()) {
            if (c_.size() == 1) return monomial(c_[0].inv(), -a0);
            throw Error("inverse of an exact non-monomial series needs truncated() first");
        }
        long rel = trunc_ - a0;  // relative expansion order of q^{-a0} * this
        Rational u0inv = c_[0].inv();
        std::vector<Rational> b(static_cast<size_t>(rel + 1), Rational());
        b[0] = u0inv;
        for (long n = 1; n <= rel; ++n) {
            Rational acc;
            size_t jmax = std::min(c_.size() - 1, static_cast<size_t>(n));
            for (size_t j = 1; j <= jmax; ++j) {
                if (c_[j].is_zero()) continue;
                addmul(acc, c_[j], b[static_cast<size_t>(n) - j]);
            }
            if (!acc.is_zero()) b[static_cast<size_t>(n)] = -u0inv * acc;
        }
        TruncLaurent r;
        r.trunc_ = rel - a0;
        r.min_ = -a0;
        r.c_ = std::move(b);
        r.strip();
        if (!r.c_.empty() && r.min_ < floor)
            throw TruncationUnderflow("inverse reaches exponent below floor");
        return r;
    }

    /// Equality up to the common truncation order of the operands.
    friend bool operator==(const TruncLaurent& a, const TruncLaurent& b) {
        long common = std::min(a.trunc_, b.trunc_);
        long lo = LONG_MAX, hi = LONG_MIN;
        if (!a.c_.empty()) {
            lo = a.min_;
            hi = std::min(a.max_known_exp(), common);
        }
        if (!b.c_.empty()) {
            lo = std::min(lo, b.min_);
            hi = std::max(hi, std::min(b.max_known_exp(), common));
        }
        for (long e = lo; e <= hi; ++e)
            if (a.coeff(e) != b.coeff(e)) return false;
        return true;
    }
    friend bool operator!=(const TruncLaurent& a, const TruncLaurent& b) { return !(a == b); }

    /// Exact value at a rational point, summing known terms up to `order`.
    Rational evaluate(const Rational& x, long order) const {
        Rational acc;
        for (size_t i = 0; i < c_.size(); ++i) {
            long e = min_ + static_cast<long>(i);
            if (e > order) break;
            if (!c_[i].is_zero()) acc += c_[i] * rational_pow(x, e);
        }
        return acc;
    }

    std::string str() const {
        if (c_.empty()) return exact() ? "0" : "O(q^" + std::to_string(trunc_ + 1) + ")";
        std::ostringstream os;
        bool first = true;
        for (size_t i = 0; i < c_.size(); ++i) {
            if (c_[i].is_zero()) continue;
            long e = min_ + static_cast<long>(i);
            const Rational& c = c_[i];
            if (!first) os << (c.sign() > 0 ? " + " : " - ");
            else if (c.sign() < 0) os << "-";
            Rational a = c.sign() < 0 ? -c : c;
            if (e == 0 || !a.is_one()) os << a.str();
            if (e != 0) {
                if (!a.is_one()) os << "*";
                os << "q";
                if (e != 1) os << "^" << e;
            }
            first = false;
        }
        if (!exact()) os << " + O(q^" << trunc_ + 1 << ")";
        return os.str();
    }
    friend std::ostream& operator<<(std::ostream& os, const TruncLaurent& s) { return os << s.str(); }

private:
    static long sat_add(long a, long b) {
        if (a >= kExactOrder || b >= kExactOrder) return kExactOrder;
        return a + b;
    }
    static Rational rational_pow(const Rational& x, long e) {
        Rational base = e < 0 ? x.inv() : x;
        unsigned long n = e < 0 ? -static_cast<unsigned long>(e) : e;
        Rational acc(1);
        while (n) {
            if (n & 1) acc *= base;
            base *= base;
            n >>= 1;
        }
        return acc;
    }
    void clip() {
        if (c_.empty()) return;
        long hi = max_known_exp();
        if (hi > trunc_) {
            long keep = trunc_ - min_ + 1;
            if (keep <= 0) c_.clear();
            else c_.resize(static_cast<size_t>(keep));
        }
        strip();
    }
    void strip() {
        size_t lead = 0;
        while (lead < c_.size() && c_[lead].is_zero()) ++lead;
        if (lead == c_.size()) {
            c_.clear();
            return;
        }
        if (lead) {
            c_.erase(c_.begin(), c_.begin() + static_cast<long>(lead));
            min_ += static_cast<long>(lead);
        }
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }

    long min_ = 0;
    std::vector<Rational> c_;
    long trunc_;
};

inline bool is_zero(const TruncLaurent& x) { return x.is_zero(); }
inline TruncLaurent ring_inv(const TruncLaurent& x) { return x.inverse(); }
inline TruncLaurent zero_like(const TruncLaurent& x) {
    return TruncLaurent().truncated(x.trunc());
}
inline TruncLaurent one_like(const TruncLaurent& x) {
    return TruncLaurent(1).truncated(x.trunc());
}
inline std::string scalar_str(const TruncLaurent& x) { return x.str(); }

/// prod_{j=0}^{k-1} (1 - x q^j).
inline TruncLaurent pochhammer(const TruncLaurent& x, long k) {
    if (k < 0) throw Error("pochhammer needs k >= 0");
    TruncLaurent acc(1);
    TruncLaurent shifted = x;
    for (long j = 0; j < k; ++j) {
        acc = acc * (TruncLaurent(1) - shifted);
        shifted = shifted * TruncLaurent::q();
    }
    return acc;
}

/// (q;q)_k = prod_{j=1}^{k} (1 - q^j), an exact polynomial of degree k(k+1)/2.
inline TruncLaurent qq_pochhammer(long k) { return pochhammer(TruncLaurent::q(), k); }

}  // namespace penta
