#pragma once

#include <climits>
#include <cstdint>
#include <string>
#include <vector>

#include "penta/errors.hpp"
#include "penta/rational.hpp"
#include "penta/trunc_laurent.hpp"

namespace penta {

/// Dense integer Laurent series with the same knowledge-bound semantics as
/// TruncLaurent. The q-dilogarithm evaluation stays in Z throughout (the
/// Pochhammer inverses are partition-counting series), so word application
/// runs on machine integers (128-bit, overflow-checked: a coefficient that
/// outgrows the range raises instead of wrapping).
class ZLaurent {
public:
    using Coef = __int128;
    static constexpr Coef kMax = static_cast<Coef>(1) << 120;

    ZLaurent() : trunc_(kExactOrder) {}
    ZLaurent(long long n) : trunc_(kExactOrder) {  // NOLINT
        if (n != 0) {
            min_ = 0;
            c_.push_back(n);
        }
    }
    static ZLaurent monomial(Coef v, long exp) {
        ZLaurent s;
        if (v != 0) {
            s.min_ = exp;
            s.c_.push_back(v);
        }
        return s;
    }
    static ZLaurent q() { return monomial(1, 1); }

    bool exact() const { return trunc_ >= kExactOrder; }
    long trunc() const { return trunc_; }
    bool is_zero() const { return c_.empty(); }
    long min_exp() const {
        if (c_.empty()) throw Error("min_exp of zero series");
        return min_;
    }
    long low_bound() const {
        if (!c_.empty()) return min_;
        return exact() ? kExactOrder : trunc_ + 1;
    }
    long max_known_exp() const {
        return c_.empty() ? LONG_MIN : min_ + static_cast<long>(c_.size()) - 1;
    }
    Coef coeff(long exp) const {
        if (c_.empty() || exp < min_ || exp > max_known_exp()) return 0;
        return c_[static_cast<size_t>(exp - min_)];
    }

    ZLaurent truncated(long n) const {
        ZLaurent r = *this;
        if (n < r.trunc_) {
            r.trunc_ = n;
            r.clip();
        }
        return r;
    }
    ZLaurent shifted(long e, bool negate = false) const {
        ZLaurent r = *this;
        r.min_ += e;
        r.trunc_ = sat_add(r.trunc_, e);
        if (negate)
            for (auto& c : r.c_) c = -c;
        return r;
    }

    ZLaurent& operator+=(const ZLaurent& b) {
        long t = std::min(trunc_, b.trunc_);
        trunc_ = t;
        clip();
        if (b.c_.empty()) return *this;
        long blo = b.min_, bhi = std::min(b.max_known_exp(), t);
        if (bhi < blo) return *this;
        if (c_.empty()) {
            min_ = blo;
            c_.assign(static_cast<size_t>(bhi - blo + 1), 0);
        } else {
            long lo = std::min(min_, blo), hi = std::max(max_known_exp(), bhi);
            if (lo < min_) {
                c_.insert(c_.begin(), static_cast<size_t>(min_ - lo), 0);
                min_ = lo;
            }
            if (hi > max_known_exp()) c_.resize(static_cast<size_t>(hi - min_ + 1), 0);
        }
        for (long e = blo; e <= bhi; ++e) {
            Coef& slot = c_[static_cast<size_t>(e - min_)];
            slot = checked_add(slot, b.c_[static_cast<size_t>(e - b.min_)]);
        }
        strip();
        return *this;
    }
    friend ZLaurent operator+(ZLaurent a, const ZLaurent& b) {
        a += b;
        return a;
    }
    ZLaurent operator-() const { return shifted(0, true); }
    friend ZLaurent operator-(const ZLaurent& a, const ZLaurent& b) { return a + (-b); }

    friend ZLaurent operator*(const ZLaurent& a, const ZLaurent& b) {
        ZLaurent r;
        r.trunc_ = std::min(sat_add(a.trunc_, b.low_bound()), sat_add(b.trunc_, a.low_bound()));
        if (a.c_.empty() || b.c_.empty()) return r;
        long lo = a.min_ + b.min_;
        long hi = std::min(a.max_known_exp() + b.max_known_exp(), r.trunc_);
        if (hi < lo) return r;
        r.min_ = lo;
        r.c_.assign(static_cast<size_t>(hi - lo + 1), 0);
        for (size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i] == 0) continue;
            long ea = a.min_ + static_cast<long>(i);
            long width = hi - ea - b.min_ + 1;
            if (width <= 0) break;
            size_t jmax = std::min(b.c_.size(), static_cast<size_t>(width));
            for (size_t j = 0; j < jmax; ++j) {
                if (b.c_[j] == 0) continue;
                Coef& slot = r.c_[static_cast<size_t>(ea + b.min_ + static_cast<long>(j) - lo)];
                slot = checked_add(slot, checked_mul(a.c_[i], b.c_[j]));
            }
        }
        r.strip();
        return r;
    }
    ZLaurent& operator*=(const ZLaurent& b) {
        *this = *this * b;
        return *this;
    }

    /// Inverse expanded to this series' truncation order (unit constant term
    /// only, which is all the q-Pochhammer path needs).
    ZLaurent inverse(long floor = kDefaultLaurentFloor) const {
        if (c_.empty()) throw DivisionByZero("inverse of zero series");
        long a0 = min_;
        if (-a0 < floor)
            throw TruncationUnderflow("inverse needs exponent below floor");
        if (exact()) {
            if (c_.size() == 1 && (c_[0] == 1 || c_[0] == -1))
                return monomial(c_[0], -a0);
            throw Error("integer series inverse needs truncated() and unit lead");
        }
        if (c_[0] != 1 && c_[0] != -1)
            throw Error("integer series inverse needs a unit leading coefficient");
        Coef u0 = c_[0];
        long rel = trunc_ - a0;
        std::vector<Coef> b(static_cast<size_t>(rel + 1), 0);
        b[0] = u0;
        for (long n = 1; n <= rel; ++n) {
            Coef acc = 0;
            size_t jmax = std::min(c_.size() - 1, static_cast<size_t>(n));
            for (size_t j = 1; j <= jmax; ++j)
                if (c_[j] != 0) acc = checked_add(acc, checked_mul(c_[j], b[static_cast<size_t>(n) - j]));
            b[static_cast<size_t>(n)] = checked_mul(-u0, acc);
        }
        ZLaurent r;
        r.trunc_ = rel - a0;
        r.min_ = -a0;
        r.c_ = std::move(b);
        r.strip();
        return r;
    }

    friend bool operator==(const ZLaurent& a, const ZLaurent& b) {
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
    friend bool operator!=(const ZLaurent& a, const ZLaurent& b) { return !(a == b); }

    Rational evaluate(const Rational& x, long order) const {
        TruncLaurent t = to_rational();
        return t.evaluate(x, order);
    }

    static Rational to_rational_coef(Coef v) {
        bool neg = v < 0;
        unsigned __int128 u = neg ? static_cast<unsigned __int128>(-v)
                                  : static_cast<unsigned __int128>(v);
        mpz_class z;
        mpz_import(z.get_mpz_t(), 2, -1, 8, 0, 0, &u);
        if (neg) z = -z;
        return Rational(mpq_class(z));
    }
    TruncLaurent to_rational() const {
        TruncLaurent out;
        for (size_t i = 0; i < c_.size(); ++i)
            if (c_[i] != 0)
                out += TruncLaurent::monomial(to_rational_coef(c_[i]),
                                              min_ + static_cast<long>(i));
        return exact() ? out : out.truncated(trunc_);
    }
    std::string str() const { return to_rational().str(); }

private:
    static long sat_add(long a, long b) {
        if (a >= kExactOrder || b >= kExactOrder) return kExactOrder;
        return a + b;
    }
    static Coef checked_add(Coef a, Coef b) {
        Coef r;
        if (__builtin_add_overflow(a, b, &r) || r > kMax || r < -kMax)
            throw Error("integer series coefficient overflow");
        return r;
    }
    static Coef checked_mul(Coef a, Coef b) {
        Coef r;
        if (__builtin_mul_overflow(a, b, &r) || r > kMax || r < -kMax)
            throw Error("integer series coefficient overflow");
        return r;
    }
    void clip() {
        if (c_.empty()) return;
        if (max_known_exp() > trunc_) {
            long keep = trunc_ - min_ + 1;
            if (keep <= 0) c_.clear();
            else c_.resize(static_cast<size_t>(keep));
        }
        strip();
    }
    void strip() {
        size_t lead = 0;
        while (lead < c_.size() && c_[lead] == 0) ++lead;
        if (lead == c_.size()) {
            c_.clear();
            return;
        }
        if (lead) {
            c_.erase(c_.begin(), c_.begin() + static_cast<long>(lead));
            min_ += static_cast<long>(lead);
        }
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }

    long min_ = 0;
    std::vector<Coef> c_;
    long trunc_;
};

}  // namespace penta
