#pragma once

#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "penta/errors.hpp"

namespace penta {

namespace mrdetail {
// unqualified call at namespace scope: the element ring's overloads are
// found by ADL at instantiation, not shadowed by the member is_zero()
template <class T>
bool elem_is_zero(const T& t) {
    return is_zero(t);
}
}  // namespace mrdetail

/// Square d x d matrix (d <= 4) over an exact scalar ring, used as a
/// noncommutative coefficient carrier. Inversion fails exactly when the
/// matrix is singular.
template <class R>
class MatrixRingElem {
public:
    MatrixRingElem() : d_(0) {}
    explicit MatrixRingElem(int d, R fill) : d_(d), a_(static_cast<size_t>(d) * d, fill) {
        if (d < 1 || d > 4) throw Error("matrix ring size must be in 1..4");
    }
    static MatrixRingElem identity(int d, const R& one) {
        MatrixRingElem m(d, zero_like(one));
        for (int i = 0; i < d; ++i) m.at(i, i) = one;
        return m;
    }

    int size() const { return d_; }
    R& at(int i, int j) { return a_[static_cast<size_t>(i) * d_ + j]; }
    const R& at(int i, int j) const { return a_[static_cast<size_t>(i) * d_ + j]; }

    bool is_zero() const {
        for (const auto& x : a_)
            if (!mrdetail::elem_is_zero(x)) return false;
        return true;
    }

    friend MatrixRingElem operator+(const MatrixRingElem& a, const MatrixRingElem& b) {
        a.check(b);
        MatrixRingElem r = a;
        for (size_t i = 0; i < r.a_.size(); ++i) r.a_[i] = r.a_[i] + b.a_[i];
        return r;
    }
    friend MatrixRingElem operator-(const MatrixRingElem& a, const MatrixRingElem& b) {
        return a + (-b);
    }
    MatrixRingElem operator-() const {
        MatrixRingElem r = *this;
        for (auto& x : r.a_) x = -x;
        return r;
    }
    friend MatrixRingElem operator*(const MatrixRingElem& a, const MatrixRingElem& b) {
        a.check(b);
        MatrixRingElem r(a.d_, zero_like(a.a_[0]));
        for (int i = 0; i < a.d_; ++i)
            for (int k = 0; k < a.d_; ++k) {
                if (mrdetail::elem_is_zero(a.at(i, k))) continue;
                for (int j = 0; j < a.d_; ++j) r.at(i, j) = r.at(i, j) + a.at(i, k) * b.at(k, j);
            }
        return r;
    }
    MatrixRingElem& operator+=(const MatrixRingElem& b) { *this = *this + b; return *this; }
    MatrixRingElem& operator*=(const MatrixRingElem& b) { *this = *this * b; return *this; }

    /// Gauss-Jordan inverse; throws SingularOperator when det = 0.
    MatrixRingElem inv() const {
        if (d_ == 0) throw Error("inverse of empty matrix");
        MatrixRingElem a = *this;
        MatrixRingElem r = identity(d_, one_like(a_[0]));
        for (int col = 0; col < d_; ++col) {
            int piv = -1;
            for (int i = col; i < d_; ++i)
                if (!mrdetail::elem_is_zero(a.at(i, col))) { piv = i; break; }
            if (piv < 0) throw SingularOperator("matrix ring element not invertible");
            if (piv != col) {
                for (int j = 0; j < d_; ++j) {
                    std::swap(a.at(piv, j), a.at(col, j));
                    std::swap(r.at(piv, j), r.at(col, j));
                }
            }
            R s = ring_inv(a.at(col, col));
            for (int j = 0; j < d_; ++j) {
                a.at(col, j) = s * a.at(col, j);
                r.at(col, j) = s * r.at(col, j);
            }
            for (int i = 0; i < d_; ++i) {
                if (i == col || mrdetail::elem_is_zero(a.at(i, col))) continue;
                R f = a.at(i, col);
                for (int j = 0; j < d_; ++j) {
                    a.at(i, j) = a.at(i, j) - f * a.at(col, j);
                    r.at(i, j) = r.at(i, j) - f * r.at(col, j);
                }
            }
        }
        return r;
    }

    friend bool operator==(const MatrixRingElem& a, const MatrixRingElem& b) {
        if (a.d_ != b.d_) throw IncompatibleRings("matrix size mismatch");
        return a.a_ == b.a_;
    }
    friend bool operator!=(const MatrixRingElem& a, const MatrixRingElem& b) { return !(a == b); }

    std::string str() const {
        std::ostringstream os;
        os << "[";
        for (int i = 0; i < d_; ++i) {
            if (i) os << "; ";
            for (int j = 0; j < d_; ++j) {
                if (j) os << ",";
                os << scalar_str(at(i, j));
            }
        }
        os << "]";
        return os.str();
    }
    friend std::ostream& operator<<(std::ostream& os, const MatrixRingElem& m) {
        return os << m.str();
    }

private:
    void check(const MatrixRingElem& b) const {
        if (d_ != b.d_) throw IncompatibleRings("matrix size mismatch");
    }

    int d_;
    std::vector<R> a_;
};

template <class R>
inline bool is_zero(const MatrixRingElem<R>& m) { return m.is_zero(); }
template <class R>
inline MatrixRingElem<R> ring_inv(const MatrixRingElem<R>& m) { return m.inv(); }
template <class R>
inline MatrixRingElem<R> zero_like(const MatrixRingElem<R>& m) {
    return MatrixRingElem<R>(m.size(), zero_like(m.at(0, 0)));
}
template <class R>
inline MatrixRingElem<R> one_like(const MatrixRingElem<R>& m) {
    return MatrixRingElem<R>::identity(m.size(), one_like(m.at(0, 0)));
}
template <class R>
inline std::string scalar_str(const MatrixRingElem<R>& m) { return m.str(); }

}  // namespace penta
