#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "penta/errors.hpp"
#include "penta/ring.hpp"

namespace penta {

/// Index into a basis of V^{tensor m}: one component per leg, each < dim.
using MultiIndex = std::vector<std::uint32_t>;

/// Based vector space V: a dimension plus ordered basis labels.
struct BasedSpace {
    int dim = 0;
    std::vector<std::string> labels;

    static BasedSpace numbered(int n) {
        BasedSpace s;
        s.dim = n;
        for (int i = 0; i < n; ++i) s.labels.push_back(std::to_string(i));
        return s;
    }
};

inline std::string mi_str(const MultiIndex& mi) {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < mi.size(); ++i) {
        if (i) os << ",";
        os << mi[i];
    }
    os << ")";
    return os.str();
}

/// Iterates all multi-indices of a given arity lexicographically.
class MultiIndexRange {
public:
    MultiIndexRange(int dim, int arity) : dim_(dim), mi_(arity, 0), done_(dim < 1 || arity < 0) {}
    bool done() const { return done_; }
    const MultiIndex& operator*() const { return mi_; }
    void advance() {
        for (int i = static_cast<int>(mi_.size()) - 1; i >= 0; --i) {
            if (++mi_[i] < static_cast<std::uint32_t>(dim_)) return;
            mi_[i] = 0;
        }
        done_ = true;
    }
    static std::size_t count(int dim, int arity) {
        std::size_t n = 1;
        for (int i = 0; i < arity; ++i) n *= static_cast<std::size_t>(dim);
        return n;
    }

private:
    int dim_;
    MultiIndex mi_;
    bool done_;
};

/// Sparse column vector on V^{tensor n}.
template <scalar_ring R>
using SparseVec = std::map<MultiIndex, R>;

inline constexpr std::size_t kDenseGuard = 4096;

/// Sparse linear operator on V^{tensor m}, stored column-major as
/// col -> (row -> value) with exact zeros never kept. Immutable in spirit:
/// all operations build new operators.
template <scalar_ring R>
class TensorOp {
public:
    TensorOp() : dim_(0), arity_(0) {}
    TensorOp(int dim, int arity) : dim_(dim), arity_(arity) {
        if (dim < 1) throw Error("space dimension must be positive");
        if (arity < 1) throw Error("operator arity must be positive");
    }

    static TensorOp identity(int dim, int arity, const R& one) {
        TensorOp op(dim, arity);
        for (MultiIndexRange r(dim, arity); !r.done(); r.advance()) op.cols_[*r][*r] = one;
        return op;
    }
    /// Two-leg swap P with P^2 = 1.
    static TensorOp permutation(int dim, const R& one) {
        TensorOp op(dim, 2);
        for (MultiIndexRange r(dim, 2); !r.done(); r.advance()) {
            MultiIndex col = *r;
            op.cols_[col][MultiIndex{col[1], col[0]}] = one;
        }
        return op;
    }

    int dim() const { return dim_; }
    int arity() const { return arity_; }
    std::size_t total_dim() const { return MultiIndexRange::count(dim_, arity_); }
    std::size_t nnz() const {
        std::size_t n = 0;
        for (const auto& [c, rows] : cols_) n += rows.size();
        return n;
    }
    const std::map<MultiIndex, std::map<MultiIndex, R>>& columns() const { return cols_; }

    void set(const MultiIndex& row, const MultiIndex& col, const R& v) {
        check_index(row);
        check_index(col);
        if (is_zero(v))
            cols_[col].erase(row);
        else
            cols_[col][row] = v;
        if (cols_.count(col) && cols_[col].empty()) cols_.erase(col);
    }
    R entry(const MultiIndex& row, const MultiIndex& col) const {
        auto c = cols_.find(col);
        if (c == cols_.end()) return zero_like(sample_scalar());
        auto r = c->second.find(row);
        return r == c->second.end() ? zero_like(sample_scalar()) : r->second;
    }

    friend bool operator==(const TensorOp& a, const TensorOp& b) {
        if (a.dim_ != b.dim_ || a.arity_ != b.arity_) throw ArityMismatch();
        return a.cols_ == b.cols_;
    }
    friend bool operator!=(const TensorOp& a, const TensorOp& b) { return !(a == b); }

    friend TensorOp operator+(const TensorOp& a, const TensorOp& b) {
        a.check_same(b);
        TensorOp r = a;
        for (const auto& [c, rows] : b.cols_)
            for (const auto& [row, v] : rows) {
                auto& cell = r.cols_[c];
                auto [it, fresh] = cell.emplace(row, v);
                if (!fresh) {
                    it->second = it->second + v;
                    if (is_zero(it->second)) cell.erase(it);
                }
            }
        r.prune();
        return r;
    }
    TensorOp scaled(const R& s) const {
        TensorOp r(dim_, arity_);
        if (is_zero(s)) return r;
        r.cols_ = cols_;
        for (auto& [c, rows] : r.cols_)
            for (auto& [row, v] : rows) v = v * s;
        return r;
    }

    /// Operator product a*b, accumulating exactly then pruning zeros.
    friend TensorOp op_mul(const TensorOp& a, const TensorOp& b) {
        a.check_same(b);
        TensorOp r(a.dim_, a.arity_);
        for (const auto& [c, brows] : b.cols_) {
            auto& out = r.cols_[c];
            for (const auto& [k, sb] : brows) {
                auto ac = a.cols_.find(k);
                if (ac == a.cols_.end()) continue;
                for (const auto& [row, sa] : ac->second) {
                    R v = sa * sb;
                    auto [it, fresh] = out.emplace(row, v);
                    if (!fresh) {
                        it->second = it->second + v;
                        if (is_zero(it->second)) out.erase(it);
                    }
                }
            }
        }
        r.prune();
        return r;
    }

    /// Places this arity-m operator on the listed legs of V^{tensor n},
    /// acting as identity elsewhere.
    TensorOp embed(const std::vector<int>& legs, int n_total) const {
        validate_legs(legs, n_total);
        std::vector<int> comp;
        {
            std::vector<bool> used(n_total, false);
            for (int l : legs) used[l] = true;
            for (int i = 0; i < n_total; ++i)
                if (!used[i]) comp.push_back(i);
        }
        TensorOp r(dim_, n_total);
        for (const auto& [c_sub, rows] : cols_)
            for (const auto& [r_sub, v] : rows)
                for (MultiIndexRange idx(dim_, static_cast<int>(comp.size())); !idx.done();
                     idx.advance()) {
                    MultiIndex col(n_total, 0), row(n_total, 0);
                    for (size_t t = 0; t < legs.size(); ++t) {
                        col[legs[t]] = c_sub[t];
                        row[legs[t]] = r_sub[t];
                    }
                    for (size_t u = 0; u < comp.size(); ++u) {
                        col[comp[u]] = (*idx)[u];
                        row[comp[u]] = (*idx)[u];
                    }
                    r.cols_[col][row] = v;
                }
        return r;
    }

    /// Applies this operator to the given legs of a sparse vector on
    /// V^{tensor n} without materializing the embedding.
    SparseVec<R> apply_on_legs(const SparseVec<R>& vec, const std::vector<int>& legs,
                               int n_total) const {
        validate_legs(legs, n_total);
        SparseVec<R> out;
        for (const auto& [mi, val] : vec) {
            MultiIndex sub(legs.size());
            for (size_t t = 0; t < legs.size(); ++t) sub[t] = mi[legs[t]];
            auto c = cols_.find(sub);
            if (c == cols_.end()) continue;
            for (const auto& [r_sub, s] : c->second) {
                MultiIndex row = mi;
                for (size_t t = 0; t < legs.size(); ++t) row[legs[t]] = r_sub[t];
                R v = s * val;
                auto [it, fresh] = out.emplace(row, v);
                if (!fresh) {
                    it->second = it->second + v;
                    if (is_zero(it->second)) out.erase(it);
                }
            }
        }
        return out;
    }

    /// Exact inverse; fast path for generalized permutations, dense
    /// elimination (guarded) otherwise.
    TensorOp inverse() const {
        std::size_t n = total_dim();
        if (cols_.size() == n) {
            bool gen_perm = true;
            for (const auto& [c, rows] : cols_)
                if (rows.size() != 1) {
                    gen_perm = false;
                    break;
                }
            if (gen_perm) {
                TensorOp r(dim_, arity_);
                for (const auto& [c, rows] : cols_) {
                    const auto& [row, s] = *rows.begin();
                    r.cols_[row][c] = ring_inv(s);
                }
                if (r.cols_.size() != n) throw SingularOperator("repeated rows in operator");
                return r;
            }
        }
        return dense_inverse();
    }

    std::vector<std::vector<R>> to_dense() const {
        std::size_t n = total_dim();
        if (n > kDenseGuard)
            throw DenseMaterializationRefused("dense materialization of dimension " +
                                              std::to_string(n) + " refused (limit " +
                                              std::to_string(kDenseGuard) + ")");
        R z = zero_like(sample_scalar());
        std::vector<std::vector<R>> dense(n, std::vector<R>(n, z));
        for (const auto& [c, rows] : cols_)
            for (const auto& [row, v] : rows) dense[flatten(row)][flatten(c)] = v;
        return dense;
    }
    static TensorOp from_dense(int dim, int arity, const std::vector<std::vector<R>>& dense) {
        TensorOp r(dim, arity);
        std::size_t n = r.total_dim();
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (!is_zero(dense[i][j])) r.cols_[r.unflatten(j)][r.unflatten(i)] = dense[i][j];
        return r;
    }

    std::size_t flatten(const MultiIndex& mi) const {
        std::size_t f = 0;
        for (auto x : mi) f = f * dim_ + x;
        return f;
    }
    MultiIndex unflatten(std::size_t f) const {
        MultiIndex mi(arity_, 0);
        for (int i = arity_ - 1; i >= 0; --i) {
            mi[i] = static_cast<std::uint32_t>(f % dim_);
            f /= dim_;
        }
        return mi;
    }

private:
    R sample_scalar() const {
        if (cols_.empty()) return R{};
        return cols_.begin()->second.begin()->second;
    }
    void check_index(const MultiIndex& mi) const {
        if (static_cast<int>(mi.size()) != arity_) throw ArityMismatch("multi-index length");
        for (auto x : mi)
            if (x >= static_cast<std::uint32_t>(dim_)) throw LegOutOfRange("index component >= dim");
    }
    void check_same(const TensorOp& b) const {
        if (dim_ != b.dim_ || arity_ != b.arity_)
            throw ArityMismatch("operators on different spaces");
    }
    void validate_legs(const std::vector<int>& legs, int n_total) const {
        if (static_cast<int>(legs.size()) != arity_)
            throw ArityMismatch("leg list length != operator arity");
        if (n_total < arity_) throw ArityMismatch("target arity smaller than operator arity");
        std::vector<bool> seen(n_total, false);
        for (int l : legs) {
            if (l < 0 || l >= n_total)
                throw LegOutOfRange("leg " + std::to_string(l) + " outside 0.." +
                                    std::to_string(n_total - 1));
            if (seen[l]) throw DuplicateLeg("leg " + std::to_string(l) + " repeated");
            seen[l] = true;
        }
    }
    TensorOp dense_inverse() const {
        std::size_t n = total_dim();
        auto a = to_dense();
        R one = one_like(a[0][0]);
        R z = zero_like(one);
        std::vector<std::vector<R>> inv(n, std::vector<R>(n, z));
        for (std::size_t i = 0; i < n; ++i) inv[i][i] = one;
        for (std::size_t col = 0; col < n; ++col) {
            std::size_t piv = n;
            for (std::size_t i = col; i < n; ++i)
                if (!is_zero(a[i][col])) { piv = i; break; }
            if (piv == n) throw SingularOperator("operator not invertible");
            std::swap(a[piv], a[col]);
            std::swap(inv[piv], inv[col]);
            R s = ring_inv(a[col][col]);
            for (std::size_t j = 0; j < n; ++j) {
                a[col][j] = s * a[col][j];
                inv[col][j] = s * inv[col][j];
            }
            for (std::size_t i = 0; i < n; ++i) {
                if (i == col || is_zero(a[i][col])) continue;
                R f = a[i][col];
                for (std::size_t j = 0; j < n; ++j) {
                    a[i][j] = a[i][j] - f * a[col][j];
                    inv[i][j] = inv[i][j] - f * inv[col][j];
                }
            }
        }
        return from_dense(dim_, arity_, inv);
    }
    void prune() {
        for (auto it = cols_.begin(); it != cols_.end();)
            it = it->second.empty() ? cols_.erase(it) : std::next(it);
    }

    int dim_;
    int arity_;
    std::map<MultiIndex, std::map<MultiIndex, R>> cols_;
};

/// Kronecker product a (x) b on V^{tensor (ma+mb)}.
template <scalar_ring R>
TensorOp<R> tensor(const TensorOp<R>& a, const TensorOp<R>& b) {
    if (a.dim() != b.dim()) throw ArityMismatch("tensor factors over different spaces");
    TensorOp<R> r(a.dim(), a.arity() + b.arity());
    for (const auto& [ca, rowsa] : a.columns())
        for (const auto& [cb, rowsb] : b.columns()) {
            MultiIndex col = ca;
            col.insert(col.end(), cb.begin(), cb.end());
            for (const auto& [ra, va] : rowsa)
                for (const auto& [rb, vb] : rowsb) {
                    MultiIndex row = ra;
                    row.insert(row.end(), rb.begin(), rb.end());
                    R v = va * vb;
                    if (!is_zero(v)) r.set(row, col, v);
                }
        }
    return r;
}

template <scalar_ring R>
std::string vec_str(const SparseVec<R>& v) {
    std::ostringstream os;
    bool first = true;
    for (const auto& [mi, s] : v) {
        if (!first) os << " + ";
        os << scalar_str(s) << "*e" << mi_str(mi);
        first = false;
    }
    return first ? "0" : os.str();
}

}  // namespace penta
