#pragma once

#include <algorithm>
#include <future>
#include <map>
#include <mutex>
#include <sstream>
#include <string>
#include <tuple>
#include <typeindex>
#include <vector>

#include "penta/errors.hpp"
#include "penta/rational.hpp"
#include "penta/relations.hpp"
#include "penta/report.hpp"
#include "penta/trunc_laurent.hpp"
#include "penta/z_laurent.hpp"

namespace penta {

/// Verification parameters for the shift-operator representation: series
/// order N, state window W, Laurent floor F, the cap on the adaptive
/// q-Pochhammer summation, and the extra orders carried above N so that
/// negative shifts later in a word cannot eat into the reported range.
///
/// Every reported relation is evaluated twice, the second time with a
/// larger ceiling, window and k-cap; the run only counts as verified if no
/// reported coefficient moves. That convergence recheck is what makes the
/// truncation safe: content discarded near the carried ceiling on one run
/// would land differently on the other.
struct QParams {
    long order = 12;
    int window = 36;
    long floor = -80;
    int kcap = 40;
    long slack = 112;

    QParams escalated() const {
        QParams e = *this;
        e.window += 2;
        e.kcap += 4;
        e.slack += 8;
        return e;
    }
};

/// Basis label tuple |n_1,...,n_legs> of the Z-graded shift representation:
/// H|n> = n|n>, q^Lambda|n> = |n+1>.
using FockState = std::vector<int>;

inline std::string fock_str(const FockState& s) {
    std::ostringstream os;
    os << "|";
    for (size_t i = 0; i < s.size(); ++i) {
        if (i) os << ",";
        os << s[i];
    }
    os << ">";
    return os.str();
}

/// Finitely many window states with truncated series coefficients. The
/// public SeriesVector carries Rational-coefficient series; the checkers
/// run the same machinery on an integer fast path (see ZLaurent), which a
/// unit test pins against this one.
template <class L>
struct BasicSeriesVector {
    std::map<FockState, L> entries;

    static BasicSeriesVector basis(const FockState& s, const QParams& p) {
        check_window(s, p);
        BasicSeriesVector v;
        v.entries[s] = L(1).truncated(p.order + p.slack);
        return v;
    }

    static bool in_window(const FockState& s, const QParams& p) {
        for (int n : s)
            if (n < -p.window || n > p.window) return false;
        return true;
    }
    static void check_window(const FockState& s, const QParams& p) {
        if (!in_window(s, p))
            throw WindowExceeded("state " + fock_str(s) + " leaves window [-" +
                                 std::to_string(p.window) + "," + std::to_string(p.window) +
                                 "]; raise --window");
    }

    /// Accumulate c at state s; floor violations raise.
    void add(const FockState& s, const L& c, const QParams& p) {
        if (!c.is_zero() && c.min_exp() < p.floor)
            throw FloorExceeded("exponent " + std::to_string(c.min_exp()) + " below floor " +
                                std::to_string(p.floor) + " at " + fock_str(s));
        auto [it, fresh] = entries.emplace(s, c);
        if (!fresh) it->second += c;
        if (it->second.is_zero() && it->second.exact()) entries.erase(it);
    }

    /// Drops exactly-zero coefficients. Zero-up-to-truncation entries are
    /// kept: their truncation order still bounds what a comparison may claim.
    void normalize() {
        for (auto it = entries.begin(); it != entries.end();)
            it = (it->second.is_zero() && it->second.exact()) ? entries.erase(it)
                                                              : std::next(it);
    }

    std::string str() const {
        std::ostringstream os;
        bool first = true;
        for (const auto& [s, c] : entries) {
            if (c.is_zero()) continue;
            if (!first) os << " + ";
            os << "(" << c.str() << ")" << fock_str(s);
            first = false;
        }
        return first ? "0" : os.str();
    }
};

using SeriesVector = BasicSeriesVector<TruncLaurent>;

enum class QOp { S, SInv, SbarQexp };
enum class SbarVariant { s_inverse, q_exponential };

namespace qdetail {

/// Largest total exponent decrease the remaining w-chain can still cause
/// from a state with second label n: each application contributes 1-n and
/// then decrements n, so at most n(n-1)/2 in all.
inline long dec_budget(int n) { return n >= 2 ? static_cast<long>(n) * (n - 1) / 2 : 0; }

/// Cached 1/(1-q^k) expansions to a given order (shared across words).
template <class L>
const L& geometric_inverse(long k, long ceiling, long floor) {
    static std::map<std::tuple<long, long, long>, L> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_tuple(k, ceiling, floor);
    auto it = cache.find(key);
    if (it == cache.end())
        it = cache
                 .emplace(key, (L(1) - L::monomial(1, k)).truncated(ceiling).inverse(floor))
                 .first;
    return it->second;
}

/// q^{sign * H (x) Lambda}: |m,n> -> |m, n + sign*m> on legs (i,j); exact.
template <class L>
BasicSeriesVector<L> qexp_shift(const BasicSeriesVector<L>& v, int i, int j, int sign,
                                const QParams& p) {
    BasicSeriesVector<L> out;
    for (const auto& [s, c] : v.entries) {
        FockState t = s;
        t[j] += sign * s[i];
        BasicSeriesVector<L>::check_window(t, p);
        out.add(t, c, p);
    }
    return out;
}

}  // namespace qdetail

/// Applies one two-leg operator factor to a ket:
///   S        = q^{H (x) Lambda} (w;q)_inf^{-1},  1/(w;q)_inf = sum_k w^k/(q;q)_k,
///   S^{-1}   = (w;q)_inf q^{-H (x) Lambda},  (w;q)_inf = sum_k (-1)^k q^{k(k-1)/2} w^k/(q;q)_k,
///   Sbar_qexp = q^{-H (x) Lambda} alone,
/// where w = -q^Lambda (x) q^{-H} q^{-Lambda} acts as w|m,n> = -q^{1-n}|m+1,n-1>.
/// Summation over k stops once every term sits provably above the carried
/// ceiling even after its own chain's remaining downward shifts; hitting
/// the k-cap first raises ConvergenceStalled, and a state escaping the
/// window raises WindowExceeded. The corrupt flag degrades w's exponent to
/// -q^{-n} (negative control).
template <class L>
BasicSeriesVector<L> apply_S(const BasicSeriesVector<L>& v, int i, int j, QOp op,
                             const QParams& p, bool corrupt_w = false) {
    if (i == j) throw DuplicateLeg("operator legs must differ");
    if (op == QOp::SbarQexp) return qdetail::qexp_shift(v, i, j, -1, p);

    const long ceiling = p.order + p.slack;
    BasicSeriesVector<L> base = op == QOp::S ? v : qdetail::qexp_shift(v, i, j, -1, p);
    BasicSeriesVector<L> acc = base;
    BasicSeriesVector<L> term = base;
    bool settled = false;
    for (int k = 1; k <= p.kcap; ++k) {
        L mult = qdetail::geometric_inverse<L>(k, ceiling, p.floor);
        if (op == QOp::SInv) mult *= L::monomial(-1, k - 1);

        BasicSeriesVector<L> next;
        for (const auto& [s, c] : term.entries) {
            FockState t = s;
            t[i] += 1;
            t[j] -= 1;
            long e = (corrupt_w ? 0L : 1L) - s[j];
            L nc = c.shifted(e, true) * mult;
            if (nc.is_zero() && nc.exact()) continue;
            if (nc.low_bound() - qdetail::dec_budget(t[j]) > ceiling) continue;
            BasicSeriesVector<L>::check_window(t, p);
            next.add(t, std::move(nc), p);
        }
        term = std::move(next);
        for (const auto& [s, c] : term.entries) acc.add(s, c, p);
        if (term.entries.empty()) {
            settled = true;
            break;
        }
    }
    if (!settled)
        throw ConvergenceStalled("q-Pochhammer sum not settled after k-cap " +
                                 std::to_string(p.kcap) +
                                 "; raise --kcap or shrink the window/order");
    acc.normalize();
    return op == QOp::S ? qdetail::qexp_shift(acc, i, j, +1, p) : acc;
}

struct QWordFactor {
    QOp op;
    int i, j;
};

/// Apply an operator word to a ket: the rightmost factor acts first.
template <class L>
BasicSeriesVector<L> apply_word(const std::vector<QWordFactor>& word,
                                const BasicSeriesVector<L>& v, const QParams& p,
                                bool corrupt_w = false) {
    BasicSeriesVector<L> cur = v;
    for (auto it = word.rbegin(); it != word.rend(); ++it)
        cur = apply_S(cur, it->i, it->j, it->op, p, corrupt_w);
    return cur;
}

inline std::vector<QWordFactor> q_word(const std::vector<Factor>& side, SbarVariant variant) {
    std::vector<QWordFactor> w;
    for (const auto& f : side) {
        QOp op;
        if (f.tag == Tag::S) op = QOp::S;
        else if (f.tag == Tag::Sbar)
            op = variant == SbarVariant::s_inverse ? QOp::SInv : QOp::SbarQexp;
        else
            throw Error("q-series words use only S and Sbar");
        w.push_back({op, f.legs[0], f.legs[1]});
    }
    return w;
}

/// Result of comparing two series vectors coefficient-by-coefficient.
struct QCompare {
    long verified_order = 0;
    std::string witness;
    bool equal = true;
};

template <class L>
QCompare compare_vectors(const BasicSeriesVector<L>& a, const BasicSeriesVector<L>& b,
                         long order) {
    QCompare out;
    out.verified_order = order;
    auto states = a.entries;
    for (const auto& [s, c] : b.entries) states.emplace(s, L());
    for (const auto& [s, unused] : states) {
        auto ia = a.entries.find(s);
        auto ib = b.entries.find(s);
        L ca = ia == a.entries.end() ? L() : ia->second;
        L cb = ib == b.entries.end() ? L() : ib->second;
        long common = std::min({ca.trunc(), cb.trunc(), order});
        if (common < out.verified_order) out.verified_order = common;
        if (!(ca.truncated(common) == cb.truncated(common))) {
            out.equal = false;
            out.witness = "state " + fock_str(s) + ": lhs coeff " + ca.str() + ", rhs coeff " +
                          cb.str();
            return out;
        }
    }
    return out;
}

inline EquationDef q_equation(const std::string& relation) {
    if (relation == "ss1") return eqs::ss1();
    if (relation == "ss2") return eqs::ss2();
    if (relation == "ss3") return eqs::ss3();
    throw Error("q-series relation must be ss1, ss2, or ss3");
}

namespace qdetail {

/// Evaluates a word at base parameters and again at escalated parameters;
/// the reported coefficients (up to `order`) must agree, otherwise the
/// truncation had not converged and the result cannot be trusted.
template <class L>
BasicSeriesVector<L> converged_word(const std::vector<QWordFactor>& word, const FockState& s,
                                    const QParams& p, bool corrupt_w) {
    BasicSeriesVector<L> base =
        apply_word(word, BasicSeriesVector<L>::basis(s, p), p, corrupt_w);
    QParams esc = p.escalated();
    BasicSeriesVector<L> wide =
        apply_word(word, BasicSeriesVector<L>::basis(s, esc), esc, corrupt_w);
    QCompare against = compare_vectors(base, wide, p.order);
    if (!against.equal)
        throw ConvergenceStalled("truncation not converged at order " + std::to_string(p.order) +
                                 " (coefficients moved under escalated parameters): " +
                                 against.witness);
    return base;
}

}  // namespace qdetail

/// Checks one of (ss1), (ss2), (ss3) in the shift representation on the
/// listed input states. Both operator words are applied to each state with
/// the convergence recheck, and every output coefficient is compared as a
/// truncated series; the report carries the maximal order actually verified.
inline RelationReport check_q_relation(const std::string& relation, SbarVariant variant,
                                       const std::vector<FockState>& states, const QParams& p,
                                       bool corrupt_w = false) {
    EquationDef eq = q_equation(relation);
    std::string backend =
        variant == SbarVariant::s_inverse ? "series/Sbar=S^-1" : "series/Sbar=q^-HL";
    auto lhs_word = q_word(eq.lhs, variant);
    auto rhs_word = q_word(eq.rhs, variant);
    for (const auto& s : states)
        if (static_cast<int>(s.size()) != eq.n_legs)
            throw Error("state " + fock_str(s) + " has wrong leg count for " + relation);
    // states are independent; evaluate them concurrently, merge in order
    std::vector<std::future<QCompare>> tasks;
    for (const auto& s : states)
        tasks.push_back(std::async(std::launch::async, [&, s]() {
            auto lhs = qdetail::converged_word<ZLaurent>(lhs_word, s, p, corrupt_w);
            auto rhs = qdetail::converged_word<ZLaurent>(rhs_word, s, p, corrupt_w);
            return compare_vectors(lhs, rhs, p.order);
        }));
    long verified = p.order;
    for (size_t i = 0; i < tasks.size(); ++i) {
        QCompare cmp = tasks[i].get();
        if (!cmp.equal)
            return RelationReport::fail(relation, backend,
                                        "input " + fock_str(states[i]) + ", " + cmp.witness,
                                        static_cast<long>(states.size()));
        verified = std::min(verified, cmp.verified_order);
    }
    RelationReport r =
        RelationReport::pass(relation, backend, static_cast<long>(states.size()));
    r.note = "verified to order q^" + std::to_string(verified) + ", convergence-checked";
    return r;
}

/// S then S^{-1} must return every state to itself up to the carried order.
inline RelationReport check_q_inverse(const std::vector<FockState>& states, const QParams& p) {
    long verified = p.order;
    std::vector<QWordFactor> round{{QOp::SInv, 0, 1}, {QOp::S, 0, 1}};
    for (const auto& s : states) {
        auto out = qdetail::converged_word<ZLaurent>(round, s, p, false);
        QCompare cmp = compare_vectors(out, BasicSeriesVector<ZLaurent>::basis(s, p), p.order);
        if (!cmp.equal)
            return RelationReport::fail("s-inverse", "series",
                                        "input " + fock_str(s) + ", " + cmp.witness,
                                        static_cast<long>(states.size()));
        verified = std::min(verified, cmp.verified_order);
    }
    RelationReport r =
        RelationReport::pass("s-inverse", "series", static_cast<long>(states.size()));
    r.note = "verified to order q^" + std::to_string(verified);
    return r;
}

/// Independent arithmetic path: evaluate every coefficient at q = value as
/// an exact rational (summing known terms up to `order`) and compare the
/// two sides state by state.
inline RelationReport check_q_specialized(const std::string& relation, SbarVariant variant,
                                          const std::vector<FockState>& states, const QParams& p,
                                          const Rational& value) {
    EquationDef eq = q_equation(relation);
    auto lhs_word = q_word(eq.lhs, variant);
    auto rhs_word = q_word(eq.rhs, variant);
    for (const auto& s : states) {
        auto lhs = qdetail::converged_word<ZLaurent>(lhs_word, s, p, false);
        auto rhs = qdetail::converged_word<ZLaurent>(rhs_word, s, p, false);
        auto states_union = lhs.entries;
        for (const auto& [t, c] : rhs.entries) states_union.emplace(t, ZLaurent());
        for (const auto& [t, unused] : states_union) {
            auto ia = lhs.entries.find(t);
            auto ib = rhs.entries.find(t);
            Rational va =
                ia == lhs.entries.end() ? Rational() : ia->second.evaluate(value, p.order);
            Rational vb =
                ib == rhs.entries.end() ? Rational() : ib->second.evaluate(value, p.order);
            if (va != vb)
                return RelationReport::fail(relation + "@q=" + value.str(), "series/rational",
                                            "input " + fock_str(s) + " state " + fock_str(t) +
                                                ": " + va.str() + " vs " + vb.str());
        }
    }
    return RelationReport::pass(relation + "@q=" + value.str(), "series/rational",
                                static_cast<long>(states.size()));
}

}  // namespace penta
