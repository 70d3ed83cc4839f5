#pragma once

#include <compare>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "penta/errors.hpp"
#include "penta/hopf.hpp"
#include "penta/rational.hpp"
#include "penta/relations.hpp"
#include "penta/tensor_op.hpp"

namespace penta {

/// Generator species of the O-double X*XX*, in normal-form order:
/// dual copy e^i, algebra e_j, antipode-twisted dual copy ~e^k.
enum class Species { Dual = 0, Alg = 1, Tilde = 2 };

struct Generator {
    Species sp;
    int idx;
};
using GenWord = std::vector<Generator>;

inline std::string gen_str(const Generator& g) {
    switch (g.sp) {
        case Species::Dual: return "e^" + std::to_string(g.idx);
        case Species::Alg: return "e_" + std::to_string(g.idx);
        default: return "~e^" + std::to_string(g.idx);
    }
}

/// Key of one normal-form monomial e^i e_j ~e^k; -1 marks an absent species.
struct Triple {
    int dual = -1, alg = -1, tilde = -1;
    auto operator<=>(const Triple&) const = default;

    std::string str() const {
        std::string s;
        if (dual >= 0) s += "e^" + std::to_string(dual) + " ";
        if (alg >= 0) s += "e_" + std::to_string(alg) + " ";
        if (tilde >= 0) s += "~e^" + std::to_string(tilde) + " ";
        if (s.empty()) return "1";
        s.pop_back();
        return s;
    }
};

/// Element of the O-double in normal form: sum of c * e^i e_j ~e^k.
struct NormalWord {
    std::map<Triple, Rational> terms;

    void add(const Triple& t, const Rational& c) {
        if (c.is_zero()) return;
        auto [it, fresh] = terms.emplace(t, c);
        if (!fresh) {
            it->second += c;
            if (it->second.is_zero()) terms.erase(it);
        }
    }
    friend bool operator==(const NormalWord& a, const NormalWord& b) { return a.terms == b.terms; }

    std::string str() const {
        if (terms.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [t, c] : terms) {
            if (!first) os << " + ";
            os << c.str() << "*" << t.str();
            first = false;
        }
        return os.str();
    }
};

/// Normal form by exhaustive application of the six defining rewrite rules.
/// Each rule either shortens the word (in-species merges) or moves a
/// lower-species generator left past a higher one, so the pair
/// (length, #species inversions) strictly decreases and rewriting terminates.
inline NormalWord normal_form(const HopfData& h, const GenWord& word) {
    if (word.empty()) throw Error("normal_form of empty word");
    const int n = h.dim;
    NormalWord out;
    std::vector<std::pair<Rational, GenWord>> work{{Rational(1), word}};
    while (!work.empty()) {
        auto [coef, w] = std::move(work.back());
        work.pop_back();
        if (coef.is_zero()) continue;

        // find leftmost reducible adjacent pair
        size_t pos = w.size();
        for (size_t i = 0; i + 1 < w.size(); ++i) {
            if (w[i].sp == w[i + 1].sp || w[i].sp > w[i + 1].sp) {
                pos = i;
                break;
            }
        }
        if (pos == w.size()) {
            Triple t;
            for (const auto& g : w) {
                if (g.sp == Species::Dual) t.dual = g.idx;
                else if (g.sp == Species::Alg) t.alg = g.idx;
                else t.tilde = g.idx;
            }
            out.add(t, coef);
            continue;
        }

        const Generator a = w[pos], b = w[pos + 1];
        auto emit = [&](const Rational& c, std::vector<Generator> repl) {
            if (c.is_zero()) return;
            GenWord nw(w.begin(), w.begin() + pos);
            nw.insert(nw.end(), repl.begin(), repl.end());
            nw.insert(nw.end(), w.begin() + pos + 2, w.end());
            work.emplace_back(coef * c, std::move(nw));
        };

        if (a.sp == b.sp) {
            // in-species product: e^i e^j = mu_k^{ij} e^k (dual copies) or
            // e_i e_j = m^k_{ij} e_k
            for (int k = 0; k < n; ++k) {
                const Rational& c = a.sp == Species::Alg ? h.m(a.idx, b.idx, k)
                                                         : h.mu(k, a.idx, b.idx);
                emit(c, {{a.sp, k}});
            }
        } else if (a.sp == Species::Alg && b.sp == Species::Dual) {
            // e_i e^j = m^j_{kl} mu_i^{lm} e^k e_m
            for (int k = 0; k < n; ++k)
                for (int mi = 0; mi < n; ++mi) {
                    Rational c;
                    for (int l = 0; l < n; ++l) c += h.m(k, l, b.idx) * h.mu(a.idx, l, mi);
                    emit(c, {{Species::Dual, k}, {Species::Alg, mi}});
                }
        } else if (a.sp == Species::Tilde && b.sp == Species::Alg) {
            // ~e^i e_j = mu_j^{kl} m^i_{lm} e_k ~e^m
            for (int k = 0; k < n; ++k)
                for (int mi = 0; mi < n; ++mi) {
                    Rational c;
                    for (int l = 0; l < n; ++l) c += h.mu(b.idx, k, l) * h.m(l, mi, a.idx);
                    emit(c, {{Species::Alg, k}, {Species::Tilde, mi}});
                }
        } else {
            // ~e^i e^j = e^j ~e^i
            emit(Rational(1), {b, a});
        }
    }
    return out;
}

inline GenWord triple_word(const Triple& t) {
    GenWord w;
    if (t.dual >= 0) w.push_back({Species::Dual, t.dual});
    if (t.alg >= 0) w.push_back({Species::Alg, t.alg});
    if (t.tilde >= 0) w.push_back({Species::Tilde, t.tilde});
    return w;
}

/// Product of two normal-form elements, renormalized.
inline NormalWord nf_mul(const HopfData& h, const NormalWord& a, const NormalWord& b) {
    NormalWord out;
    for (const auto& [ta, ca] : a.terms)
        for (const auto& [tb, cb] : b.terms) {
            GenWord w = triple_word(ta);
            GenWord wb = triple_word(tb);
            w.insert(w.end(), wb.begin(), wb.end());
            if (w.empty()) {
                out.add(Triple{}, ca * cb);
                continue;
            }
            NormalWord piece = normal_form(h, w);
            for (const auto& [t, c] : piece.terms) out.add(t, ca * cb * c);
        }
    return out;
}

// ---------------------------------------------------------------------------
// Representation on X*: e_j acts by the right derivation R*_{e_j}, e^i by
// left multiplication, ~e^i by right multiplication with the inverse dual
// antipode applied. The pairing conventions are not pinned by the relations
// alone, so construction tries gamma^{-1} first and falls back to gamma,
// accepting whichever satisfies the defining relations matrix-side.
// ---------------------------------------------------------------------------

struct ODoubleRep {
    HopfData h;
    std::vector<TensorOp<Rational>> dual_gen, alg_gen, tilde_gen;  // n x n, arity 1
    std::string antipode_variant;  // "gamma-inverse" or "gamma"
};

namespace detail {

inline TensorOp<Rational> nxn(int n) { return TensorOp<Rational>(n, 1); }

inline std::string check_dub_relations(const HopfData& h,
                                       const std::vector<TensorOp<Rational>>& dual,
                                       const std::vector<TensorOp<Rational>>& alg,
                                       const std::vector<TensorOp<Rational>>& tilde) {
    const int n = h.dim;
    auto lincomb = [&](const std::vector<TensorOp<Rational>>& gens, auto coeff) {
        TensorOp<Rational> acc = nxn(n);
        for (int k = 0; k < n; ++k) acc = acc + gens[k].scaled(coeff(k));
        return acc;
    };
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (op_mul(dual[i], dual[j]) !=
                lincomb(dual, [&](int k) { return h.mu(k, i, j); }))
                return "e^" + std::to_string(i) + " e^" + std::to_string(j);
            if (op_mul(alg[i], alg[j]) != lincomb(alg, [&](int k) { return h.m(i, j, k); }))
                return "e_" + std::to_string(i) + " e_" + std::to_string(j);
            if (op_mul(tilde[i], tilde[j]) !=
                lincomb(tilde, [&](int k) { return h.mu(k, i, j); }))
                return "~e^" + std::to_string(i) + " ~e^" + std::to_string(j);

            TensorOp<Rational> rhs = nxn(n);
            for (int k = 0; k < n; ++k)
                for (int mi = 0; mi < n; ++mi) {
                    Rational c;
                    for (int l = 0; l < n; ++l) c += h.m(k, l, j) * h.mu(i, l, mi);
                    if (!c.is_zero()) rhs = rhs + op_mul(dual[k], alg[mi]).scaled(c);
                }
            if (op_mul(alg[i], dual[j]) != rhs)
                return "e_" + std::to_string(i) + " e^" + std::to_string(j);

            rhs = nxn(n);
            for (int k = 0; k < n; ++k)
                for (int mi = 0; mi < n; ++mi) {
                    Rational c;
                    for (int l = 0; l < n; ++l) c += h.mu(j, k, l) * h.m(l, mi, i);
                    if (!c.is_zero()) rhs = rhs + op_mul(alg[k], tilde[mi]).scaled(c);
                }
            if (op_mul(tilde[i], alg[j]) != rhs)
                return "~e^" + std::to_string(i) + " e_" + std::to_string(j);

            if (op_mul(dual[i], tilde[j]) != op_mul(tilde[j], dual[i]))
                return "e^" + std::to_string(i) + " ~e^" + std::to_string(j);
        }
    return "";
}

}  // namespace detail

inline ODoubleRep represent_on_dual(const HopfData& h) {
    const int n = h.dim;
    ODoubleRep rep;
    rep.h = h;

    // <R*_{e_j}(f), e_l> = <f, e_l e_j>  =>  matrix [l][i] = m^i_{lj}
    for (int j = 0; j < n; ++j) {
        TensorOp<Rational> op = detail::nxn(n);
        for (int l = 0; l < n; ++l)
            for (int i = 0; i < n; ++i)
                if (!h.m(l, j, i).is_zero())
                    op.set({static_cast<std::uint32_t>(l)}, {static_cast<std::uint32_t>(i)},
                           h.m(l, j, i));
        rep.alg_gen.push_back(std::move(op));
    }
    // L_{e^i}(e^a) = mu_k^{ia} e^k
    for (int i = 0; i < n; ++i) {
        TensorOp<Rational> op = detail::nxn(n);
        for (int k = 0; k < n; ++k)
            for (int a = 0; a < n; ++a)
                if (!h.mu(k, i, a).is_zero())
                    op.set({static_cast<std::uint32_t>(k)}, {static_cast<std::uint32_t>(a)},
                           h.mu(k, i, a));
        rep.dual_gen.push_back(std::move(op));
    }
    // R_{e^j}(e^a) = mu_k^{aj} e^k
    std::vector<TensorOp<Rational>> rmul;
    for (int j = 0; j < n; ++j) {
        TensorOp<Rational> op = detail::nxn(n);
        for (int k = 0; k < n; ++k)
            for (int a = 0; a < n; ++a)
                if (!h.mu(k, a, j).is_zero())
                    op.set({static_cast<std::uint32_t>(k)}, {static_cast<std::uint32_t>(a)},
                           h.mu(k, a, j));
        rmul.push_back(std::move(op));
    }
    // dual antipode on coordinates: gtilde(e^i) = gamma_j^i e^j
    TensorOp<Rational> gtilde = detail::nxn(n);
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i)
            if (!h.gamma(j, i).is_zero())
                gtilde.set({static_cast<std::uint32_t>(j)}, {static_cast<std::uint32_t>(i)},
                           h.gamma(j, i));

    auto build_tilde = [&](const TensorOp<Rational>& twist) {
        std::vector<TensorOp<Rational>> tilde;
        for (int i = 0; i < n; ++i) {
            TensorOp<Rational> acc = detail::nxn(n);
            for (int j = 0; j < n; ++j) {
                Rational c = twist.entry({static_cast<std::uint32_t>(j)},
                                         {static_cast<std::uint32_t>(i)});
                if (!c.is_zero()) acc = acc + rmul[j].scaled(c);
            }
            tilde.push_back(std::move(acc));
        }
        return tilde;
    };

    std::string first_failure;
    for (const char* variant : {"gamma-inverse", "gamma"}) {
        TensorOp<Rational> twist =
            variant == std::string("gamma-inverse") ? gtilde.inverse() : gtilde;
        auto tilde = build_tilde(twist);
        std::string bad = detail::check_dub_relations(h, rep.dual_gen, rep.alg_gen, tilde);
        if (bad.empty()) {
            rep.tilde_gen = std::move(tilde);
            rep.antipode_variant = variant;
            return rep;
        }
        if (first_failure.empty()) first_failure = bad;
    }
    throw RepresentationMismatch("defining relations fail for both antipode conventions; first: " +
                                 first_failure);
}

inline TensorOp<Rational> word_matrix(const ODoubleRep& rep, const GenWord& w) {
    TensorOp<Rational> acc = TensorOp<Rational>::identity(rep.h.dim, 1, Rational(1));
    for (const auto& g : w) {
        const auto& gen = g.sp == Species::Dual ? rep.dual_gen[g.idx]
                          : g.sp == Species::Alg ? rep.alg_gen[g.idx]
                                                 : rep.tilde_gen[g.idx];
        acc = op_mul(acc, gen);
    }
    return acc;
}

inline TensorOp<Rational> normal_matrix(const ODoubleRep& rep, const NormalWord& nf) {
    TensorOp<Rational> acc(rep.h.dim, 1);
    for (const auto& [t, c] : nf.terms) acc = acc + word_matrix(rep, triple_word(t)).scaled(c);
    return acc;
}

/// Canonical pair S = e_i @ e^i, Sbar = e_i @ ~e^i as n^2 x n^2 operators.
inline MatrixSolution<Rational> canonical_pair(const ODoubleRep& rep) {
    const int n = rep.h.dim;
    MatrixSolution<Rational> sol;
    sol.dim = n;
    sol.one = Rational(1);
    sol.backend_name = "matrix/odouble";
    TensorOp<Rational> s(n, 2), sbar(n, 2);
    for (int i = 0; i < n; ++i) {
        s = s + tensor(rep.alg_gen[i], rep.dual_gen[i]);
        sbar = sbar + tensor(rep.alg_gen[i], rep.tilde_gen[i]);
    }
    sol.elems.emplace(Tag::S, std::move(s));
    sol.elems.emplace(Tag::Sbar, std::move(sbar));
    return sol;
}

inline MatrixSolution<Rational> canonical_pair(const HopfData& h) {
    return canonical_pair(represent_on_dual(h));
}

}  // namespace penta
