#pragma once

#include <string>
#include <vector>

#include "penta/errors.hpp"
#include "penta/group.hpp"
#include "penta/rational.hpp"
#include "penta/report.hpp"

namespace penta {

/// Structure constants of a finite-dimensional Hopf algebra in a fixed basis:
///   e_i e_j = m^k_{ij} e_k          stored as m(i,j,k)
///   Delta(e_i) = mu_i^{jk} e_j @ e_k   stored as mu(i,j,k)
///   1 = unit^i e_i,  counit(e_i) = counit_i,  gamma(e_i) = gamma_i^j e_j.
struct HopfData {
    int dim = 0;
    std::vector<std::string> labels;
    std::vector<Rational> m_c, mu_c;      // dim^3, flattened [i][j][k]
    std::vector<Rational> unit, counit;   // dim
    std::vector<Rational> gamma_c;        // dim^2, flattened [i][j]

    const Rational& m(int i, int j, int k) const {
        return m_c[(static_cast<size_t>(i) * dim + j) * dim + k];
    }
    const Rational& mu(int i, int j, int k) const {
        return mu_c[(static_cast<size_t>(i) * dim + j) * dim + k];
    }
    const Rational& gamma(int i, int j) const { return gamma_c[static_cast<size_t>(i) * dim + j]; }
    Rational& m(int i, int j, int k) {
        return m_c[(static_cast<size_t>(i) * dim + j) * dim + k];
    }
    Rational& mu(int i, int j, int k) {
        return mu_c[(static_cast<size_t>(i) * dim + j) * dim + k];
    }
    Rational& gamma(int i, int j) { return gamma_c[static_cast<size_t>(i) * dim + j]; }

    static HopfData zeros(int n) {
        HopfData h;
        h.dim = n;
        h.m_c.assign(static_cast<size_t>(n) * n * n, Rational());
        h.mu_c.assign(static_cast<size_t>(n) * n * n, Rational());
        h.unit.assign(n, Rational());
        h.counit.assign(n, Rational());
        h.gamma_c.assign(static_cast<size_t>(n) * n, Rational());
        for (int i = 0; i < n; ++i) h.labels.push_back("e" + std::to_string(i));
        return h;
    }

    /// Group algebra k[G] in the group-element basis.
    static HopfData group_algebra(const GroupTable& g) {
        HopfData h = zeros(g.order);
        h.labels = g.labels;
        Rational one(1);
        for (int i = 0; i < g.order; ++i) {
            for (int j = 0; j < g.order; ++j) h.m(i, j, g.op(i, j)) = one;
            h.mu(i, i, i) = one;
            h.counit[i] = one;
            h.gamma(i, g.inverse(i)) = one;
        }
        h.unit[g.unit] = one;
        return h;
    }
};

/// Dual Hopf algebra in the dual basis: product and coproduct constants are
/// the transposes of mu and m, unit and counit trade places, and the
/// antipode matrix transposes.
inline HopfData dual_hopf(const HopfData& h) {
    int n = h.dim;
    HopfData d = HopfData::zeros(n);
    for (int i = 0; i < n; ++i) {
        d.labels[i] = h.labels[i] + "*";
        d.unit[i] = h.counit[i];
        d.counit[i] = h.unit[i];
        for (int j = 0; j < n; ++j) {
            d.gamma(i, j) = h.gamma(j, i);
            for (int k = 0; k < n; ++k) {
                d.m(i, j, k) = h.mu(k, i, j);
                d.mu(i, j, k) = h.m(j, k, i);
            }
        }
    }
    return d;
}

namespace detail {

inline Rational delta(int a, int b) { return a == b ? Rational(1) : Rational(); }

template <class Fn>
void hopf_axiom(std::vector<RelationReport>& out, const std::string& axiom, Fn&& probe) {
    RelationReport r;
    r.equation = axiom;
    r.backend = "hopf-axioms";
    std::string witness = probe();
    if (witness.empty()) {
        r.status = RelationReport::Status::pass;
    } else {
        r.status = RelationReport::Status::fail;
        r.counterexample = witness;
    }
    out.push_back(std::move(r));
}

}  // namespace detail

/// Verifies every Hopf axiom exactly on basis elements; one report per axiom.
inline std::vector<RelationReport> validate_hopf(const HopfData& h) {
    const int n = h.dim;
    std::vector<RelationReport> out;
    auto at = [](int a, int b, int c) {
        return "(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + ")";
    };

    detail::hopf_axiom(out, "associativity", [&]() -> std::string {
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                for (int l = 0; l < n; ++l)
                    for (int r = 0; r < n; ++r) {
                        Rational lhs, rhs;
                        for (int k = 0; k < n; ++k) {
                            lhs += h.m(i, j, k) * h.m(k, l, r);
                            rhs += h.m(j, l, k) * h.m(i, k, r);
                        }
                        if (lhs != rhs) return "basis " + at(i, j, l);
                    }
        return "";
    });
    detail::hopf_axiom(out, "coassociativity", [&]() -> std::string {
        for (int i = 0; i < n; ++i)
            for (int a = 0; a < n; ++a)
                for (int b = 0; b < n; ++b)
                    for (int c = 0; c < n; ++c) {
                        Rational lhs, rhs;
                        for (int k = 0; k < n; ++k) {
                            lhs += h.mu(i, k, c) * h.mu(k, a, b);
                            rhs += h.mu(i, a, k) * h.mu(k, b, c);
                        }
                        if (lhs != rhs) return "basis " + std::to_string(i) + " at " + at(a, b, c);
                    }
        return "";
    });
    detail::hopf_axiom(out, "unit", [&]() -> std::string {
        for (int i = 0; i < n; ++i)
            for (int k = 0; k < n; ++k) {
                Rational left, right;
                for (int j = 0; j < n; ++j) {
                    left += h.unit[j] * h.m(j, i, k);
                    right += h.unit[j] * h.m(i, j, k);
                }
                if (left != detail::delta(i, k)) return "1*e" + std::to_string(i);
                if (right != detail::delta(i, k)) return "e" + std::to_string(i) + "*1";
            }
        return "";
    });
    detail::hopf_axiom(out, "counit", [&]() -> std::string {
        for (int i = 0; i < n; ++i)
            for (int k = 0; k < n; ++k) {
                Rational left, right;
                for (int j = 0; j < n; ++j) {
                    left += h.mu(i, j, k) * h.counit[j];
                    right += h.mu(i, k, j) * h.counit[j];
                }
                if (left != detail::delta(i, k) || right != detail::delta(i, k))
                    return "basis " + std::to_string(i);
            }
        return "";
    });
    detail::hopf_axiom(out, "antipode-left", [&]() -> std::string {
        // m(gamma @ id)Delta = counit . unit
        for (int i = 0; i < n; ++i)
            for (int r = 0; r < n; ++r) {
                Rational lhs;
                for (int j = 0; j < n; ++j)
                    for (int k = 0; k < n; ++k)
                        for (int l = 0; l < n; ++l)
                            lhs += h.mu(i, j, k) * h.gamma(j, l) * h.m(l, k, r);
                if (lhs != h.counit[i] * h.unit[r]) return "basis " + std::to_string(i);
            }
        return "";
    });
    detail::hopf_axiom(out, "antipode-right", [&]() -> std::string {
        for (int i = 0; i < n; ++i)
            for (int r = 0; r < n; ++r) {
                Rational lhs;
                for (int j = 0; j < n; ++j)
                    for (int k = 0; k < n; ++k)
                        for (int l = 0; l < n; ++l)
                            lhs += h.mu(i, j, k) * h.gamma(k, l) * h.m(j, l, r);
                if (lhs != h.counit[i] * h.unit[r]) return "basis " + std::to_string(i);
            }
        return "";
    });
    detail::hopf_axiom(out, "coproduct-multiplicative", [&]() -> std::string {
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                for (int a = 0; a < n; ++a)
                    for (int b = 0; b < n; ++b) {
                        Rational lhs, rhs;
                        for (int k = 0; k < n; ++k) lhs += h.m(i, j, k) * h.mu(k, a, b);
                        for (int a1 = 0; a1 < n; ++a1)
                            for (int b1 = 0; b1 < n; ++b1) {
                                if (h.mu(i, a1, b1).is_zero()) continue;
                                for (int a2 = 0; a2 < n; ++a2)
                                    for (int b2 = 0; b2 < n; ++b2)
                                        rhs += h.mu(i, a1, b1) * h.mu(j, a2, b2) *
                                               h.m(a1, a2, a) * h.m(b1, b2, b);
                            }
                        if (lhs != rhs) return "basis " + at(i, j, a) + std::to_string(b);
                    }
        return "";
    });
    detail::hopf_axiom(out, "counit-multiplicative", [&]() -> std::string {
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                Rational lhs;
                for (int k = 0; k < n; ++k) lhs += h.m(i, j, k) * h.counit[k];
                if (lhs != h.counit[i] * h.counit[j]) return "basis " + std::to_string(i) + "," +
                                                             std::to_string(j);
            }
        return "";
    });
    detail::hopf_axiom(out, "coproduct-unital", [&]() -> std::string {
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                Rational lhs;
                for (int i = 0; i < n; ++i) lhs += h.unit[i] * h.mu(i, j, k);
                if (lhs != h.unit[j] * h.unit[k]) return "at " + std::to_string(j) + "," +
                                                         std::to_string(k);
            }
        return "";
    });
    detail::hopf_axiom(out, "counit-unital", [&]() -> std::string {
        Rational acc;
        for (int i = 0; i < n; ++i) acc += h.unit[i] * h.counit[i];
        return acc.is_one() ? "" : "counit(1) != 1";
    });
    return out;
}

/// Single pass/fail rollup of validate_hopf.
inline RelationReport validate_hopf_combined(const HopfData& h) {
    for (const auto& r : validate_hopf(h))
        if (!r.passed())
            return RelationReport::fail("hopf-axioms", "hopf-axioms",
                                        r.equation + ": " + r.counterexample);
    return RelationReport::pass("hopf-axioms", "hopf-axioms", 10);
}

/// Throwing form used by constructors that require valid input.
inline void require_valid_hopf(const HopfData& h) {
    for (const auto& r : validate_hopf(h))
        if (!r.passed()) throw AxiomViolation(r.equation, r.counterexample);
}

}  // namespace penta
