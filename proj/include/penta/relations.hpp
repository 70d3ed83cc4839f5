#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "penta/errors.hpp"
#include "penta/point_map.hpp"
#include "penta/report.hpp"
#include "penta/tensor_op.hpp"

namespace penta {

enum class Tag { S, Sbar, T, Tbar, P, R, B };

inline const char* tag_str(Tag t) {
    switch (t) {
        case Tag::S: return "S";
        case Tag::Sbar: return "Sbar";
        case Tag::T: return "T";
        case Tag::Tbar: return "Tbar";
        case Tag::P: return "P";
        case Tag::R: return "R";
        default: return "B";
    }
}

struct Factor {
    Tag tag;
    std::vector<int> legs;  // 0-based
};

/// Both sides of one displayed equation, legs stored 0-based. Equations
/// printed 1-based in the source relations are shifted down once here; the
/// four-simplex legs are 0-based natively.
struct EquationDef {
    std::string name;
    int n_legs = 0;
    std::vector<Factor> lhs, rhs;
};

namespace eqs {

// S12 S13 S23 = S23 S12
inline EquationDef ss1() {
    return {"ss1", 3,
            {{Tag::S, {0, 1}}, {Tag::S, {0, 2}}, {Tag::S, {1, 2}}},
            {{Tag::S, {1, 2}}, {Tag::S, {0, 1}}}};
}
// Sbar23 Sbar13 Sbar12 = Sbar12 Sbar23
inline EquationDef ss2() {
    return {"ss2", 3,
            {{Tag::Sbar, {1, 2}}, {Tag::Sbar, {0, 2}}, {Tag::Sbar, {0, 1}}},
            {{Tag::Sbar, {0, 1}}, {Tag::Sbar, {1, 2}}}};
}
// Sbar12 S13 Sbar14 S24 Sbar34 = S24 Sbar34 S14 Sbar12 S13
inline EquationDef ss3() {
    return {"ss3", 4,
            {{Tag::Sbar, {0, 1}}, {Tag::S, {0, 2}}, {Tag::Sbar, {0, 3}}, {Tag::S, {1, 3}},
             {Tag::Sbar, {2, 3}}},
            {{Tag::S, {1, 3}}, {Tag::Sbar, {2, 3}}, {Tag::S, {0, 3}}, {Tag::Sbar, {0, 1}},
             {Tag::S, {0, 2}}}};
}
// S13 Sbar23 = Sbar23 S13
inline EquationDef co1() {
    return {"co1", 3, {{Tag::S, {0, 2}}, {Tag::Sbar, {1, 2}}},
            {{Tag::Sbar, {1, 2}}, {Tag::S, {0, 2}}}};
}
// S12 Sbar13 Sbar23 = Sbar23 S12
inline EquationDef co2() {
    return {"co2", 3,
            {{Tag::S, {0, 1}}, {Tag::Sbar, {0, 2}}, {Tag::Sbar, {1, 2}}},
            {{Tag::Sbar, {1, 2}}, {Tag::S, {0, 1}}}};
}
// S23 S13 Sbar12 = Sbar12 S23
inline EquationDef co3() {
    return {"co3", 3,
            {{Tag::S, {1, 2}}, {Tag::S, {0, 2}}, {Tag::Sbar, {0, 1}}},
            {{Tag::Sbar, {0, 1}}, {Tag::S, {1, 2}}}};
}
// S12 T13 T23 = T23 T12
inline EquationDef st1a() {
    return {"st1a", 3,
            {{Tag::S, {0, 1}}, {Tag::T, {0, 2}}, {Tag::T, {1, 2}}},
            {{Tag::T, {1, 2}}, {Tag::T, {0, 1}}}};
}
// Tbar23 Tbar13 Sbar12 = Tbar12 Tbar23
inline EquationDef st1b() {
    return {"st1b", 3,
            {{Tag::Tbar, {1, 2}}, {Tag::Tbar, {0, 2}}, {Tag::Sbar, {0, 1}}},
            {{Tag::Tbar, {0, 1}}, {Tag::Tbar, {1, 2}}}};
}
// Sbar12 T13 Tbar14 T24 Tbar34 = T24 Tbar34 T14 Tbar12 S13
inline EquationDef st2() {
    return {"st2", 4,
            {{Tag::Sbar, {0, 1}}, {Tag::T, {0, 2}}, {Tag::Tbar, {0, 3}}, {Tag::T, {1, 3}},
             {Tag::Tbar, {2, 3}}},
            {{Tag::T, {1, 3}}, {Tag::Tbar, {2, 3}}, {Tag::T, {0, 3}}, {Tag::Tbar, {0, 1}},
             {Tag::S, {0, 2}}}};
}
// R123 R145 R246 R356 = R356 R246 R145 R123
inline EquationDef tet() {
    EquationDef e{"tet", 6,
                  {{Tag::R, {0, 1, 2}}, {Tag::R, {0, 3, 4}}, {Tag::R, {1, 3, 5}},
                   {Tag::R, {2, 4, 5}}},
                  {}};
    e.rhs.assign(e.lhs.rbegin(), e.lhs.rend());
    return e;
}
// B0123 B0456 B1478 B2579 B3689 = B3689 B2579 B1478 B0456 B0123
inline EquationDef fse() {
    EquationDef e{"fse", 10,
                  {{Tag::B, {0, 1, 2, 3}}, {Tag::B, {0, 4, 5, 6}}, {Tag::B, {1, 4, 7, 8}},
                   {Tag::B, {2, 5, 7, 9}}, {Tag::B, {3, 6, 8, 9}}},
                  {}};
    e.rhs.assign(e.lhs.rbegin(), e.lhs.rend());
    return e;
}

}  // namespace eqs

struct CheckParams {
    long samples = 200;
    std::uint64_t seed = 1;
    std::size_t exhaustive_cap = 200000;  // max points enumerated before falling back to sampling
};

enum class PentagonVariant { ss1, ss2 };
enum class RFlavor { from_S, from_T };
enum class SymmetryKind { swap, invert };

// ---------------------------------------------------------------------------
// Matrix backend: elements are sparse tensor operators, equations are checked
// column-by-column so no full product is ever materialized.
// ---------------------------------------------------------------------------

template <scalar_ring R2>
struct MatrixSolution {
    int dim = 0;
    R2 one;
    std::map<Tag, TensorOp<R2>> elems;
    std::string backend_name = "matrix";

    bool has(Tag t) const { return t == Tag::P || elems.count(t) > 0; }
    TensorOp<R2> resolve(Tag t) const {
        if (t == Tag::P) return TensorOp<R2>::permutation(dim, one);
        auto it = elems.find(t);
        if (it == elems.end())
            throw Error(std::string("solution lacks element ") + tag_str(t));
        return it->second;
    }
};

template <scalar_ring R2>
RelationReport check_equation(const MatrixSolution<R2>& sol, const EquationDef& eq,
                              const CheckParams& = {}) {
    std::map<Tag, TensorOp<R2>> ops;
    for (const auto& side : {eq.lhs, eq.rhs})
        for (const auto& f : side)
            if (!ops.count(f.tag)) ops.emplace(f.tag, sol.resolve(f.tag));

    auto apply_word = [&](const std::vector<Factor>& word, SparseVec<R2> v) {
        // kets: the rightmost operator factor acts first
        for (auto it = word.rbegin(); it != word.rend(); ++it)
            v = ops.at(it->tag).apply_on_legs(v, it->legs, eq.n_legs);
        return v;
    };

    long columns = 0;
    for (MultiIndexRange col(sol.dim, eq.n_legs); !col.done(); col.advance()) {
        SparseVec<R2> unit{{*col, sol.one}};
        SparseVec<R2> a = apply_word(eq.lhs, unit);
        SparseVec<R2> b = apply_word(eq.rhs, unit);
        ++columns;
        if (!(a == b))
            return RelationReport::fail(eq.name, sol.backend_name,
                                        "column e" + mi_str(*col) + ": lhs = " + vec_str(a) +
                                            ", rhs = " + vec_str(b),
                                        columns);
    }
    return RelationReport::pass(eq.name, sol.backend_name, columns);
}

template <scalar_ring R2>
TensorOp<R2> build_R(const MatrixSolution<R2>& sol, RFlavor flavor) {
    Tag a = flavor == RFlavor::from_S ? Tag::Sbar : Tag::Tbar;
    Tag b = flavor == RFlavor::from_S ? Tag::S : Tag::T;
    TensorOp<R2> left = sol.resolve(a).embed({0, 2}, 3);
    TensorOp<R2> mid = sol.resolve(Tag::P).embed({1, 2}, 3);
    TensorOp<R2> right = sol.resolve(b).embed({0, 2}, 3);
    return op_mul(op_mul(left, mid), right);
}

template <scalar_ring R2>
TensorOp<R2> build_B(const MatrixSolution<R2>& sol) {
    TensorOp<R2> p = sol.resolve(Tag::P);
    TensorOp<R2> b = sol.resolve(Tag::Sbar).embed({1, 3}, 4);
    b = op_mul(b, p.embed({0, 1}, 4));
    b = op_mul(b, p.embed({2, 3}, 4));
    return op_mul(b, sol.resolve(Tag::S).embed({1, 3}, 4));
}

template <scalar_ring R2>
RelationReport check_TE(const MatrixSolution<R2>& sol, RFlavor flavor, const CheckParams& p = {}) {
    MatrixSolution<R2> holder{sol.dim, sol.one, {{Tag::R, build_R(sol, flavor)}},
                              sol.backend_name};
    RelationReport r = check_equation(holder, eqs::tet(), p);
    r.note = flavor == RFlavor::from_S ? "R = Sbar13 P23 S13" : "R = Tbar13 P23 T13";
    return r;
}

template <scalar_ring R2>
RelationReport check_FSE(const MatrixSolution<R2>& sol, const CheckParams& p = {}) {
    MatrixSolution<R2> holder{sol.dim, sol.one, {{Tag::B, build_B(sol)}}, sol.backend_name};
    RelationReport r = check_equation(holder, eqs::fse(), p);
    r.note = "B = Sbar13 P01 P23 S13";
    return r;
}

template <scalar_ring R2>
MatrixSolution<R2> symmetry_transform(const MatrixSolution<R2>& sol, SymmetryKind kind) {
    MatrixSolution<R2> out{sol.dim, sol.one, {}, sol.backend_name};
    TensorOp<R2> s = sol.resolve(Tag::S), sbar = sol.resolve(Tag::Sbar);
    if (kind == SymmetryKind::swap) {
        TensorOp<R2> p = sol.resolve(Tag::P);
        out.elems.emplace(Tag::S, op_mul(op_mul(p, sbar), p));
        out.elems.emplace(Tag::Sbar, op_mul(op_mul(p, s), p));
    } else {
        out.elems.emplace(Tag::S, sbar.inverse());
        out.elems.emplace(Tag::Sbar, s.inverse());
    }
    return out;
}

/// Adds one to the first stored entry of an element; negative-control input.
template <scalar_ring R2>
TensorOp<R2> corrupt_first_entry(const TensorOp<R2>& op) {
    TensorOp<R2> out = op;
    const auto& [col, rows] = *op.columns().begin();
    const auto& [row, v] = *rows.begin();
    out.set(row, col, v + one_like(v));
    return out;
}

// ---------------------------------------------------------------------------
// Point-map backend: equations are checked as identities of composed partial
// maps, exhaustively on small finite carriers, sampled otherwise.
// ---------------------------------------------------------------------------

template <class C>
struct PointSolution {
    int components = 1;
    std::map<Tag, PointMap<C>> maps;
    CoordSampler<C> sampler;
    std::string backend_name = "point";

    bool has(Tag t) const { return t == Tag::P || maps.count(t) > 0; }
    PointMap<C> resolve(Tag t) const {
        if (t == Tag::P) return PointMap<C>::slot_swap(components);
        auto it = maps.find(t);
        if (it == maps.end())
            throw Error(std::string("solution lacks element ") + tag_str(t));
        return it->second;
    }
};

template <class C>
PointMap<C> word_map(const PointSolution<C>& sol, const std::vector<Factor>& word, int n_legs) {
    std::vector<std::pair<PointMap<C>, std::vector<int>>> factors;
    for (const auto& f : word) factors.emplace_back(sol.resolve(f.tag), f.legs);
    return as_operator_product(std::move(factors), n_legs);
}

template <class C>
RelationReport check_equation(const PointSolution<C>& sol, const EquationDef& eq,
                              const CheckParams& p = {}) {
    PointMap<C> lhs = word_map(sol, eq.lhs, eq.n_legs);
    PointMap<C> rhs = word_map(sol, eq.rhs, eq.n_legs);
    if (!sol.sampler.universe.empty()) {
        std::size_t points = 1;
        bool small = true;
        for (int i = 0; i < eq.n_legs && small; ++i) {
            points *= sol.sampler.universe.size();
            small = points <= p.exhaustive_cap;
        }
        if (small) {
            RelationReport r =
                exhaustive_equal(lhs, rhs, sol.sampler, eq.name, sol.backend_name);
            r.note = "exhaustive";
            return r;
        }
    }
    return sampled_equal(lhs, rhs, p.samples, p.seed, sol.sampler, eq.name, sol.backend_name);
}

template <class C>
PointMap<C> build_R(const PointSolution<C>& sol, RFlavor flavor) {
    Tag a = flavor == RFlavor::from_S ? Tag::Sbar : Tag::Tbar;
    Tag b = flavor == RFlavor::from_S ? Tag::S : Tag::T;
    return as_operator_product<C>({{sol.resolve(a), {0, 2}},
                                   {sol.resolve(Tag::P), {1, 2}},
                                   {sol.resolve(b), {0, 2}}},
                                  3);
}

template <class C>
PointMap<C> build_B(const PointSolution<C>& sol) {
    return as_operator_product<C>({{sol.resolve(Tag::Sbar), {1, 3}},
                                   {sol.resolve(Tag::P), {0, 1}},
                                   {sol.resolve(Tag::P), {2, 3}},
                                   {sol.resolve(Tag::S), {1, 3}}},
                                  4);
}

template <class C>
RelationReport check_TE(const PointSolution<C>& sol, RFlavor flavor, const CheckParams& p = {}) {
    PointSolution<C> holder{sol.components, {{Tag::R, build_R(sol, flavor)}}, sol.sampler,
                            sol.backend_name};
    RelationReport r = check_equation(holder, eqs::tet(), p);
    r.note = flavor == RFlavor::from_S ? "R = Sbar13 P23 S13" : "R = Tbar13 P23 T13";
    return r;
}

template <class C>
RelationReport check_FSE(const PointSolution<C>& sol, const CheckParams& p = {}) {
    PointSolution<C> holder{sol.components, {{Tag::B, build_B(sol)}}, sol.sampler,
                            sol.backend_name};
    RelationReport r = check_equation(holder, eqs::fse(), p);
    r.note = "B = Sbar13 P01 P23 S13";
    return r;
}

template <class C>
PointSolution<C> symmetry_transform(const PointSolution<C>& sol, SymmetryKind kind) {
    PointSolution<C> out{sol.components, {}, sol.sampler, sol.backend_name};
    if (kind == SymmetryKind::swap) {
        auto conj = [&](Tag t) {
            return as_operator_product<C>({{sol.resolve(Tag::P), {0, 1}},
                                           {sol.resolve(t), {0, 1}},
                                           {sol.resolve(Tag::P), {0, 1}}},
                                          2);
        };
        out.maps.emplace(Tag::S, conj(Tag::Sbar));
        out.maps.emplace(Tag::Sbar, conj(Tag::S));
    } else {
        out.maps.emplace(Tag::S, sol.resolve(Tag::Sbar).inverted());
        out.maps.emplace(Tag::Sbar, sol.resolve(Tag::S).inverted());
    }
    return out;
}

// ---------------------------------------------------------------------------
// Named checkers shared by both backends.
// ---------------------------------------------------------------------------

namespace detail {

template <class Sol>
RelationReport run_group(const Sol& sol, const std::vector<EquationDef>& parts,
                         const std::string& name, const CheckParams& p) {
    long samples = 0, retries = 0;
    for (const auto& eq : parts) {
        RelationReport r = check_equation(sol, eq, p);
        samples += r.samples;
        retries += r.retries;
        if (!r.passed()) {
            RelationReport out = RelationReport::fail(name, r.backend,
                                                      "[" + r.equation + "] " + r.counterexample,
                                                      samples, retries);
            return out;
        }
    }
    RelationReport out = RelationReport::pass(name, parts.empty() ? "" : "", samples, retries);
    out.equation = name;
    return out;
}

}  // namespace detail

template <class Sol>
RelationReport check_pentagon(const Sol& sol, PentagonVariant variant, const CheckParams& p = {}) {
    return check_equation(sol, variant == PentagonVariant::ss1 ? eqs::ss1() : eqs::ss2(), p);
}

template <class Sol>
RelationReport check_ten_term(const Sol& sol, const CheckParams& p = {}) {
    return check_equation(sol, eqs::ss3(), p);
}

template <class Sol>
RelationReport check_co_system(const Sol& sol, const CheckParams& p = {}) {
    RelationReport r = detail::run_group(sol, {eqs::co1(), eqs::co2(), eqs::co3()}, "co", p);
    r.backend = sol.backend_name;
    return r;
}

template <class Sol>
RelationReport check_intertwining(const Sol& sol, const CheckParams& p = {}) {
    RelationReport r =
        detail::run_group(sol, {eqs::st1a(), eqs::st1b(), eqs::st2()}, "st", p);
    r.backend = sol.backend_name;
    return r;
}

}  // namespace penta
