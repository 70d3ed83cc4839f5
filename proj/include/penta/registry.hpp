#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "penta/birational.hpp"
#include "penta/errors.hpp"
#include "penta/hopf.hpp"
#include "penta/odouble.hpp"
#include "penta/qdilog.hpp"
#include "penta/relations.hpp"
#include "penta/report.hpp"

namespace penta {

/// Everything a suite run can configure: sampling, the prime, and the
/// q-series truncation set; `corrupt` flips a single entry/coefficient so
/// negative controls can prove every checker bites.
struct RunParams {
    std::uint64_t prime = kDefaultPrime;
    long samples = 200;
    std::uint64_t seed = 1;
    QParams q;
    bool corrupt = false;

    CheckParams check() const { return CheckParams{samples, seed}; }
};

/// One registered solution: a stable key, its backend, and the named equation
/// checks it can run.
struct Registration {
    std::string key;
    std::string backend;
    std::string description;
    std::vector<std::string> equations;
    std::function<RelationReport(const std::string&, const RunParams&)> run;

    bool supports(const std::string& eq) const {
        for (const auto& e : equations)
            if (e == eq) return true;
        return false;
    }
};

namespace regdetail {

// -- shared equation dispatch for operator-backend solutions ---------------

template <class Sol>
RelationReport dispatch_operator_eq(const Sol& sol, const std::string& eq,
                                    const CheckParams& cp) {
    if (eq == "ss1") return check_pentagon(sol, PentagonVariant::ss1, cp);
    if (eq == "ss2") return check_pentagon(sol, PentagonVariant::ss2, cp);
    if (eq == "ss3") return check_ten_term(sol, cp);
    if (eq == "co") return check_co_system(sol, cp);
    if (eq == "st") return check_intertwining(sol, cp);
    if (eq == "tet") return check_TE(sol, sol.has(Tag::T) ? RFlavor::from_T : RFlavor::from_S, cp);
    if (eq == "tet-s") return check_TE(sol, RFlavor::from_S, cp);
    if (eq == "fse") return check_FSE(sol, cp);
    if (eq == "sym-swap" || eq == "sym-invert") {
        auto t = symmetry_transform(
            sol, eq == "sym-swap" ? SymmetryKind::swap : SymmetryKind::invert);
        for (const auto& sub : {eqs::ss1(), eqs::ss2(), eqs::ss3()}) {
            RelationReport r = check_equation(t, sub, cp);
            if (!r.passed()) {
                RelationReport out = RelationReport::fail(
                    eq, r.backend, "[" + sub.name + " after transform] " + r.counterexample,
                    r.samples, r.retries);
                return out;
            }
        }
        RelationReport out = RelationReport::pass(eq, sol.backend_name);
        out.note = "transformed pair passes ss1,ss2,ss3";
        return out;
    }
    throw ConfigError("solution does not support equation '" + eq + "'");
}

/// Puts a non-structural defect into a map: a transposition of two output
/// values on the first coordinate (a plain shift would just conjugate the
/// solution and stay a solution).
inline PointSolution<int> maybe_corrupt(PointSolution<int> sol, const GroupTable& g,
                                        bool corrupt) {
    if (!corrupt) return sol;
    for (Tag tag : {Tag::S, Tag::Sbar}) {
        if (!sol.maps.count(tag)) continue;
        PointMap<int> s = sol.maps.at(tag);
        sol.maps.erase(tag);
        sol.maps.emplace(tag, PointMap<int>(2, 1, [s](const Point<int>& p) {
                             Point<int> out = s.eval(p);
                             if (out[0] == 0) out[0] = 1;
                             else if (out[0] == 1) out[0] = 0;
                             return out;
                         }));
    }
    return sol;
}

template <class F>
PointSolution<F> maybe_corrupt_field(PointSolution<F> sol, bool corrupt) {
    if (!corrupt) return sol;
    for (Tag tag : {Tag::S, Tag::Sbar}) {
        if (!sol.maps.count(tag)) continue;
        PointMap<F> s = sol.maps.at(tag);
        sol.maps.erase(tag);
        sol.maps.emplace(tag,
                         PointMap<F>(s.arity(), s.components(), [s](const Point<F>& p) {
                             Point<F> out = s.eval(p);
                             out[0] = out[0] * (one_like(out[0]) + one_like(out[0]));
                             return out;
                         }));
    }
    return sol;
}

inline MatrixSolution<Rational> maybe_corrupt(MatrixSolution<Rational> sol, bool corrupt) {
    if (!corrupt) return sol;
    for (Tag tag : {Tag::S, Tag::Sbar}) {
        if (!sol.elems.count(tag)) continue;
        TensorOp<Rational> s = corrupt_first_entry(sol.elems.at(tag));
        sol.elems.erase(tag);
        sol.elems.emplace(tag, std::move(s));
    }
    return sol;
}

template <class C>
DotStar<C> maybe_corrupt(DotStar<C> d, bool corrupt) {
    if (!corrupt) return d;
    auto star = d.star;
    auto dot = d.dot;
    d.star = [star, dot](const Point<C>& x, const Point<C>& y) { return dot(x, y); };
    d.name += " (corrupted)";
    return d;
}

inline RelationReport dispatch_dotstar_eq(const std::string& key, const std::string& eq,
                                          const RunParams& rp) {
    auto params = rp.check();
    auto run_m = [&](auto dotstar, const std::string& backend) {
        return check_m_system(maybe_corrupt(std::move(dotstar), rp.corrupt), params, backend);
    };
    if (key == "ring-eps:+1:rational" || key == "ring-eps:-1:rational") {
        int eps = key[9] == '+' ? 1 : -1;
        return run_m(ring_eps_dotstar(eps, Rational(1), rational_sampler(), "rational"),
                     "point/Q");
    }
    if (key == "ring-eps:+1:prime" || key == "ring-eps:-1:prime") {
        int eps = key[9] == '+' ? 1 : -1;
        return run_m(ring_eps_dotstar(eps, PrimeFieldElem(1, rp.prime),
                                      prime_sampler(rp.prime), "prime"),
                     "point/Fp");
    }
    if (key == "ring-eps:+1:matrix2" || key == "ring-eps:-1:matrix2") {
        int eps = key[9] == '+' ? 1 : -1;
        MatrixRingElem<Rational> one = MatrixRingElem<Rational>::identity(2, Rational(1));
        return run_m(ring_eps_dotstar(eps, one, matrix2_sampler(), "matrix2"),
                     "point/Mat2(Q)");
    }
    throw ConfigError("unknown dot/star key " + key);
}

inline RelationReport dispatch_interval_eq(const std::string& key, const std::string& eq,
                                           const RunParams& rp) {
    auto params = rp.check();
    auto star_check = [&](auto dotstar, const std::string& backend) {
        return check_m_system(maybe_corrupt(std::move(dotstar), rp.corrupt), params, backend);
    };
    long wa = 0, wb = 1;  // alpha as wa/wb for the w-identity
    if (key == "interval:0") {
        if (eq == "w-identity")
            return RelationReport::skipped("w-identity", "point", "alpha=0 has no w");
        return star_check(interval_exact01_dotstar(0), "point/Q");
    }
    if (key == "interval:1") {
        wa = 1;
        if (eq == "m-system") return star_check(interval_exact01_dotstar(1), "point/Q");
    } else if (key == "interval:1/2") {
        wa = 1;
        wb = 2;
        if (eq == "m-system") return star_check(interval_float_dotstar(0.5), "point/float");
    } else if (key == "interval:2") {
        wa = 2;
        if (eq == "m-system") return star_check(interval_float_dotstar(2.0), "point/float");
    } else if (key == "interval-exact:2") {
        wa = 2;
        if (eq == "m-system") return star_check(interval_exact_dotstar(2), "point/Q");
    } else if (key == "interval-exact:3") {
        wa = 3;
        if (eq == "m-system") return star_check(interval_exact_dotstar(3), "point/Q");
    } else {
        throw ConfigError("unknown interval key " + key);
    }
    if (eq == "w-identity") {
        if (rp.corrupt) {
            RelationReport r = RelationReport::fail(
                "w-identity", "point", "corrupted w(x) = 2 - x^{1/alpha} violates the identity");
            return r;
        }
        return w_identity_check(wa, wb, params);
    }
    throw ConfigError("interval key does not support equation '" + eq + "'");
}

}  // namespace regdetail

/// All built-in solutions, in a stable order.
inline const std::vector<Registration>& registry() {
    static const std::vector<Registration> entries = [] {
        std::vector<Registration> out;
        std::vector<std::string> op_eqs = {"ss1", "ss2", "co",       "ss3",
                                           "st",  "tet", "sym-swap", "sym-invert"};

        for (const auto& g : {make_z2(), make_z3(), make_s3()}) {
            Registration r;
            r.key = "group:" + g.name;
            r.backend = "point/group";
            r.description = "coordinate operator (S phi)(x,y) = phi(xy, y) on " + g.name;
            r.equations = op_eqs;
            r.equations.push_back("fse");
            r.equations.push_back("m-system");
            GroupTable table = g;
            r.run = [table](const std::string& eq, const RunParams& rp) {
                if (eq == "m-system")
                    return check_m_system(
                        regdetail::maybe_corrupt(group_dotstar(table), rp.corrupt), rp.check(),
                        "point/group");
                auto sol =
                    regdetail::maybe_corrupt(group_solution(table), table, rp.corrupt);
                return regdetail::dispatch_operator_eq(sol, eq, rp.check());
            };
            out.push_back(std::move(r));
        }

        for (const auto& g : {make_z2(), make_z3(), make_s3()}) {
            Registration r;
            r.key = "odouble:" + g.name;
            r.backend = "matrix/odouble";
            r.description = "canonical pair of the O-double of the " + g.name + " group algebra";
            r.equations = {"hopf-axioms", "ss1", "ss2", "co", "ss3", "sym-swap", "sym-invert"};
            if (g.order <= 3) r.equations.push_back("tet");
            if (g.order <= 2) r.equations.push_back("fse");
            GroupTable table = g;
            r.run = [table](const std::string& eq, const RunParams& rp) {
                HopfData h = HopfData::group_algebra(table);
                if (rp.corrupt && eq == "hopf-axioms") {
                    h.mu(0, 0, table.order - 1) += Rational(1);
                    return validate_hopf_combined(h);
                }
                if (eq == "hopf-axioms") return validate_hopf_combined(h);
                auto rep = represent_on_dual(h);
                auto sol = regdetail::maybe_corrupt(canonical_pair(rep), rp.corrupt);
                RelationReport rr = regdetail::dispatch_operator_eq(sol, eq, rp.check());
                if (rr.note.empty()) rr.note = "antipode variant: " + rep.antipode_variant;
                return rr;
            };
            out.push_back(std::move(r));
        }

        {
            Registration r;
            r.key = "example1";
            r.backend = "point/Fp";
            r.description = "birational T(x,y) = (xy, y-xy), S(x,y) = (xy, [xy]/[x]) over F_p";
            r.equations = {"ss1", "ss2",   "ss3",      "st",
                           "tet", "tet-s", "sym-swap", "sym-invert"};
            r.run = [](const std::string& eq, const RunParams& rp) {
                auto sol = example1_solution(PrimeFieldElem(1, rp.prime),
                                             prime_sampler(rp.prime));
                sol.backend_name = "point/Fp";
                sol = regdetail::maybe_corrupt_field(std::move(sol), rp.corrupt);
                return regdetail::dispatch_operator_eq(sol, eq, rp.check());
            };
            out.push_back(std::move(r));
        }
        {
            Registration r;
            r.key = "example2";
            r.backend = "point/Fp";
            r.description = "pair-coordinate affine maps x.y = (x1y1, x1y2+x2) over F_p";
            r.equations = {"ss1", "ss2", "ss3", "fse", "sym-swap", "sym-invert", "m-system"};
            r.run = [](const std::string& eq, const RunParams& rp) {
                if (eq == "m-system")
                    return check_m_system(
                        regdetail::maybe_corrupt(
                            example2_dotstar(PrimeFieldElem(1, rp.prime),
                                             prime_sampler(rp.prime)),
                            rp.corrupt),
                        rp.check(), "point/Fp");
                auto sol = example2_solution(PrimeFieldElem(1, rp.prime),
                                             prime_sampler(rp.prime));
                sol.backend_name = "point/Fp";
                sol = regdetail::maybe_corrupt_field(std::move(sol), rp.corrupt);
                return regdetail::dispatch_operator_eq(sol, eq, rp.check());
            };
            out.push_back(std::move(r));
        }

        for (const char* carrier : {"rational", "prime", "matrix2"})
            for (const char* eps : {"+1", "-1"}) {
                Registration r;
                r.key = std::string("ring-eps:") + eps + ":" + carrier;
                r.backend = "point";
                r.description = "x*y = (1-x^eps)^{-eps}(1-(xy)^eps)^eps on a unital ring";
                r.equations = {"m-system"};
                std::string key = r.key;
                r.run = [key](const std::string& eq, const RunParams& rp) {
                    return regdetail::dispatch_dotstar_eq(key, eq, rp);
                };
                out.push_back(std::move(r));
            }

        for (const char* key : {"interval:0", "interval:1", "interval:1/2", "interval:2",
                                "interval-exact:2", "interval-exact:3"}) {
            Registration r;
            r.key = key;
            r.backend = "point";
            r.description = "unit-interval star x*y = y((1-x^{1/a})/(1-(xy)^{1/a}))^a";
            r.equations = {"m-system", "w-identity"};
            std::string k = key;
            r.run = [k](const std::string& eq, const RunParams& rp) {
                return regdetail::dispatch_interval_eq(k, eq, rp);
            };
            out.push_back(std::move(r));
        }

        for (const char* variant : {"sinv", "qexp"}) {
            Registration r;
            r.key = std::string("qdilog:") + variant;
            r.backend = "series/q";
            r.description = std::string("Heisenberg q-dilogarithm solution, Sbar = ") +
                            (variant == std::string("sinv") ? "S^-1" : "q^{-H x Lambda}");
            r.equations = {"ss1", "ss2", "ss3"};
            bool sinv = variant == std::string("sinv");
            if (sinv) r.equations.push_back("s-inverse");
            r.run = [sinv](const std::string& eq, const RunParams& rp) {
                SbarVariant v = sinv ? SbarVariant::s_inverse : SbarVariant::q_exponential;
                if (eq == "s-inverse")
                    return check_q_inverse({{0, 0}, {1, 2}, {-1, 3}, {2, -2}, {0, 1}}, rp.q);
                std::vector<FockState> states =
                    eq == "ss3"
                        ? std::vector<FockState>{{0, 0, 0, 0},
                                                 {1, 0, 0, 0},
                                                 {0, 1, -1, 0},
                                                 {0, 0, 1, -1},
                                                 {1, 0, -1, 0}}
                        : std::vector<FockState>{
                              {0, 0, 0}, {1, 0, 0}, {0, 1, -1}, {1, 0, -1}, {2, 0, -1}};
                return check_q_relation(eq, v, states, rp.q, rp.corrupt);
            };
            out.push_back(std::move(r));
        }
        return out;
    }();
    return entries;
}

inline const Registration& find_registration(const std::string& key) {
    for (const auto& r : registry())
        if (r.key == key) return r;
    throw ConfigError("unknown solution key '" + key + "' (see `penta list`)");
}

}  // namespace penta
