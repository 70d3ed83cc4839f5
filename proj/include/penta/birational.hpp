#pragma once

#include <cmath>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "penta/approx_real.hpp"
#include "penta/errors.hpp"
#include "penta/group.hpp"
#include "penta/matrix_ring.hpp"
#include "penta/point_map.hpp"
#include "penta/prime_field.hpp"
#include "penta/rational.hpp"
#include "penta/relations.hpp"

namespace penta {

// ---------------------------------------------------------------------------
// Samplers for the coordinate sets in use.
// ---------------------------------------------------------------------------

inline CoordSampler<Rational> rational_sampler(bool exclude01 = true) {
    CoordSampler<Rational> s;
    s.draw = [exclude01](Rng& rng) {
        while (true) {
            long num = rng.range(-60, 60);
            long den = rng.range(1, 40);
            Rational v(num, den);
            if (exclude01 && (v.is_zero() || v.is_one())) continue;
            return v;
        }
    };
    return s;
}

/// Rationals strictly inside (0,1).
inline CoordSampler<Rational> unit_rational_sampler() {
    CoordSampler<Rational> s;
    s.draw = [](Rng& rng) {
        long den = rng.range(7, 97);
        long num = rng.range(1, den - 1);
        return Rational(num, den);
    };
    return s;
}

inline CoordSampler<PrimeFieldElem> prime_sampler(std::uint64_t p, bool exclude01 = true) {
    CoordSampler<PrimeFieldElem> s;
    s.draw = [p, exclude01](Rng& rng) {
        long lo = exclude01 ? 2 : 0;
        return PrimeFieldElem(rng.range(lo, static_cast<long>(p) - 1), p);
    };
    return s;
}

/// Doubles in a well-conditioned band of (0,1).
inline CoordSampler<ApproxReal> unit_interval_sampler(double tol = kDefaultTolerance) {
    CoordSampler<ApproxReal> s;
    s.draw = [tol](Rng& rng) { return ApproxReal(0.05 + 0.9 * rng.unit(), tol); };
    return s;
}

inline CoordSampler<int> group_sampler(const GroupTable& g) {
    CoordSampler<int> s;
    int n = g.order;
    s.draw = [n](Rng& rng) { return static_cast<int>(rng.below(n)); };
    for (int a = 0; a < n; ++a) s.universe.push_back({a});
    return s;
}

inline CoordSampler<MatrixRingElem<Rational>> matrix2_sampler() {
    CoordSampler<MatrixRingElem<Rational>> s;
    s.draw = [](Rng& rng) {
        MatrixRingElem<Rational> m(2, Rational());
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) m.at(i, j) = Rational(rng.range(-5, 5));
        return m;
    };
    return s;
}

// ---------------------------------------------------------------------------
// Dot/star structures and the mapping-level system (m1)-(m3).
// ---------------------------------------------------------------------------

/// A set M with dot- and star-mappings making (S phi)(x,y) = phi(x.y, x*y)
/// a pentagon solution. Slots are `components` scalars wide; dot_inv and the
/// bracket are optional structure used by specific families.
template <class C>
struct DotStar {
    using Slot = Point<C>;
    using Binary = std::function<Slot(const Slot&, const Slot&)>;
    using Unary = std::function<Slot(const Slot&)>;

    std::string name;
    int components = 1;
    Binary dot, star;
    Unary dot_inv;               // optional
    Unary bracket, bracket_inv;  // optional
    CoordSampler<C> sampler;
    std::string note;  // human-readable parameters (alpha, epsilon, carrier)
};

namespace detail {

template <class C>
Point<C> slot_of(const Point<C>& p, int slot, int comp) {
    return Point<C>(p.begin() + static_cast<long>(slot) * comp,
                    p.begin() + static_cast<long>(slot + 1) * comp);
}

/// Sampled (or exhaustive, when the carrier is small and finite) check of a
/// point-level predicate; DomainError triggers resampling.
template <class C>
RelationReport run_identity(
    int arity, const CoordSampler<C>& sampler,
    const std::function<std::optional<std::string>(const Point<C>&)>& probe,
    const CheckParams& params, const std::string& name, const std::string& backend) {
    if (!sampler.universe.empty()) {
        std::size_t total = 1;
        bool small = true;
        for (int i = 0; i < arity && small; ++i) {
            total *= sampler.universe.size();
            small = total <= params.exhaustive_cap;
        }
        if (small) {
            const auto& uni = sampler.universe;
            std::vector<size_t> odo(arity, 0);
            long tested = 0;
            while (true) {
                Point<C> p;
                for (int s = 0; s < arity; ++s)
                    p.insert(p.end(), uni[odo[s]].begin(), uni[odo[s]].end());
                try {
                    if (auto witness = probe(p))
                        return RelationReport::fail(name, backend, *witness, tested + 1);
                    ++tested;
                } catch (const DomainError&) {
                }
                int i = arity - 1;
                for (; i >= 0; --i) {
                    if (++odo[i] < uni.size()) break;
                    odo[i] = 0;
                }
                if (i < 0) break;
            }
            RelationReport r = RelationReport::pass(name, backend, tested);
            r.note = "exhaustive";
            return r;
        }
    }
    long retries = 0;
    for (long i = 0; i < params.samples; ++i) {
        Rng rng = Rng::stream(params.seed, static_cast<std::uint64_t>(i));
        int attempt = 0;
        while (true) {
            Point<C> p = sampler.draw_point(arity, rng);
            try {
                if (auto witness = probe(p))
                    return RelationReport::fail(name, backend, *witness, i + 1, retries);
                break;
            } catch (const DomainError&) {
                ++retries;
                if (++attempt >= kRetryCapPerSample)
                    throw RetryBudgetExhausted(name + ": maps undefined at " +
                                               std::to_string(kRetryCapPerSample) +
                                               " consecutive points");
            }
        }
    }
    return RelationReport::pass(name, backend, params.samples, retries);
}

}  // namespace detail

/// Verifies associativity (m1) and the two mixed dot/star equations (m2),
/// (m3) at general-position triples.
template <class C>
RelationReport check_m_system(const DotStar<C>& d, const CheckParams& params = {},
                              const std::string& backend = "point") {
    int comp = d.components;
    auto probe = [&d, comp](const Point<C>& p) -> std::optional<std::string> {
        Point<C> x = detail::slot_of(p, 0, comp);
        Point<C> y = detail::slot_of(p, 1, comp);
        Point<C> z = detail::slot_of(p, 2, comp);
        Point<C> xy = d.dot(x, y);
        Point<C> yz = d.dot(y, z);
        if (!(d.dot(xy, z) == d.dot(x, yz)))
            return "m1 at " + point_str(p);
        Point<C> xsy = d.star(x, y);
        Point<C> xy_sz = d.star(xy, z);
        if (!(d.dot(xsy, xy_sz) == d.star(x, yz)))
            return "m2 at " + point_str(p);
        if (!(d.star(xsy, xy_sz) == d.star(y, z)))
            return "m3 at " + point_str(p);
        return std::nullopt;
    };
    RelationReport r =
        detail::run_identity<C>(3, d.sampler, probe, params, "m-system", backend);
    if (!d.note.empty()) r.note += (r.note.empty() ? "" : "; ") + d.note;
    return r;
}

/// Pentagon operator induced by a dot/star structure (forward rule only).
template <class C>
PointSolution<C> solution_from_dotstar(const DotStar<C>& d) {
    PointSolution<C> sol;
    sol.components = d.components;
    sol.sampler = d.sampler;
    int comp = d.components;
    auto dot = d.dot;
    auto star = d.star;
    sol.maps.emplace(Tag::S, PointMap<C>(2, comp, [dot, star, comp](const Point<C>& p) {
                         Point<C> x = detail::slot_of(p, 0, comp);
                         Point<C> y = detail::slot_of(p, 1, comp);
                         Point<C> out = dot(x, y);
                         Point<C> s = star(x, y);
                         out.insert(out.end(), s.begin(), s.end());
                         return out;
                     }));
    return sol;
}

// ---------------------------------------------------------------------------
// The concrete dot/star families.
// ---------------------------------------------------------------------------

/// Group dot with the trivial star x*y = y (the only group solution).
inline DotStar<int> group_dotstar(const GroupTable& g) {
    DotStar<int> d;
    d.name = "group:" + g.name;
    d.sampler = group_sampler(g);
    d.dot = [g](const Point<int>& x, const Point<int>& y) {
        return Point<int>{g.op(x[0], y[0])};
    };
    d.star = [](const Point<int>&, const Point<int>& y) { return y; };
    d.dot_inv = [g](const Point<int>& x) { return Point<int>{g.inverse(x[0])}; };
    return d;
}

namespace detail {

template <class F>
F checked_inv(const F& x) {
    try {
        return ring_inv(x);
    } catch (const DivisionByZero&) {
        throw DomainError("non-invertible factor");
    } catch (const SingularOperator&) {
        throw DomainError("non-invertible factor");
    }
}

}  // namespace detail

/// x.y = xy, x*y = (1-x^eps)^{-eps} (1-(xy)^eps)^{eps} on a unital
/// associative ring; valid for both signs and noncommutative carriers.
template <class F>
DotStar<F> ring_eps_dotstar(int eps, const F& witness, CoordSampler<F> sampler,
                            const std::string& carrier_name) {
    if (eps != 1 && eps != -1) throw Error("eps must be +1 or -1");
    DotStar<F> d;
    d.name = "ring-eps:" + std::string(eps > 0 ? "+1" : "-1") + ":" + carrier_name;
    d.note = "eps=" + std::string(eps > 0 ? "+1" : "-1");
    d.sampler = std::move(sampler);
    F one = one_like(witness);
    d.dot = [](const Point<F>& x, const Point<F>& y) { return Point<F>{x[0] * y[0]}; };
    d.star = [eps, one](const Point<F>& x, const Point<F>& y) {
        F xy = x[0] * y[0];
        if (eps > 0) {
            F a = detail::checked_inv(one - x[0]);
            return Point<F>{a * (one - xy)};
        }
        F a = one - detail::checked_inv(x[0]);
        F b = detail::checked_inv(one - detail::checked_inv(xy));
        return Point<F>{a * b};
    };
    d.dot_inv = [](const Point<F>& x) { return Point<F>{detail::checked_inv(x[0])}; };
    return d;
}

// ---------------------------------------------------------------------------
// The unit-interval family x*y = y ((1-x^{1/a}) / (1-(xy)^{1/a}))^a.
// ---------------------------------------------------------------------------

/// Float evaluation, any real alpha >= 0; alpha = 0 is the limit x*y = y.
inline ApproxReal interval_star(const ApproxReal& x, const ApproxReal& y, double alpha) {
    double xv = x.value(), yv = y.value();
    if (!(xv > 0 && xv < 1 && yv > 0 && yv < 1))
        throw DomainError("interval star needs arguments in (0,1)");
    if (alpha < 0) throw Error("alpha must be >= 0");
    if (alpha == 0) return y;
    double e = 1.0 / alpha;
    double num = 1.0 - std::pow(xv, e);
    double den = 1.0 - std::pow(xv * yv, e);
    if (den == 0) throw DomainError("interval star denominator vanished");
    return ApproxReal(yv * std::pow(num / den, alpha), std::max(x.tolerance(), y.tolerance()));
}

/// Exact evaluation over Q for alpha in {0, 1}.
inline Rational interval_star(const Rational& x, const Rational& y, long alpha) {
    Rational zero, one(1);
    if (!(zero < x && x < one && zero < y && y < one))
        throw DomainError("interval star needs arguments in (0,1)");
    if (alpha == 0) return y;
    if (alpha == 1) {
        Rational den = one - x * y;
        if (den.is_zero()) throw DomainError("interval star denominator vanished");
        return y * (one - x) / den;
    }
    throw Error("exact interval star beyond alpha in {0,1} needs tracked roots; "
                "use interval_exact_dotstar");
}

inline DotStar<ApproxReal> interval_float_dotstar(double alpha, double tol = kDefaultTolerance) {
    DotStar<ApproxReal> d;
    d.name = "interval:" + std::to_string(alpha);
    d.note = "alpha=" + std::to_string(alpha) + ", tolerance " + std::to_string(tol);
    d.sampler = unit_interval_sampler(tol);
    d.dot = [](const Point<ApproxReal>& x, const Point<ApproxReal>& y) {
        return Point<ApproxReal>{x[0] * y[0]};
    };
    d.star = [alpha](const Point<ApproxReal>& x, const Point<ApproxReal>& y) {
        return Point<ApproxReal>{interval_star(x[0], y[0], alpha)};
    };
    d.dot_inv = [](const Point<ApproxReal>& x) { return Point<ApproxReal>{ring_inv(x[0])}; };
    d.bracket = [](const Point<ApproxReal>& x) {
        ApproxReal one(1, x[0].tolerance());
        return Point<ApproxReal>{x[0] * ring_inv(one - x[0])};
    };
    return d;
}

/// Exact rational structure for alpha in {0, 1}.
inline DotStar<Rational> interval_exact01_dotstar(long alpha) {
    if (alpha != 0 && alpha != 1) throw Error("exact unit-interval star needs alpha 0 or 1 here");
    DotStar<Rational> d;
    d.name = "interval:" + std::to_string(alpha);
    d.note = "alpha=" + std::to_string(alpha) + ", exact";
    d.sampler = unit_rational_sampler();
    d.dot = [](const Point<Rational>& x, const Point<Rational>& y) {
        return Point<Rational>{x[0] * y[0]};
    };
    d.star = [alpha](const Point<Rational>& x, const Point<Rational>& y) {
        return Point<Rational>{interval_star(x[0], y[0], alpha)};
    };
    d.dot_inv = [](const Point<Rational>& x) { return Point<Rational>{ring_inv(x[0])}; };
    if (alpha == 1) {
        d.bracket = [](const Point<Rational>& x) {
            Rational den = Rational(1) - x[0];
            if (den.is_zero()) throw DomainError("bracket pole");
            return Point<Rational>{x[0] / den};
        };
        d.bracket_inv = [](const Point<Rational>& w) {
            Rational den = Rational(1) + w[0];
            if (den.is_zero()) throw DomainError("bracket inverse pole");
            return Point<Rational>{w[0] / den};
        };
    }
    return d;
}

/// Exact structure for integer alpha = k >= 2 on the dense subset of k-th
/// powers: a slot is (value, root) with value = root^k, so x^{1/k} is the
/// stored root and every star stays rational. Equality of slots is equality
/// of values (roots are determined, both lie in (0,1)).
inline DotStar<Rational> interval_exact_dotstar(long k) {
    if (k < 2) throw Error("tracked-root interval star needs integer alpha >= 2");
    DotStar<Rational> d;
    d.name = "interval-exact:" + std::to_string(k);
    d.note = "alpha=" + std::to_string(k) + ", exact on k-th powers";
    d.components = 2;
    d.sampler.components = 2;
    auto base = unit_rational_sampler();
    d.sampler.draw = base.draw;  // unused directly; slot drawing below
    d.sampler.slot = [base, k](Rng& rng) {
        Rational u = base.draw(rng);
        Rational v(1);
        for (long i = 0; i < k; ++i) v *= u;
        return Point<Rational>{v, u};
    };
    d.dot = [](const Point<Rational>& x, const Point<Rational>& y) {
        return Point<Rational>{x[0] * y[0], x[1] * y[1]};
    };
    d.star = [k](const Point<Rational>& x, const Point<Rational>& y) {
        Rational den = Rational(1) - x[1] * y[1];
        if (den.is_zero()) throw DomainError("interval star denominator vanished");
        Rational ratio = (Rational(1) - x[1]) / den;  // (1 - x^{1/k}) / (1 - (xy)^{1/k})
        Rational value = y[0], root = y[1] * ratio;
        for (long i = 0; i < k; ++i) value *= ratio;
        return Point<Rational>{value, root};
    };
    d.dot_inv = [](const Point<Rational>& x) {
        return Point<Rational>{ring_inv(x[0]), ring_inv(x[1])};
    };
    return d;
}

/// Float-only form of the w-identity check at the global tolerance.
inline RelationReport w_identity_check_float(double alpha, const CheckParams& params) {
    if (alpha <= 0) throw Error("w-identity needs alpha > 0");
    auto sampler = unit_interval_sampler();
    auto probe = [alpha](const Point<ApproxReal>& p) -> std::optional<std::string> {
        auto w = [alpha](const ApproxReal& t) {
            return ApproxReal(1.0 - std::pow(t.value(), 1.0 / alpha), t.tolerance());
        };
        ApproxReal lhs = w(p[0] * p[1]);
        ApproxReal wx = w(p[0]), wy = w(p[1]);
        if (!(lhs == wx + wy - wx * wy)) return "x=" + p[0].str() + " y=" + p[1].str();
        return std::nullopt;
    };
    RelationReport r =
        detail::run_identity<ApproxReal>(2, sampler, probe, params, "w-identity", "float");
    r.note = "alpha=" + std::to_string(alpha) + ", float at tolerance 1e-9";
    return r;
}

/// Checks the closed functional equation w(xy) = w(x) + w(y) - w(x)w(y)
/// for w(x) = 1 - x^{1/alpha}, alpha = num/den > 0. Exact over Q whenever
/// 1/alpha is an integer or alpha is an integer (via tracked roots),
/// floating otherwise.
inline RelationReport w_identity_check(long alpha_num, long alpha_den, const CheckParams& params) {
    if (alpha_num <= 0 || alpha_den <= 0) throw Error("w-identity needs alpha > 0");
    std::string name = "w-identity";
    auto backend_note = [&](RelationReport r, std::string path) {
        r.note = "alpha=" + std::to_string(alpha_num) + "/" + std::to_string(alpha_den) + ", " +
                 std::move(path);
        return r;
    };
    if (alpha_num == 1) {
        long k = alpha_den;  // w(x) = 1 - x^k, exact polynomial identity
        auto sampler = unit_rational_sampler();
        auto probe = [k](const Point<Rational>& p) -> std::optional<std::string> {
            auto w = [k](const Rational& t) {
                Rational pw(1);
                for (long i = 0; i < k; ++i) pw *= t;
                return Rational(1) - pw;
            };
            Rational lhs = w(p[0] * p[1]);
            Rational wx = w(p[0]), wy = w(p[1]);
            if (lhs != wx + wy - wx * wy) return "x=" + p[0].str() + " y=" + p[1].str();
            return std::nullopt;
        };
        return backend_note(
            detail::run_identity<Rational>(2, sampler, probe, params, name, "exact/Q"),
            "exact w(x)=1-x^" + std::to_string(k));
    }
    if (alpha_den == 1) {
        long k = alpha_num;  // sample k-th powers so x^{1/k} is the stored root
        auto base = unit_rational_sampler();
        CoordSampler<Rational> sampler;
        sampler.components = 2;
        sampler.draw = base.draw;
        sampler.slot = [base, k](Rng& rng) {
            Rational u = base.draw(rng);
            Rational v(1);
            for (long i = 0; i < k; ++i) v *= u;
            return Point<Rational>{v, u};
        };
        auto probe = [](const Point<Rational>& p) -> std::optional<std::string> {
            Rational u = p[1], v = p[3];
            Rational wx = Rational(1) - u, wy = Rational(1) - v;
            Rational lhs = Rational(1) - u * v;  // w(xy), since (xy)^{1/k} = uv
            if (lhs != wx + wy - wx * wy)
                return "x=" + p[0].str() + " y=" + p[2].str();
            return std::nullopt;
        };
        return backend_note(
            detail::run_identity<Rational>(2, sampler, probe, params, name, "exact/Q"),
            "exact on k-th powers, k=" + std::to_string(k));
    }
    double alpha = static_cast<double>(alpha_num) / static_cast<double>(alpha_den);
    auto sampler = unit_interval_sampler();
    auto probe = [alpha](const Point<ApproxReal>& p) -> std::optional<std::string> {
        auto w = [alpha](const ApproxReal& t) {
            return ApproxReal(1.0 - std::pow(t.value(), 1.0 / alpha), t.tolerance());
        };
        ApproxReal lhs = w(p[0] * p[1]);
        ApproxReal wx = w(p[0]), wy = w(p[1]);
        if (!(lhs == wx + wy - wx * wy)) return "x=" + p[0].str() + " y=" + p[1].str();
        return std::nullopt;
    };
    return backend_note(
        detail::run_identity<ApproxReal>(2, sampler, probe, params, name, "float"),
        "float at tolerance 1e-9");
}

// ---------------------------------------------------------------------------
// Example 1: birational maps in one indeterminate.
//   T(x,y) = (xy, y - xy)            Tbar = T^{-1}
//   S(x,y) = (xy, [xy]/[x]),  [x] = x/(1-x), simplified to y(1-x)/(1-xy)
//   Sbar = S^{-1}
// The inverse rules are derived by hand and accepted purely through the
// compose-to-identity oracles in the tests.
// ---------------------------------------------------------------------------

template <class F>
PointSolution<F> example1_solution(const F& witness, CoordSampler<F> sampler) {
    F one = one_like(witness);
    using P = Point<F>;
    auto div = [](const F& a, const F& b) {
        if (is_zero(b)) throw DomainError("zero denominator");
        return a * detail::checked_inv(b);
    };

    PointMap<F> t(
        2, 1,
        [](const P& p) { return P{p[0] * p[1], p[1] - p[0] * p[1]}; },
        [div](const P& p) {
            F y = p[0] + p[1];
            return P{div(p[0], y), y};
        });
    PointMap<F> s(
        2, 1,
        [one, div](const P& p) {
            F xy = p[0] * p[1];
            return P{xy, div(p[1] * (one - p[0]), one - xy)};
        },
        [one, div](const P& p) {
            F y = p[0] + p[1] * (one - p[0]);
            return P{div(p[0], y), y};
        });

    PointSolution<F> sol;
    sol.components = 1;
    sol.sampler = std::move(sampler);
    sol.maps.emplace(Tag::T, t);
    sol.maps.emplace(Tag::Tbar, t.inverted());
    sol.maps.emplace(Tag::S, s);
    sol.maps.emplace(Tag::Sbar, s.inverted());
    return sol;
}

// ---------------------------------------------------------------------------
// Example 2: pairs of indeterminates under the affine composition
//   x.y = (x1 y1, x1 y2 + x2),  x^{-1} = (1/x1, -x2/x1),
//   [x] = (x1/(1-x1), x2/(1-x1)),  x*y = [x]^{-1} . [x.y],  Sbar = S^{-1}.
// ---------------------------------------------------------------------------

template <class F>
DotStar<F> example2_dotstar(const F& witness, CoordSampler<F> sampler) {
    F one = one_like(witness);
    using P = Point<F>;
    auto div = [](const F& a, const F& b) {
        if (is_zero(b)) throw DomainError("zero denominator");
        return a * detail::checked_inv(b);
    };

    DotStar<F> d;
    d.name = "example2";
    d.components = 2;
    d.sampler = std::move(sampler);
    d.sampler.components = 2;
    d.dot = [](const P& x, const P& y) { return P{x[0] * y[0], x[0] * y[1] + x[1]}; };
    d.dot_inv = [div](const P& x) {
        return P{div(one_like(x[0]), x[0]), -div(x[1], x[0])};
    };
    d.bracket = [one, div](const P& x) {
        F den = one - x[0];
        return P{div(x[0], den), div(x[1], den)};
    };
    d.bracket_inv = [one, div](const P& w) {
        F den = one + w[0];
        return P{div(w[0], den), div(w[1], den)};
    };
    d.star = [d](const P& x, const P& y) {
        return d.dot(d.dot_inv(d.bracket(x)), d.bracket(d.dot(x, y)));
    };
    return d;
}

template <class F>
PointSolution<F> example2_solution(const F& witness, CoordSampler<F> sampler) {
    DotStar<F> d = example2_dotstar(witness, std::move(sampler));
    using P = Point<F>;
    PointMap<F> s(
        2, 2,
        [d](const P& p) {
            P x = detail::slot_of(p, 0, 2), y = detail::slot_of(p, 1, 2);
            P out = d.dot(x, y);
            P st = d.star(x, y);
            out.insert(out.end(), st.begin(), st.end());
            return out;
        },
        [d](const P& p) {
            P u = detail::slot_of(p, 0, 2), v = detail::slot_of(p, 1, 2);
            P x = d.bracket_inv(d.dot(d.bracket(u), d.dot_inv(v)));
            P y = d.dot(d.dot_inv(x), u);
            P out = x;
            out.insert(out.end(), y.begin(), y.end());
            return out;
        });
    PointSolution<F> sol;
    sol.components = 2;
    sol.sampler = d.sampler;
    sol.maps.emplace(Tag::S, s);
    sol.maps.emplace(Tag::Sbar, s.inverted());
    return sol;
}

// ---------------------------------------------------------------------------
// The coordinate operator of a finite group, (S phi)(x,y) = phi(xy, y),
// with Sbar = S^{-1}. T defaults to S so the intertwining system can be
// exercised in its specialized form.
// ---------------------------------------------------------------------------

inline PointSolution<int> group_solution(const GroupTable& g) {
    using P = Point<int>;
    PointMap<int> s(
        2, 1, [g](const P& p) { return P{g.op(p[0], p[1]), p[1]}; },
        [g](const P& p) { return P{g.op(p[0], g.inverse(p[1])), p[1]}; });
    PointSolution<int> sol;
    sol.components = 1;
    sol.sampler = group_sampler(g);
    sol.maps.emplace(Tag::S, s);
    sol.maps.emplace(Tag::Sbar, s.inverted());
    sol.maps.emplace(Tag::T, s);
    sol.maps.emplace(Tag::Tbar, s.inverted());
    return sol;
}

}  // namespace penta
