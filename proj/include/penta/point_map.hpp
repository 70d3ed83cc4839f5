#pragma once

#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "penta/errors.hpp"
#include "penta/report.hpp"
#include "penta/rng.hpp"

namespace penta {

inline std::string scalar_str(int x) { return std::to_string(x); }
inline std::string scalar_str(long x) { return std::to_string(x); }

/// A point of M^a, flattened: `components` scalars per M-slot.
template <class C>
using Point = std::vector<C>;

template <class C>
std::string point_str(const Point<C>& p) {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < p.size(); ++i) {
        if (i) os << ",";
        os << scalar_str(p[i]);
    }
    os << ")";
    return os.str();
}

/// Partial map M^a -> M^a with an optional inverse rule. Evaluation outside
/// the domain must raise DomainError from the rule, never return garbage.
template <class C>
class PointMap {
public:
    using Rule = std::function<Point<C>(const Point<C>&)>;

    PointMap() : arity_(0), components_(1) {}
    PointMap(int arity, int components, Rule fwd, Rule inv = nullptr)
        : arity_(arity), components_(components), fwd_(std::move(fwd)), inv_(std::move(inv)) {}

    static PointMap identity(int arity, int components) {
        return PointMap(arity, components, [](const Point<C>& p) { return p; },
                        [](const Point<C>& p) { return p; });
    }
    /// The permutation element as a map: swaps the two M-slots.
    static PointMap slot_swap(int components) {
        auto swap = [components](const Point<C>& p) {
            Point<C> q(p.begin() + components, p.end());
            q.insert(q.end(), p.begin(), p.begin() + components);
            return q;
        };
        return PointMap(2, components, swap, swap);
    }

    int arity() const { return arity_; }
    int components() const { return components_; }
    bool has_inverse() const { return static_cast<bool>(inv_); }

    Point<C> eval(const Point<C>& p) const {
        if (static_cast<int>(p.size()) != arity_ * components_)
            throw ArityMismatch("point size != arity * components");
        return fwd_(p);
    }
    Point<C> eval_inverse(const Point<C>& p) const {
        if (!inv_) throw MissingInverseRule();
        return inv_(p);
    }

    /// Map with forward and inverse rules exchanged.
    PointMap inverted() const {
        if (!inv_) throw MissingInverseRule();
        return PointMap(arity_, components_, inv_, fwd_);
    }

private:
    int arity_;
    int components_;
    Rule fwd_;
    Rule inv_;
};

namespace detail {

template <class C>
void validate_point_legs(const std::vector<int>& legs, int arity, int n_legs) {
    if (static_cast<int>(legs.size()) != arity) throw ArityMismatch("leg count != map arity");
    std::vector<bool> seen(n_legs, false);
    for (int l : legs) {
        if (l < 0 || l >= n_legs) throw LegOutOfRange("leg " + std::to_string(l));
        if (seen[l]) throw DuplicateLeg("leg " + std::to_string(l));
        seen[l] = true;
    }
}

template <class C>
Point<C> apply_on_legs(const PointMap<C>& f, const std::vector<int>& legs, Point<C> p) {
    int comp = f.components();
    Point<C> sub;
    sub.reserve(legs.size() * comp);
    for (int l : legs)
        for (int c = 0; c < comp; ++c) sub.push_back(p[static_cast<size_t>(l) * comp + c]);
    Point<C> out = f.eval(sub);
    for (size_t t = 0; t < legs.size(); ++t)
        for (int c = 0; c < comp; ++c) p[static_cast<size_t>(legs[t]) * comp + c] = out[t * comp + c];
    return p;
}

}  // namespace detail

/// Builds the single map on M^N underlying an operator word. Because
/// (S phi)(x) = phi(s(x)) is contravariant, the operator product read
/// left-to-right composes the underlying maps first-to-last: the leftmost
/// factor's rule is applied to the point first.
template <class C>
PointMap<C> as_operator_product(std::vector<std::pair<PointMap<C>, std::vector<int>>> factors,
                                int n_legs) {
    int comp = factors.empty() ? 1 : factors.front().first.components();
    for (auto& [f, legs] : factors) {
        if (f.components() != comp) throw ArityMismatch("mixed slot widths in word");
        detail::validate_point_legs<C>(legs, f.arity(), n_legs);
    }
    bool invertible = true;
    for (auto& [f, legs] : factors) invertible = invertible && f.has_inverse();

    auto fwd = [factors, n_legs](const Point<C>& p) {
        Point<C> cur = p;
        for (size_t i = 0; i < factors.size(); ++i) {
            try {
                cur = detail::apply_on_legs(factors[i].first, factors[i].second, std::move(cur));
            } catch (const DomainError& e) {
                throw DomainError(std::string(e.what()) + " (factor " + std::to_string(i) + ")",
                                  static_cast<int>(i));
            }
        }
        return cur;
    };
    typename PointMap<C>::Rule inv = nullptr;
    if (invertible) {
        inv = [factors, n_legs](const Point<C>& p) {
            Point<C> cur = p;
            for (size_t i = factors.size(); i-- > 0;)
                cur = detail::apply_on_legs(factors[i].first.inverted(), factors[i].second,
                                            std::move(cur));
            return cur;
        };
    }
    return PointMap<C>(n_legs, comp, fwd, inv);
}

/// How to draw (and, for finite carriers, enumerate) slot values of M.
template <class C>
struct CoordSampler {
    int components = 1;
    std::function<C(Rng&)> draw;          // one scalar, general position
    std::function<Point<C>(Rng&)> slot;   // optional correlated draw of a whole slot
    std::vector<Point<C>> universe;       // nonempty => finite M, exhaustive checks possible

    Point<C> draw_point(int arity, Rng& rng) const {
        Point<C> p;
        p.reserve(static_cast<size_t>(arity) * components);
        for (int s = 0; s < arity; ++s) {
            if (slot) {
                Point<C> sl = slot(rng);
                p.insert(p.end(), sl.begin(), sl.end());
            } else {
                for (int i = 0; i < components; ++i) p.push_back(draw(rng));
            }
        }
        return p;
    }
};

inline constexpr int kRetryCapPerSample = 50;

/// Randomized equality of two maps at `samples` general-position points.
/// Domain errors trigger resampling (counted); equality is the carrier's
/// own == (exact for fields, tolerance for ApproxReal).
template <class C>
RelationReport sampled_equal(const PointMap<C>& f, const PointMap<C>& g, long samples,
                             std::uint64_t seed, const CoordSampler<C>& sampler,
                             const std::string& equation = "map-equality",
                             const std::string& backend = "point") {
    if (f.arity() != g.arity() || f.components() != g.components())
        throw ArityMismatch("comparing maps of different shape");
    if (samples < 1) throw Error("samples must be >= 1");
    long retries = 0;
    for (long i = 0; i < samples; ++i) {
        Rng rng = Rng::stream(seed, static_cast<std::uint64_t>(i));
        int attempt = 0;
        while (true) {
            Point<C> p = sampler.draw_point(f.arity(), rng);
            try {
                Point<C> a = f.eval(p);
                Point<C> b = g.eval(p);
                if (!(a == b))
                    return RelationReport::fail(equation, backend,
                                                "point=" + point_str(p) + " lhs=" + point_str(a) +
                                                    " rhs=" + point_str(b),
                                                i + 1, retries);
                break;
            } catch (const DomainError&) {
                ++retries;
                if (++attempt >= kRetryCapPerSample)
                    throw RetryBudgetExhausted("maps undefined at " +
                                               std::to_string(kRetryCapPerSample) +
                                               " consecutive points (sample " + std::to_string(i) +
                                               ")");
            }
        }
    }
    return RelationReport::pass(equation, backend, samples, retries);
}

/// Exhaustive equality over all |M|^arity points of a finite carrier.
template <class C>
RelationReport exhaustive_equal(const PointMap<C>& f, const PointMap<C>& g,
                                const CoordSampler<C>& sampler,
                                const std::string& equation = "map-equality",
                                const std::string& backend = "point") {
    if (sampler.universe.empty()) throw Error("exhaustive check needs a finite carrier");
    const auto& uni = sampler.universe;
    int arity = f.arity();
    std::vector<size_t> odo(arity, 0);
    long tested = 0;
    while (true) {
        Point<C> p;
        for (int s = 0; s < arity; ++s)
            p.insert(p.end(), uni[odo[s]].begin(), uni[odo[s]].end());
        try {
            Point<C> a = f.eval(p);
            Point<C> b = g.eval(p);
            if (!(a == b))
                return RelationReport::fail(equation, backend,
                                            "point=" + point_str(p) + " lhs=" + point_str(a) +
                                                " rhs=" + point_str(b),
                                            tested + 1);
            ++tested;
        } catch (const DomainError&) {
            // outside the maps' common domain; skip
        }
        int i = arity - 1;
        for (; i >= 0; --i) {
            if (++odo[i] < uni.size()) break;
            odo[i] = 0;
        }
        if (i < 0) break;
    }
    return RelationReport::pass(equation, backend, tested);
}

}  // namespace penta
