// Dot/star structures: the (m1)-(m3) system, the unit-interval family, and
// the two birational examples.

#include <cmath>

#include <gtest/gtest.h>

#include "penta/birational.hpp"
#include "penta/registry.hpp"

using namespace penta;

TEST(MSystem, GroupStructureExhaustive) {
    // the trivial star x*y = y on Z3: all 27 triples
    RelationReport r = check_m_system(group_dotstar(make_z3()));
    EXPECT_TRUE(r.passed());
    EXPECT_EQ(r.samples, 27);
}

TEST(MSystem, TrivialStarIsTheOnlyGroupSolution) {
    // witness level: a perturbed star on a group fails (m2)-(m3)
    for (const auto& g : {make_z2(), make_z3(), make_s3()}) {
        DotStar<int> d = group_dotstar(g);
        auto dot = d.dot;
        d.star = [dot](const Point<int>& x, const Point<int>& y) { return dot(x, y); };
        RelationReport r = check_m_system(d);
        EXPECT_FALSE(r.passed()) << g.name;
        EXPECT_FALSE(r.counterexample.empty());
    }
}

TEST(RingEps, SpotValueAndSampling) {
    // eps = +1 over Q: 2*3 = (1-2)^{-1} (1-6) = 5
    auto d = ring_eps_dotstar(+1, Rational(1), rational_sampler(), "rational");
    Point<Rational> star = d.star({Rational(2)}, {Rational(3)});
    EXPECT_EQ(star[0], Rational(5));

    CheckParams p;
    p.samples = 200;
    EXPECT_TRUE(check_m_system(d, p).passed());
    auto dp = ring_eps_dotstar(+1, PrimeFieldElem(1, kDefaultPrime),
                               prime_sampler(kDefaultPrime), "prime");
    EXPECT_TRUE(check_m_system(dp, p).passed());
}

TEST(RingEps, BothSignsAllCarriers) {
    CheckParams p;
    p.samples = 100;
    for (int eps : {+1, -1}) {
        EXPECT_TRUE(
            check_m_system(ring_eps_dotstar(eps, Rational(1), rational_sampler(), "rational"), p)
                .passed())
            << eps;
        EXPECT_TRUE(check_m_system(ring_eps_dotstar(eps, PrimeFieldElem(1, kDefaultPrime),
                                                    prime_sampler(kDefaultPrime), "prime"),
                                   p)
                        .passed())
            << eps;
        // noncommutative carrier: 2x2 rational matrices
        MatrixRingElem<Rational> one = MatrixRingElem<Rational>::identity(2, Rational(1));
        RelationReport r =
            check_m_system(ring_eps_dotstar(eps, one, matrix2_sampler(), "matrix2"), p);
        EXPECT_TRUE(r.passed()) << "eps=" << eps << ": " << r.counterexample;
    }
}

TEST(IntervalStar, ExactValues) {
    // alpha = 1: y (1-x)/(1-xy) at x=1/2, y=1/3 is exactly 1/5
    EXPECT_EQ(interval_star(Rational(1, 2), Rational(1, 3), 1L), Rational(1, 5));
    // alpha = 0 is the limit x*y = y
    EXPECT_EQ(interval_star(Rational(1, 2), Rational(1, 3), 0L), Rational(1, 3));
    EXPECT_THROW(interval_star(Rational(3, 2), Rational(1, 3), 1L), DomainError);
    EXPECT_THROW(interval_star(Rational(1, 2), Rational(1, 3), 2L), Error);
}

TEST(IntervalStar, FloatValueInUnitInterval) {
    ApproxReal v = interval_star(ApproxReal(0.49), ApproxReal(0.36), 2.0);
    EXPECT_GT(v.value(), 0.0);
    EXPECT_LT(v.value(), 1.0);
}

TEST(IntervalFamily, MSystemAcrossAlpha) {
    CheckParams p;
    p.samples = 200;
    // exact for alpha in {0, 1}
    EXPECT_TRUE(check_m_system(interval_exact01_dotstar(0), p).passed());
    EXPECT_TRUE(check_m_system(interval_exact01_dotstar(1), p).passed());
    // tolerance 1e-9 for alpha in {1/2, 2}
    EXPECT_TRUE(check_m_system(interval_float_dotstar(0.5), p).passed());
    EXPECT_TRUE(check_m_system(interval_float_dotstar(2.0), p).passed());
    // exact for integer alpha on tracked k-th powers
    EXPECT_TRUE(check_m_system(interval_exact_dotstar(2), p).passed());
    EXPECT_TRUE(check_m_system(interval_exact_dotstar(3), p).passed());
}

TEST(IntervalFamily, BracketConsistency) {
    // where the bracket is present, the star must agree with [x]^{-1}.[x.y]
    DotStar<Rational> d = interval_exact01_dotstar(1);
    ASSERT_TRUE(static_cast<bool>(d.bracket));
    for (int i = 0; i < 100; ++i) {
        Rng rng = Rng::stream(21, i);
        Point<Rational> x{d.sampler.draw(rng)}, y{d.sampler.draw(rng)};
        Point<Rational> via_bracket =
            d.dot(d.dot_inv(d.bracket(x)), d.bracket(d.dot(x, y)));
        EXPECT_EQ(d.star(x, y), via_bracket);
    }
}

TEST(WIdentity, ExactAndFloatPaths) {
    CheckParams p;
    p.samples = 200;
    // alpha = 1: (1-xy) = (1-x)+(1-y)-(1-x)(1-y), exact over Q
    RelationReport r1 = w_identity_check(1, 1, p);
    EXPECT_TRUE(r1.passed());
    EXPECT_NE(r1.backend.find("exact"), std::string::npos);
    // alpha = 1/2: w(x) = 1 - x^2, exact polynomial identity
    EXPECT_TRUE(w_identity_check(1, 2, p).passed());
    // alpha = 2, 3: exact on tracked powers, and float at 1e-9
    EXPECT_TRUE(w_identity_check(2, 1, p).passed());
    EXPECT_TRUE(w_identity_check(3, 1, p).passed());
    p.samples = 100;
    EXPECT_TRUE(w_identity_check_float(0.5, p).passed());
    EXPECT_TRUE(w_identity_check_float(2.0, p).passed());
    EXPECT_TRUE(w_identity_check_float(3.0, p).passed());
    EXPECT_THROW(w_identity_check(0, 1, p), Error);
}

TEST(Example1, SpotValuesOverQ) {
    auto sol = example1_solution(Rational(1), rational_sampler());
    // S(1/2, 1/3) = (1/6, [1/6]/[1/2]) = (1/6, 1/5)
    Point<Rational> s = sol.maps.at(Tag::S).eval({Rational(1, 2), Rational(1, 3)});
    EXPECT_EQ(s, (Point<Rational>{Rational(1, 6), Rational(1, 5)}));
    Point<Rational> t = sol.maps.at(Tag::T).eval({Rational(2), Rational(3)});
    EXPECT_EQ(t, (Point<Rational>{Rational(6), Rational(-3)}));
    EXPECT_EQ(sol.maps.at(Tag::Tbar).eval({Rational(6), Rational(-3)}),
              (Point<Rational>{Rational(2), Rational(3)}));
}

TEST(Example1, SecondOutputIsTheAlphaOneStar) {
    // S's second output y(1-x)/(1-xy) equals [x.y] . [x]^{-1} with
    // [x] = x/(1-x), and equals the alpha = 1 interval star; this links the
    // unit-interval family to the birational example
    auto sol = example1_solution(Rational(1), rational_sampler());
    auto bracket = [](const Rational& x) { return x / (Rational(1) - x); };
    auto sampler = unit_rational_sampler();
    for (int i = 0; i < 100; ++i) {
        Rng rng = Rng::stream(22, i);
        Rational x = sampler.draw(rng), y = sampler.draw(rng);
        Point<Rational> out = sol.maps.at(Tag::S).eval({x, y});
        EXPECT_EQ(out[1], bracket(x * y) / bracket(x));
        EXPECT_EQ(out[1], interval_star(x, y, 1L));
    }
}

TEST(Example2, SpotValuesAndGroupLaws) {
    auto d = example2_dotstar(Rational(1), rational_sampler());
    Point<Rational> xy = d.dot({Rational(2), Rational(1)}, {Rational(3), Rational(4)});
    EXPECT_EQ(xy, (Point<Rational>{Rational(6), Rational(9)}));
    Point<Rational> inv = d.dot_inv({Rational(2), Rational(1)});
    EXPECT_EQ(inv, (Point<Rational>{Rational(1, 2), Rational(-1, 2)}));
    EXPECT_EQ(d.dot({Rational(2), Rational(1)}, inv),
              (Point<Rational>{Rational(1), Rational(0)}));
}

TEST(Example2, DotAssociativityAndStarViaBracket) {
    CheckParams p;
    p.samples = 200;
    auto d = example2_dotstar(PrimeFieldElem(1, kDefaultPrime), prime_sampler(kDefaultPrime));
    RelationReport r = check_m_system(d, p);
    EXPECT_TRUE(r.passed()) << r.counterexample;

    // Eq. (star) agreement at sampled points (star is [x]^{-1} . [x.y])
    for (int i = 0; i < 50; ++i) {
        Rng rng = Rng::stream(23, i);
        Point<PrimeFieldElem> x = d.sampler.draw_point(1, rng);
        Point<PrimeFieldElem> y = d.sampler.draw_point(1, rng);
        try {
            EXPECT_EQ(d.star(x, y), d.dot(d.dot_inv(d.bracket(x)), d.bracket(d.dot(x, y))));
        } catch (const DomainError&) {
        }
    }
}

TEST(Registry, IntervalEquationsRun) {
    RunParams rp;
    rp.samples = 100;
    for (const char* key : {"interval:0", "interval:1", "interval:1/2", "interval:2",
                            "interval-exact:2", "interval-exact:3"}) {
        const auto& reg = find_registration(key);
        for (const auto& eq : reg.equations) {
            RelationReport r = reg.run(eq, rp);
            EXPECT_TRUE(r.passed() || r.status == RelationReport::Status::skipped)
                << key << "/" << eq << ": " << r.counterexample;
        }
    }
}
