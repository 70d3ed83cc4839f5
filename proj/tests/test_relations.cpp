// Equation checkers on both backends, R/B builders, symmetry transforms,
// implication chains, negative controls.

#include <gtest/gtest.h>

#include "penta/birational.hpp"
#include "penta/odouble.hpp"
#include "penta/registry.hpp"
#include "penta/relations.hpp"

using namespace penta;

namespace {

MatrixSolution<Rational> identity_solution(int dim) {
    MatrixSolution<Rational> sol;
    sol.dim = dim;
    sol.one = Rational(1);
    sol.elems.emplace(Tag::S, TensorOp<Rational>::identity(dim, 2, Rational(1)));
    sol.elems.emplace(Tag::Sbar, TensorOp<Rational>::identity(dim, 2, Rational(1)));
    return sol;
}

MatrixSolution<Rational> odouble_solution(const GroupTable& g) {
    return canonical_pair(HopfData::group_algebra(g));
}

}  // namespace

TEST(Pentagon, GroupAlgebraAndIdentity) {
    auto z2 = odouble_solution(make_z2());
    EXPECT_TRUE(check_pentagon(z2, PentagonVariant::ss1).passed());
    EXPECT_TRUE(check_pentagon(z2, PentagonVariant::ss2).passed());

    auto id = identity_solution(2);
    EXPECT_TRUE(check_pentagon(id, PentagonVariant::ss1).passed());

    // negative control: a single flipped entry is detected with a witness
    auto bad = z2;
    bad.elems.at(Tag::S) = corrupt_first_entry(bad.elems.at(Tag::S));
    RelationReport r = check_pentagon(bad, PentagonVariant::ss1);
    EXPECT_FALSE(r.passed());
    EXPECT_FALSE(r.counterexample.empty());
}

TEST(TenTerm, MatrixAndPointBackends) {
    EXPECT_TRUE(check_ten_term(odouble_solution(make_z2())).passed());  // 16 per side
    EXPECT_TRUE(check_ten_term(identity_solution(2)).passed());

    auto ex1 = example1_solution(PrimeFieldElem(1, kDefaultPrime), prime_sampler(kDefaultPrime));
    CheckParams p;
    p.samples = 200;
    RelationReport r = check_ten_term(ex1, p);
    EXPECT_TRUE(r.passed()) << r.counterexample;
    EXPECT_EQ(r.samples, 200);
}

TEST(CoSystem, Z3AndImplication) {
    auto z3 = odouble_solution(make_z3());
    EXPECT_TRUE(check_co_system(z3).passed());
    EXPECT_TRUE(check_co_system(identity_solution(3)).passed());

    // co implies the ten-term relation: conditional property over every
    // registered solution that can run both
    RunParams rp;
    rp.samples = 60;
    for (const auto& reg : registry()) {
        if (!reg.supports("co") || !reg.supports("ss3")) continue;
        if (reg.run("co", rp).passed())
            EXPECT_TRUE(reg.run("ss3", rp).passed()) << reg.key;
    }
}

TEST(Intertwining, QuadrupleSolutions) {
    CheckParams p;
    p.samples = 200;
    auto ex1 = example1_solution(PrimeFieldElem(1, kDefaultPrime), prime_sampler(kDefaultPrime));
    RelationReport r = check_intertwining(ex1, p);
    EXPECT_TRUE(r.passed()) << r.counterexample;

    // T = S with Sbar = S^{-1}: (st1) degenerates to the pentagon
    auto grp = group_solution(make_z3());
    EXPECT_TRUE(check_intertwining(grp).passed());

    // corrupted Tbar fails
    auto bad = ex1;
    PointMap<PrimeFieldElem> tbar = bad.maps.at(Tag::Tbar);
    bad.maps.erase(Tag::Tbar);
    bad.maps.emplace(Tag::Tbar,
                     PointMap<PrimeFieldElem>(2, 1, [tbar](const Point<PrimeFieldElem>& q) {
                         Point<PrimeFieldElem> out = tbar.eval(q);
                         out[0] = out[0] + one_like(out[0]);
                         return out;
                     }));
    EXPECT_FALSE(check_intertwining(bad, p).passed());
}

TEST(Intertwining, ImpliesPentagonSystem) {
    // every quadruple passing (st1),(st2) yields S, Sbar passing ss1-ss3
    RunParams rp;
    rp.samples = 100;
    for (const auto& reg : registry()) {
        if (!reg.supports("st")) continue;
        if (!reg.run("st", rp).passed()) continue;
        for (const char* eq : {"ss1", "ss2", "ss3"})
            EXPECT_TRUE(reg.run(eq, rp).passed()) << reg.key << " " << eq;
    }
}

TEST(BuildR, IdentityPairGivesP23) {
    auto id = identity_solution(2);
    TensorOp<Rational> r = build_R(id, RFlavor::from_S);
    TensorOp<Rational> p23 =
        TensorOp<Rational>::permutation(2, Rational(1)).embed({1, 2}, 3);
    EXPECT_TRUE(r == p23);
    EXPECT_TRUE(check_TE(id, RFlavor::from_S).passed());
}

TEST(BuildR, Z2GeneralizedPermutation) {
    TensorOp<Rational> r = build_R(odouble_solution(make_z2()), RFlavor::from_S);
    EXPECT_EQ(r.total_dim(), 8u);
    EXPECT_EQ(r.columns().size(), 8u);
    for (const auto& [c, rows] : r.columns()) EXPECT_EQ(rows.size(), 1u);
}

TEST(TE, MatrixAndPointInstances) {
    EXPECT_TRUE(check_TE(odouble_solution(make_z2()), RFlavor::from_S).passed());   // dim 64
    EXPECT_TRUE(check_TE(odouble_solution(make_z3()), RFlavor::from_S).passed());   // dim 729

    CheckParams p;
    p.samples = 200;
    auto ex1 = example1_solution(PrimeFieldElem(1, kDefaultPrime), prime_sampler(kDefaultPrime));
    EXPECT_TRUE(check_TE(ex1, RFlavor::from_T, p).passed());  // the T-ansatz
    EXPECT_TRUE(check_TE(ex1, RFlavor::from_S, p).passed());
}

TEST(FSE, IdentityZ2AndExample2) {
    auto id = identity_solution(2);
    TensorOp<Rational> b = build_B(id);
    TensorOp<Rational> p = TensorOp<Rational>::permutation(2, Rational(1));
    EXPECT_TRUE(b == op_mul(p.embed({0, 1}, 4), p.embed({2, 3}, 4)));
    EXPECT_TRUE(check_FSE(id).passed());

    EXPECT_TRUE(check_FSE(odouble_solution(make_z2())).passed());  // dimension 1024

    CheckParams params;
    params.samples = 100;
    auto ex2 = example2_solution(PrimeFieldElem(1, kDefaultPrime), prime_sampler(kDefaultPrime));
    RelationReport r = check_FSE(ex2, params);
    EXPECT_TRUE(r.passed()) << r.counterexample;
}

TEST(Symmetry, InvolutionsAndClosure) {
    auto z2 = odouble_solution(make_z2());
    for (SymmetryKind k : {SymmetryKind::swap, SymmetryKind::invert}) {
        auto twice = symmetry_transform(symmetry_transform(z2, k), k);
        EXPECT_TRUE(twice.elems.at(Tag::S) == z2.elems.at(Tag::S));
        EXPECT_TRUE(twice.elems.at(Tag::Sbar) == z2.elems.at(Tag::Sbar));
    }
    // closure: both images pass ss1-ss3 for every registered solution
    RunParams rp;
    rp.samples = 60;
    for (const auto& reg : registry()) {
        for (const char* eq : {"sym-swap", "sym-invert"}) {
            if (!reg.supports(eq)) continue;
            RelationReport r = reg.run(eq, rp);
            EXPECT_TRUE(r.passed()) << reg.key << " " << eq << ": " << r.counterexample;
        }
    }
}

TEST(ImplicationChain, PentagonSystemYieldsTEAndFSE) {
    // every matrix-backend pair passing ss1-ss3 yields R passing TE (n <= 3)
    // and B passing FSE (n = 2), each verified, not inferred
    for (const auto& g : {make_z2(), make_z3()}) {
        auto sol = odouble_solution(g);
        ASSERT_TRUE(check_pentagon(sol, PentagonVariant::ss1).passed());
        ASSERT_TRUE(check_pentagon(sol, PentagonVariant::ss2).passed());
        ASSERT_TRUE(check_ten_term(sol).passed());
        EXPECT_TRUE(check_TE(sol, RFlavor::from_S).passed()) << g.name;
        if (g.order == 2) EXPECT_TRUE(check_FSE(sol).passed());
    }
}

TEST(NegativeControls, EveryCheckerDetectsCorruption) {
    RunParams rp;
    rp.samples = 60;
    rp.corrupt = true;
    // every checker family must report a failure with a recorded witness
    std::vector<std::pair<std::string, std::string>> cases = {
        {"odouble:Z2", "ss1"},      {"odouble:Z2", "ss2"}, {"odouble:Z2", "co"},
        {"odouble:Z2", "ss3"},      {"odouble:Z2", "tet"}, {"odouble:Z2", "fse"},
        {"odouble:Z2", "hopf-axioms"},
        {"group:Z3", "ss1"},        {"example1", "st"},    {"example1", "tet-s"},
        {"example2", "fse"},        {"ring-eps:+1:rational", "m-system"},
        {"interval:1", "m-system"}, {"interval:1", "w-identity"},
        {"qdilog:qexp", "ss1"}};
    for (const auto& [key, eq] : cases) {
        try {
            RelationReport r = find_registration(key).run(eq, rp);
            EXPECT_FALSE(r.passed()) << key << "/" << eq;
            EXPECT_FALSE(r.counterexample.empty()) << key << "/" << eq;
        } catch (const Error&) {
            // a guard tripping on the corrupted object is also a detection
        }
    }
}
