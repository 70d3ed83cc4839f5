// Sparse operators on tensor powers: leg embedding, permutation element,
// products, inverses, dense agreement.

#include <gtest/gtest.h>

#include "penta/group.hpp"
#include "penta/odouble.hpp"
#include "penta/rational.hpp"
#include "penta/rng.hpp"
#include "penta/tensor_op.hpp"

using namespace penta;

namespace {

using Op = TensorOp<Rational>;

Op random_arity1(int dim, Rng& rng) {
    Op a(dim, 1);
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j)
            if (rng.below(2))
                a.set({static_cast<std::uint32_t>(i)}, {static_cast<std::uint32_t>(j)},
                      Rational(rng.range(-3, 3)));
    return a;
}

/// Random generalized permutation (one nonzero per row and column).
Op random_gen_perm(int dim, int arity, Rng& rng) {
    std::size_t n = MultiIndexRange::count(dim, arity);
    std::vector<std::size_t> perm(n);
    for (std::size_t i = 0; i < n; ++i) perm[i] = i;
    for (std::size_t i = n; i > 1; --i) std::swap(perm[i - 1], perm[rng.below(i)]);
    Op a(dim, arity);
    for (std::size_t c = 0; c < n; ++c)
        a.set(a.unflatten(perm[c]), a.unflatten(c), Rational(rng.range(1, 9)));
    return a;
}

/// Independent dense multiplication oracle.
std::vector<std::vector<Rational>> dense_mul(const std::vector<std::vector<Rational>>& a,
                                             const std::vector<std::vector<Rational>>& b) {
    std::size_t n = a.size();
    std::vector<std::vector<Rational>> r(n, std::vector<Rational>(n, Rational()));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            if (a[i][k].is_zero()) continue;
            for (std::size_t j = 0; j < n; ++j) r[i][j] += a[i][k] * b[k][j];
        }
    return r;
}

Op z2_group_S() {
    // canonical S of the Z2 group algebra, via the O-double
    return canonical_pair(HopfData::group_algebra(make_z2())).elems.at(Tag::S);
}

}  // namespace

TEST(Embed, PlacesFactorsOnLegs) {
    Rng rng(1);
    Op a = random_arity1(2, rng), b = random_arity1(2, rng);
    Op u = tensor(a, b);
    Op id1 = Op::identity(2, 1, Rational(1));
    // u on legs (1,3) of three = a (x) 1 (x) b
    EXPECT_TRUE(u.embed({0, 2}, 3) == tensor(tensor(a, id1), b));
    // unit embedding
    Op id2 = Op::identity(2, 2, Rational(1));
    EXPECT_TRUE(id2.embed({0, 2}, 3) == Op::identity(2, 3, Rational(1)));
    // full-arity identity placement allowed
    EXPECT_TRUE(u.embed({0, 1}, 2) == u);
}

TEST(Embed, Errors) {
    Op u = Op::identity(2, 2, Rational(1));
    EXPECT_THROW(u.embed({0, 0}, 3), DuplicateLeg);
    EXPECT_THROW(u.embed({0, 3}, 3), LegOutOfRange);
    EXPECT_THROW(u.embed({0}, 3), ArityMismatch);
    EXPECT_THROW(u.embed({0, 1}, 1), ArityMismatch);
}

TEST(Embed, PentagonForZ2GroupAlgebra) {
    // exhaustive 8x8 multiplication oracle for S12 S13 S23 = S23 S12
    Op s = z2_group_S();
    Op s12 = s.embed({0, 1}, 3), s13 = s.embed({0, 2}, 3), s23 = s.embed({1, 2}, 3);
    Op lhs = op_mul(op_mul(s12, s13), s23);
    Op rhs = op_mul(s23, s12);
    EXPECT_TRUE(lhs == rhs);
    // and the same through the dense oracle
    auto d = dense_mul(dense_mul(s12.to_dense(), s13.to_dense()), s23.to_dense());
    EXPECT_EQ(d, rhs.to_dense());
}

TEST(Permutation, SwapWithSquareOne) {
    Op p = Op::permutation(2, Rational(1));
    EXPECT_EQ(p.total_dim(), 4u);
    EXPECT_TRUE(op_mul(p, p) == Op::identity(2, 2, Rational(1)));
    // P e_{0,1} = e_{1,0}, applied twice returns
    SparseVec<Rational> v{{MultiIndex{0, 1}, Rational(1)}};
    auto w = p.apply_on_legs(v, {0, 1}, 2);
    EXPECT_EQ(w.begin()->first, (MultiIndex{1, 0}));
    EXPECT_EQ(p.apply_on_legs(w, {0, 1}, 2), v);
}

TEST(Permutation, ConjugationMovesFactor) {
    Rng rng(2);
    Op a = random_arity1(2, rng);
    Op p = Op::permutation(2, Rational(1));
    Op a_first = tensor(a, Op::identity(2, 1, Rational(1)));
    Op a_second = tensor(Op::identity(2, 1, Rational(1)), a);
    EXPECT_TRUE(op_mul(op_mul(p, a_first), p) == a_second);
}

TEST(OpMul, IdentityAndPermutationInverse) {
    Rng rng(3);
    Op a = random_gen_perm(2, 3, rng);
    Op id = Op::identity(2, 3, Rational(1));
    EXPECT_TRUE(op_mul(id, a) == a);
    EXPECT_TRUE(op_mul(a, id) == a);

    // a permutation matrix inverse is its transpose
    Op p(3, 1);
    p.set({1}, {0}, Rational(1));
    p.set({2}, {1}, Rational(1));
    p.set({0}, {2}, Rational(1));
    Op pt(3, 1);
    for (const auto& [c, rows] : p.columns())
        for (const auto& [r, v] : rows) pt.set(c, r, v);
    EXPECT_TRUE(p.inverse() == pt);
}

TEST(OpMul, SparseAgreesWithDense64) {
    // two random sparse generalized permutations on dimension 64
    Rng rng(4);
    Op a = random_gen_perm(2, 6, rng), b = random_gen_perm(2, 6, rng);
    Op prod = op_mul(a, b);
    EXPECT_EQ(dense_mul(a.to_dense(), b.to_dense()), prod.to_dense());
    EXPECT_TRUE(op_mul(prod, prod.inverse()) == Op::identity(2, 6, Rational(1)));
}

TEST(OpMul, SparseAgreesWithDenseUpTo81) {
    Rng rng(5);
    for (int round = 0; round < 10; ++round) {
        Op a(3, 4), b(3, 4);  // dimension 81
        for (int nnz = 0; nnz < 120; ++nnz) {
            a.set(a.unflatten(rng.below(81)), a.unflatten(rng.below(81)),
                  Rational(rng.range(-2, 2)));
            b.set(b.unflatten(rng.below(81)), b.unflatten(rng.below(81)),
                  Rational(rng.range(-2, 2)));
        }
        EXPECT_EQ(dense_mul(a.to_dense(), b.to_dense()), op_mul(a, b).to_dense());
    }
}

TEST(Embed, RingMorphismAndDisjointCommute) {
    Rng rng(6);
    for (int i = 0; i < 100; ++i) {
        Op u = tensor(random_arity1(2, rng), random_arity1(2, rng));
        Op v = tensor(random_arity1(2, rng), random_arity1(2, rng));
        std::vector<int> legs{1, 3};
        EXPECT_TRUE(op_mul(u, v).embed(legs, 4) ==
                    op_mul(u.embed(legs, 4), v.embed(legs, 4)));
        Op a = random_arity1(2, rng).embed({0}, 3);
        Op b = random_arity1(2, rng).embed({2}, 3);
        EXPECT_TRUE(op_mul(a, b) == op_mul(b, a));
    }
}

TEST(Embed, PConjugationRelabelsLegs) {
    Rng rng(7);
    Op u(2, 2);
    for (int nnz = 0; nnz < 8; ++nnz)
        u.set(u.unflatten(rng.below(4)), u.unflatten(rng.below(4)), Rational(rng.range(-3, 3)));
    Op p01 = Op::permutation(2, Rational(1)).embed({0, 1}, 3);
    // P_01 u_{0,2} P_01 = u_{1,2}
    EXPECT_TRUE(op_mul(op_mul(p01, u.embed({0, 2}, 3)), p01) == u.embed({1, 2}, 3));
}

TEST(ApplyOnLegs, MatchesEmbeddedProduct) {
    Rng rng(8);
    Op u = random_gen_perm(2, 2, rng);
    Op embedded = u.embed({1, 3}, 4);
    for (MultiIndexRange col(2, 4); !col.done(); col.advance()) {
        SparseVec<Rational> unit{{*col, Rational(1)}};
        EXPECT_EQ(u.apply_on_legs(unit, {1, 3}, 4), embedded.apply_on_legs(unit, {0, 1, 2, 3}, 4));
    }
}

TEST(Dense, GuardRefusesAbove4096) {
    Op big(2, 13);  // dimension 8192
    big.set(MultiIndex(13, 0), MultiIndex(13, 0), Rational(1));
    EXPECT_THROW(big.to_dense(), DenseMaterializationRefused);
    Op ok(2, 12);  // dimension 4096 exactly is allowed
    ok.set(MultiIndex(12, 0), MultiIndex(12, 0), Rational(1));
    EXPECT_NO_THROW(ok.to_dense());
}

TEST(Inverse, SingularRaises) {
    Op a(2, 1);
    a.set({0}, {0}, Rational(1));
    a.set({1}, {0}, Rational(1));  // column 1 empty
    EXPECT_THROW(a.inverse(), SingularOperator);
}
