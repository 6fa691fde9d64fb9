#include "centerkit/linalg.hpp"
#include "centerkit/random.hpp"
#include "centerkit/rational.hpp"

#include <gtest/gtest.h>

using namespace centerkit;

namespace {

Matrix<Rational> random_matrix(Rng& rng, std::size_t r, std::size_t c, std::size_t rank_cap) {
    // Product of r x k and k x c factors has rank <= k.
    Matrix<Rational> a(r, rank_cap), b(rank_cap, c), m(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t k = 0; k < rank_cap; ++k) a(i, k) = rng.rational(5, 3);
    for (std::size_t k = 0; k < rank_cap; ++k)
        for (std::size_t j = 0; j < c; ++j) b(k, j) = rng.rational(5, 3);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j)
            for (std::size_t k = 0; k < rank_cap; ++k) m(i, j) += a(i, k) * b(k, j);
    return m;
}

TEST(Linalg, RankOfKnownMatrix) {
    const auto m = Matrix<Rational>::from_rows({{1, 2, 3}, {2, 4, 6}, {1, 0, 1}}, 3);
    EXPECT_EQ(rank(m), 2u);
}

TEST(Linalg, NullspaceVectorsAreAnnihilated) {
    Rng rng(5);
    for (int trial = 0; trial < 20; ++trial) {
        const auto m = random_matrix(rng, 5, 8, 1 + trial % 5);
        const auto ns = nullspace(m);
        EXPECT_EQ(ns.size() + rank(m), 8u);
        for (const auto& v : ns)
            for (const auto& x : m.apply(v)) EXPECT_EQ(x, 0);
    }
}

TEST(Linalg, SolveFindsSolutionsAndRejectsInconsistentSystems) {
    Rng rng(9);
    const auto m = random_matrix(rng, 6, 4, 3);
    std::vector<Rational> x{1, Rational(-2, 3), 0, 5};
    const auto b = m.apply(x);
    const auto sol = solve(m, b);
    ASSERT_TRUE(sol.has_value());
    EXPECT_EQ(m.apply(*sol), b);

    // A vector outside a rank-3 column space of R^6.
    bool found_outside = false;
    for (std::size_t k = 0; k < 6 && !found_outside; ++k) {
        std::vector<Rational> e(6, 0);
        e[k] = 1;
        if (!solve(m, e)) found_outside = true;
    }
    EXPECT_TRUE(found_outside);
}

TEST(Linalg, SubspaceInsertContainsEquality) {
    Subspace<Rational> s(3);
    EXPECT_TRUE(s.insert({1, 1, 0}));
    EXPECT_TRUE(s.insert({0, 1, 1}));
    EXPECT_FALSE(s.insert({1, 2, 1}));
    EXPECT_EQ(s.dimension(), 2u);
    EXPECT_TRUE(s.contains(std::vector<Rational>{2, 0, -2}));
    EXPECT_FALSE(s.contains(std::vector<Rational>{1, 0, 0}));

    const auto t = Subspace<Rational>::span(3, std::vector<std::vector<Rational>>{{1, 0, -1}, {1, 2, 1}});
    EXPECT_TRUE(s == t);
    EXPECT_TRUE(s.contains(t));
}

TEST(Linalg, SubspaceReduceIsZeroExactlyOnMembers) {
    Rng rng(17);
    const auto m = random_matrix(rng, 4, 7, 3);
    Subspace<Rational> s(7);
    for (std::size_t r = 0; r < 4; ++r) s.insert(m.row(r));
    EXPECT_EQ(s.dimension(), rank(m));
    std::vector<Rational> combo(7, 0);
    for (std::size_t r = 0; r < 4; ++r)
        for (std::size_t c = 0; c < 7; ++c) combo[c] += Rational(static_cast<long>(r) + 1, 2) * m(r, c);
    EXPECT_TRUE(s.contains(combo));
}

}  // namespace
