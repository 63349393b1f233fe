#include <gtest/gtest.h>

#include <random>

#include "krawtchouk/sparse_echelon.hpp"
#include "oracles.hpp"

using namespace krawtchouk;

TEST(MakeSparse, SortsMergesAndDropsZeros) {
    const SparseVector v = make_sparse({{3, 2}, {1, 5}, {3, -2}, {0, 0}, {1, 1}});
    ASSERT_EQ(v.size(), 1U);
    EXPECT_EQ(v[0].first, 1U);
    EXPECT_EQ(v[0].second, 6);
}

TEST(SparseEchelon, DetectsDependence) {
    SparseEchelon e(3);
    EXPECT_TRUE(e.insert(make_sparse({{0, 2}, {1, 4}})));
    EXPECT_FALSE(e.insert(make_sparse({{0, -1}, {1, -2}})));
    EXPECT_TRUE(e.insert(make_sparse({{1, 3}, {2, 1}})));
    EXPECT_TRUE(e.in_span(make_sparse({{0, 1}, {1, 5}, {2, 1}})));
    EXPECT_FALSE(e.in_span(make_sparse({{2, 1}})));
    EXPECT_EQ(e.rank(), 2U);
    EXPECT_FALSE(e.insert({}));
    EXPECT_THROW(e.insert(make_sparse({{3, 1}})), std::out_of_range);
}

TEST(SparseEchelon, StoredRowsArePrimitive) {
    SparseEchelon e(2);
    e.insert(make_sparse({{0, 6}, {1, 9}}));
    EXPECT_EQ(e.rows().front()[0].second, 2);
    EXPECT_EQ(e.rows().front()[1].second, 3);
}

TEST(SparseEchelon, RankMatchesDenseOracle) {
    std::mt19937 gen(7);
    std::uniform_int_distribution<int> value(-3, 3), keep(0, 2);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t rows = 1 + trial % 7, cols = 1 + (trial * 3) % 8;
        std::vector<std::vector<ExactRational>> dense(rows, std::vector<ExactRational>(cols, ExactRational(0)));
        SparseEchelon e(cols);
        for (std::size_t i = 0; i < rows; ++i) {
            std::vector<std::pair<std::size_t, ExactInt>> entries;
            for (std::size_t j = 0; j < cols; ++j)
                if (keep(gen) == 0) {
                    const int x = value(gen);
                    dense[i][j] = x;
                    entries.emplace_back(j, x);
                }
            e.insert(make_sparse(std::move(entries)));
        }
        EXPECT_EQ(e.rank(), oracle::dense_rank(dense)) << "trial " << trial;
    }
}
