#include <gtest/gtest.h>

#include <bit>
#include <stdexcept>

#include "krawtchouk/zeon.hpp"

using namespace krawtchouk;

TEST(SubsetIndex, LayerAndProducts) {
    const auto a = SubsetIndex::of({1, 3});
    EXPECT_EQ(a.mask(), 0b101U);
    EXPECT_EQ(a.layer(), 2);
    EXPECT_TRUE(a.contains(3));
    EXPECT_FALSE(a.contains(2));
    EXPECT_EQ(zeon_mul(a, SubsetIndex::of({2})), SubsetIndex::of({1, 2, 3}));
    EXPECT_FALSE(zeon_mul(a, SubsetIndex::of({3})).has_value());
    EXPECT_EQ(zeon_mul(SubsetIndex{}, a), a);
    EXPECT_THROW(SubsetIndex::of({0}), std::out_of_range);
}

TEST(Raise, SmallExample) {
    // n = 2, basis order {}, {1}, {2}, {1,2}
    const auto r1 = raise(2, 1);
    EXPECT_EQ(r1.nonzeros(), 2U);
    EXPECT_EQ(r1.at(0b01, 0b00), 1);
    EXPECT_EQ(r1.at(0b11, 0b10), 1);
    EXPECT_EQ(r1.at(0b11, 0b01), 0);
    EXPECT_EQ(lower(2, 1), r1.transpose());
    EXPECT_TRUE((r1 * r1).is_zero());
}

TEST(Raise, RejectsBadIndex) {
    EXPECT_THROW(raise(3, 0), std::out_of_range);
    EXPECT_THROW(raise(3, 4), std::out_of_range);
    EXPECT_THROW(lower(0, 1), std::out_of_range);
    EXPECT_THROW(op_T(0), std::out_of_range);
}

TEST(OperatorT, NonzeroCountsAndLayers) {
    EXPECT_EQ(op_T(4).nonzeros(), 32U);
    for (int n = 1; n <= 8; ++n) {
        const auto t = op_T(n);
        EXPECT_EQ(t.nonzeros(), static_cast<std::size_t>(n) << (n - 1));
        for (const auto& [key, v] : t.entries()) {
            EXPECT_EQ(v, 1);
            EXPECT_EQ(std::popcount(key.first), std::popcount(key.second) + 1);
        }
        EXPECT_EQ(op_Tstar(n), t.transpose());
    }
}

TEST(OperatorU, SmallDiagonals) {
    const auto u1 = op_U(1);
    ASSERT_TRUE(u1.is_diagonal());
    EXPECT_EQ(u1.diagonal(), (std::vector<ExactInt>{1, -1}));
    const auto u2 = op_U(2);
    ASSERT_TRUE(u2.is_diagonal());
    EXPECT_EQ(u2.diagonal(), (std::vector<ExactInt>{2, 0, 0, -2}));
}

TEST(OperatorU, DiagonalIsNMinusTwiceLayer) {
    for (int n = 1; n <= 8; ++n) {
        const auto u = op_U(n);
        ASSERT_TRUE(u.is_diagonal()) << n;
        const auto diag = u.diagonal();
        for (std::uint32_t mask = 0; mask < u.size(); ++mask)
            EXPECT_EQ(diag[mask], n - 2 * std::popcount(mask)) << n << " " << mask;
    }
}

// Generators commute among themselves; raising and lowering a different index commute.
TEST(Operators, CommutationRelations) {
    for (int n = 2; n <= 5; ++n)
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j) {
                const auto ri = raise(n, i), rj = raise(n, j), li = lower(n, i), lj = lower(n, j);
                EXPECT_EQ(ri * rj, rj * ri);
                if (i != j) {
                    EXPECT_EQ(li * rj, rj * li);
                }
            }
    for (int n = 1; n <= 6; ++n) {
        const auto t = op_T(n), ts = op_Tstar(n), u = op_U(n);
        // [U, T] = -2T and [U, T*] = 2T*: the sl2 triple
        EXPECT_EQ(u * t - t * u, ZeonMatrix(n) - t - t);
        EXPECT_EQ(u * ts - ts * u, ts + ts);
    }
}

TEST(ZeonMatrix, DenseCopyAndLimits) {
    const auto dense = op_T(3).to_dense();
    EXPECT_EQ(dense.rows(), 8U);
    EXPECT_EQ(dense(0b001, 0), 1);
    EXPECT_THROW(op_T(11).to_dense(), std::out_of_range);
    EXPECT_THROW(ZeonMatrix(21), std::out_of_range);
    EXPECT_THROW(ZeonMatrix(2) + ZeonMatrix(3), std::invalid_argument);
    ZeonMatrix m(1);
    m.add(0, 1, 3);
    m.add(0, 1, -3);
    EXPECT_TRUE(m.is_zero());
    EXPECT_THROW(m.add(2, 0, 1), std::out_of_range);
}
