#include <gtest/gtest.h>

#include <random>
#include <stdexcept>
#include <vector>

#include "krawtchouk/krawtchouk.hpp"
#include "oracles.hpp"

using namespace krawtchouk;

namespace {

RationalMatrix from_rows(const std::vector<std::vector<long>>& rows) {
    RationalMatrix m(rows.size(), rows.front().size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows[i].size(); ++j) m(i, j) = rows[i][j];
    return m;
}

const std::vector<ExactRational>& r_samples() {
    static const std::vector<ExactRational> values{0, 1, 2, make_rational(1, 2), make_rational(3, 7), -2, 5};
    return values;
}

/// Random rationals with small numerator and denominator, fixed seed.
std::vector<ExactRational> random_rationals(std::size_t count, unsigned seed) {
    std::mt19937 gen(seed);
    std::uniform_int_distribution<long> num(-9, 9), den(1, 9);
    std::vector<ExactRational> out;
    for (std::size_t k = 0; k < count; ++k) out.push_back(make_rational(num(gen), den(gen)));
    return out;
}

}  // namespace

TEST(BuildMatrix, DisplayedSymmetricMatrices) {
    EXPECT_EQ(build_symmetric(3).entries(), from_rows({{1, 1, 1, 1}, {3, 1, -1, -3}, {3, -1, -1, 3}, {1, -1, 1, -1}}));
    EXPECT_EQ(build_symmetric(4).entries(), from_rows({{1, 1, 1, 1, 1},
                                                       {4, 2, 0, -2, -4},
                                                       {6, 0, -2, 0, 6},
                                                       {4, -2, 0, 2, -4},
                                                       {1, -1, 1, -1, 1}}));
}

TEST(BuildMatrix, OrderZeroIsOne) {
    for (const auto& r : r_samples()) EXPECT_EQ(build_matrix(0, r).entries(), from_rows({{1}}));
}

TEST(BuildMatrix, RIsTwo) {
    EXPECT_EQ(build_matrix(2, 2).entries(), from_rows({{1, 1, 1}, {2, -1, -4}, {1, -2, 4}}));
}

TEST(BuildMatrix, RejectsNegativeOrder) { EXPECT_THROW(build_matrix(-1, 1), std::invalid_argument); }

TEST(BuildMatrix, MatchesCauchyProductOracle) {
    auto rs = random_rationals(12, 20261018);
    rs.insert(rs.end(), r_samples().begin(), r_samples().end());
    for (const auto& r : rs)
        for (int order = 0; order <= 9; ++order) {
            const auto m = build_matrix(order, r);
            for (int n = 0; n <= order; ++n)
                for (int j = 0; j <= order; ++j)
                    ASSERT_EQ(m(n, j), oracle::krawtchouk_entry(order, r, n, j))
                        << "N=" << order << " r=" << to_string(r) << " n=" << n << " j=" << j;
        }
}

TEST(BuildMatrix, StructuralInvariants) {
    for (const auto& r : r_samples())
        for (int order = 0; order <= 12; ++order) {
            const auto m = build_matrix(order, r);
            for (int j = 0; j <= order; ++j) EXPECT_EQ(m(0, j), 1);
            for (int n = 0; n <= order; ++n) EXPECT_EQ(m(n, 0), ExactRational(binomial(order, n)));
        }
    for (int order = 0; order <= 12; ++order) EXPECT_TRUE(build_symmetric(order).is_integral());
    EXPECT_FALSE(build_matrix(2, make_rational(1, 2)).is_integral());
}

// Entry (n, j) is a polynomial in r of degree <= j: interpolate through j+1
// sample points and predict the value at one more.
TEST(BuildMatrix, EntriesArePolynomialsInR) {
    const std::vector<ExactRational> nodes{0, 1, -1, 2, make_rational(1, 2), 3, make_rational(-2, 3), 5, -4, 7, 11};
    const ExactRational probe = make_rational(13, 5);
    const int order = 9;
    std::vector<KrawtchoukMatrix> at_nodes;
    for (const auto& r : nodes) at_nodes.push_back(build_matrix(order, r));
    const auto at_probe = build_matrix(order, probe);
    for (int j = 0; j <= order; ++j)
        for (int n = 0; n <= order; ++n) {
            ExactRational predicted = 0;
            for (int a = 0; a <= j; ++a) {
                ExactRational basis = 1;
                for (int b = 0; b <= j; ++b)
                    if (b != a) basis *= (probe - nodes[b]) / (nodes[a] - nodes[b]);
                predicted += basis * at_nodes[a](n, j);
            }
            ASSERT_EQ(predicted, at_probe(n, j)) << "n=" << n << " j=" << j;
        }
}

TEST(Entry, DisplayedValuesAndBoundary) {
    const auto phi3 = build_symmetric(3);
    const auto phi4 = build_symmetric(4);
    EXPECT_EQ(phi4.entry(2, 2), -2);
    EXPECT_EQ(phi3.entry(1, 3), -3);
    const auto general = build_matrix(5, make_rational(3, 7));
    for (int j = 0; j <= 5; ++j) EXPECT_EQ(general.entry(-1, j), 0);
}

TEST(Entry, RejectsOtherOutOfRange) {
    const auto phi = build_symmetric(3);
    EXPECT_THROW(phi.entry(-2, 0), std::out_of_range);
    EXPECT_THROW(phi.entry(4, 0), std::out_of_range);
    EXPECT_THROW(phi.entry(0, -1), std::out_of_range);
    EXPECT_THROW(phi.entry(0, 4), std::out_of_range);
    EXPECT_THROW(phi.entry(-1, 4), std::out_of_range);
    EXPECT_EQ(phi.coefficient(4, 1), 0);
    EXPECT_EQ(phi.coefficient(-3, 1), 0);
    EXPECT_THROW(phi.coefficient(0, 5), std::out_of_range);
}

TEST(RParameter, DerivedProbability) {
    const RParameter r(make_rational(3, 7));
    EXPECT_EQ(r.p(), make_rational(7, 10));
    EXPECT_EQ(r.q(), make_rational(3, 10));
    EXPECT_EQ(1 / r.p(), 1 + r.value());
    EXPECT_EQ(r.q() / r.p(), r.value());
    EXPECT_EQ(RParameter(1).p(), make_rational(1, 2));
    const RParameter minus_one(-1);
    EXPECT_FALSE(minus_one.has_probability());
    EXPECT_THROW(minus_one.p(), UndefinedParameterError);
    EXPECT_EQ(build_matrix(3, -1).order(), 3);
}

TEST(Pascal, Examples) {
    EXPECT_TRUE(verify_pascal(5, 1).passed());
    EXPECT_TRUE(verify_pascal(5, make_rational(3, 7)).passed());
    const auto trivial = verify_pascal(0, 4);
    EXPECT_TRUE(trivial.passed());
    EXPECT_EQ(trivial.cases(), 2U);
}

TEST(Recurrence, Examples) {
    EXPECT_TRUE(verify_recurrence_j(4, 1).passed());
    EXPECT_TRUE(verify_recurrence_j(3, 2).passed());
    const auto single = verify_recurrence_j(1, make_rational(-5, 3));
    EXPECT_TRUE(single.passed());
    EXPECT_EQ(single.cases(), 4U);
    EXPECT_THROW(verify_recurrence_j(0, 1), std::invalid_argument);
}

TEST(StructuralIdentities, HoldOverFullGrid) {
    std::vector<ExactRational> rs = r_samples();
    rs.push_back(-1);
    for (int order = 0; order <= 12; ++order) {
        for (const auto& r : rs) {
            EXPECT_TRUE(verify_pascal(order, r).passed()) << order << " " << to_string(r);
            if (order >= 1) {
                EXPECT_TRUE(verify_recurrence_j(order, r).passed()) << order << " " << to_string(r);
            }
        }
        EXPECT_TRUE(verify_involution(order)) << order;
        EXPECT_TRUE(verify_sign_symmetries(order).passed()) << order;
        EXPECT_TRUE(closed_form_row1_col01(order).passed()) << order;
        EXPECT_TRUE(verify_binomial_conjugation(order).passed()) << order;
    }
}

TEST(StructuralIdentities, SpotValues) {
    const auto phi3 = build_symmetric(3);
    const auto phi4 = build_symmetric(4);
    // row sign: Phi^4_{1,3} = (-1)^1 Phi^4_{1,1}
    EXPECT_EQ(phi4(1, 3), -2);
    EXPECT_EQ(phi4(1, 3), -phi4(1, 1));
    EXPECT_EQ(phi3(2, 0), phi3(1, 0));
    for (int order = 0; order <= 8; ++order) {
        const auto phi = build_symmetric(order);
        EXPECT_EQ(phi(order, order), sign_power(order));
        if (order >= 1) {
            EXPECT_EQ(phi(1, 0), order);
        }
    }
    // second column of Phi^4 is binomial(3,n) - binomial(3,n-1)
    const std::vector<long> column{1, 2, 0, -2, -1};
    for (int n = 0; n <= 4; ++n) EXPECT_EQ(phi4(n, 1), column[n]);
    EXPECT_EQ(phi4(1, 1), 4 - 2 * 1);
    // binomial conjugation
    EXPECT_EQ(phi3(2, 1), phi3(1, 2));
    EXPECT_EQ(phi3(2, 1), -1);
    EXPECT_EQ(phi4(2, 0), ExactRational(binomial(4, 2)) * phi4(0, 2));
    EXPECT_EQ(phi4(2, 0), 6);
}

TEST(StructuralIdentities, InvolutionSmallCases) {
    EXPECT_TRUE(verify_involution(0));
    EXPECT_TRUE(verify_involution(3));
    EXPECT_TRUE(verify_involution(8));
    EXPECT_FALSE(verify_involution(build_symmetric(3).perturbed(1, 1, 1)));
}

TEST(StructuralIdentities, CorruptedMatrixIsReported) {
    const auto bad = build_symmetric(4).perturbed(2, 1, 1);
    const auto report = verify_sign_symmetries(bad);
    EXPECT_FALSE(report.passed());
    EXPECT_GT(report.failure_count(), 0U);
    EXPECT_FALSE(verify_binomial_conjugation(bad).passed());
    EXPECT_FALSE(verify_pascal(bad, build_symmetric(5)).passed());
    EXPECT_FALSE(verify_recurrence_j(bad).passed());
}

TEST(IdentityReport, CapsStoredFailuresButCountsAll) {
    IdentityReport report("cap", 3);
    for (int k = 0; k < 10; ++k) report.check("always", std::to_string(k), ExactRational(k), ExactRational(k + 1));
    report.check("ok", "", ExactRational(1), ExactRational(1));
    EXPECT_EQ(report.cases(), 11U);
    EXPECT_EQ(report.failure_count(), 10U);
    EXPECT_EQ(report.failures().size(), 3U);
    EXPECT_FALSE(report.passed());
    IdentityReport clean("clean");
    clean.check("ok", "", ExactRational(2), ExactRational(2));
    EXPECT_TRUE(clean.passed());
    EXPECT_TRUE(clean.failures().empty());
}
