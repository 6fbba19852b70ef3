#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <vector>

#include "lqnet/stats.hpp"
#include "oracles.hpp"

namespace lqnet {
namespace {

std::vector<double> draw(std::mt19937_64& rng, std::size_t n, int hi)
{
    std::uniform_int_distribution<int> d(0, hi);
    std::vector<double> v(n);
    for (auto& x : v) x = d(rng);
    return v;
}

TEST(MannWhitney, SeparatedSamples)
{
    const std::vector<double> a{1, 2, 3};
    const std::vector<double> b{4, 5, 6};
    const auto r = mann_whitney_u(a, b);
    EXPECT_EQ(r.statistic, 0.0);
    EXPECT_NEAR(r.p_value, 0.1, 1e-12);
    EXPECT_EQ(r.method, TestMethod::Exact);
    EXPECT_LT(r.z, 0.0);
}

TEST(MannWhitney, IdenticalSamples)
{
    const std::vector<double> a{3, 1, 4, 1, 5};
    const auto r = mann_whitney_u(a, a);
    EXPECT_EQ(r.z, 0.0);
    EXPECT_DOUBLE_EQ(r.p_value, 1.0);
}

TEST(MannWhitney, PairwiseExceedance)
{
    const std::vector<double> a{1, 3};
    const std::vector<double> b{2, 4};
    EXPECT_EQ(mann_whitney_u(a, b).statistic, 1.0);
}

TEST(MannWhitney, ComplementarySums)
{
    std::mt19937_64 rng(8);
    for (int trial = 0; trial < 300; ++trial) {
        const auto a = draw(rng, 1 + trial % 15, 6);
        const auto b = draw(rng, 1 + trial % 11, 6);
        const double ua = mann_whitney_u(a, b).statistic;
        const double ub = mann_whitney_u(b, a).statistic;
        EXPECT_DOUBLE_EQ(ua + ub, static_cast<double>(a.size() * b.size()));
    }
}

TEST(MannWhitney, MatchesPermutationOracle)
{
    std::mt19937_64 rng(21);
    for (int trial = 0; trial < 400; ++trial) {
        const std::size_t na = 1 + rng() % 6;
        const std::size_t nb = 1 + rng() % 6;
        const auto a = draw(rng, na, 5);
        const auto b = draw(rng, nb, 5);
        const auto r = mann_whitney_u(a, b);
        EXPECT_EQ(r.method, TestMethod::Exact);
        EXPECT_DOUBLE_EQ(r.statistic, oracle::mann_whitney_u_pairs(a, b));
        EXPECT_NEAR(r.p_value, oracle::mann_whitney_exact_p(a, b), 1e-12);
    }
}

TEST(MannWhitney, ExactAndNormalAgreeSixVsSix)
{
    std::mt19937_64 rng(4);
    std::vector<double> pool(12);
    std::iota(pool.begin(), pool.end(), 1.0);
    for (int trial = 0; trial < 300; ++trial) {
        std::shuffle(pool.begin(), pool.end(), rng);
        const std::vector<double> a(pool.begin(), pool.begin() + 6);
        const std::vector<double> b(pool.begin() + 6, pool.end());
        const auto exact = mann_whitney_u(a, b);
        ASSERT_EQ(exact.method, TestMethod::Exact);
        const double u = exact.statistic;
        // Normal approximation with continuity correction, tie-free variance.
        const double z = (std::abs(u - 18.0) - 0.5) / std::sqrt(36.0 * 13.0 / 12.0);
        const double approx = std::min(1.0, 2.0 * normal_sf(std::max(z, 0.0)));
        EXPECT_NEAR(exact.p_value, approx, 0.05);
    }
}

TEST(MannWhitney, LargeSamplesUseNormal)
{
    std::mt19937_64 rng(2);
    const auto a = draw(rng, 20, 30);
    const auto b = draw(rng, 20, 30);
    const auto r = mann_whitney_u(a, b);
    EXPECT_EQ(r.method, TestMethod::NormalApprox);
    EXPECT_GE(r.p_value, 0.0);
    EXPECT_LE(r.p_value, 1.0);
    std::vector<double> hi(b);
    for (auto& v : hi) v += 100.0;
    const auto s = mann_whitney_u(a, hi);
    EXPECT_LT(s.p_value, 1e-6);
    EXPECT_LT(s.z, 0.0);
}

TEST(MannWhitney, EmptyThrows)
{
    const std::vector<double> a{1.0};
    const std::vector<double> none;
    EXPECT_THROW((void)mann_whitney_u(a, none), std::invalid_argument);
    EXPECT_THROW((void)mann_whitney_u(none, a), std::invalid_argument);
}

TEST(Wilcoxon, AllPositive)
{
    const std::vector<double> s{1, 2, 3, 4, 5};
    const auto r = wilcoxon_signed_rank(s, 0.0);
    EXPECT_EQ(r.statistic, 15.0);
    EXPECT_NEAR(r.p_value, 0.0625, 1e-12);
    EXPECT_EQ(r.method, TestMethod::Exact);
    EXPECT_GT(r.z, 0.0);
}

TEST(Wilcoxon, SymmetricSample)
{
    const std::vector<double> s{-3, -2, -1, 1, 2, 3};
    EXPECT_GE(wilcoxon_signed_rank(s, 0.0).p_value, 0.9);
}

TEST(Wilcoxon, SingleObservation)
{
    const std::vector<double> s{4.0};
    EXPECT_DOUBLE_EQ(wilcoxon_signed_rank(s, 1.0).p_value, 1.0);
}

TEST(Wilcoxon, ZerosDroppedAndAllZeroThrows)
{
    const std::vector<double> s{2, 2, 2};
    EXPECT_THROW((void)wilcoxon_signed_rank(s, 2.0), std::invalid_argument);
    const std::vector<double> none;
    EXPECT_THROW((void)wilcoxon_signed_rank(none, 0.0), std::invalid_argument);
    const std::vector<double> with_zero{0, 1, 2, 3, 4, 5};
    const std::vector<double> without{1, 2, 3, 4, 5};
    EXPECT_DOUBLE_EQ(wilcoxon_signed_rank(with_zero, 0.0).p_value,
                     wilcoxon_signed_rank(without, 0.0).p_value);
}

TEST(Wilcoxon, MatchesSignFlipOracle)
{
    std::mt19937_64 rng(33);
    for (int trial = 0; trial < 400; ++trial) {
        const std::size_t n = 1 + rng() % 10;
        auto s = draw(rng, n, 8);
        for (auto& v : s) v -= 4.0;
        if (std::all_of(s.begin(), s.end(), [](double v) { return v == 0.0; })) continue;
        const auto r = wilcoxon_signed_rank(s, 0.0);
        EXPECT_DOUBLE_EQ(r.statistic, oracle::signed_rank_w(s, 0.0));
        EXPECT_NEAR(r.p_value, oracle::signed_rank_exact_p(s, 0.0), 1e-12);
    }
}

TEST(Wilcoxon, LargeSampleUsesNormal)
{
    std::vector<double> s(30);
    std::iota(s.begin(), s.end(), 1.0);
    const auto r = wilcoxon_signed_rank(s, 0.0);
    EXPECT_EQ(r.method, TestMethod::NormalApprox);
    EXPECT_LT(r.p_value, 1e-5);
}

TEST(NormalSf, Values)
{
    EXPECT_DOUBLE_EQ(normal_sf(0.0), 0.5);
    EXPECT_NEAR(normal_sf(1.959963984540054), 0.025, 1e-12);
}

}  // namespace
}  // namespace lqnet
