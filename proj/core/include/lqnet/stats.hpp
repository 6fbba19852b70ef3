#pragma once

#include <cstddef>
#include <span>
#include <string_view>

namespace lqnet {

enum class TestMethod { NormalApprox, Exact };

[[nodiscard]] std::string_view method_name(TestMethod m) noexcept;

struct TestResult {
    double statistic = 0.0;  ///< U of the first sample, or W+ for the signed-rank test
    double z = 0.0;          ///< continuity- and tie-corrected normal score; sign follows first minus second
    double p_value = 1.0;    ///< two-sided
    TestMethod method = TestMethod::NormalApprox;
};

/// Samples whose combined size is at most this use the exact permutation
/// distribution; larger ones use the normal approximation.
inline constexpr std::size_t kExactTestLimit = 12;

/// Two-sided Mann-Whitney rank-sum test with midranks for ties.
/// Throws std::invalid_argument when either sample is empty.
[[nodiscard]] TestResult mann_whitney_u(std::span<const double> a, std::span<const double> b);

/// Two-sided one-sample Wilcoxon signed-rank test of the location mu0.
/// Observations equal to mu0 are dropped; throws std::invalid_argument when
/// nothing remains.
[[nodiscard]] TestResult wilcoxon_signed_rank(std::span<const double> sample, double mu0);

/// Upper-tail probability of the standard normal distribution.
[[nodiscard]] double normal_sf(double z) noexcept;

}  // namespace lqnet
