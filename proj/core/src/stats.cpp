#include "lqnet/stats.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace lqnet {

std::string_view method_name(TestMethod m) noexcept
{
    return m == TestMethod::Exact ? "exact" : "normal-approx";
}

double normal_sf(double z) noexcept { return 0.5 * std::erfc(z / std::sqrt(2.0)); }

namespace {

/// Midranks of `values`, doubled so that they are integers.
std::vector<std::int64_t> doubled_midranks(std::span<const double> values)
{
    const std::size_t n = values.size();
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t l, std::size_t r) { return values[l] < values[r]; });
    std::vector<std::int64_t> ranks(n);
    for (std::size_t lo = 0; lo < n;) {
        std::size_t hi = lo;
        while (hi + 1 < n && values[order[hi + 1]] == values[order[lo]]) ++hi;
        // positions lo..hi (0-based) share rank ((lo+1) + (hi+1)) / 2
        const auto twice = static_cast<std::int64_t>(lo + hi + 2);
        for (std::size_t k = lo; k <= hi; ++k) ranks[order[k]] = twice;
        lo = hi + 1;
    }
    return ranks;
}

/// sum over tie groups of (t^3 - t)
double tie_term(std::span<const double> values)
{
    std::vector<double> v(values.begin(), values.end());
    std::sort(v.begin(), v.end());
    double acc = 0.0;
    for (std::size_t lo = 0; lo < v.size();) {
        std::size_t hi = lo;
        while (hi + 1 < v.size() && v[hi + 1] == v[lo]) ++hi;
        const double t = static_cast<double>(hi - lo + 1);
        acc += t * t * t - t;
        lo = hi + 1;
    }
    return acc;
}

double corrected_z(double stat, double mean, double sd)
{
    if (!(sd > 0.0)) return 0.0;
    const double diff = stat - mean;
    const double mag = std::max(std::abs(diff) - 0.5, 0.0);
    return std::copysign(mag / sd, diff);
}

double two_sided(double z) { return std::min(1.0, 2.0 * normal_sf(std::abs(z))); }

}  // namespace

TestResult mann_whitney_u(std::span<const double> a, std::span<const double> b)
{
    if (a.empty() || b.empty()) throw std::invalid_argument("mann_whitney_u: empty sample");

    const std::size_t na = a.size();
    const std::size_t nb = b.size();
    const std::size_t n = na + nb;
    std::vector<double> pooled(a.begin(), a.end());
    pooled.insert(pooled.end(), b.begin(), b.end());
    const auto ranks = doubled_midranks(pooled);

    std::int64_t rank_sum2 = 0;
    for (std::size_t i = 0; i < na; ++i) rank_sum2 += ranks[i];
    const double u = static_cast<double>(rank_sum2) / 2.0 - static_cast<double>(na * (na + 1)) / 2.0;

    const double dna = static_cast<double>(na);
    const double dnb = static_cast<double>(nb);
    const double dn = static_cast<double>(n);
    const double mean = dna * dnb / 2.0;
    const double var = dna * dnb / 12.0 * ((dn + 1.0) - tie_term(pooled) / (dn * (dn - 1.0)));

    TestResult r;
    r.statistic = u;
    r.z = corrected_z(u, mean, std::sqrt(std::max(var, 0.0)));

    if (n > kExactTestLimit) {
        r.method = TestMethod::NormalApprox;
        r.p_value = var > 0.0 ? two_sided(r.z) : 1.0;
        return r;
    }

    // Null distribution of the doubled rank sum of `na` items drawn from the
    // pooled ranks: ways[k][s] = number of k-subsets with doubled sum s.
    const std::int64_t total2 = std::accumulate(ranks.begin(), ranks.end(), std::int64_t{0});
    std::vector<std::vector<double>> ways(na + 1, std::vector<double>(total2 + 1, 0.0));
    ways[0][0] = 1.0;
    for (std::size_t item = 0; item < n; ++item) {
        const auto w = ranks[item];
        for (std::size_t k = std::min(na, item + 1); k >= 1; --k)
            for (std::int64_t s = total2; s >= w; --s) ways[k][s] += ways[k - 1][s - w];
    }
    // E[2 R_a] * n = na * total2; compare |n*2R - na*total2| to stay in integers.
    const auto nn = static_cast<std::int64_t>(n);
    const auto nna = static_cast<std::int64_t>(na);
    const std::int64_t observed = std::abs(nn * rank_sum2 - nna * total2);
    double hits = 0.0;
    double all = 0.0;
    for (std::int64_t s = 0; s <= total2; ++s) {
        all += ways[na][s];
        if (std::abs(nn * s - nna * total2) >= observed) hits += ways[na][s];
    }
    r.method = TestMethod::Exact;
    r.p_value = std::min(1.0, hits / all);
    return r;
}

TestResult wilcoxon_signed_rank(std::span<const double> sample, double mu0)
{
    if (sample.empty()) throw std::invalid_argument("wilcoxon_signed_rank: empty sample");
    std::vector<double> diffs;
    for (double v : sample)
        if (v != mu0) diffs.push_back(v - mu0);
    if (diffs.empty())
        throw std::invalid_argument("wilcoxon_signed_rank: every observation equals mu0");

    const std::size_t n = diffs.size();
    std::vector<double> magnitude(n);
    std::transform(diffs.begin(), diffs.end(), magnitude.begin(), [](double d) { return std::abs(d); });
    const auto ranks = doubled_midranks(magnitude);

    std::int64_t w2 = 0;
    for (std::size_t i = 0; i < n; ++i)
        if (diffs[i] > 0.0) w2 += ranks[i];
    const double w = static_cast<double>(w2) / 2.0;

    const double dn = static_cast<double>(n);
    const double mean = dn * (dn + 1.0) / 4.0;
    const double var = dn * (dn + 1.0) * (2.0 * dn + 1.0) / 24.0 - tie_term(magnitude) / 48.0;

    TestResult r;
    r.statistic = w;
    r.z = corrected_z(w, mean, std::sqrt(std::max(var, 0.0)));

    if (n > kExactTestLimit) {
        r.method = TestMethod::NormalApprox;
        r.p_value = var > 0.0 ? two_sided(r.z) : 1.0;
        return r;
    }

    // Each observation contributes its doubled rank to W+ or nothing.
    const std::int64_t total2 = std::accumulate(ranks.begin(), ranks.end(), std::int64_t{0});
    std::vector<double> ways(total2 + 1, 0.0);
    ways[0] = 1.0;
    for (auto rk : ranks)
        for (std::int64_t s = total2; s >= rk; --s) ways[s] += ways[s - rk];
    // E[2 W+] = total2 / 2; compare |2*(2W) - total2|.
    const std::int64_t observed = std::abs(2 * w2 - total2);
    double hits = 0.0;
    double all = 0.0;
    for (std::int64_t s = 0; s <= total2; ++s) {
        all += ways[s];
        if (std::abs(2 * s - total2) >= observed) hits += ways[s];
    }
    r.method = TestMethod::Exact;
    r.p_value = std::min(1.0, hits / all);
    return r;
}

}  // namespace lqnet
