#pragma once

// Independent reference computations used only by tests. Nothing here calls
// the solver or test routines under test.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

#include "lqnet/game.hpp"

namespace lqnet::oracle {

/// Damped simultaneous best-response iteration from the zero profile.
inline std::vector<double> damped_best_response(const Network& g, const GameParams& p,
                                                double damping = 0.5, double tol = 1e-13,
                                                std::size_t max_iter = 1'000'000)
{
    const std::size_t n = g.size();
    std::vector<double> x(n, 0.0);
    std::vector<double> next(n);
    for (std::size_t it = 0; it < max_iter; ++it) {
        double change = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            double s = 0.0;
            for (std::size_t k = 0; k < n; ++k)
                if (g(i, k)) s += x[k];
            const double br = std::clamp((p.alpha + p.comp * s) / (2.0 * p.beta), 0.0, p.effort_max);
            next[i] = (1.0 - damping) * x[i] + damping * br;
            change = std::max(change, std::abs(next[i] - x[i]));
        }
        x = next;
        if (change < tol) break;
    }
    return x;
}

/// Total payoff written out term by term (no transfers); each edge's cost is
/// paid once by whoever the intention matrix says.
inline double total_welfare(const Network& g, const std::vector<double>& x, const GameParams& p,
                            std::size_t initiations)
{
    double w = 0.0;
    for (std::size_t i = 0; i < g.size(); ++i) {
        w += p.alpha * x[i] - p.beta * x[i] * x[i];
        for (std::size_t k = 0; k < g.size(); ++k)
            if (g(i, k)) w += p.comp * x[i] * x[k];
    }
    return w - p.link_cost * static_cast<double>(initiations);
}

/// Central-difference gradient of f at x.
inline std::vector<double> gradient(const std::function<double(const std::vector<double>&)>& f,
                                    std::vector<double> x, double h = 1e-5)
{
    std::vector<double> grad(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double keep = x[i];
        x[i] = keep + h;
        const double up = f(x);
        x[i] = keep - h;
        const double down = f(x);
        x[i] = keep;
        grad[i] = (up - down) / (2.0 * h);
    }
    return grad;
}

/// Midrank of values[i] among values: #smaller + (#equal + 1) / 2.
inline double midrank(const std::vector<double>& values, std::size_t i)
{
    double smaller = 0.0;
    double equal = 0.0;
    for (double v : values) {
        if (v < values[i]) smaller += 1.0;
        if (v == values[i]) equal += 1.0;
    }
    return smaller + (equal + 1.0) / 2.0;
}

/// U of the first sample by counting pairwise exceedances (ties count 1/2).
inline double mann_whitney_u_pairs(const std::vector<double>& a, const std::vector<double>& b)
{
    double u = 0.0;
    for (double x : a)
        for (double y : b) u += x > y ? 1.0 : (x == y ? 0.5 : 0.0);
    return u;
}

/// Two-sided exact p-value: relabel the pooled sample in every possible way
/// (bitmask over positions) and count splits whose U is at least as far from
/// its mean as the observed one.
inline double mann_whitney_exact_p(const std::vector<double>& a, const std::vector<double>& b)
{
    std::vector<double> pooled(a);
    pooled.insert(pooled.end(), b.begin(), b.end());
    const std::size_t n = pooled.size();
    const std::size_t na = a.size();
    const double mean = static_cast<double>(na * b.size()) / 2.0;
    const double observed = std::abs(mann_whitney_u_pairs(a, b) - mean);
    std::size_t hits = 0;
    std::size_t total = 0;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        if (static_cast<std::size_t>(__builtin_popcount(mask)) != na) continue;
        std::vector<double> sa;
        std::vector<double> sb;
        for (std::size_t i = 0; i < n; ++i) ((mask >> i) & 1u ? sa : sb).push_back(pooled[i]);
        ++total;
        if (std::abs(mann_whitney_u_pairs(sa, sb) - mean) >= observed - 1e-9) ++hits;
    }
    return static_cast<double>(hits) / static_cast<double>(total);
}

/// W+ by summing midranks of |d| over positive differences (zeros dropped).
inline double signed_rank_w(const std::vector<double>& sample, double mu0)
{
    std::vector<double> d;
    for (double v : sample)
        if (v != mu0) d.push_back(v - mu0);
    std::vector<double> mag;
    for (double v : d) mag.push_back(std::abs(v));
    double w = 0.0;
    for (std::size_t i = 0; i < d.size(); ++i)
        if (d[i] > 0) w += midrank(mag, i);
    return w;
}

/// Two-sided exact p-value over all 2^n sign flips of the nonzero differences.
inline double signed_rank_exact_p(const std::vector<double>& sample, double mu0)
{
    std::vector<double> mag;
    for (double v : sample)
        if (v != mu0) mag.push_back(std::abs(v - mu0));
    const std::size_t n = mag.size();
    std::vector<double> ranks(n);
    for (std::size_t i = 0; i < n; ++i) ranks[i] = midrank(mag, i);
    const double mean = static_cast<double>(n * (n + 1)) / 4.0;
    const double observed = std::abs(signed_rank_w(sample, mu0) - mean);
    std::size_t hits = 0;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        double w = 0.0;
        for (std::size_t i = 0; i < n; ++i)
            if ((mask >> i) & 1u) w += ranks[i];
        if (std::abs(w - mean) >= observed - 1e-9) ++hits;
    }
    return static_cast<double>(hits) / static_cast<double>(std::size_t{1} << n);
}

}  // namespace lqnet::oracle
