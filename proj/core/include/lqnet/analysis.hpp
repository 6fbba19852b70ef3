#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lqnet/game.hpp"
#include "lqnet/simulation.hpp"
#include "lqnet/stats.hpp"

namespace lqnet {

/// The last `length` periods of a history; length 0 selects every period.
struct Window {
    std::size_t length = 0;

    [[nodiscard]] static Window all() { return {0}; }
    [[nodiscard]] static Window last(std::size_t k) { return {k}; }
    /// "all" or "last<k>" (e.g. "last10").
    [[nodiscard]] static Window parse(std::string_view text);
    [[nodiscard]] std::string label() const;
};

/// Relative frequency of each network class over a window; entries sum to 1.
struct ClassFrequencies {
    double empty = 0.0;
    double star = 0.0;
    double complete = 0.0;
    double core_periphery = 0.0;  ///< CorePeriphery(k) with 2 <= k < n - 1
    double other = 0.0;
};

/// Window averages of one group, the unit of observation for treatment tests.
struct GroupSummary {
    std::size_t replication = 0;
    std::size_t group = 0;
    std::string window;
    std::size_t periods = 0;
    double mean_links = 0.0;
    double mean_degree = 0.0;
    double mean_min_degree = 0.0;
    double mean_max_degree = 0.0;
    double mean_effort = 0.0;
    double mean_equilibrium_effort = 0.0;  ///< Nash effort on the networks formed; NaN if unsolvable
    double mean_payoff = 0.0;
    double mean_adjusted_payoff = 0.0;     ///< payoff minus incoming-link benefits
    ClassFrequencies classes;
    double reciprocated_fraction = 0.0;    ///< NaN when the window has no realized links
};

/// Periods [first, last) of `h` selected by the window. Throws
/// std::invalid_argument when the window is longer than the history or the
/// history is empty.
[[nodiscard]] std::span<const PeriodRecord> window_periods(const GroupHistory& h, Window w);

[[nodiscard]] GroupSummary network_stats(const GroupHistory& h, Window w,
                                         const GameParams& params);

[[nodiscard]] ClassFrequencies equilibrium_frequency(const GroupHistory& h, Window w);

/// Share of realized links initiated by both endpoints, pooled over the
/// window. Throws NoLinks when no link is realized in the window.
[[nodiscard]] double reciprocated_fraction(const GroupHistory& h, Window w);

[[nodiscard]] std::vector<GroupSummary> summarize(std::span<const SimHistory> histories, Window w,
                                                  const GameParams& params);

enum class Metric {
    Effort,
    Payoff,
    AdjustedPayoff,
    Links,
    AverageDegree,
    MinDegree,
    MaxDegree,
    Reciprocation,
    EquilibriumEffort
};

[[nodiscard]] std::string_view metric_name(Metric m) noexcept;
/// Accepts effort, payoff, adjusted_payoff, links, avg_degree, min_degree,
/// max_degree, reciprocation, equilibrium_effort.
[[nodiscard]] Metric parse_metric(std::string_view name);

[[nodiscard]] double metric_value(const GroupSummary& s, Metric m) noexcept;

/// One observation per group; groups where the metric is undefined (NaN) are left out.
[[nodiscard]] std::vector<double> group_observations(std::span<const GroupSummary> summaries,
                                                     Metric m);

struct TreatmentComparison {
    TestResult test;
    int direction = 0;  ///< sign of mean(a) - mean(b)
    double mean_a = 0.0;
    double mean_b = 0.0;
    std::size_t n_a = 0;
    std::size_t n_b = 0;
};

/// Mann-Whitney comparison of two batches on window-averaged group observations.
[[nodiscard]] TreatmentComparison compare_treatments(std::span<const SimHistory> a,
                                                     std::span<const SimHistory> b, Metric m,
                                                     Window w, const GameParams& params_a,
                                                     const GameParams& params_b);

[[nodiscard]] TreatmentComparison compare_observations(std::span<const double> a,
                                                       std::span<const double> b);

}  // namespace lqnet
