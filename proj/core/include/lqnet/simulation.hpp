#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "lqnet/agents.hpp"
#include "lqnet/game.hpp"

namespace lqnet {

/// Which payoffs determine the ranks shown to agents.
enum class RankBasis { PerPeriod, Cumulative };

struct SimConfig {
    GameParams game;
    TreatmentSpec treatment;
    EffortRuleParams behavior;
    LinkLogitCoeffs coeffs = LinkLogitCoeffs::preset(Treatment::Baseline);
    std::size_t rounds = 40;
    std::size_t groups = 10;
    std::uint64_t master_seed = 0;
    std::size_t replications = 1;
    RankBasis rank_basis = RankBasis::PerPeriod;

    /// Defaults for one treatment: matching coefficient preset and a link
    /// benefit of 6 points when the treatment pays for incoming links.
    [[nodiscard]] static SimConfig for_treatment(Treatment t);

    /// Throws ConfigError on any out-of-range field or when link_benefit is
    /// inconsistent with the treatment (6 iff link benefits are on, else 0).
    void validate() const;

    friend bool operator==(const SimConfig&, const SimConfig&) = default;
};

inline constexpr double kTreatmentLinkBenefit = 6.0;

/// Everything produced in one period of one group.
struct PeriodRecord {
    std::size_t period = 0;
    LinkIntentions intentions;
    Network network;
    EffortProfile efforts;
    RoundOutcome outcome;                  ///< ranks are per-period payoff ranks
    std::vector<double> cumulative_payoffs;
    std::vector<int> feedback_ranks;       ///< ranks on the configured basis; what agents see

    friend bool operator==(const PeriodRecord&, const PeriodRecord&) = default;
};

struct GroupHistory {
    std::size_t group = 0;
    std::vector<PeriodRecord> periods;

    friend bool operator==(const GroupHistory&, const GroupHistory&) = default;
};

struct SimHistory {
    std::size_t replication = 0;
    std::vector<GroupHistory> groups;

    friend bool operator==(const SimHistory&, const SimHistory&) = default;
};

/// Identifies the random substreams of one group in one replication.
struct GroupStreams {
    std::uint64_t master_seed = 0;
    std::uint64_t replication = 0;
    std::uint64_t group = 0;
};

/// One simultaneous-move period. Every decision reads only `prev` and its
/// own (period, agent, purpose) substream. `agent_order` permutes the order
/// in which agents are evaluated; it never changes the result.
[[nodiscard]] PeriodRecord run_round(const PeriodRecord* prev, std::size_t period,
                                     const SimConfig& config, const GroupStreams& streams,
                                     std::span<const std::size_t> agent_order = {});

[[nodiscard]] GroupHistory run_group(const SimConfig& config, const GroupStreams& streams);

/// All groups of one replication (replication 0 unless stated).
[[nodiscard]] SimHistory run_session(const SimConfig& config, std::size_t replication = 0,
                                     unsigned threads = 1);

/// Replications 0..count-1, ordered by replication index.
[[nodiscard]] std::vector<SimHistory> run_batch(const SimConfig& config, std::size_t replications,
                                                unsigned threads = 0);

}  // namespace lqnet
