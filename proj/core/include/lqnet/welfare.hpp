#pragma once

#include <cstddef>
#include <vector>

#include "lqnet/equilibrium.hpp"
#include "lqnet/game.hpp"

namespace lqnet {

struct WelfareResult {
    Network network;
    EffortProfile efforts;
    LinkIntentions intentions;          ///< one initiator per edge
    std::vector<double> per_player_payoffs;  ///< net of incoming-link transfers
    double total_welfare = 0.0;         ///< sum of per_player_payoffs
    double experimenter_transfers = 0.0;  ///< link_benefit * initiations
    double gross_welfare = 0.0;         ///< total_welfare + experimenter_transfers
};

/// Reporting convention for who pays for each edge: the lower-degree endpoint
/// initiates; between equal degrees, i initiates to j when (j - i) mod n lies
/// in [1, (n-1)/2] (lower index first when n is even and the offset is n/2).
/// Gives periphery-initiated stars and two initiations per player on K5.
[[nodiscard]] LinkIntentions default_initiation(const Network& g);

/// Maximizer of total payoff on a fixed network:
/// (2 beta I - 2 comp G) x = alpha 1, with a projected fallback at the bounds.
/// Throws ConcavityViolated when beta <= comp * lambda_max(G).
[[nodiscard]] EffortProfile efficient_effort(const Network& g, const GameParams& params,
                                             const SolverOptions& options = {});

[[nodiscard]] WelfareResult welfare(const Network& g, std::span<const double> efforts,
                                    const GameParams& params);
[[nodiscard]] WelfareResult welfare(const LinkIntentions& intentions,
                                    std::span<const double> efforts, const GameParams& params);

/// Welfare-maximizing network and efforts over all networks on n <= 6 nodes.
/// Ties go to fewer edges, then to the smaller canonical code.
[[nodiscard]] WelfareResult optimize_welfare(const GameParams& params);

/// One line of the equilibrium-versus-efficient benchmark table. Values are
/// (center, periphery) for the star and identical across players otherwise.
struct BenchmarkRow {
    NetworkClass network_class;
    std::vector<double> equilibrium_efforts;
    std::vector<double> equilibrium_payoffs;
    std::vector<double> efficient_efforts;
    std::vector<double> efficient_payoffs;
};

/// Empty, star and complete benchmarks. Payoffs use default_initiation and
/// exclude incoming-link transfers.
[[nodiscard]] std::vector<BenchmarkRow> benchmark_table(const GameParams& params);

}  // namespace lqnet
