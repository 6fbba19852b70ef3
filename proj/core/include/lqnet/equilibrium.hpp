#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "lqnet/game.hpp"

namespace lqnet {

/// Core-periphery family label. Empty, Star and Complete take precedence over
/// the general CorePeriphery(k) label.
struct NetworkClass {
    enum class Kind { Empty, Star, Complete, CorePeriphery, Other };

    Kind kind = Kind::Other;
    std::size_t core_size = 0;  ///< meaningful for CorePeriphery only

    [[nodiscard]] std::string label() const;
    friend bool operator==(const NetworkClass&, const NetworkClass&) = default;
};

[[nodiscard]] NetworkClass classify_network(const Network& g);

/// Best own effort against the neighbors' current efforts:
/// clamp((alpha + comp * sum_{k in N_i} x_k) / (2 beta), 0, effort_max).
[[nodiscard]] double best_response_effort(std::size_t player, const Network& g,
                                          std::span<const double> efforts,
                                          const GameParams& params);

struct SolverOptions {
    double tolerance = 1e-10;
    std::size_t max_iterations = 100'000;
};

/// Nash effort on a fixed network: the Katz-Bonacich solution of
/// (2 beta I - comp G) x = alpha 1, with a projected Gauss-Seidel fallback
/// when that solution leaves [0, effort_max].
///
/// Throws SpectralConditionViolated when 2 beta <= comp * lambda_max(G) and
/// NonConvergence if the bounded fallback does not settle.
[[nodiscard]] EffortProfile equilibrium_effort(const Network& g, const GameParams& params,
                                               const SolverOptions& options = {});

struct NashCheck {
    bool is_equilibrium = false;
    double max_deviation_gain = 0.0;
    std::size_t best_deviator = 0;
};

/// Scans every player's joint deviations (each alternative own intention row
/// with the re-optimized own effort against the resulting network, others
/// held fixed) and reports the largest payoff improvement.
[[nodiscard]] NashCheck is_nash(const LinkIntentions& intentions, std::span<const double> efforts,
                                const GameParams& params, double epsilon = 1e-9);

struct EquilibriumCertificate {
    LinkIntentions intentions;
    EffortProfile efforts;
    NetworkClass network_class;
    double max_deviation_gain = 0.0;
    std::uint64_t network_code = 0;     ///< canonical_code of the realized network
    std::uint64_t pattern_code = 0;     ///< canonical_code of the intentions
    std::size_t labeled_profiles = 0;   ///< labeled profiles in this isomorphism class
};

struct EnumerationReport {
    std::vector<EquilibriumCertificate> certificates;
    std::size_t networks_scanned = 0;
    std::size_t profiles_scanned = 0;
    std::size_t networks_skipped = 0;   ///< spectral condition failed; no interior effort
};

/// Exhaustive search over every network on n <= 6 nodes and every assignment
/// of exactly one initiator per edge. One certificate per isomorphism class
/// of intention matrix, ordered by (network class, network code, pattern code).
[[nodiscard]] EnumerationReport enumerate_equilibria(const GameParams& params,
                                                     double epsilon = 1e-9,
                                                     unsigned threads = 0);

}  // namespace lqnet
