#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <utility>
#include <vector>

#include "lqnet/game.hpp"

namespace lqnet {

/// Largest eigenvalue of the (symmetric) adjacency matrix.
[[nodiscard]] double spectral_radius(const Network& g);

/// Unordered pairs (i < j) in row-major order; bit k of an edge mask refers to slot k.
[[nodiscard]] std::vector<std::pair<std::size_t, std::size_t>> edge_slots(std::size_t n);

[[nodiscard]] Network network_from_mask(std::size_t n, std::uint64_t mask);
[[nodiscard]] std::uint64_t network_mask(const Network& g);

/// Isomorphism-invariant code of an undirected network: the smallest edge mask
/// over all relabelings that list nodes in non-increasing degree order.
/// Supports n <= 8.
[[nodiscard]] std::uint64_t canonical_code(const Network& g);

/// Isomorphism-invariant code of a directed intention matrix (smallest
/// row-major bit encoding over all relabelings). Supports n <= 8.
[[nodiscard]] std::uint64_t canonical_code(const LinkIntentions& g);

/// One representative (the canonical relabeling) per isomorphism class,
/// ordered by canonical code. Supports n <= 6.
[[nodiscard]] std::vector<Network> nonisomorphic_networks(std::size_t n);

/// Parses "empty", "star", "complete" or an edge list "0-1,0-2,...".
/// Throws ConfigError on malformed input.
[[nodiscard]] Network parse_network(std::string_view spec, std::size_t n);

[[nodiscard]] std::string format_edges(const Network& g);

}  // namespace lqnet
