#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace lqnet {

/// Coefficients of the linear-quadratic payoff
///   pi_i = alpha x_i - beta x_i^2 + comp x_i sum_{k in N_i} x_k
///          - link_cost * (links initiated) + link_benefit * (links received).
///
/// With beta = 2 the isolated-player effort is alpha / (2 beta) = 2.5 and the
/// star and complete benchmarks come out at 3.65 / 2.86 and 4.17.
struct GameParams {
    std::size_t n_players = 5;
    double alpha = 10.0;
    double beta = 2.0;
    double comp = 0.4;
    double link_cost = 3.9;
    double link_benefit = 0.0;
    double effort_max = 20.0;

    /// Throws ConfigError when a coefficient is outside its domain.
    void validate() const;

    friend bool operator==(const GameParams&, const GameParams&) = default;
};

/// Square boolean matrix with value semantics; the storage behind both the
/// directed intention matrix and the undirected adjacency matrix.
class BoolMatrix {
public:
    BoolMatrix() = default;
    explicit BoolMatrix(std::size_t n) : n_(n), cells_(n * n, 0) {}

    [[nodiscard]] std::size_t size() const noexcept { return n_; }
    [[nodiscard]] bool operator()(std::size_t i, std::size_t j) const { return cells_[i * n_ + j] != 0; }
    void set(std::size_t i, std::size_t j, bool v = true) { cells_[i * n_ + j] = v ? 1 : 0; }

    [[nodiscard]] BoolMatrix transposed() const;
    [[nodiscard]] std::size_t count() const noexcept;
    [[nodiscard]] std::size_t row_count(std::size_t i) const;
    [[nodiscard]] std::size_t col_count(std::size_t j) const;

    friend bool operator==(const BoolMatrix&, const BoolMatrix&) = default;

private:
    std::size_t n_ = 0;
    std::vector<std::uint8_t> cells_;
};

/// Directed initiation choices: (i, j) set iff player i initiates a link to j.
class LinkIntentions {
public:
    LinkIntentions() = default;
    explicit LinkIntentions(std::size_t n) : m_(n) {}

    [[nodiscard]] std::size_t size() const noexcept { return m_.size(); }
    [[nodiscard]] bool operator()(std::size_t i, std::size_t j) const { return m_(i, j); }
    /// Setting a diagonal entry throws std::invalid_argument.
    void set(std::size_t i, std::size_t j, bool v = true);

    /// Number of links player i initiates.
    [[nodiscard]] std::size_t initiated(std::size_t i) const { return m_.row_count(i); }
    /// Number of links player i receives.
    [[nodiscard]] std::size_t received(std::size_t i) const { return m_.col_count(i); }
    [[nodiscard]] std::size_t total_initiations() const noexcept { return m_.count(); }

    [[nodiscard]] LinkIntentions transposed() const;
    [[nodiscard]] const BoolMatrix& matrix() const noexcept { return m_; }

    friend bool operator==(const LinkIntentions&, const LinkIntentions&) = default;

private:
    BoolMatrix m_;
};

/// Undirected, loop-free network.
class Network {
public:
    Network() = default;
    explicit Network(std::size_t n) : m_(n) {}

    [[nodiscard]] std::size_t size() const noexcept { return m_.size(); }
    [[nodiscard]] bool operator()(std::size_t i, std::size_t j) const { return m_(i, j); }
    /// Sets or clears the undirected edge {i, j}; i == j throws std::invalid_argument.
    void set_edge(std::size_t i, std::size_t j, bool v = true);

    [[nodiscard]] std::size_t degree(std::size_t i) const { return m_.row_count(i); }
    [[nodiscard]] std::size_t edge_count() const noexcept { return m_.count() / 2; }
    [[nodiscard]] std::vector<std::size_t> neighbors(std::size_t i) const;
    [[nodiscard]] const BoolMatrix& matrix() const noexcept { return m_; }

    static Network empty(std::size_t n) { return Network(n); }
    static Network complete(std::size_t n);
    /// Star with the given center.
    static Network star(std::size_t n, std::size_t center = 0);
    /// Path 0 - 1 - ... - (n-1).
    static Network path(std::size_t n);

    friend bool operator==(const Network&, const Network&) = default;

private:
    BoolMatrix m_;
};

using EffortProfile = std::vector<double>;

/// One player's payoff and its four additive components.
struct PayoffBreakdown {
    double effort_benefit = 0.0;  ///< alpha x_i + comp x_i sum_{k in N_i} x_k
    double effort_cost = 0.0;     ///< beta x_i^2
    double link_cost_paid = 0.0;
    double link_benefit_received = 0.0;
    double total = 0.0;

    friend bool operator==(const PayoffBreakdown&, const PayoffBreakdown&) = default;
};

struct RoundOutcome {
    std::vector<PayoffBreakdown> players;
    std::vector<int> ranks;

    [[nodiscard]] std::vector<double> payoffs() const;

    friend bool operator==(const RoundOutcome&, const RoundOutcome&) = default;
};

/// Realized network: {i, j} present iff i or j initiates.
[[nodiscard]] Network realize_network(const LinkIntentions& intentions);

/// Payoff of `player` given everybody's efforts and intentions.
/// Throws DimensionMismatch when the shapes disagree with params.n_players.
[[nodiscard]] PayoffBreakdown payoff(std::size_t player, std::span<const double> efforts,
                                     const LinkIntentions& intentions, const GameParams& params);

/// Payoffs and competition ranks of every player.
[[nodiscard]] RoundOutcome evaluate_round(std::span<const double> efforts,
                                          const LinkIntentions& intentions,
                                          const GameParams& params);

/// Payoff change to i from adding the link i-j with efforts held fixed.
[[nodiscard]] double link_gain(double x_i, double x_j, bool initiator, const GameParams& params);

/// Competition ranking, 1 = highest payoff; tied players share the best rank
/// and the following rank is skipped ({10, 10, 5} -> {1, 1, 3}).
[[nodiscard]] std::vector<int> rank_players(std::span<const double> payoffs);

}  // namespace lqnet
