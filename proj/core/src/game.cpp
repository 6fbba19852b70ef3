#include "lqnet/game.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

#include "lqnet/errors.hpp"

namespace lqnet {

void GameParams::validate() const
{
    auto require = [](bool ok, const char* what) {
        if (!ok) throw ConfigError(std::string("invalid game parameter: ") + what);
    };
    require(n_players >= 2, "n_players must be >= 2");
    require(std::isfinite(alpha) && alpha > 0.0, "alpha must be > 0");
    require(std::isfinite(beta) && beta > 0.0, "beta must be > 0");
    require(std::isfinite(comp) && comp >= 0.0, "comp must be >= 0");
    require(std::isfinite(link_cost) && link_cost >= 0.0, "link_cost must be >= 0");
    require(std::isfinite(link_benefit) && link_benefit >= 0.0, "link_benefit must be >= 0");
    require(std::isfinite(effort_max) && effort_max > 0.0, "effort_max must be > 0");
}

BoolMatrix BoolMatrix::transposed() const
{
    BoolMatrix t(n_);
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j) t.set(j, i, (*this)(i, j));
    return t;
}

std::size_t BoolMatrix::count() const noexcept
{
    return static_cast<std::size_t>(std::count(cells_.begin(), cells_.end(), std::uint8_t{1}));
}

std::size_t BoolMatrix::row_count(std::size_t i) const
{
    std::size_t c = 0;
    for (std::size_t j = 0; j < n_; ++j) c += (*this)(i, j);
    return c;
}

std::size_t BoolMatrix::col_count(std::size_t j) const
{
    std::size_t c = 0;
    for (std::size_t i = 0; i < n_; ++i) c += (*this)(i, j);
    return c;
}

void LinkIntentions::set(std::size_t i, std::size_t j, bool v)
{
    if (i == j) throw std::invalid_argument("self-links are not allowed");
    m_.set(i, j, v);
}

LinkIntentions LinkIntentions::transposed() const
{
    LinkIntentions t(size());
    t.m_ = m_.transposed();
    return t;
}

void Network::set_edge(std::size_t i, std::size_t j, bool v)
{
    if (i == j) throw std::invalid_argument("self-links are not allowed");
    m_.set(i, j, v);
    m_.set(j, i, v);
}

std::vector<std::size_t> Network::neighbors(std::size_t i) const
{
    std::vector<std::size_t> out;
    for (std::size_t j = 0; j < size(); ++j)
        if (m_(i, j)) out.push_back(j);
    return out;
}

Network Network::complete(std::size_t n)
{
    Network g(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) g.set_edge(i, j);
    return g;
}

Network Network::star(std::size_t n, std::size_t center)
{
    Network g(n);
    for (std::size_t j = 0; j < n; ++j)
        if (j != center) g.set_edge(center, j);
    return g;
}

Network Network::path(std::size_t n)
{
    Network g(n);
    for (std::size_t i = 0; i + 1 < n; ++i) g.set_edge(i, i + 1);
    return g;
}

std::vector<double> RoundOutcome::payoffs() const
{
    std::vector<double> out;
    out.reserve(players.size());
    for (const auto& p : players) out.push_back(p.total);
    return out;
}

Network realize_network(const LinkIntentions& intentions)
{
    const std::size_t n = intentions.size();
    Network g(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (intentions(i, j) || intentions(j, i)) g.set_edge(i, j);
    return g;
}

namespace {

void check_shapes(std::span<const double> efforts, const LinkIntentions& intentions,
                  const GameParams& params)
{
    if (efforts.size() != params.n_players || intentions.size() != params.n_players)
        throw DimensionMismatch("efforts (" + std::to_string(efforts.size()) + "), intentions (" +
                                std::to_string(intentions.size()) + ") and n_players (" +
                                std::to_string(params.n_players) + ") disagree");
}

PayoffBreakdown payoff_unchecked(std::size_t i, std::span<const double> x,
                                 const LinkIntentions& intentions, const GameParams& params)
{
    double neighbor_sum = 0.0;
    for (std::size_t k = 0; k < x.size(); ++k)
        if (k != i && (intentions(i, k) || intentions(k, i))) neighbor_sum += x[k];

    PayoffBreakdown b;
    b.effort_benefit = params.alpha * x[i] + params.comp * x[i] * neighbor_sum;
    b.effort_cost = params.beta * x[i] * x[i];
    b.link_cost_paid = params.link_cost * static_cast<double>(intentions.initiated(i));
    b.link_benefit_received = params.link_benefit * static_cast<double>(intentions.received(i));
    b.total = b.effort_benefit - b.effort_cost - b.link_cost_paid + b.link_benefit_received;
    return b;
}

}  // namespace

PayoffBreakdown payoff(std::size_t player, std::span<const double> efforts,
                       const LinkIntentions& intentions, const GameParams& params)
{
    check_shapes(efforts, intentions, params);
    if (player >= params.n_players) throw DimensionMismatch("player index out of range");
    return payoff_unchecked(player, efforts, intentions, params);
}

RoundOutcome evaluate_round(std::span<const double> efforts, const LinkIntentions& intentions,
                            const GameParams& params)
{
    check_shapes(efforts, intentions, params);
    RoundOutcome out;
    out.players.reserve(params.n_players);
    for (std::size_t i = 0; i < params.n_players; ++i)
        out.players.push_back(payoff_unchecked(i, efforts, intentions, params));
    out.ranks = rank_players(out.payoffs());
    return out;
}

double link_gain(double x_i, double x_j, bool initiator, const GameParams& params)
{
    return params.comp * x_i * x_j - (initiator ? params.link_cost : 0.0);
}

std::vector<int> rank_players(std::span<const double> payoffs)
{
    std::vector<int> ranks(payoffs.size());
    for (std::size_t i = 0; i < payoffs.size(); ++i) {
        int better = 0;
        for (double other : payoffs)
            if (other > payoffs[i]) ++better;
        ranks[i] = better + 1;
    }
    return ranks;
}

}  // namespace lqnet
