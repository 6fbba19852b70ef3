#pragma once

#include <cstddef>
#include <random>
#include <vector>

#include "lqnet/game.hpp"
#include "lqnet/simulation.hpp"

namespace lqnet::testing {

/// Period record built directly from intentions and efforts.
inline PeriodRecord make_record(std::size_t period, const LinkIntentions& li,
                                const std::vector<double>& x, const GameParams& p)
{
    PeriodRecord rec;
    rec.period = period;
    rec.intentions = li;
    rec.network = realize_network(li);
    rec.efforts = x;
    rec.outcome = evaluate_round(x, li, p);
    rec.cumulative_payoffs = rec.outcome.payoffs();
    rec.feedback_ranks = rec.outcome.ranks;
    return rec;
}

/// Intentions in which the lower-indexed endpoint initiates every edge of g
/// (both endpoints when `reciprocate`).
inline LinkIntentions one_sided(const Network& g, bool reciprocate = false)
{
    LinkIntentions li(g.size());
    for (std::size_t i = 0; i < g.size(); ++i)
        for (std::size_t j = i + 1; j < g.size(); ++j)
            if (g(i, j)) {
                li.set(i, j);
                if (reciprocate) li.set(j, i);
            }
    return li;
}

inline GroupHistory repeated(const Network& g, std::size_t periods, const GameParams& p,
                             bool reciprocate = false, double effort = 3.0)
{
    GroupHistory h;
    const auto li = one_sided(g, reciprocate);
    for (std::size_t t = 1; t <= periods; ++t)
        h.periods.push_back(make_record(t, li, std::vector<double>(g.size(), effort), p));
    return h;
}

inline LinkIntentions random_intentions(std::size_t n, std::mt19937_64& rng, double density = 0.4)
{
    std::bernoulli_distribution coin(density);
    LinkIntentions li(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (i != j && coin(rng)) li.set(i, j);
    return li;
}

inline std::vector<double> random_efforts(std::size_t n, std::mt19937_64& rng, double hi = 20.0)
{
    std::uniform_real_distribution<double> u(0.0, hi);
    std::vector<double> x(n);
    for (auto& v : x) v = u(rng);
    return x;
}

}  // namespace lqnet::testing
