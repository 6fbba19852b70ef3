#include "lqnet/welfare.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <optional>

#include "lqnet/errors.hpp"
#include "lqnet/graph.hpp"
#include "linear.hpp"

namespace lqnet {

LinkIntentions default_initiation(const Network& g)
{
    const std::size_t n = g.size();
    LinkIntentions li(n);
    for (auto [i, j] : edge_slots(n)) {
        if (!g(i, j)) continue;
        const auto di = g.degree(i);
        const auto dj = g.degree(j);
        if (di != dj) {
            if (di < dj)
                li.set(i, j);
            else
                li.set(j, i);
            continue;
        }
        const std::size_t offset = (j + n - i) % n;  // i < j
        if (2 * offset <= n)
            li.set(i, j);
        else
            li.set(j, i);
    }
    return li;
}

EffortProfile efficient_effort(const Network& g, const GameParams& params,
                               const SolverOptions& options)
{
    const std::size_t n = g.size();
    if (n != params.n_players) throw DimensionMismatch("network size differs from n_players");
    if (params.beta <= params.comp * spectral_radius(g))
        throw ConcavityViolated("beta <= comp*lambda_max: total welfare is not concave in effort");

    const auto dim = static_cast<Eigen::Index>(n);
    Eigen::MatrixXd m = 2.0 * params.beta * Eigen::MatrixXd::Identity(dim, dim);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (g(i, j))
                m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = -2.0 * params.comp;
    const Eigen::VectorXd solution =
        detail::solve_refined(m, Eigen::VectorXd::Constant(dim, params.alpha));

    EffortProfile x(solution.data(), solution.data() + n);
    if (std::all_of(x.begin(), x.end(),
                    [&](double v) { return v >= 0.0 && v <= params.effort_max; }))
        return x;

    // Coordinate ascent on the concave welfare restricted to the box.
    std::fill(x.begin(), x.end(), 0.0);
    for (std::size_t it = 0; it < options.max_iterations; ++it) {
        double change = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            double s = 0.0;
            for (std::size_t k = 0; k < n; ++k)
                if (g(i, k)) s += x[k];
            const double next = std::clamp(
                (params.alpha + 2.0 * params.comp * s) / (2.0 * params.beta), 0.0, params.effort_max);
            change = std::max(change, std::abs(next - x[i]));
            x[i] = next;
        }
        if (change < options.tolerance) return x;
    }
    throw NonConvergence("bounded welfare iteration did not converge");
}

WelfareResult welfare(const LinkIntentions& intentions, std::span<const double> efforts,
                      const GameParams& params)
{
    GameParams net = params;
    net.link_benefit = 0.0;
    const auto outcome = evaluate_round(efforts, intentions, net);

    WelfareResult r;
    r.network = realize_network(intentions);
    r.efforts.assign(efforts.begin(), efforts.end());
    r.intentions = intentions;
    r.per_player_payoffs = outcome.payoffs();
    for (double p : r.per_player_payoffs) r.total_welfare += p;
    r.experimenter_transfers =
        params.link_benefit * static_cast<double>(intentions.total_initiations());
    r.gross_welfare = r.total_welfare + r.experimenter_transfers;
    return r;
}

WelfareResult welfare(const Network& g, std::span<const double> efforts, const GameParams& params)
{
    return welfare(default_initiation(g), efforts, params);
}

WelfareResult optimize_welfare(const GameParams& params)
{
    params.validate();
    if (params.n_players > 6) throw EnumerationGuard("optimize_welfare supports at most 6 players");

    std::optional<WelfareResult> best;
    for (const auto& g : nonisomorphic_networks(params.n_players)) {
        EffortProfile x;
        try {
            x = efficient_effort(g, params);
        } catch (const ConcavityViolated&) {
            continue;
        }
        auto candidate = welfare(g, x, params);
        // Candidates arrive in canonical-code order, so only strictly better
        // welfare or fewer edges at equal welfare replaces the incumbent.
        if (!best) {
            best = std::move(candidate);
            continue;
        }
        const double diff = candidate.total_welfare - best->total_welfare;
        const double tol = 1e-9 * std::max(1.0, std::abs(best->total_welfare));
        if (diff > tol ||
            (std::abs(diff) <= tol && candidate.network.edge_count() < best->network.edge_count()))
            best = std::move(candidate);
    }
    if (!best) throw ConcavityViolated("no network satisfies the concavity condition");
    return *best;
}

std::vector<BenchmarkRow> benchmark_table(const GameParams& params)
{
    params.validate();
    const std::size_t n = params.n_players;
    GameParams net = params;
    net.link_benefit = 0.0;

    auto pick = [](const std::vector<double>& v, bool star) {
        return star ? std::vector<double>{v[0], v[1]} : std::vector<double>{v[0]};
    };

    std::vector<BenchmarkRow> rows;
    for (const auto& g : {Network::empty(n), Network::star(n, 0), Network::complete(n)}) {
        const auto cls = classify_network(g);
        const bool star = cls.kind == NetworkClass::Kind::Star;
        const auto li = default_initiation(g);

        BenchmarkRow row;
        row.network_class = cls;
        const auto eq = equilibrium_effort(g, params);
        row.equilibrium_efforts = pick(eq, star);
        row.equilibrium_payoffs = pick(evaluate_round(eq, li, net).payoffs(), star);
        const auto eff = efficient_effort(g, params);
        row.efficient_efforts = pick(eff, star);
        row.efficient_payoffs = pick(welfare(li, eff, params).per_player_payoffs, star);
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace lqnet
