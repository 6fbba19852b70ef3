#include "lqnet/equilibrium.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <limits>
#include <span>
#include <map>
#include <tuple>

#include "lqnet/errors.hpp"
#include "lqnet/graph.hpp"
#include "linear.hpp"
#include "parallel.hpp"

namespace lqnet {

std::string NetworkClass::label() const
{
    switch (kind) {
    case Kind::Empty: return "Empty";
    case Kind::Star: return "Star";
    case Kind::Complete: return "Complete";
    case Kind::CorePeriphery: return "CorePeriphery(" + std::to_string(core_size) + ")";
    case Kind::Other: return "Other";
    }
    return "Other";
}

NetworkClass classify_network(const Network& g)
{
    const std::size_t n = g.size();
    const std::size_t edges = g.edge_count();
    if (edges == 0) return {NetworkClass::Kind::Empty, 0};
    if (edges == n * (n - 1) / 2) return {NetworkClass::Kind::Complete, n};

    // A core-periphery network is a complete split graph: the core is exactly
    // the set of universal nodes and every other node touches only the core.
    std::size_t core = 0;
    for (std::size_t i = 0; i < n; ++i) core += g.degree(i) == n - 1;
    if (core == 0) return {NetworkClass::Kind::Other, 0};
    for (std::size_t i = 0; i < n; ++i) {
        const auto d = g.degree(i);
        if (d != n - 1 && d != core) return {NetworkClass::Kind::Other, 0};
    }
    if (core == 1) return {NetworkClass::Kind::Star, 1};
    return {NetworkClass::Kind::CorePeriphery, core};
}

namespace {

double neighbor_sum(std::size_t i, const Network& g, std::span<const double> x)
{
    double s = 0.0;
    for (std::size_t k = 0; k < g.size(); ++k)
        if (g(i, k)) s += x[k];
    return s;
}

double clamp_effort(double x, const GameParams& p) { return std::clamp(x, 0.0, p.effort_max); }

}  // namespace

double best_response_effort(std::size_t player, const Network& g, std::span<const double> efforts,
                            const GameParams& params)
{
    if (efforts.size() != g.size() || player >= g.size())
        throw DimensionMismatch("best_response_effort: effort vector does not match network");
    return clamp_effort((params.alpha + params.comp * neighbor_sum(player, g, efforts)) /
                            (2.0 * params.beta),
                        params);
}

EffortProfile equilibrium_effort(const Network& g, const GameParams& params,
                                 const SolverOptions& options)
{
    const std::size_t n = g.size();
    if (n != params.n_players) throw DimensionMismatch("network size differs from n_players");

    const double lambda = spectral_radius(g);
    if (2.0 * params.beta <= params.comp * lambda)
        throw SpectralConditionViolated("2*beta <= comp*lambda_max: no unique interior effort equilibrium");

    const auto dim = static_cast<Eigen::Index>(n);
    Eigen::MatrixXd m = 2.0 * params.beta * Eigen::MatrixXd::Identity(dim, dim);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (g(i, j)) m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = -params.comp;
    const Eigen::VectorXd rhs = Eigen::VectorXd::Constant(dim, params.alpha);
    const Eigen::VectorXd solution = detail::solve_refined(m, rhs);

    EffortProfile x(solution.data(), solution.data() + n);
    const bool interior = std::all_of(x.begin(), x.end(), [&](double v) {
        return v >= 0.0 && v <= params.effort_max;
    });
    if (interior) return x;

    // Projected Gauss-Seidel on the bounded best-response map.
    std::fill(x.begin(), x.end(), 0.0);
    for (std::size_t it = 0; it < options.max_iterations; ++it) {
        double change = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            const double next = best_response_effort(i, g, x, params);
            change = std::max(change, std::abs(next - x[i]));
            x[i] = next;
        }
        if (change < options.tolerance) return x;
    }
    throw NonConvergence("bounded best-response iteration did not converge");
}

NashCheck is_nash(const LinkIntentions& intentions, std::span<const double> efforts,
                  const GameParams& params, double epsilon)
{
    const std::size_t n = params.n_players;
    if (intentions.size() != n || efforts.size() != n)
        throw DimensionMismatch("is_nash: shapes disagree with n_players");

    NashCheck result;
    result.max_deviation_gain = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < n; ++i) {
        const double current = payoff(i, efforts, intentions, params).total;
        const double received_benefit =
            params.link_benefit * static_cast<double>(intentions.received(i));

        // Bit b of `row` refers to the b-th opponent of i in index order.
        const std::size_t rows = std::size_t{1} << (n - 1);
        for (std::size_t row = 0; row < rows; ++row) {
            double s = 0.0;
            std::size_t initiated = 0;
            for (std::size_t k = 0, b = 0; k < n; ++k) {
                if (k == i) continue;
                const bool own = (row >> b++) & 1u;
                initiated += own;
                if (own || intentions(k, i)) s += efforts[k];
            }
            const double x =
                clamp_effort((params.alpha + params.comp * s) / (2.0 * params.beta), params);
            const double value = params.alpha * x - params.beta * x * x + params.comp * x * s -
                                 params.link_cost * static_cast<double>(initiated) +
                                 received_benefit;
            const double gain = value - current;
            if (gain > result.max_deviation_gain) {
                result.max_deviation_gain = gain;
                result.best_deviator = i;
            }
        }
    }
    result.is_equilibrium = result.max_deviation_gain <= epsilon;
    return result;
}

namespace {

int class_order(const NetworkClass& c)
{
    return static_cast<int>(c.kind) * 16 + static_cast<int>(c.core_size);
}

}  // namespace

EnumerationReport enumerate_equilibria(const GameParams& params, double epsilon, unsigned threads)
{
    params.validate();
    const std::size_t n = params.n_players;
    if (n > 6) throw EnumerationGuard("enumerate_equilibria supports at most 6 players");

    const auto slots = edge_slots(n);
    const std::uint64_t network_count = std::uint64_t{1} << slots.size();

    struct PerNetwork {
        std::vector<EquilibriumCertificate> found;
        std::size_t profiles = 0;
        bool skipped = false;
    };
    std::vector<PerNetwork> per_network(network_count);

    detail::parallel_for(
        network_count,
        [&](std::size_t mask) {
            auto& out = per_network[mask];
            const Network g = network_from_mask(n, mask);
            EffortProfile x;
            try {
                x = equilibrium_effort(g, params);
            } catch (const SpectralConditionViolated&) {
                out.skipped = true;
                return;
            }
            std::vector<std::pair<std::size_t, std::size_t>> edges;
            for (auto e : slots)
                if (g(e.first, e.second)) edges.push_back(e);

            const std::uint64_t assignments = std::uint64_t{1} << edges.size();
            out.profiles = assignments;
            for (std::uint64_t orient = 0; orient < assignments; ++orient) {
                LinkIntentions li(n);
                for (std::size_t e = 0; e < edges.size(); ++e) {
                    auto [a, b] = edges[e];
                    if ((orient >> e) & 1u)
                        li.set(b, a);
                    else
                        li.set(a, b);
                }
                const auto check = is_nash(li, x, params, epsilon);
                if (!check.is_equilibrium) continue;
                EquilibriumCertificate cert;
                cert.intentions = std::move(li);
                cert.efforts = x;
                cert.network_class = classify_network(g);
                cert.max_deviation_gain = check.max_deviation_gain;
                cert.network_code = canonical_code(g);
                cert.labeled_profiles = 1;
                out.found.push_back(std::move(cert));
            }
        },
        threads);

    EnumerationReport report;
    report.networks_scanned = network_count;
    std::map<std::uint64_t, EquilibriumCertificate> by_pattern;
    for (auto& pn : per_network) {
        report.profiles_scanned += pn.profiles;
        report.networks_skipped += pn.skipped;
        for (auto& cert : pn.found) {
            cert.pattern_code = canonical_code(cert.intentions);
            auto [it, inserted] = by_pattern.try_emplace(cert.pattern_code, cert);
            if (!inserted) {
                ++it->second.labeled_profiles;
                it->second.max_deviation_gain =
                    std::max(it->second.max_deviation_gain, cert.max_deviation_gain);
            }
        }
    }
    for (auto& [code, cert] : by_pattern) report.certificates.push_back(std::move(cert));
    std::sort(report.certificates.begin(), report.certificates.end(),
              [](const auto& a, const auto& b) {
                  return std::tuple(class_order(a.network_class), a.network_code, a.pattern_code) <
                         std::tuple(class_order(b.network_class), b.network_code, b.pattern_code);
              });
    return report;
}

}  // namespace lqnet
