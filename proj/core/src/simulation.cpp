#include "lqnet/simulation.hpp"

#include <numeric>

#include "lqnet/errors.hpp"
#include "parallel.hpp"

namespace lqnet {

SimConfig SimConfig::for_treatment(Treatment t)
{
    SimConfig c;
    c.treatment = TreatmentSpec::of(t);
    c.coeffs = LinkLogitCoeffs::preset(t);
    c.game.link_benefit = c.treatment.link_benefit_on ? kTreatmentLinkBenefit : 0.0;
    return c;
}

void SimConfig::validate() const
{
    game.validate();
    behavior.validate(game.effort_max);
    if (rounds < 1) throw ConfigError("rounds must be >= 1");
    if (groups < 1) throw ConfigError("groups must be >= 1");
    if (replications < 1) throw ConfigError("replications must be >= 1");
    if (treatment.link_benefit_on && game.link_benefit != kTreatmentLinkBenefit)
        throw ConfigError("link_benefit must be 6 when link_benefit_on is true");
    if (!treatment.link_benefit_on && game.link_benefit != 0.0)
        throw ConfigError("link_benefit must be 0 when link_benefit_on is false");
}

PeriodRecord run_round(const PeriodRecord* prev, std::size_t period, const SimConfig& config,
                       const GroupStreams& streams, std::span<const std::size_t> agent_order)
{
    const std::size_t n = config.game.n_players;
    std::vector<std::size_t> default_order;
    if (agent_order.empty()) {
        default_order.resize(n);
        std::iota(default_order.begin(), default_order.end(), std::size_t{0});
        agent_order = default_order;
    }
    if (agent_order.size() != n) throw DimensionMismatch("agent_order must list every agent once");

    std::optional<PriorPeriod> view;
    if (prev != nullptr)
        view.emplace(PriorPeriod{prev->intentions, prev->network, prev->efforts,
                                 prev->feedback_ranks});
    const PriorPeriod* seen = view ? &*view : nullptr;

    auto key = [&](std::size_t agent, StreamPurpose purpose) {
        return StreamKey{streams.master_seed, streams.replication, streams.group, period, agent,
                         purpose};
    };

    PeriodRecord rec;
    rec.period = period;
    rec.intentions = LinkIntentions(n);
    rec.efforts.assign(n, 0.0);
    for (std::size_t agent : agent_order) {
        RandomStream link_rng(key(agent, StreamPurpose::Links));
        const auto row = decide_links(agent, seen, period, config.treatment, config.game,
                                      config.behavior, config.coeffs, link_rng);
        for (std::size_t j = 0; j < n; ++j)
            if (row[j]) rec.intentions.set(agent, j);

        RandomStream effort_rng(key(agent, StreamPurpose::Effort));
        rec.efforts[agent] = decide_effort(agent, seen, period, config.treatment, config.game,
                                           config.behavior, effort_rng);
    }

    rec.network = realize_network(rec.intentions);
    rec.outcome = evaluate_round(rec.efforts, rec.intentions, config.game);
    rec.cumulative_payoffs = rec.outcome.payoffs();
    if (prev != nullptr)
        for (std::size_t i = 0; i < n; ++i) rec.cumulative_payoffs[i] += prev->cumulative_payoffs[i];
    rec.feedback_ranks = config.rank_basis == RankBasis::Cumulative
                             ? rank_players(rec.cumulative_payoffs)
                             : rec.outcome.ranks;
    return rec;
}

GroupHistory run_group(const SimConfig& config, const GroupStreams& streams)
{
    GroupHistory h;
    h.group = streams.group;
    h.periods.reserve(config.rounds);
    for (std::size_t t = 1; t <= config.rounds; ++t)
        h.periods.push_back(run_round(h.periods.empty() ? nullptr : &h.periods.back(), t, config,
                                      streams));
    return h;
}

SimHistory run_session(const SimConfig& config, std::size_t replication, unsigned threads)
{
    config.validate();
    SimHistory out;
    out.replication = replication;
    out.groups.resize(config.groups);
    detail::parallel_for(
        config.groups,
        [&](std::size_t g) {
            out.groups[g] = run_group(config, {config.master_seed, replication, g});
        },
        threads);
    return out;
}

std::vector<SimHistory> run_batch(const SimConfig& config, std::size_t replications,
                                  unsigned threads)
{
    config.validate();
    if (replications < 1) throw ConfigError("replications must be >= 1");
    std::vector<SimHistory> out(replications);
    for (std::size_t r = 0; r < replications; ++r) {
        out[r].replication = r;
        out[r].groups.resize(config.groups);
    }
    detail::parallel_for(
        replications * config.groups,
        [&](std::size_t job) {
            const std::size_t r = job / config.groups;
            const std::size_t g = job % config.groups;
            out[r].groups[g] = run_group(config, {config.master_seed, r, g});
        },
        threads);
    return out;
}

}  // namespace lqnet
