#include "lqnet/agents.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "lqnet/equilibrium.hpp"
#include "lqnet/errors.hpp"

namespace lqnet {

std::string_view treatment_name(Treatment t) noexcept
{
    switch (t) {
    case Treatment::Baseline: return "baseline";
    case Treatment::LinkBenefit: return "link_benefit";
    case Treatment::Ranking: return "ranking";
    case Treatment::Interaction: return "interaction";
    }
    return "baseline";
}

Treatment parse_treatment(std::string_view name)
{
    for (auto t : {Treatment::Baseline, Treatment::LinkBenefit, Treatment::Ranking,
                   Treatment::Interaction})
        if (treatment_name(t) == name) return t;
    throw ConfigError("unknown treatment '" + std::string(name) + "'");
}

Treatment TreatmentSpec::kind() const noexcept
{
    if (link_benefit_on) return ranking_feedback_on ? Treatment::Interaction : Treatment::LinkBenefit;
    return ranking_feedback_on ? Treatment::Ranking : Treatment::Baseline;
}

TreatmentSpec TreatmentSpec::of(Treatment t) noexcept
{
    return {t == Treatment::LinkBenefit || t == Treatment::Interaction,
            t == Treatment::Ranking || t == Treatment::Interaction};
}

LinkLogitCoeffs LinkLogitCoeffs::from_odds_ratios(double intercept, double inertia,
                                                  double received, double inertia_x_received,
                                                  double own_effort, double opp_effort,
                                                  double period)
{
    return {std::log(intercept),  std::log(inertia),    std::log(received),
            std::log(inertia_x_received), std::log(own_effort), std::log(opp_effort),
            std::log(period)};
}

LinkLogitCoeffs LinkLogitCoeffs::preset(Treatment t)
{
    // Odds ratios: constant, initiated(t-1), received(t-1), interaction,
    // own effort(t-1), opponent effort(t-1), period.
    switch (t) {
    case Treatment::Baseline:
        return from_odds_ratios(0.103, 3.256, 0.440, 1.483, 0.949, 1.507, 1.001);
    case Treatment::LinkBenefit:
        return from_odds_ratios(0.159, 1.940, 0.913, 1.361, 0.929, 1.466, 0.995);
    case Treatment::Ranking:
        return from_odds_ratios(0.314, 2.233, 0.591, 1.456, 0.967, 1.359, 0.989);
    case Treatment::Interaction:
        return from_odds_ratios(0.359, 1.847, 0.840, 1.785, 1.036, 1.216, 0.997);
    }
    throw std::logic_error("unreachable treatment");
}

void EffortRuleParams::validate(double effort_max) const
{
    auto require = [](bool ok, const char* what) {
        if (!ok) throw ConfigError(std::string("invalid behavior parameter: ") + what);
    };
    require(adjust_rate >= 0.0 && adjust_rate <= 1.0, "adjust_rate must lie in [0, 1]");
    require(noise_sd >= 0.0 && std::isfinite(noise_sd), "noise_sd must be >= 0");
    require(rank_effort_drop >= 0.0 && std::isfinite(rank_effort_drop), "rank_effort_drop must be >= 0");
    require(rank_link_logit_drop >= 0.0 && std::isfinite(rank_link_logit_drop),
            "rank_link_logit_drop must be >= 0");
    require(initial_effort_low >= 0.0 && initial_effort_low <= initial_effort_high &&
                initial_effort_high <= effort_max,
            "initial effort support must satisfy 0 <= low <= high <= effort_max");
    require(initial_link_prob >= 0.0 && initial_link_prob <= 1.0,
            "initial_link_prob must lie in [0, 1]");
}

double logistic(double z) noexcept
{
    if (z >= 0.0) return 1.0 / (1.0 + std::exp(-z));
    const double e = std::exp(z);
    return e / (1.0 + e);
}

double link_logit(const LinkFeatures& f, const LinkLogitCoeffs& c) noexcept
{
    const double i = f.initiated_prev ? 1.0 : 0.0;
    const double r = f.received_prev ? 1.0 : 0.0;
    double z = c.intercept + c.own_effort * f.own_effort_prev + c.opp_effort * f.opp_effort_prev +
               c.period * f.period;
    // Indicator terms are added only when active so that an infinite
    // coefficient on an inactive regressor cannot produce inf * 0.
    if (i != 0.0) z += c.inertia;
    if (r != 0.0) z += c.received;
    if (i != 0.0 && r != 0.0) z += c.inertia_x_received;
    return z;
}

double link_choice_prob(const LinkFeatures& f, const LinkLogitCoeffs& c) noexcept
{
    return logistic(link_logit(f, c));
}

bool in_bottom_two(int rank, std::size_t n_players) noexcept
{
    return rank >= static_cast<int>(n_players) - 1;
}

std::vector<bool> decide_links(std::size_t agent, const PriorPeriod* prev, std::size_t period,
                               const TreatmentSpec& treatment, const GameParams& params,
                               const EffortRuleParams& rule, const LinkLogitCoeffs& coeffs,
                               RandomStream& rng)
{
    const std::size_t n = params.n_players;
    std::vector<bool> row(n, false);
    if (period <= 1 || prev == nullptr) {
        for (std::size_t j = 0; j < n; ++j) {
            if (j == agent) continue;
            row[j] = rng.uniform() < rule.initial_link_prob;
        }
        return row;
    }

    double shift = 0.0;
    if (treatment.link_benefit_on && treatment.ranking_feedback_on &&
        in_bottom_two(prev->ranks[agent], n))
        shift = -rule.rank_link_logit_drop;

    for (std::size_t j = 0; j < n; ++j) {
        if (j == agent) continue;
        LinkFeatures f;
        f.initiated_prev = prev->intentions(agent, j);
        f.received_prev = prev->intentions(j, agent);
        f.own_effort_prev = prev->efforts[agent];
        f.opp_effort_prev = prev->efforts[j];
        f.period = static_cast<double>(period);
        row[j] = rng.uniform() < logistic(link_logit(f, coeffs) + shift);
    }
    return row;
}

double decide_effort(std::size_t agent, const PriorPeriod* prev, std::size_t period,
                     const TreatmentSpec& treatment, const GameParams& params,
                     const EffortRuleParams& rule, RandomStream& rng)
{
    if (period <= 1 || prev == nullptr) {
        const double u = rng.uniform();
        return rule.initial_effort_low + (rule.initial_effort_high - rule.initial_effort_low) * u;
    }

    const double x_prev = prev->efforts[agent];
    const double target = best_response_effort(agent, prev->network, prev->efforts, params);
    double x = (1.0 - rule.adjust_rate) * x_prev + rule.adjust_rate * target;
    if (treatment.ranking_feedback_on && in_bottom_two(prev->ranks[agent], params.n_players))
        x -= rule.rank_effort_drop;
    if (rule.noise_sd > 0.0) x += rule.noise_sd * rng.normal();
    return std::clamp(x, 0.0, params.effort_max);
}

}  // namespace lqnet
