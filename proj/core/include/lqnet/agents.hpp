#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lqnet/game.hpp"
#include "lqnet/rng.hpp"

namespace lqnet {

enum class Treatment { Baseline, LinkBenefit, Ranking, Interaction };

[[nodiscard]] std::string_view treatment_name(Treatment t) noexcept;
/// Accepts "baseline", "link_benefit", "ranking", "interaction".
[[nodiscard]] Treatment parse_treatment(std::string_view name);

/// The 2x2 design: benefits for incoming links x payoff-rank feedback.
struct TreatmentSpec {
    bool link_benefit_on = false;
    bool ranking_feedback_on = false;

    [[nodiscard]] Treatment kind() const noexcept;
    [[nodiscard]] static TreatmentSpec of(Treatment t) noexcept;
    friend bool operator==(const TreatmentSpec&, const TreatmentSpec&) = default;
};

/// Link-level logit of initiating i -> j in period t, in log-odds units.
struct LinkLogitCoeffs {
    double intercept = 0.0;
    double inertia = 0.0;             ///< i initiated i -> j at t-1
    double received = 0.0;            ///< j initiated j -> i at t-1
    double inertia_x_received = 0.0;  ///< both of the above
    double own_effort = 0.0;          ///< per unit of x_i(t-1)
    double opp_effort = 0.0;          ///< per unit of x_j(t-1)
    double period = 0.0;              ///< per period

    /// Builds coefficients from odds ratios (each stored as its natural log).
    [[nodiscard]] static LinkLogitCoeffs from_odds_ratios(double intercept, double inertia,
                                                          double received,
                                                          double inertia_x_received,
                                                          double own_effort, double opp_effort,
                                                          double period);

    /// Estimated odds ratios of the link-formation logit for one treatment.
    [[nodiscard]] static LinkLogitCoeffs preset(Treatment t);

    friend bool operator==(const LinkLogitCoeffs&, const LinkLogitCoeffs&) = default;
};

/// Partial-adjustment effort rule with rank responses.
struct EffortRuleParams {
    double adjust_rate = 0.25;           ///< lambda in [0, 1]
    double noise_sd = 0.5;               ///< sigma >= 0, effort units
    double rank_effort_drop = 0.3;       ///< delta >= 0, bottom-2 ranks under rank feedback
    double rank_link_logit_drop = 0.25;  ///< log-odds penalty, bottom-2 ranks, Interaction only
    double initial_effort_low = 3.0;
    double initial_effort_high = 8.0;
    double initial_link_prob = 0.5;      ///< p0, period 1

    /// Throws ConfigError when a field is out of range for the given effort bound.
    void validate(double effort_max) const;

    friend bool operator==(const EffortRuleParams&, const EffortRuleParams&) = default;
};

struct LinkFeatures {
    bool initiated_prev = false;
    bool received_prev = false;
    double own_effort_prev = 0.0;
    double opp_effort_prev = 0.0;
    double period = 0.0;
};

[[nodiscard]] double logistic(double z) noexcept;
[[nodiscard]] double link_logit(const LinkFeatures& f, const LinkLogitCoeffs& c) noexcept;
[[nodiscard]] double link_choice_prob(const LinkFeatures& f, const LinkLogitCoeffs& c) noexcept;

/// Read-only view of what agents observed at the end of period t-1.
struct PriorPeriod {
    const LinkIntentions& intentions;
    const Network& network;
    std::span<const double> efforts;
    std::span<const int> ranks;
};

/// True for the two lowest ranks (4th and 5th in a group of five).
[[nodiscard]] bool in_bottom_two(int rank, std::size_t n_players) noexcept;

/// Intention row of `agent` for `period` (1-based). `prev` must be non-null
/// for period >= 2. Consumes exactly one uniform per opponent, in index order.
[[nodiscard]] std::vector<bool> decide_links(std::size_t agent, const PriorPeriod* prev,
                                             std::size_t period, const TreatmentSpec& treatment,
                                             const GameParams& params,
                                             const EffortRuleParams& rule,
                                             const LinkLogitCoeffs& coeffs, RandomStream& rng);

/// Effort of `agent` for `period`: uniform initial draw in period 1, then
/// clamp((1 - lambda) x_prev + lambda BR - delta [ranked bottom-2 with feedback] + N(0, sigma)).
[[nodiscard]] double decide_effort(std::size_t agent, const PriorPeriod* prev, std::size_t period,
                                   const TreatmentSpec& treatment, const GameParams& params,
                                   const EffortRuleParams& rule, RandomStream& rng);

}  // namespace lqnet
