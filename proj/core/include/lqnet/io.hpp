#pragma once

#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "lqnet/simulation.hpp"

namespace lqnet {

/// Reads an INI document with sections [game], [treatment], [behavior] and
/// [run]. Keys are the field names of GameParams, TreatmentSpec,
/// EffortRuleParams and the run settings; unknown sections or keys are
/// ConfigErrors. In [behavior], `link_coeffs` names a coefficient preset
/// (defaults to the configured treatment) and the keys intercept, inertia,
/// received, inertia_x_received, own_effort, opp_effort and period override
/// single entries, given as odds ratios.
[[nodiscard]] SimConfig parse_config(std::istream& in);
[[nodiscard]] SimConfig load_config(const std::filesystem::path& path);

/// Writes a config that parse_config reads back to an equal SimConfig.
void write_config(std::ostream& out, const SimConfig& config);

inline constexpr const char* kHistoryHeader =
    "replication,group,period,agent,effort,links_initiated,degree,payoff,effort_benefit,"
    "effort_cost,link_cost_paid,link_benefit_received,rank";

/// One row per (replication, group, period, agent). Reals are written with
/// 17 significant digits so the file reads back bit-exactly.
void write_history_csv(std::ostream& out, std::span<const SimHistory> histories);

/// Inverse of write_history_csv. The number of players is inferred from the
/// agent column. Throws ConfigError on malformed input.
[[nodiscard]] std::vector<SimHistory> read_history_csv(std::istream& in);

}  // namespace lqnet
