#include "lqnet/analysis.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "lqnet/equilibrium.hpp"
#include "lqnet/errors.hpp"

namespace lqnet {

Window Window::parse(std::string_view text)
{
    if (text == "all") return all();
    if (text.starts_with("last")) {
        std::size_t k = 0;
        const auto digits = text.substr(4);
        auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), k);
        if (ec == std::errc{} && ptr == digits.data() + digits.size() && k > 0) return last(k);
    }
    throw ConfigError("window must be 'all' or 'last<k>', got '" + std::string(text) + "'");
}

std::string Window::label() const { return length == 0 ? "all" : "last" + std::to_string(length); }

std::span<const PeriodRecord> window_periods(const GroupHistory& h, Window w)
{
    const std::size_t total = h.periods.size();
    if (total == 0) throw std::invalid_argument("empty history");
    if (w.length > total)
        throw std::invalid_argument("window of " + std::to_string(w.length) +
                                    " periods exceeds the " + std::to_string(total) + " recorded");
    const std::size_t len = w.length == 0 ? total : w.length;
    return std::span<const PeriodRecord>(h.periods).subspan(total - len, len);
}

namespace {

double nan() { return std::numeric_limits<double>::quiet_NaN(); }

std::pair<std::size_t, std::size_t> reciprocation_counts(std::span<const PeriodRecord> periods)
{
    std::size_t links = 0;
    std::size_t both = 0;
    for (const auto& rec : periods) {
        const std::size_t n = rec.network.size();
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) {
                if (!rec.network(i, j)) continue;
                ++links;
                both += rec.intentions(i, j) && rec.intentions(j, i);
            }
    }
    return {links, both};
}

}  // namespace

ClassFrequencies equilibrium_frequency(const GroupHistory& h, Window w)
{
    const auto periods = window_periods(h, w);
    ClassFrequencies f;
    for (const auto& rec : periods) {
        switch (classify_network(rec.network).kind) {
        case NetworkClass::Kind::Empty: f.empty += 1; break;
        case NetworkClass::Kind::Star: f.star += 1; break;
        case NetworkClass::Kind::Complete: f.complete += 1; break;
        case NetworkClass::Kind::CorePeriphery: f.core_periphery += 1; break;
        case NetworkClass::Kind::Other: f.other += 1; break;
        }
    }
    const double len = static_cast<double>(periods.size());
    for (double* v : {&f.empty, &f.star, &f.complete, &f.core_periphery, &f.other}) *v /= len;
    return f;
}

double reciprocated_fraction(const GroupHistory& h, Window w)
{
    const auto [links, both] = reciprocation_counts(window_periods(h, w));
    if (links == 0) throw NoLinks("no realized links in the window");
    return static_cast<double>(both) / static_cast<double>(links);
}

GroupSummary network_stats(const GroupHistory& h, Window w, const GameParams& params)
{
    const auto periods = window_periods(h, w);
    GroupSummary s;
    s.group = h.group;
    s.window = w.label();
    s.periods = periods.size();

    bool equilibrium_defined = true;
    for (const auto& rec : periods) {
        const std::size_t n = rec.network.size();
        const double dn = static_cast<double>(n);
        std::size_t min_deg = n;
        std::size_t max_deg = 0;
        for (std::size_t i = 0; i < n; ++i) {
            min_deg = std::min(min_deg, rec.network.degree(i));
            max_deg = std::max(max_deg, rec.network.degree(i));
        }
        const double links = static_cast<double>(rec.network.edge_count());
        s.mean_links += links;
        s.mean_degree += 2.0 * links / dn;
        s.mean_min_degree += static_cast<double>(min_deg);
        s.mean_max_degree += static_cast<double>(max_deg);

        double effort = 0.0;
        double pay = 0.0;
        double adjusted = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            effort += rec.efforts[i];
            pay += rec.outcome.players[i].total;
            adjusted += rec.outcome.players[i].total - rec.outcome.players[i].link_benefit_received;
        }
        s.mean_effort += effort / dn;
        s.mean_payoff += pay / dn;
        s.mean_adjusted_payoff += adjusted / dn;

        if (equilibrium_defined) {
            try {
                const auto x = equilibrium_effort(rec.network, params);
                s.mean_equilibrium_effort += std::accumulate(x.begin(), x.end(), 0.0) / dn;
            } catch (const NumericError&) {
                equilibrium_defined = false;
            }
        }
    }
    const double len = static_cast<double>(periods.size());
    for (double* v : {&s.mean_links, &s.mean_degree, &s.mean_min_degree, &s.mean_max_degree,
                      &s.mean_effort, &s.mean_payoff, &s.mean_adjusted_payoff,
                      &s.mean_equilibrium_effort})
        *v /= len;
    if (!equilibrium_defined) s.mean_equilibrium_effort = nan();

    s.classes = equilibrium_frequency(h, w);
    const auto [links, both] = reciprocation_counts(periods);
    s.reciprocated_fraction =
        links == 0 ? nan() : static_cast<double>(both) / static_cast<double>(links);
    return s;
}

std::vector<GroupSummary> summarize(std::span<const SimHistory> histories, Window w,
                                    const GameParams& params)
{
    std::vector<GroupSummary> out;
    for (const auto& h : histories)
        for (const auto& g : h.groups) {
            auto s = network_stats(g, w, params);
            s.replication = h.replication;
            out.push_back(std::move(s));
        }
    return out;
}

std::string_view metric_name(Metric m) noexcept
{
    switch (m) {
    case Metric::Effort: return "effort";
    case Metric::Payoff: return "payoff";
    case Metric::AdjustedPayoff: return "adjusted_payoff";
    case Metric::Links: return "links";
    case Metric::AverageDegree: return "avg_degree";
    case Metric::MinDegree: return "min_degree";
    case Metric::MaxDegree: return "max_degree";
    case Metric::Reciprocation: return "reciprocation";
    case Metric::EquilibriumEffort: return "equilibrium_effort";
    }
    return "effort";
}

Metric parse_metric(std::string_view name)
{
    for (auto m : {Metric::Effort, Metric::Payoff, Metric::AdjustedPayoff, Metric::Links,
                   Metric::AverageDegree, Metric::MinDegree, Metric::MaxDegree,
                   Metric::Reciprocation, Metric::EquilibriumEffort})
        if (metric_name(m) == name) return m;
    throw ConfigError("unknown metric '" + std::string(name) + "'");
}

double metric_value(const GroupSummary& s, Metric m) noexcept
{
    switch (m) {
    case Metric::Effort: return s.mean_effort;
    case Metric::Payoff: return s.mean_payoff;
    case Metric::AdjustedPayoff: return s.mean_adjusted_payoff;
    case Metric::Links: return s.mean_links;
    case Metric::AverageDegree: return s.mean_degree;
    case Metric::MinDegree: return s.mean_min_degree;
    case Metric::MaxDegree: return s.mean_max_degree;
    case Metric::Reciprocation: return s.reciprocated_fraction;
    case Metric::EquilibriumEffort: return s.mean_equilibrium_effort;
    }
    return s.mean_effort;
}

std::vector<double> group_observations(std::span<const GroupSummary> summaries, Metric m)
{
    std::vector<double> out;
    for (const auto& s : summaries) {
        const double v = metric_value(s, m);
        if (!std::isnan(v)) out.push_back(v);
    }
    return out;
}

TreatmentComparison compare_observations(std::span<const double> a, std::span<const double> b)
{
    TreatmentComparison c;
    c.test = mann_whitney_u(a, b);
    c.n_a = a.size();
    c.n_b = b.size();
    c.mean_a = std::accumulate(a.begin(), a.end(), 0.0) / static_cast<double>(a.size());
    c.mean_b = std::accumulate(b.begin(), b.end(), 0.0) / static_cast<double>(b.size());
    c.direction = (c.mean_a > c.mean_b) - (c.mean_a < c.mean_b);
    return c;
}

TreatmentComparison compare_treatments(std::span<const SimHistory> a,
                                       std::span<const SimHistory> b, Metric m, Window w,
                                       const GameParams& params_a, const GameParams& params_b)
{
    const auto sa = summarize(a, w, params_a);
    const auto sb = summarize(b, w, params_b);
    return compare_observations(group_observations(sa, m), group_observations(sb, m));
}

}  // namespace lqnet
