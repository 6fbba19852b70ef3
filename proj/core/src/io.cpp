#include "lqnet/io.hpp"

#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>
#include <fmt/format.h>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <set>
#include <sstream>

#include "lqnet/errors.hpp"

namespace lqnet {

namespace pt = boost::property_tree;

namespace {

const std::map<std::string, std::set<std::string>>& allowed_keys()
{
    static const std::map<std::string, std::set<std::string>> keys{
        {"game",
         {"n_players", "alpha", "beta", "comp", "link_cost", "link_benefit", "effort_max"}},
        {"treatment", {"link_benefit_on", "ranking_feedback_on"}},
        {"behavior",
         {"adjust_rate", "noise_sd", "rank_effort_drop", "rank_link_logit_drop",
          "initial_effort_low", "initial_effort_high", "initial_link_prob", "link_coeffs",
          "intercept", "inertia", "received", "inertia_x_received", "own_effort", "opp_effort",
          "period"}},
        {"run", {"rounds", "groups", "master_seed", "replications", "rank_basis"}},
    };
    return keys;
}

double to_double(const std::string& section, const std::string& key, const std::string& text)
{
    double v = 0.0;
    const char* end = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(text.data(), end, v);
    if (ec != std::errc{} || ptr != end || !std::isfinite(v))
        throw ConfigError("[" + section + "] " + key + ": expected a number, got '" + text + "'");
    return v;
}

std::uint64_t to_unsigned(const std::string& section, const std::string& key,
                          const std::string& text)
{
    std::uint64_t v = 0;
    const char* end = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(text.data(), end, v);
    if (ec != std::errc{} || ptr != end)
        throw ConfigError("[" + section + "] " + key + ": expected a non-negative integer, got '" +
                          text + "'");
    return v;
}

bool to_bool(const std::string& section, const std::string& key, const std::string& text)
{
    if (text == "true" || text == "1") return true;
    if (text == "false" || text == "0") return false;
    throw ConfigError("[" + section + "] " + key + ": expected true or false, got '" + text + "'");
}

std::string format_real(double v) { return fmt::format("{:.17g}", v); }

}  // namespace

SimConfig parse_config(std::istream& in)
{
    pt::ptree tree;
    try {
        pt::read_ini(in, tree);
    } catch (const pt::ini_parser_error& e) {
        throw ConfigError(std::string("config parse error: ") + e.what());
    }

    const auto& allowed = allowed_keys();
    std::map<std::string, std::map<std::string, std::string>> values;
    for (const auto& [section, body] : tree) {
        auto it = allowed.find(section);
        if (it == allowed.end())
            throw ConfigError("unknown config section '" + section + "'");
        if (body.empty() && !body.data().empty())
            throw ConfigError("key '" + section + "' must appear inside a section");
        for (const auto& [key, node] : body) {
            if (!it->second.count(key))
                throw ConfigError("unknown key '" + key + "' in [" + section + "]");
            values[section][key] = node.get_value<std::string>();
        }
    }
    auto get = [&](const std::string& section, const std::string& key) -> const std::string* {
        auto s = values.find(section);
        if (s == values.end()) return nullptr;
        auto k = s->second.find(key);
        return k == s->second.end() ? nullptr : &k->second;
    };

    SimConfig c;
    if (auto v = get("treatment", "link_benefit_on")) c.treatment.link_benefit_on = to_bool("treatment", "link_benefit_on", *v);
    if (auto v = get("treatment", "ranking_feedback_on")) c.treatment.ranking_feedback_on = to_bool("treatment", "ranking_feedback_on", *v);

    c.game.link_benefit = c.treatment.link_benefit_on ? kTreatmentLinkBenefit : 0.0;
    if (auto v = get("game", "n_players")) c.game.n_players = to_unsigned("game", "n_players", *v);
    const std::pair<const char*, double*> game_reals[] = {
        {"alpha", &c.game.alpha},         {"beta", &c.game.beta},
        {"comp", &c.game.comp},           {"link_cost", &c.game.link_cost},
        {"link_benefit", &c.game.link_benefit}, {"effort_max", &c.game.effort_max}};
    for (auto [key, field] : game_reals)
        if (auto v = get("game", key)) *field = to_double("game", key, *v);

    const std::pair<const char*, double*> behavior_reals[] = {
        {"adjust_rate", &c.behavior.adjust_rate},
        {"noise_sd", &c.behavior.noise_sd},
        {"rank_effort_drop", &c.behavior.rank_effort_drop},
        {"rank_link_logit_drop", &c.behavior.rank_link_logit_drop},
        {"initial_effort_low", &c.behavior.initial_effort_low},
        {"initial_effort_high", &c.behavior.initial_effort_high},
        {"initial_link_prob", &c.behavior.initial_link_prob}};
    for (auto [key, field] : behavior_reals)
        if (auto v = get("behavior", key)) *field = to_double("behavior", key, *v);

    Treatment preset = c.treatment.kind();
    if (auto v = get("behavior", "link_coeffs")) preset = parse_treatment(*v);
    c.coeffs = LinkLogitCoeffs::preset(preset);
    const std::pair<const char*, double*> odds[] = {
        {"intercept", &c.coeffs.intercept},
        {"inertia", &c.coeffs.inertia},
        {"received", &c.coeffs.received},
        {"inertia_x_received", &c.coeffs.inertia_x_received},
        {"own_effort", &c.coeffs.own_effort},
        {"opp_effort", &c.coeffs.opp_effort},
        {"period", &c.coeffs.period}};
    for (auto [key, field] : odds)
        if (auto v = get("behavior", key)) {
            const double ratio = to_double("behavior", key, *v);
            if (ratio <= 0.0) throw ConfigError(std::string("[behavior] ") + key + ": odds ratio must be > 0");
            *field = std::log(ratio);
        }

    if (auto v = get("run", "rounds")) c.rounds = to_unsigned("run", "rounds", *v);
    if (auto v = get("run", "groups")) c.groups = to_unsigned("run", "groups", *v);
    if (auto v = get("run", "master_seed")) c.master_seed = to_unsigned("run", "master_seed", *v);
    if (auto v = get("run", "replications")) c.replications = to_unsigned("run", "replications", *v);
    if (auto v = get("run", "rank_basis")) {
        if (*v == "per_period")
            c.rank_basis = RankBasis::PerPeriod;
        else if (*v == "cumulative")
            c.rank_basis = RankBasis::Cumulative;
        else
            throw ConfigError("[run] rank_basis must be per_period or cumulative");
    }

    c.validate();
    return c;
}

SimConfig load_config(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file " + path.string());
    return parse_config(in);
}

void write_config(std::ostream& out, const SimConfig& c)
{
    out << "[game]\n"
        << "n_players = " << c.game.n_players << '\n'
        << "alpha = " << format_real(c.game.alpha) << '\n'
        << "beta = " << format_real(c.game.beta) << '\n'
        << "comp = " << format_real(c.game.comp) << '\n'
        << "link_cost = " << format_real(c.game.link_cost) << '\n'
        << "link_benefit = " << format_real(c.game.link_benefit) << '\n'
        << "effort_max = " << format_real(c.game.effort_max) << "\n\n";
    out << "[treatment]\n"
        << "link_benefit_on = " << (c.treatment.link_benefit_on ? "true" : "false") << '\n'
        << "ranking_feedback_on = " << (c.treatment.ranking_feedback_on ? "true" : "false")
        << "\n\n";
    out << "[behavior]\n"
        << "adjust_rate = " << format_real(c.behavior.adjust_rate) << '\n'
        << "noise_sd = " << format_real(c.behavior.noise_sd) << '\n'
        << "rank_effort_drop = " << format_real(c.behavior.rank_effort_drop) << '\n'
        << "rank_link_logit_drop = " << format_real(c.behavior.rank_link_logit_drop) << '\n'
        << "initial_effort_low = " << format_real(c.behavior.initial_effort_low) << '\n'
        << "initial_effort_high = " << format_real(c.behavior.initial_effort_high) << '\n'
        << "initial_link_prob = " << format_real(c.behavior.initial_link_prob) << '\n';

    std::optional<Treatment> preset;
    for (auto t : {Treatment::Baseline, Treatment::LinkBenefit, Treatment::Ranking,
                   Treatment::Interaction})
        if (LinkLogitCoeffs::preset(t) == c.coeffs) preset = t;
    if (preset) {
        out << "link_coeffs = " << treatment_name(*preset) << '\n';
    } else {
        out << "intercept = " << format_real(std::exp(c.coeffs.intercept)) << '\n'
            << "inertia = " << format_real(std::exp(c.coeffs.inertia)) << '\n'
            << "received = " << format_real(std::exp(c.coeffs.received)) << '\n'
            << "inertia_x_received = " << format_real(std::exp(c.coeffs.inertia_x_received)) << '\n'
            << "own_effort = " << format_real(std::exp(c.coeffs.own_effort)) << '\n'
            << "opp_effort = " << format_real(std::exp(c.coeffs.opp_effort)) << '\n'
            << "period = " << format_real(std::exp(c.coeffs.period)) << '\n';
    }
    out << '\n';
    out << "[run]\n"
        << "rounds = " << c.rounds << '\n'
        << "groups = " << c.groups << '\n'
        << "master_seed = " << c.master_seed << '\n'
        << "replications = " << c.replications << '\n'
        << "rank_basis = " << (c.rank_basis == RankBasis::Cumulative ? "cumulative" : "per_period")
        << '\n';
}

void write_history_csv(std::ostream& out, std::span<const SimHistory> histories)
{
    out << kHistoryHeader << '\n';
    std::string line;
    for (const auto& h : histories)
        for (const auto& g : h.groups)
            for (const auto& rec : g.periods)
                for (std::size_t i = 0; i < rec.efforts.size(); ++i) {
                    std::string links;
                    for (std::size_t j = 0; j < rec.intentions.size(); ++j)
                        if (rec.intentions(i, j)) {
                            if (!links.empty()) links += ';';
                            links += std::to_string(j);
                        }
                    const auto& b = rec.outcome.players[i];
                    line = fmt::format("{},{},{},{},{},{},{},{},{},{},{},{},{}\n", h.replication,
                                       g.group, rec.period, i, format_real(rec.efforts[i]), links,
                                       rec.network.degree(i), format_real(b.total),
                                       format_real(b.effort_benefit), format_real(b.effort_cost),
                                       format_real(b.link_cost_paid),
                                       format_real(b.link_benefit_received),
                                       rec.feedback_ranks[i]);
                    out << line;
                }
}

namespace {

struct CsvRow {
    std::size_t replication, group, period, agent;
    double effort;
    std::vector<std::size_t> links;
    PayoffBreakdown breakdown;
    int rank;
};

std::vector<std::string> split(const std::string& s, char sep)
{
    std::vector<std::string> parts;
    std::string cur;
    std::istringstream ss(s);
    while (std::getline(ss, cur, sep)) parts.push_back(cur);
    if (!s.empty() && s.back() == sep) parts.emplace_back();
    return parts;
}

}  // namespace

std::vector<SimHistory> read_history_csv(std::istream& in)
{
    std::string line;
    if (!std::getline(in, line)) throw ConfigError("history CSV is empty");
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line != kHistoryHeader) throw ConfigError("history CSV has an unexpected header");

    std::vector<CsvRow> rows;
    std::size_t n = 0;
    std::size_t lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        const auto f = split(line, ',');
        if (f.size() != 13) throw ConfigError("history CSV line " + std::to_string(lineno) + ": expected 13 columns");
        const std::string ctx = "history line " + std::to_string(lineno);
        CsvRow r;
        r.replication = to_unsigned(ctx, "replication", f[0]);
        r.group = to_unsigned(ctx, "group", f[1]);
        r.period = to_unsigned(ctx, "period", f[2]);
        r.agent = to_unsigned(ctx, "agent", f[3]);
        r.effort = to_double(ctx, "effort", f[4]);
        if (!f[5].empty())
            for (const auto& j : split(f[5], ';')) r.links.push_back(to_unsigned(ctx, "links_initiated", j));
        r.breakdown.total = to_double(ctx, "payoff", f[7]);
        r.breakdown.effort_benefit = to_double(ctx, "effort_benefit", f[8]);
        r.breakdown.effort_cost = to_double(ctx, "effort_cost", f[9]);
        r.breakdown.link_cost_paid = to_double(ctx, "link_cost_paid", f[10]);
        r.breakdown.link_benefit_received = to_double(ctx, "link_benefit_received", f[11]);
        r.rank = static_cast<int>(to_unsigned(ctx, "rank", f[12]));
        n = std::max(n, r.agent + 1);
        rows.push_back(std::move(r));
    }

    // (replication, group, period) -> record
    std::map<std::size_t, std::map<std::size_t, std::map<std::size_t, PeriodRecord>>> tree;
    for (const auto& r : rows) {
        auto& rec = tree[r.replication][r.group][r.period];
        if (rec.efforts.empty()) {
            rec.period = r.period;
            rec.intentions = LinkIntentions(n);
            rec.efforts.assign(n, 0.0);
            rec.outcome.players.assign(n, {});
            rec.outcome.ranks.assign(n, 0);
            rec.feedback_ranks.assign(n, 0);
        }
        rec.efforts[r.agent] = r.effort;
        for (auto j : r.links) {
            if (j >= n || j == r.agent) throw ConfigError("history CSV: invalid link target");
            rec.intentions.set(r.agent, j);
        }
        rec.outcome.players[r.agent] = r.breakdown;
        rec.feedback_ranks[r.agent] = r.rank;
    }

    std::vector<SimHistory> out;
    for (auto& [rep, groups] : tree) {
        SimHistory h;
        h.replication = rep;
        for (auto& [gid, periods] : groups) {
            GroupHistory gh;
            gh.group = gid;
            std::vector<double> cumulative(n, 0.0);
            for (auto& [t, rec] : periods) {
                rec.network = realize_network(rec.intentions);
                rec.outcome.ranks = rank_players(rec.outcome.payoffs());
                for (std::size_t i = 0; i < n; ++i) cumulative[i] += rec.outcome.players[i].total;
                rec.cumulative_payoffs = cumulative;
                gh.periods.push_back(std::move(rec));
            }
            h.groups.push_back(std::move(gh));
        }
        out.push_back(std::move(h));
    }
    return out;
}

}  // namespace lqnet
