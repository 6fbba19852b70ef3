// lqnet: benchmarks, equilibrium search, simulation and analysis for the
// five-player network-formation game with linear-quadratic payoffs.

#include <CLI11.hpp>
#include <fmt/format.h>
#include <fmt/ostream.h>
#include <fmt/ranges.h>
#include <nlohmann/json.hpp>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <string>

#include "lqnet/analysis.hpp"
#include "lqnet/equilibrium.hpp"
#include "lqnet/errors.hpp"
#include "lqnet/graph.hpp"
#include "lqnet/io.hpp"
#include "lqnet/simulation.hpp"
#include "lqnet/welfare.hpp"

namespace fs = std::filesystem;
using json = nlohmann::json;

namespace {

constexpr int kExitConfig = 2;
constexpr int kExitNumeric = 3;

std::string g6(double v) { return fmt::format("{:.6g}", v); }

/// Rounds to 6 significant digits so that JSON output carries the same precision as the CSVs.
double r6(double v)
{
    if (!std::isfinite(v)) return v;
    return std::stod(g6(v));
}

std::string join(const std::vector<double>& v, const char* sep = ", ")
{
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) out += (i ? sep : "") + g6(v[i]);
    return v.size() > 1 ? "(" + out + ")" : out;
}

void add_game_options(CLI::App& cmd, lqnet::GameParams& p)
{
    cmd.add_option("--players", p.n_players, "Group size")->capture_default_str();
    cmd.add_option("--alpha", p.alpha, "Linear benefit per effort unit")->capture_default_str();
    cmd.add_option("--beta", p.beta, "Quadratic effort-cost coefficient")
        ->capture_default_str();
    cmd.add_option("--comp", p.comp, "Effort complementarity between neighbors")->capture_default_str();
    cmd.add_option("--link-cost", p.link_cost, "Cost per initiated link")->capture_default_str();
    cmd.add_option("--link-benefit", p.link_benefit, "Benefit per received link")->capture_default_str();
    cmd.add_option("--effort-max", p.effort_max, "Upper effort bound")->capture_default_str();
}

fs::path ensure_dir(const std::string& dir)
{
    fs::path p(dir);
    std::error_code ec;
    fs::create_directories(p, ec);
    if (ec) throw lqnet::ConfigError("cannot create output directory " + dir + ": " + ec.message());
    return p;
}

std::ofstream open_out(const fs::path& path)
{
    std::ofstream out(path);
    if (!out) throw lqnet::ConfigError("cannot write " + path.string());
    return out;
}

// ---------------------------------------------------------------------------

int cmd_table1(const lqnet::GameParams& params, const std::string& out_dir)
{
    const auto rows = lqnet::benchmark_table(params);
    fmt::print("{:<10} {:<22} {:<22} {:<22} {:<22}\n", "network", "nash_effort", "nash_payoff",
               "efficient_effort", "efficient_payoff");
    for (const auto& r : rows)
        fmt::print("{:<10} {:<22} {:<22} {:<22} {:<22}\n", r.network_class.label(),
                   join(r.equilibrium_efforts), join(r.equilibrium_payoffs),
                   join(r.efficient_efforts), join(r.efficient_payoffs));
    if (rows.size() > 1 && rows[1].network_class.kind == lqnet::NetworkClass::Kind::Star)
        fmt::print("star values are (center, periphery); payoffs exclude incoming-link transfers\n");

    if (!out_dir.empty()) {
        auto out = open_out(ensure_dir(out_dir) / "table1.csv");
        out << "network,role,nash_effort,nash_payoff,efficient_effort,efficient_payoff\n";
        for (const auto& r : rows)
            for (std::size_t k = 0; k < r.equilibrium_efforts.size(); ++k) {
                const char* role = r.equilibrium_efforts.size() == 1 ? "all" : (k == 0 ? "center" : "periphery");
                fmt::print(out, "{},{},{},{},{},{}\n", r.network_class.label(), role,
                           g6(r.equilibrium_efforts[k]), g6(r.equilibrium_payoffs[k]),
                           g6(r.efficient_efforts[k]), g6(r.efficient_payoffs[k]));
            }
    }
    return 0;
}

int cmd_solve(const lqnet::GameParams& params, const std::string& spec)
{
    params.validate();
    const auto g = lqnet::parse_network(spec, params.n_players);
    const auto li = lqnet::default_initiation(g);
    fmt::print("network: {} [{}]\n", lqnet::classify_network(g).label(), lqnet::format_edges(g));
    fmt::print("spectral radius: {}\n", g6(lqnet::spectral_radius(g)));

    const auto eq = lqnet::equilibrium_effort(g, params);
    const auto eq_out = lqnet::evaluate_round(eq, li, params);
    const auto nash = lqnet::is_nash(li, eq, params);
    fmt::print("nash effort:      {}\n", join(eq));
    fmt::print("nash payoff:      {}\n", join(eq_out.payoffs()));
    fmt::print("nash (one initiator per edge): {} (max deviation gain {})\n",
               nash.is_equilibrium ? "yes" : "no", g6(nash.max_deviation_gain));

    const auto eff = lqnet::efficient_effort(g, params);
    const auto w = lqnet::welfare(g, eff, params);
    fmt::print("efficient effort: {}\n", join(eff));
    fmt::print("efficient payoff: {}\n", join(w.per_player_payoffs));
    fmt::print("total welfare:    {}\n", g6(w.total_welfare));
    return 0;
}

int cmd_enumerate(const lqnet::GameParams& params, double epsilon, unsigned threads)
{
    const auto report = lqnet::enumerate_equilibria(params, epsilon, threads);
    fmt::print("scanned {} networks, {} one-initiator profiles ({} networks skipped)\n",
               report.networks_scanned, report.profiles_scanned, report.networks_skipped);

    std::vector<std::string> classes;
    for (const auto& c : report.certificates) {
        if (classes.empty() || classes.back() != c.network_class.label())
            classes.push_back(c.network_class.label());
        std::string initiators;
        for (std::size_t i = 0; i < c.intentions.size(); ++i)
            initiators += (i ? " " : "") + std::to_string(c.intentions.initiated(i));
        const auto g = lqnet::realize_network(c.intentions);
        std::string degrees;
        for (std::size_t i = 0; i < g.size(); ++i)
            degrees += (i ? " " : "") + std::to_string(g.degree(i));
        fmt::print("{:<18} degrees [{}] initiated [{}] efforts {} max_gain {} ({} labeled profiles)\n",
                   c.network_class.label(), degrees, initiators, join(c.efforts),
                   g6(c.max_deviation_gain), c.labeled_profiles);
    }
    fmt::print("equilibrium network classes: {{{}}}\n", fmt::join(classes, ", "));
    return 0;
}

int cmd_welfare(const lqnet::GameParams& params)
{
    const auto w = lqnet::optimize_welfare(params);
    fmt::print("optimal network: {} [{}]\n", lqnet::classify_network(w.network).label(),
               lqnet::format_edges(w.network));
    fmt::print("efforts:  {}\n", join(w.efforts));
    fmt::print("payoffs:  {}\n", join(w.per_player_payoffs));
    fmt::print("total welfare: {} (gross of transfers {})\n", g6(w.total_welfare), g6(w.gross_welfare));
    return 0;
}

int cmd_simulate(const std::string& config_path, const std::string& treatment,
                 std::optional<std::size_t> reps, std::optional<std::uint64_t> seed,
                 const std::string& out_dir, unsigned threads)
{
    lqnet::SimConfig config = config_path.empty()
                                  ? lqnet::SimConfig::for_treatment(lqnet::parse_treatment(treatment))
                                  : lqnet::load_config(config_path);
    if (reps) config.replications = *reps;
    if (seed) config.master_seed = *seed;
    config.validate();

    const auto batch = lqnet::run_batch(config, config.replications, threads);
    const auto dir = ensure_dir(out_dir);
    {
        auto out = open_out(dir / "history.csv");
        lqnet::write_history_csv(out, batch);
    }
    {
        auto out = open_out(dir / "config.ini");
        lqnet::write_config(out, config);
    }
    fmt::print("{}: {} replications x {} groups x {} rounds -> {}\n",
               lqnet::treatment_name(config.treatment.kind()), config.replications, config.groups,
               config.rounds, (dir / "history.csv").string());
    return 0;
}

struct LoadedRun {
    lqnet::SimConfig config;
    std::vector<lqnet::SimHistory> histories;
};

LoadedRun load_run(const std::string& dir)
{
    LoadedRun run;
    const fs::path base(dir);
    if (fs::exists(base / "config.ini")) run.config = lqnet::load_config(base / "config.ini");
    std::ifstream in(base / "history.csv");
    if (!in) throw lqnet::ConfigError("no history.csv in " + dir);
    run.histories = lqnet::read_history_csv(in);
    if (run.histories.empty()) throw lqnet::ConfigError("history.csv in " + dir + " has no rows");
    return run;
}

json test_json(const lqnet::TestResult& t, int direction)
{
    return {{"statistic", r6(t.statistic)},
            {"z", r6(t.z)},
            {"p", r6(t.p_value)},
            {"method", std::string(lqnet::method_name(t.method))},
            {"direction", direction}};
}

int cmd_analyze(const std::string& in_dir, const std::string& window_text, const std::string& out_dir)
{
    const auto run = load_run(in_dir);
    std::vector<lqnet::Window> windows;
    if (window_text.empty())
        windows = {lqnet::Window::all(), lqnet::Window::last(10)};
    else
        windows = {lqnet::Window::parse(window_text)};

    const auto dir = ensure_dir(out_dir.empty() ? in_dir : out_dir);
    auto csv = open_out(dir / "summary.csv");
    csv << "replication,group,window,periods,mean_links,mean_degree,mean_min_degree,"
           "mean_max_degree,mean_effort,mean_equilibrium_effort,mean_payoff,mean_adjusted_payoff,"
           "freq_empty,freq_star,freq_complete,freq_core_periphery,freq_other,"
           "reciprocated_fraction\n";

    json tests = json::object();
    const auto& params = run.config.game;
    lqnet::GameParams net = params;
    net.link_benefit = 0.0;
    const auto complete = lqnet::Network::complete(params.n_players);
    const auto complete_x = lqnet::equilibrium_effort(complete, params);
    const double complete_payoff =
        lqnet::evaluate_round(complete_x, lqnet::default_initiation(complete), net).players[0].total;

    for (const auto& w : windows) {
        const auto summaries = lqnet::summarize(run.histories, w, params);
        for (const auto& s : summaries) {
            auto na = [](double v) { return std::isfinite(v) ? g6(v) : std::string("NA"); };
            fmt::print(csv, "{},{},{},{},{},{},{},{},{},{},{},{},{},{},{},{},{},{}\n",
                       s.replication, s.group, s.window, s.periods, g6(s.mean_links),
                       g6(s.mean_degree), g6(s.mean_min_degree), g6(s.mean_max_degree),
                       g6(s.mean_effort), na(s.mean_equilibrium_effort), g6(s.mean_payoff),
                       g6(s.mean_adjusted_payoff), g6(s.classes.empty), g6(s.classes.star),
                       g6(s.classes.complete), g6(s.classes.core_periphery), g6(s.classes.other),
                       na(s.reciprocated_fraction));
        }

        json block = json::object();
        const auto effort = lqnet::group_observations(summaries, lqnet::Metric::Effort);
        const auto nash = lqnet::group_observations(summaries, lqnet::Metric::EquilibriumEffort);
        if (!effort.empty() && !nash.empty()) {
            const auto c = lqnet::compare_observations(effort, nash);
            block["effort_vs_nash_effort"] = test_json(c.test, c.direction);
            block["effort_vs_nash_effort"]["mean_a"] = r6(c.mean_a);
            block["effort_vs_nash_effort"]["mean_b"] = r6(c.mean_b);
        }
        const auto payoff = lqnet::group_observations(summaries, lqnet::Metric::AdjustedPayoff);
        try {
            const auto t = lqnet::wilcoxon_signed_rank(payoff, complete_payoff);
            double mean = 0.0;
            for (double v : payoff) mean += v;
            mean /= static_cast<double>(payoff.size());
            block["adjusted_payoff_vs_complete_nash"] =
                test_json(t, (mean > complete_payoff) - (mean < complete_payoff));
            block["adjusted_payoff_vs_complete_nash"]["mu0"] = r6(complete_payoff);
        } catch (const std::invalid_argument&) {
            block["adjusted_payoff_vs_complete_nash"] = nullptr;
        }
        tests[w.label()] = block;
    }
    auto out = open_out(dir / "tests.json");
    out << tests.dump(2) << '\n';
    fmt::print("wrote {} and {}\n", (dir / "summary.csv").string(), (dir / "tests.json").string());
    return 0;
}

int cmd_compare(const std::string& a_dir, const std::string& b_dir, const std::string& metric_text,
                const std::string& window_text, const std::string& out_path)
{
    const auto metric = lqnet::parse_metric(metric_text);
    const auto window = lqnet::Window::parse(window_text);
    const auto a = load_run(a_dir);
    const auto b = load_run(b_dir);
    const auto c = lqnet::compare_treatments(a.histories, b.histories, metric, window,
                                             a.config.game, b.config.game);

    json result = test_json(c.test, c.direction);
    result["metric"] = std::string(lqnet::metric_name(metric));
    result["window"] = window.label();
    result["a"] = a_dir;
    result["b"] = b_dir;
    result["mean_a"] = r6(c.mean_a);
    result["mean_b"] = r6(c.mean_b);
    result["n_a"] = c.n_a;
    result["n_b"] = c.n_b;
    json doc = {{"comparisons", json::array({result})}};

    if (out_path.empty()) {
        std::cout << doc.dump(2) << '\n';
    } else {
        const fs::path p(out_path);
        if (p.has_parent_path()) ensure_dir(p.parent_path().string());
        auto out = open_out(p);
        out << doc.dump(2) << '\n';
    }
    return 0;
}

}  // namespace

using lqnet::GameParams;

int main(int argc, char** argv)
{
    CLI::App app{"Equilibrium, welfare and agent-based simulation tools for a network-formation game "
                 "with linear-quadratic payoffs"};
    app.require_subcommand(1);

    GameParams params;

    auto* table1 = app.add_subcommand("table1", "Nash and efficient benchmarks on empty, star and complete networks");
    std::string table1_out;
    add_game_options(*table1, params);
    table1->add_option("--out", table1_out, "Directory for table1.csv");

    auto* solve = app.add_subcommand("solve", "Equilibrium and efficient effort on one network");
    std::string network_spec;
    add_game_options(*solve, params);
    solve->add_option("--network", network_spec, "empty|star|complete or an edge list 0-1,0-2,...")->required();

    auto* enumerate = app.add_subcommand("enumerate", "Exhaustive Nash equilibrium search (n <= 6)");
    double epsilon = 1e-9;
    unsigned threads = 0;
    add_game_options(*enumerate, params);
    enumerate->add_option("--epsilon", epsilon, "Certification slack in points")->capture_default_str();
    enumerate->add_option("--threads", threads, "Worker threads (0 = all cores)");

    auto* welfare = app.add_subcommand("welfare", "Welfare-maximizing network and efforts (n <= 6)");
    add_game_options(*welfare, params);

    auto* simulate = app.add_subcommand("simulate", "Run seeded agent-based sessions");
    std::string config_path;
    std::string treatment = "baseline";
    std::optional<std::size_t> reps;
    std::optional<std::uint64_t> seed;
    std::string sim_out = "out";
    simulate->add_option("--config", config_path, "INI config with [game] [treatment] [behavior] [run]");
    simulate->add_option("--treatment", treatment, "Default config for baseline|link_benefit|ranking|interaction when no --config is given")
        ->capture_default_str();
    simulate->add_option("--reps", reps, "Replications (overrides [run] replications)");
    simulate->add_option("--seed", seed, "Master seed (overrides [run] master_seed)");
    simulate->add_option("--out", sim_out, "Output directory")->capture_default_str();
    simulate->add_option("--threads", threads, "Worker threads (0 = all cores)");

    auto* analyze = app.add_subcommand("analyze", "Group summaries and tests for a simulated run");
    std::string in_dir;
    std::string window_text;
    std::string analyze_out;
    analyze->add_option("--in", in_dir, "Directory written by simulate")->required();
    analyze->add_option("--window", window_text, "all | last10 (default: both)");
    analyze->add_option("--out", analyze_out, "Output directory (default: --in)");

    auto* compare = app.add_subcommand("compare", "Mann-Whitney comparison of two simulated runs");
    std::string a_dir;
    std::string b_dir;
    std::string metric = "effort";
    std::string compare_window = "last10";
    std::string compare_out;
    compare->add_option("--a", a_dir, "First run directory")->required();
    compare->add_option("--b", b_dir, "Second run directory")->required();
    compare->add_option("--metric", metric,
                        "effort|payoff|adjusted_payoff|links|avg_degree|min_degree|max_degree|"
                        "reciprocation|equilibrium_effort")
        ->capture_default_str();
    compare->add_option("--window", compare_window, "all | last10")->capture_default_str();
    compare->add_option("--out", compare_out, "Write tests.json here instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitConfig;
    }

    try {
        if (*table1) return cmd_table1(params, table1_out);
        if (*solve) return cmd_solve(params, network_spec);
        if (*enumerate) return cmd_enumerate(params, epsilon, threads);
        if (*welfare) return cmd_welfare(params);
        if (*simulate) return cmd_simulate(config_path, treatment, reps, seed, sim_out, threads);
        if (*analyze) return cmd_analyze(in_dir, window_text, analyze_out);
        if (*compare) return cmd_compare(a_dir, b_dir, metric, compare_window, compare_out);
    } catch (const lqnet::ConfigError& e) {
        fmt::print(stderr, "config error: {}\n", e.what());
        return kExitConfig;
    } catch (const lqnet::EnumerationGuard& e) {
        fmt::print(stderr, "config error: {}\n", e.what());
        return kExitConfig;
    } catch (const lqnet::DimensionMismatch& e) {
        fmt::print(stderr, "config error: {}\n", e.what());
        return kExitConfig;
    } catch (const lqnet::NumericError& e) {
        fmt::print(stderr, "numeric failure: {}\n", e.what());
        return kExitNumeric;
    } catch (const std::exception& e) {
        fmt::print(stderr, "error: {}\n", e.what());
        return 1;
    }
    return 0;
}
