#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <sstream>
#include <string>

#include "lqnet/errors.hpp"
#include "lqnet/io.hpp"

namespace lqnet {
namespace {

SimConfig parse(const std::string& text)
{
    std::istringstream in(text);
    return parse_config(in);
}

TEST(Config, EmptyDocumentIsBaselineDefaults)
{
    EXPECT_EQ(parse(""), SimConfig::for_treatment(Treatment::Baseline));
}

TEST(Config, FullDocument)
{
    const auto c = parse(R"(
[game]
n_players = 5
alpha = 10
beta = 2
comp = 0.4
link_cost = 3.9
effort_max = 20

[treatment]
link_benefit_on = true
ranking_feedback_on = true

[behavior]
adjust_rate = 0.5
noise_sd = 0
opp_effort = 1.2

[run]
rounds = 30
groups = 4
master_seed = 99
replications = 3
rank_basis = cumulative
)");
    EXPECT_EQ(c.treatment.kind(), Treatment::Interaction);
    EXPECT_EQ(c.game.link_benefit, 6.0);
    EXPECT_EQ(c.behavior.adjust_rate, 0.5);
    EXPECT_EQ(c.behavior.noise_sd, 0.0);
    auto expected = LinkLogitCoeffs::preset(Treatment::Interaction);
    expected.opp_effort = std::log(1.2);
    EXPECT_EQ(c.coeffs, expected);
    EXPECT_EQ(c.rounds, 30u);
    EXPECT_EQ(c.groups, 4u);
    EXPECT_EQ(c.master_seed, 99u);
    EXPECT_EQ(c.replications, 3u);
    EXPECT_EQ(c.rank_basis, RankBasis::Cumulative);
}

TEST(Config, PresetByName)
{
    const auto c = parse("[behavior]\nlink_coeffs = ranking\n");
    EXPECT_EQ(c.coeffs, LinkLogitCoeffs::preset(Treatment::Ranking));
    EXPECT_FALSE(c.treatment.ranking_feedback_on);
}

TEST(Config, Errors)
{
    EXPECT_THROW(parse("[game]\nalpha_x = 1\n"), ConfigError);
    EXPECT_THROW(parse("[gam]\nalpha = 1\n"), ConfigError);
    EXPECT_THROW(parse("alpha = 1\n"), ConfigError);
    EXPECT_THROW(parse("[game]\nalpha = ten\n"), ConfigError);
    EXPECT_THROW(parse("[run]\nrounds = -4\n"), ConfigError);
    EXPECT_THROW(parse("[run]\nrounds = 0\n"), ConfigError);
    EXPECT_THROW(parse("[run]\nrank_basis = weekly\n"), ConfigError);
    EXPECT_THROW(parse("[treatment]\nlink_benefit_on = maybe\n"), ConfigError);
    EXPECT_THROW(parse("[treatment]\nlink_benefit_on = true\n[game]\nlink_benefit = 4\n"),
                 ConfigError);
    EXPECT_THROW(parse("[game]\nlink_benefit = 6\n"), ConfigError);
    EXPECT_THROW(parse("[behavior]\nintercept = 0\n"), ConfigError);
    EXPECT_THROW(parse("[behavior]\nlink_coeffs = none\n"), ConfigError);
    EXPECT_THROW(parse("[game\nalpha = 1\n"), ConfigError);
    EXPECT_THROW((void)load_config("/nonexistent/config.ini"), ConfigError);
}

TEST(Config, RoundTrip)
{
    for (auto t : {Treatment::Baseline, Treatment::LinkBenefit, Treatment::Ranking,
                   Treatment::Interaction}) {
        auto c = SimConfig::for_treatment(t);
        c.master_seed = 123456789012345ULL;
        c.behavior.noise_sd = 0.1;
        c.rank_basis = RankBasis::Cumulative;
        std::ostringstream out;
        write_config(out, c);
        EXPECT_EQ(parse(out.str()), c);
    }
    auto c = SimConfig::for_treatment(Treatment::Baseline);
    c.coeffs = LinkLogitCoeffs::from_odds_ratios(0.2, 3.0, 0.5, 1.5, 0.9, 1.4, 1.0);
    std::ostringstream out;
    write_config(out, c);
    const auto back = parse(out.str());
    EXPECT_NEAR(back.coeffs.intercept, c.coeffs.intercept, 1e-15);
    EXPECT_NEAR(back.coeffs.opp_effort, c.coeffs.opp_effort, 1e-15);
    EXPECT_NEAR(back.coeffs.period, 0.0, 1e-15);
}

TEST(HistoryCsv, HeaderAndRowShape)
{
    auto c = SimConfig::for_treatment(Treatment::LinkBenefit);
    c.groups = 2;
    c.rounds = 3;
    const auto batch = run_batch(c, 2);
    std::ostringstream out;
    write_history_csv(out, batch);
    std::istringstream in(out.str());
    std::string line;
    std::getline(in, line);
    EXPECT_EQ(line, kHistoryHeader);
    std::size_t rows = 0;
    while (std::getline(in, line)) {
        ++rows;
        EXPECT_EQ(std::count(line.begin(), line.end(), ','), 12);
    }
    EXPECT_EQ(rows, 2u * 2u * 3u * 5u);
}

TEST(HistoryCsv, RoundTripIsExact)
{
    for (auto basis : {RankBasis::PerPeriod, RankBasis::Cumulative}) {
        auto c = SimConfig::for_treatment(Treatment::Interaction);
        c.groups = 3;
        c.rounds = 8;
        c.rank_basis = basis;
        const auto batch = run_batch(c, 2);
        std::ostringstream out;
        write_history_csv(out, batch);
        std::istringstream in(out.str());
        EXPECT_EQ(read_history_csv(in), batch);
    }
}

TEST(HistoryCsv, Errors)
{
    std::istringstream empty("");
    EXPECT_THROW((void)read_history_csv(empty), ConfigError);
    std::istringstream bad_header("a,b,c\n");
    EXPECT_THROW((void)read_history_csv(bad_header), ConfigError);
    std::istringstream short_row(std::string(kHistoryHeader) + "\n0,0,1,0,2.5\n");
    EXPECT_THROW((void)read_history_csv(short_row), ConfigError);
    std::istringstream self_link(std::string(kHistoryHeader) + "\n0,0,1,0,2.5,0,0,1,1,1,0,0,1\n");
    EXPECT_THROW((void)read_history_csv(self_link), ConfigError);
}

}  // namespace
}  // namespace lqnet
