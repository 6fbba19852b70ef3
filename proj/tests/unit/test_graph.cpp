#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <set>

#include "fixtures.hpp"
#include "lqnet/errors.hpp"
#include "lqnet/graph.hpp"

namespace lqnet {
namespace {

Network relabel(const Network& g, const std::vector<std::size_t>& perm)
{
    Network out(g.size());
    for (std::size_t i = 0; i < g.size(); ++i)
        for (std::size_t j = i + 1; j < g.size(); ++j)
            if (g(i, j)) out.set_edge(perm[i], perm[j]);
    return out;
}

TEST(Graph, SpectralRadiusKnownValues)
{
    EXPECT_NEAR(spectral_radius(Network::empty(5)), 0.0, 1e-12);
    EXPECT_NEAR(spectral_radius(Network::complete(5)), 4.0, 1e-12);
    EXPECT_NEAR(spectral_radius(Network::star(5)), 2.0, 1e-12);
    // Path on 5 nodes: 2 cos(pi / 6).
    EXPECT_NEAR(spectral_radius(Network::path(5)), std::sqrt(3.0), 1e-12);
}

TEST(Graph, MaskRoundTrip)
{
    EXPECT_EQ(edge_slots(5).size(), 10u);
    for (std::uint64_t mask = 0; mask < 1024; ++mask)
        EXPECT_EQ(network_mask(network_from_mask(5, mask)), mask);
}

TEST(Graph, CanonicalCodeInvariantUnderRelabeling)
{
    std::mt19937_64 rng(17);
    std::vector<std::size_t> perm(5);
    std::iota(perm.begin(), perm.end(), 0);
    for (std::uint64_t mask = 0; mask < 1024; mask += 7) {
        const auto g = network_from_mask(5, mask);
        std::shuffle(perm.begin(), perm.end(), rng);
        EXPECT_EQ(canonical_code(g), canonical_code(relabel(g, perm)));
    }
}

TEST(Graph, IntentionCodeInvariantUnderRelabeling)
{
    std::mt19937_64 rng(19);
    std::vector<std::size_t> perm(5);
    std::iota(perm.begin(), perm.end(), 0);
    for (int trial = 0; trial < 100; ++trial) {
        const auto li = testing::random_intentions(5, rng);
        std::shuffle(perm.begin(), perm.end(), rng);
        LinkIntentions lp(5);
        for (std::size_t i = 0; i < 5; ++i)
            for (std::size_t j = 0; j < 5; ++j)
                if (li(i, j)) lp.set(perm[i], perm[j]);
        EXPECT_EQ(canonical_code(li), canonical_code(lp));
    }
}

TEST(Graph, NonIsomorphicCounts)
{
    // Number of unlabeled simple graphs on n nodes.
    EXPECT_EQ(nonisomorphic_networks(4).size(), 11u);
    EXPECT_EQ(nonisomorphic_networks(5).size(), 34u);
    std::set<std::uint64_t> codes;
    for (std::uint64_t mask = 0; mask < 1024; ++mask)
        codes.insert(canonical_code(network_from_mask(5, mask)));
    EXPECT_EQ(codes.size(), 34u);
}

TEST(Graph, NonIsomorphicGuard)
{
    EXPECT_THROW((void)nonisomorphic_networks(7), EnumerationGuard);
}

TEST(Graph, ParseNetwork)
{
    EXPECT_EQ(parse_network("empty", 5), Network::empty(5));
    EXPECT_EQ(parse_network("star", 5), Network::star(5));
    EXPECT_EQ(parse_network("complete", 5), Network::complete(5));
    const auto g = parse_network("0-1,1-2, 2-3", 5);
    EXPECT_TRUE(g(0, 1) && g(1, 2) && g(2, 3));
    EXPECT_EQ(g.edge_count(), 3u);
    EXPECT_EQ(format_edges(g), "0-1,1-2,2-3");
}

TEST(Graph, ParseNetworkErrors)
{
    EXPECT_THROW((void)parse_network("ring", 5), ConfigError);
    EXPECT_THROW((void)parse_network("0-5", 5), ConfigError);
    EXPECT_THROW((void)parse_network("1-1", 5), ConfigError);
    EXPECT_THROW((void)parse_network("0-", 5), ConfigError);
    EXPECT_THROW((void)parse_network("0-1,,1-2", 5), ConfigError);
}

}  // namespace
}  // namespace lqnet
