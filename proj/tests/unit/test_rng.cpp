#include <gtest/gtest.h>

#include <cmath>
#include <set>

#include "lqnet/rng.hpp"

namespace lqnet {
namespace {

TEST(Rng, MixMatchesSplitMix64Reference)
{
    // First output of the reference SplitMix64 generator seeded with 0.
    EXPECT_EQ(RandomStream::mix(0x9e3779b97f4a7c15ULL), 0xe220a8397b1dcdafULL);
}

TEST(Rng, SameKeySameStream)
{
    StreamKey k{42, 3, 7, 11, 2, StreamPurpose::Effort};
    RandomStream a(k);
    RandomStream b(k);
    for (int i = 0; i < 1000; ++i) EXPECT_EQ(a.next_u64(), b.next_u64());
    EXPECT_EQ(a.draws(), 1000u);
}

TEST(Rng, EveryKeyFieldMatters)
{
    const StreamKey base{42, 3, 7, 11, 2, StreamPurpose::Links};
    std::set<std::uint64_t> firsts;
    auto first = [](StreamKey k) { return RandomStream(k).next_u64(); };
    firsts.insert(first(base));
    auto k = base;
    k.master_seed += 1;
    firsts.insert(first(k));
    k = base;
    k.replication += 1;
    firsts.insert(first(k));
    k = base;
    k.group += 1;
    firsts.insert(first(k));
    k = base;
    k.period += 1;
    firsts.insert(first(k));
    k = base;
    k.agent += 1;
    firsts.insert(first(k));
    k = base;
    k.purpose = StreamPurpose::Effort;
    firsts.insert(first(k));
    EXPECT_EQ(firsts.size(), 7u);
}

TEST(Rng, FieldsAreNotInterchangeable)
{
    RandomStream a(StreamKey{0, 1, 2, 0, 0, StreamPurpose::Links});
    RandomStream b(StreamKey{0, 2, 1, 0, 0, StreamPurpose::Links});
    EXPECT_NE(a.next_u64(), b.next_u64());
}

TEST(Rng, UniformMoments)
{
    RandomStream r(StreamKey{1, 0, 0, 0, 0, StreamPurpose::Links});
    const int n = 200000;
    double sum = 0.0;
    double sq = 0.0;
    for (int i = 0; i < n; ++i) {
        const double u = r.uniform();
        ASSERT_GE(u, 0.0);
        ASSERT_LT(u, 1.0);
        sum += u;
        sq += u * u;
    }
    const double mean = sum / n;
    EXPECT_NEAR(mean, 0.5, 0.005);
    EXPECT_NEAR(sq / n - mean * mean, 1.0 / 12.0, 0.002);
}

TEST(Rng, NormalMoments)
{
    RandomStream r(StreamKey{2, 0, 0, 0, 0, StreamPurpose::Effort});
    const int n = 200000;
    double sum = 0.0;
    double sq = 0.0;
    for (int i = 0; i < n; ++i) {
        const double z = r.normal();
        ASSERT_TRUE(std::isfinite(z));
        sum += z;
        sq += z * z;
    }
    EXPECT_NEAR(sum / n, 0.0, 0.01);
    EXPECT_NEAR(sq / n, 1.0, 0.02);
    EXPECT_EQ(r.draws(), 2u * n);
}

}  // namespace
}  // namespace lqnet
