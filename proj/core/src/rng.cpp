#include "lqnet/rng.hpp"

#include <cmath>
#include <initializer_list>
#include <numbers>

namespace lqnet {

namespace {
constexpr std::uint64_t kGamma = 0x9e3779b97f4a7c15ULL;
}

std::uint64_t RandomStream::mix(std::uint64_t z) noexcept
{
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

RandomStream::RandomStream(const StreamKey& key) noexcept
{
    std::uint64_t h = mix(key.master_seed + kGamma);
    for (std::uint64_t field : {key.replication, key.group, key.period, key.agent,
                                static_cast<std::uint64_t>(key.purpose)})
        h = mix(h ^ mix(field + kGamma));
    key_ = h;
}

std::uint64_t RandomStream::next_u64() noexcept
{
    ++counter_;
    return mix(key_ + counter_ * kGamma);
}

double RandomStream::uniform() noexcept
{
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double RandomStream::normal() noexcept
{
    const double u1 = 1.0 - uniform();  // (0, 1]
    const double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

}  // namespace lqnet
