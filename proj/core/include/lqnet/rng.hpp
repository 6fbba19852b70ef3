#pragma once

#include <cstdint>

namespace lqnet {

/// What a random stream is used for; part of the stream key so that link and
/// effort draws of the same agent never share numbers.
enum class StreamPurpose : std::uint64_t { Links = 1, Effort = 2 };

/// Coordinates of one independent substream. Identical keys give identical
/// streams on every run and every thread schedule.
struct StreamKey {
    std::uint64_t master_seed = 0;
    std::uint64_t replication = 0;
    std::uint64_t group = 0;
    std::uint64_t period = 0;
    std::uint64_t agent = 0;
    StreamPurpose purpose = StreamPurpose::Links;
};

/// Counter-based generator: the k-th draw is a bijective 64-bit mix of
/// (key hash + k * golden gamma), i.e. the SplitMix64 output function applied
/// to a counter. No state beyond the counter, so substreams are free to create.
class RandomStream {
public:
    explicit RandomStream(const StreamKey& key) noexcept;

    [[nodiscard]] std::uint64_t next_u64() noexcept;
    /// Uniform on [0, 1) with 53 random bits.
    [[nodiscard]] double uniform() noexcept;
    /// Standard normal via the Box-Muller transform (one value per call).
    [[nodiscard]] double normal() noexcept;

    [[nodiscard]] std::uint64_t draws() const noexcept { return counter_; }

    static std::uint64_t mix(std::uint64_t z) noexcept;

private:
    std::uint64_t key_;
    std::uint64_t counter_ = 0;
};

}  // namespace lqnet
