#pragma once

#include <cstdint>
#include <random>

namespace elnet {

/// Seeded generator for the walk simulators: std::mt19937_64, whose output
/// sequence is fixed by the C++ standard, plus a platform-independent
/// 53-bit uniform draw (std::uniform_real_distribution is not portable).
///
/// Substreams: trial i of a run seeded with s uses the engine seeded with
/// substream_seed(s, i), so trials can be evaluated in any order.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    static Rng for_trial(std::uint64_t seed, std::uint64_t trial) {
        return Rng(substream_seed(seed, trial));
    }

    /// splitmix64(splitmix64(seed) + golden * (trial + 1)).
    static std::uint64_t substream_seed(std::uint64_t seed, std::uint64_t trial);

    std::uint64_t next() { return engine_(); }

    /// Uniform on [0, 1) with 53 random bits.
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

private:
    std::mt19937_64 engine_;
};

} // namespace elnet
