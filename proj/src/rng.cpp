#include "elnet/rng.hpp"

namespace elnet {

namespace {

constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

std::uint64_t splitmix64(std::uint64_t x) {
    x += kGolden;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

} // namespace

std::uint64_t Rng::substream_seed(std::uint64_t seed, std::uint64_t trial) {
    return splitmix64(splitmix64(seed) + kGolden * (trial + 1));
}

} // namespace elnet
