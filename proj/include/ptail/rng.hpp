#pragma once

#include <cstdint>

namespace ptail {

// Counter-based pseudo-random stream. Output i is a bijective 64-bit mix of
// (key, i), where the key is derived from (seed, stream id). Identical
// (seed, stream) pairs produce identical sequences on every platform, and
// streams with distinct ids are independent, so simulation replicates can be
// assigned one stream each and run in any order or thread count.
class RngStream {
public:
    RngStream(std::uint64_t seed, std::uint64_t stream) noexcept
        : key_(mix(mix(seed + kGolden) ^ mix(stream + kLeaf))), counter_(0) {}

    std::uint64_t next_u64() noexcept { return mix(key_ + (++counter_) * kGolden); }

    // Uniform on the open interval (0,1); never returns an endpoint.
    double uniform() noexcept {
        return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1p-53;
    }

    // Standard normal via Box-Muller; the second value of each pair is cached.
    double normal() noexcept;

    std::uint64_t seed_key() const noexcept { return key_; }

private:
    static constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ULL;
    static constexpr std::uint64_t kLeaf = 0xd1b54a32d192ed03ULL;

    static std::uint64_t mix(std::uint64_t z) noexcept {
        z ^= z >> 30;
        z *= 0xbf58476d1ce4e5b9ULL;
        z ^= z >> 27;
        z *= 0x94d049bb133111ebULL;
        z ^= z >> 31;
        return z;
    }

    std::uint64_t key_;
    std::uint64_t counter_;
    double cached_normal_ = 0.0;
    bool has_cached_ = false;
};

// Binomial(n, p) by inversion from the mode; O(sqrt(n p (1-p))) expected
// steps, deterministic given the stream.
std::uint64_t binomial_draw(std::uint64_t n, double p, RngStream& rng);

}  // namespace ptail
