#pragma once

#include <cstdint>
#include <string_view>

namespace setupprob::rng {

/**
 * Counter-based SplitMix64.
 *
 * A stream is identified by (seed, stream id). Its k-th output is
 *
 *     mix64(key + (k + 1) * GOLDEN),   key = mix64(seed ^ mix64(stream + GOLDEN))
 *
 * where mix64 is the SplitMix64 finalizer (Steele, Lea, Flood 2014) and
 * GOLDEN = 0x9e3779b97f4a7c15. Every output is a pure function of
 * (seed, stream, k), so work split across threads by stream id reproduces
 * the serial sequence bit for bit.
 *
 * Changing any constant here changes every simulation result; bump
 * kAlgorithm when that happens.
 */
inline constexpr std::string_view kAlgorithm = "splitmix64-counter/1";

inline constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ULL;

constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

class Stream {
public:
    constexpr Stream(std::uint64_t seed, std::uint64_t stream) noexcept
        : key_(mix64(seed ^ mix64(stream + kGolden))) {}

    constexpr std::uint64_t next() noexcept {
        ++counter_;
        return mix64(key_ + counter_ * kGolden);
    }

    // Uniform integer in [0, bound), bound > 0. Lemire's multiply-shift with
    // rejection, so there is no modulo bias.
    constexpr std::uint64_t below(std::uint64_t bound) noexcept {
        using u128 = unsigned __int128;
        u128 m = static_cast<u128>(next()) * bound;
        auto low = static_cast<std::uint64_t>(m);
        if (low < bound) {
            std::uint64_t threshold = (0 - bound) % bound;
            while (low < threshold) {
                m = static_cast<u128>(next()) * bound;
                low = static_cast<std::uint64_t>(m);
            }
        }
        return static_cast<std::uint64_t>(m >> 64);
    }

private:
    std::uint64_t key_;
    std::uint64_t counter_ = 0;
};

}  // namespace setupprob::rng
