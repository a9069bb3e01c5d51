#pragma once

#include <array>
#include <cmath>
#include <cstdint>

namespace calrank {

// splitmix64, used only to expand seeds into generator state.
inline std::uint64_t splitmix64(std::uint64_t& x) {
    x += 0x9E3779B97F4A7C15ull;
    std::uint64_t z = x;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

// xoshiro256** 1.0. All randomness in the project flows through this
// generator; streams derived from one master seed are independent, so
// components (sampling, shuffling, init, eval) can be re-run in isolation
// without disturbing each other's sequences.
//
// Seeding recipe (also documented in the README):
//   state[0..3] = splitmix64 sequence starting from
//                 mix(seed) XOR (stream_id + 1) * 0xA3EC647659359ACD.
class Rng {
public:
    explicit Rng(std::uint64_t seed) {
        std::uint64_t x = seed;
        for (auto& s : state_) s = splitmix64(x);
    }

    static Rng stream(std::uint64_t seed, std::uint64_t stream_id) {
        std::uint64_t x = seed;
        std::uint64_t mixed = splitmix64(x);
        return Rng(mixed ^ ((stream_id + 1) * 0xA3EC647659359ACDull));
    }

    std::uint64_t next_u64() {
        const std::uint64_t result = rotl(state_[1] * 5, 7) * 9;
        const std::uint64_t t = state_[1] << 17;
        state_[2] ^= state_[0];
        state_[3] ^= state_[1];
        state_[1] ^= state_[2];
        state_[0] ^= state_[3];
        state_[2] ^= t;
        state_[3] = rotl(state_[3], 45);
        return result;
    }

    // Uniform double in [0, 1), 53-bit resolution.
    double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    // Standard normal via Box-Muller (cosine branch only, keeps the
    // stream consumption rate fixed at two words per draw).
    double normal() {
        constexpr double two_pi = 6.283185307179586476925286766559;
        double u1 = 1.0 - uniform();  // (0, 1], log-safe
        double u2 = uniform();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(two_pi * u2);
    }

    // Unbiased integer in [0, n) by rejection.
    std::uint64_t below(std::uint64_t n) {
        const std::uint64_t threshold = (0 - n) % n;
        for (;;) {
            std::uint64_t r = next_u64();
            if (r >= threshold) return r % n;
        }
    }

    int uniform_int(int lo, int hi) {  // inclusive bounds
        return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

    bool bernoulli(double p) { return uniform() < p; }

private:
    static std::uint64_t rotl(std::uint64_t v, int k) {
        return (v << k) | (v >> (64 - k));
    }

    std::array<std::uint64_t, 4> state_{};
};

// Stream ids for the training pipeline. Fixed so that live runs and log
// replays consume identical sub-sequences.
namespace streams {
inline constexpr std::uint64_t kWorldGen = 0;
inline constexpr std::uint64_t kQuerySampling = 1;
inline constexpr std::uint64_t kShuffle = 2;
inline constexpr std::uint64_t kScorerInit = 3;
inline constexpr std::uint64_t kCaliNetInit = 4;
inline constexpr std::uint64_t kHeldOutEval = 5;
inline constexpr std::uint64_t kTrafficSplit = 6;
}  // namespace streams

}  // namespace calrank
