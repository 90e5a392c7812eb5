#pragma once
/*
Counter-based deterministic random numbers.

Every random quantity in a run is a pure function of (seed, stream, counter):
draw i of a stream is the SplitMix64 finalizer applied to key + i * gamma,
where the key folds the seed and a stream id together. Separate streams keep
independent consumers (environment generation, action sampling, test
generators) from eating each other's draws, so inserting a draw in one place
never shifts any other sequence. No ambient entropy is used anywhere.
*/

#include <cmath>
#include <cstdint>

namespace saol {

inline constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ULL;

// SplitMix64 finalizer (Stafford mix 13).
inline std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

class CounterRng {
public:
    CounterRng() : CounterRng(0, 0) {}
    CounterRng(std::uint64_t seed, std::uint64_t stream)
        : key_(mix64(seed + kGolden) ^ mix64(stream * 0xda942042e4dd58b5ULL + kGolden)) {}

    std::uint64_t next_u64() { return mix64(key_ + (++counter_) * kGolden); }

    // Uniform in [0,1) with 53 random bits.
    double next_unit() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    double next_range(double lo, double hi) { return lo + (hi - lo) * next_unit(); }

    // Uniform integer in [0, bound), bound >= 1.
    std::uint64_t next_below(std::uint64_t bound) {
        return static_cast<std::uint64_t>(
            (static_cast<unsigned __int128>(next_u64()) * bound) >> 64);
    }

    // Standard normal via Box-Muller; consumes two uniforms per pair.
    double next_normal() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u1 = next_unit();
        double u2 = next_unit();
        while (u1 <= 0.0) u1 = next_unit();
        const double radius = std::sqrt(-2.0 * std::log(u1));
        const double angle = 2.0 * 3.14159265358979323846 * u2;
        spare_ = radius * std::sin(angle);
        have_spare_ = true;
        return radius * std::cos(angle);
    }

private:
    std::uint64_t key_ = 0;
    std::uint64_t counter_ = 0;
    double spare_ = 0.0;
    bool have_spare_ = false;
};

// Stream ids used by the run harness.
enum class RngStream : std::uint64_t {
    Environment = 1,
    ActionSampling = 2,
    Testing = 1000,
};

inline CounterRng make_rng(std::uint64_t seed, RngStream stream) {
    return CounterRng(seed, static_cast<std::uint64_t>(stream));
}

} // namespace saol
