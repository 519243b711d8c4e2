#pragma once

#include <cstdint>
#include <random>

#include "pursuit/vec2.hpp"

namespace pursuit {

// Stream ids for fixed-offset seed splitting. Simulation draws and
// evaluation (GA) draws must never share a stream.
inline constexpr std::uint64_t kSimStream = 1;
inline constexpr std::uint64_t kEvalStream = 2;

inline std::uint64_t splitmix64(std::uint64_t& state) {
    state += 0x9E3779B97F4A7C15ull;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

/// Derive an independent stream seed from a master seed and a stream id.
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream) {
    std::uint64_t s = master ^ (0xD1B54A32D192ED03ull * (stream + 1));
    std::uint64_t a = splitmix64(s);
    std::uint64_t b = splitmix64(s);
    return a ^ (b << 1);
}

/// Seeded generator with portable draw helpers. All randomness in the
/// artifact flows through this class so runs replay bit-identically.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    /// Uniform double in [0, 1), 53-bit resolution.
    double uniform01() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

    /// Uniform index in [0, n).
    std::size_t below(std::size_t n) {
        std::size_t i = static_cast<std::size_t>(uniform01() * static_cast<double>(n));
        return i < n ? i : n - 1;
    }

    /// Box-Muller normal draw; consumes two uniforms per call.
    double normal(double mean, double sigma) {
        const double u1 = 1.0 - uniform01();
        const double u2 = uniform01();
        const double r = std::sqrt(-2.0 * std::log(u1));
        return mean + sigma * r * std::cos(kTwoPi * u2);
    }

private:
    std::mt19937_64 engine_;
};

}  // namespace pursuit
