#pragma once

#include <cmath>
#include <cstdint>

namespace qhesim {

/// Default seed for every experiment entry point.
inline constexpr std::uint64_t default_seed = 0xC0FFEE;

/// Deterministic splitmix64 stream. Standard-library distributions are
/// implementation-defined, so all randomness goes through this generator to
/// keep artifacts byte-identical across runs and platforms.
class Rng {
  public:
    explicit Rng(std::uint64_t seed = default_seed) : state_(seed) {}

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    /// Uniform double in [0, 1).
    double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    int next_bit() { return static_cast<int>(next_u64() >> 63); }

    /// Uniform integer in [0, bound).
    std::uint64_t next_below(std::uint64_t bound) { return next_u64() % bound; }

    /// Standard normal via Box-Muller.
    double next_gauss() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u1 = next_double();
        while (u1 <= 0.0) u1 = next_double();
        const double u2 = next_double();
        const double r = std::sqrt(-2.0 * std::log(u1));
        constexpr double two_pi = 6.283185307179586476925287;
        spare_ = r * std::sin(two_pi * u2);
        have_spare_ = true;
        return r * std::cos(two_pi * u2);
    }

    /// Independent stream for trial `index`; mixing keeps trials decorrelated
    /// while remaining reproducible from the root seed.
    Rng spawn(std::uint64_t index) const {
        Rng child(state_ ^ (0x9E3779B97F4A7C15ull * (index + 1)));
        child.next_u64();
        return child;
    }

  private:
    std::uint64_t state_;
    double spare_ = 0.0;
    bool have_spare_ = false;
};

} // namespace qhesim
