#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace cgo {

/// Seeded random stream. Identical seeds yield bit-identical draw sequences,
/// independent of platform or standard library: all transforms are implemented
/// here on top of the mt19937_64 engine (whose output is fixed by the
/// standard) instead of relying on std::*_distribution.
class RngStream {
  public:
    explicit RngStream(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    /// Uniform draw in [0, 1) with 53-bit resolution.
    double uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    /// Uniform draw in [lo, hi).
    double uniform(double lo, double hi) { return lo + uniform01() * (hi - lo); }

    /// Standard normal via Box-Muller. Uses exactly two uniform draws per
    /// call; nothing is cached, so the stream position is predictable.
    double normal() {
        const double u1 = 1.0 - uniform01(); // (0, 1], keeps log() finite
        const double u2 = uniform01();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * 3.14159265358979323846 * u2);
    }

    /// Standard Cauchy draw: tan(pi * (u - 1/2)).
    double cauchy() { return std::tan(3.14159265358979323846 * (uniform01() - 0.5)); }

    /// Uniform integer in [lo, hi] (inclusive). Multiply-shift mapping; the
    /// bias is below 2^-64 * range and irrelevant here.
    int uniform_int(int lo, int hi) {
        const std::uint64_t range = static_cast<std::uint64_t>(hi - lo) + 1;
        const auto wide = static_cast<unsigned __int128>(engine_()) * range;
        return lo + static_cast<int>(wide >> 64);
    }

  private:
    std::mt19937_64 engine_;
};

} // namespace cgo
