#pragma once

#include <cmath>
#include <cstdint>
#include <span>

namespace oscatom {

/// Counter-based sampling: sample i is a pure function of (seed, i), so
/// sweeps produce identical streams no matter how iterations are scheduled
/// across threads.
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d4a09147b9b0e5ULL;
    return x ^ (x >> 31);
}

/// Uniform double in [0,1) from 64 random bits (53-bit mantissa path,
/// identical on every platform).
inline double to_unit_double(std::uint64_t bits) {
    return static_cast<double>(bits >> 11) * 0x1.0p-53;
}

inline double uniform(std::uint64_t seed, std::uint64_t counter, double lo, double hi) {
    return lo + (hi - lo) * to_unit_double(splitmix64(seed + 0x632be59bd9b4e019ULL * counter));
}

/// Fills `out` with coordinates uniform in [lo, hi]; sample index and
/// coordinate index are folded into the counter.
inline void sample_cube(std::uint64_t seed, std::uint64_t sample, std::span<double> out,
                        double lo, double hi) {
    for (std::size_t j = 0; j < out.size(); ++j)
        out[j] = uniform(seed, sample * 0x100 + j, lo, hi);
}

/// Point with norm uniform in [r_lo, r_hi]: cube direction rescaled.
inline void sample_shell(std::uint64_t seed, std::uint64_t sample, std::span<double> out,
                         double r_lo, double r_hi) {
    sample_cube(seed, sample * 2 + 1, out, -1.0, 1.0);
    double n2 = 0.0;
    for (double v : out) n2 += v * v;
    if (n2 < 1e-24) {
        out[0] = 1.0;
        n2 = 1.0;
    }
    const double r = uniform(seed, sample * 2, r_lo, r_hi);
    const double scale = r / std::sqrt(n2);
    for (auto& v : out) v *= scale;
}

}  // namespace oscatom
