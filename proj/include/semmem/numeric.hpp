#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <utility>

namespace semmem {

inline constexpr double kLogZero = -std::numeric_limits<double>::infinity();

inline double log_add(double a, double b) {
    if (a == kLogZero) return b;
    if (b == kLogZero) return a;
    if (a < b) std::swap(a, b);
    return a + std::log1p(std::exp(b - a));
}

inline double to_log(double p) {
    return p > 0.0 ? std::log(p) : kLogZero;
}

// Uniform double in [0, 1) from the top 53 bits of a 64-bit draw. Used
// instead of std::uniform_real_distribution, whose output is not pinned
// down by the standard and differs across library implementations.
inline double unit_uniform(std::uint64_t raw) {
    return static_cast<double>(raw >> 11) * 0x1.0p-53;
}

}  // namespace semmem
