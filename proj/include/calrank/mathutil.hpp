#pragma once

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>

#include "calrank/errors.hpp"

namespace calrank {

// Numerically stable logistic function. May round to 0.0 or 1.0 for very
// large |x|; use clamp_open_unit for callers that need the open interval.
inline double sigmoid(double x) {
    if (x >= 0.0) {
        return 1.0 / (1.0 + std::exp(-x));
    }
    double e = std::exp(x);
    return e / (1.0 + e);
}

// Largest double below 1.
inline constexpr double kOneMinusUlp = 1.0 - 0x1.0p-53;

// Clamp a probability into the open interval (0, 1).
inline double clamp_open_unit(double p) {
    if (p < std::numeric_limits<double>::min()) return std::numeric_limits<double>::min();
    if (p > kOneMinusUlp) return kOneMinusUlp;
    return p;
}

// log(sigmoid(x)) without overflow on either tail.
inline double log_sigmoid(double x) {
    if (x >= 0.0) return -std::log1p(std::exp(-x));
    return x - std::log1p(std::exp(x));
}

inline double softplus(double x) {
    if (x > 0.0) return x + std::log1p(std::exp(-x));
    return std::log1p(std::exp(x));
}

inline double logit(double p) {
    if (!(p > 0.0 && p < 1.0)) throw DomainError("logit: probability outside (0,1)");
    return std::log(p) - std::log1p(-p);
}

// In-place stable softmax.
inline void softmax_inplace(std::span<double> v) {
    double m = -std::numeric_limits<double>::infinity();
    for (double x : v) m = std::max(m, x);
    double sum = 0.0;
    for (double& x : v) {
        x = std::exp(x - m);
        sum += x;
    }
    for (double& x : v) x /= sum;
}

inline bool all_finite(std::span<const double> v) {
    for (double x : v)
        if (!std::isfinite(x)) return false;
    return true;
}

// FNV-1a 64-bit, used for content hashes of parameter blobs and reports.
inline constexpr std::uint64_t kFnvBasis = 0xcbf29ce484222325ull;

inline std::uint64_t fnv1a(const void* data, std::size_t n,
                           std::uint64_t h = kFnvBasis) {
    const auto* p = static_cast<const unsigned char*>(data);
    for (std::size_t i = 0; i < n; ++i) {
        h ^= p[i];
        h *= 0x100000001b3ull;
    }
    return h;
}

}  // namespace calrank
