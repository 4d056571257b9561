// Copyright 2026 The ssq Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cmath>
#include <random>

#include "operator_core.hpp"

namespace ssq::test {

constexpr double kPi = 3.14159265358979323846;

// Deterministic draws so failures reproduce bit-for-bit.
inline std::mt19937_64 make_rng(uint64_t seed = 0x55C2026ULL) {
    return std::mt19937_64(seed);
}

inline double uniform(std::mt19937_64& rng, double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng);
}

inline double unitarity_deviation(const Unitary2& u) {
    const Unitary2 p = mat_mul(mat_dagger(u), u);
    double d = std::abs(p.a11 - 1.0);
    d = std::max(d, std::abs(p.a12));
    d = std::max(d, std::abs(p.a21));
    d = std::max(d, std::abs(p.a22 - 1.0));
    return d;
}

inline double frobenius_distance(const Unitary2& a, const Unitary2& b) {
    return std::sqrt(std::norm(a.a11 - b.a11) + std::norm(a.a12 - b.a12) +
                     std::norm(a.a21 - b.a21) + std::norm(a.a22 - b.a22));
}

}  // namespace ssq::test
