// Copyright 2026 The ssq Authors.
// SPDX-License-Identifier: Apache-2.0

#include "operator_core.hpp"

#include <cmath>

namespace ssq {

namespace {

constexpr double kPi = 3.14159265358979323846;
const Complex kI(0.0, 1.0);

}  // namespace

Geometry Geometry::from_beta(double beta) {
    if (!std::isfinite(beta) || beta <= 0.0 || beta > kPi / 2.0 + 1e-15)
        throw std::invalid_argument("beta must lie in (0, pi/2]");
    Geometry g;
    g.beta = beta;
    return g;
}

Geometry Geometry::from_instance(long long n_items, long long n_marked) {
    if (n_items < 1 || n_marked < 1 || n_marked > n_items)
        throw std::invalid_argument("need 1 <= M <= N");
    Geometry g;
    g.beta = std::asin(std::sqrt(static_cast<double>(n_marked) /
                                 static_cast<double>(n_items)));
    g.n_items = n_items;
    g.n_marked = n_marked;
    return g;
}

Unitary2 mat_mul(const Unitary2& a, const Unitary2& b) {
    return {a.a11 * b.a11 + a.a12 * b.a21, a.a11 * b.a12 + a.a12 * b.a22,
            a.a21 * b.a11 + a.a22 * b.a21, a.a21 * b.a12 + a.a22 * b.a22};
}

Unitary2 mat_dagger(const Unitary2& u) {
    return {std::conj(u.a11), std::conj(u.a21), std::conj(u.a12),
            std::conj(u.a22)};
}

Unitary2 mat_identity() { return {1.0, 0.0, 0.0, 1.0}; }

Unitary2 mat_pow(const Unitary2& u, long long n) {
    Unitary2 acc = mat_identity();
    Unitary2 base = u;
    while (n > 0) {
        if (n & 1) acc = mat_mul(acc, base);
        base = mat_mul(base, base);
        n >>= 1;
    }
    return acc;
}

StateVec2 mat_apply(const Unitary2& u, const StateVec2& v) {
    return {u.a11 * v.c_tau + u.a12 * v.c_perp,
            u.a21 * v.c_tau + u.a22 * v.c_perp};
}

StateVec2 initial_state(const Geometry& geom) {
    return {Complex(std::sin(geom.beta), 0.0),
            Complex(std::cos(geom.beta), 0.0)};
}

Unitary2 build_i_tau(const PhaseConfig& phases, const Geometry&) {
    return {std::exp(kI * phases.phi), 0.0, 0.0, 1.0};
}

Unitary2 build_i_s(const PhaseConfig& phases, const Geometry& geom) {
    const double sb = std::sin(geom.beta);
    const double cb = std::cos(geom.beta);
    const Complex k = 1.0 - std::exp(kI * phases.theta);
    return {-1.0 + k * sb * sb, k * sb * cb, k * sb * cb, -1.0 + k * cb * cb};
}

Unitary2 build_g(const PhaseConfig& phases, const Geometry& geom) {
    return mat_mul(build_i_s(phases, geom), build_i_tau(phases, geom));
}

Unitary2 build_block(const PhaseConfig& phases, const Geometry& geom) {
    const Unitary2 it = build_i_tau(phases, geom);
    const Unitary2 is = build_i_s(phases, geom);
    return mat_mul(mat_dagger(is), mat_mul(mat_dagger(it), mat_mul(is, it)));
}

SpectralData spectral(const PhaseConfig& phases, const Geometry& geom) {
    const double th = phases.theta;
    const double ph = phases.phi;
    const double st = std::sin(th / 2.0);
    const double sp = std::sin(ph / 2.0);
    const double s2b = std::sin(2.0 * geom.beta);

    SpectralData sd;
    double cw = 1.0 - 2.0 * st * st * sp * sp * s2b * s2b;
    if (cw > 1.0) cw = 1.0;
    if (cw < -1.0) cw = -1.0;
    sd.w = std::acos(cw);
    if (sd.w < 1e-12)
        throw DegenerateSpectrum("block rotation angle vanishes");

    const Complex rg(std::cos(th / 2.0), std::sin(th / 2.0) * std::cos(2.0 * geom.beta));
    sd.r = std::abs(rg);
    sd.gamma = std::arg(rg);

    // Quadratures of the mixing angle x: the diagonal entries of the
    // block are cos w + i S, the off-diagonal magnitude is
    // 2 r sin(theta/2) sin(phi/2) sin(2 beta).
    const double s_term = st * st * std::sin(ph) * s2b * s2b;
    const double sin_x_num = 2.0 * sd.r * st * sp * s2b;
    const double cos_x_num = std::sin(sd.w) + s_term;
    sd.ell = sin_x_num * sin_x_num + cos_x_num * cos_x_num;
    if (std::hypot(sin_x_num, cos_x_num) < 1e-12)
        throw DegenerateSpectrum("eigenvector branch undefined");
    sd.x = std::atan2(sin_x_num, cos_x_num);

    sd.eig_plus = std::exp(kI * sd.w);
    sd.eig_minus = std::exp(-kI * sd.w);

    // Off-diagonal phase of the block is exp(-i(phi/2 - gamma)).
    const Complex phase = std::exp(kI * (ph / 2.0 - sd.gamma));
    const double cx = std::cos(sd.x);
    const double sx = std::sin(sd.x);
    sd.vec_plus = {Complex(cx, 0.0), kI * sx * phase};
    sd.vec_minus = {kI * sx * std::conj(phase), Complex(cx, 0.0)};
    return sd;
}

Unitary2 block_power_continuous(double t, const PhaseConfig& phases,
                                const SpectralData& sd) {
    const double cn = std::cos(t * sd.w);
    const double sn = std::sin(t * sd.w);
    const double c2x = std::cos(2.0 * sd.x);
    const double s2x = std::sin(2.0 * sd.x);
    const Complex phase = std::exp(kI * (phases.phi / 2.0 - sd.gamma));
    const Complex off = s2x * sn * std::conj(phase);
    return {Complex(cn, sn * c2x), off, -std::conj(off),
            Complex(cn, -sn * c2x)};
}

Unitary2 build_a_even(long long n, const PhaseConfig& phases,
                      const Geometry& geom) {
    if (n < 0) throw std::invalid_argument("n must be >= 0");
    if (n == 0) return mat_identity();
    try {
        const SpectralData sd = spectral(phases, geom);
        return block_power_continuous(static_cast<double>(n), phases, sd);
    } catch (const DegenerateSpectrum&) {
        return mat_pow(build_block(phases, geom), n);
    }
}

Unitary2 build_a_odd(long long n, const PhaseConfig& phases,
                     const Geometry& geom) {
    return mat_mul(build_g(phases, geom), build_a_even(n, phases, geom));
}

Unitary2 build_g_power(long long n, const PhaseConfig& phases,
                       const Geometry& geom) {
    if (n < 1) throw std::invalid_argument("n must be >= 1");
    return mat_pow(build_g(phases, geom), n);
}

}  // namespace ssq
