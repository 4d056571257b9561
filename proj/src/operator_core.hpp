// Copyright 2026 The ssq Authors.
// SPDX-License-Identifier: Apache-2.0

// Exact 2x2 complex operators in the {|tau>, |tau_perp>} basis and the
// spectral quantities of the two-step block operator.

#pragma once

#include <complex>
#include <stdexcept>

namespace ssq {

using Complex = std::complex<double>;

struct DegenerateAngle : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct DegenerateSpectrum : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct ConvergenceFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct BetaMismatch : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Row-major, basis order (|tau>, |tau_perp>).
struct Unitary2 {
    Complex a11, a12, a21, a22;
};

struct StateVec2 {
    Complex c_tau, c_perp;
};

struct Geometry {
    double beta = 0.0;          // radians, sin(beta) = sqrt(M/N)
    long long n_items = 0;      // 0 when no concrete instance attached
    long long n_marked = 0;

    static Geometry from_beta(double beta);
    static Geometry from_instance(long long n_items, long long n_marked);
};

struct PhaseConfig {
    double phi = 0.0;
    double theta = 0.0;
};

struct SpectralData {
    double w = 0.0;      // block rotation angle, principal arccos in [0, pi]
    double r = 0.0;      // |cos(theta/2) + i sin(theta/2) cos(2 beta)|
    double gamma = 0.0;  // its argument, in (-pi, pi]
    double x = 0.0;      // eigenvector mixing angle
    double ell = 0.0;    // normalization 2 sin w (sin w + S)
    Complex eig_plus, eig_minus;    // e^{+iw}, e^{-iw}
    StateVec2 vec_plus, vec_minus;  // unit eigenvectors
};

Unitary2 mat_mul(const Unitary2& a, const Unitary2& b);
Unitary2 mat_dagger(const Unitary2& u);
Unitary2 mat_identity();
Unitary2 mat_pow(const Unitary2& u, long long n);  // n >= 0, exp-by-squaring
StateVec2 mat_apply(const Unitary2& u, const StateVec2& v);

StateVec2 initial_state(const Geometry& geom);  // (sin beta, cos beta)

Unitary2 build_i_tau(const PhaseConfig& phases, const Geometry& geom);
Unitary2 build_i_s(const PhaseConfig& phases, const Geometry& geom);
Unitary2 build_g(const PhaseConfig& phases, const Geometry& geom);

// Is^dag Itau^dag Is Itau by explicit 4-matrix product.
Unitary2 build_block(const PhaseConfig& phases, const Geometry& geom);

// Throws DegenerateSpectrum when w < 1e-12 or when the eigenvector
// branch is undefined (both quadratures of x vanish).
SpectralData spectral(const PhaseConfig& phases, const Geometry& geom);

// Closed-form block power for continuous t; falls back to nothing —
// requires a valid SpectralData from spectral().
Unitary2 block_power_continuous(double t, const PhaseConfig& phases,
                                const SpectralData& sd);

Unitary2 build_a_even(long long n, const PhaseConfig& phases,
                      const Geometry& geom);
Unitary2 build_a_odd(long long n, const PhaseConfig& phases,
                     const Geometry& geom);
Unitary2 build_g_power(long long n, const PhaseConfig& phases,
                       const Geometry& geom);

}  // namespace ssq
