// Copyright 2026 The ssq Authors.
// SPDX-License-Identifier: Apache-2.0

#include "closed_form.hpp"

#include <cassert>
#include <cmath>
#include <limits>

namespace ssq {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kDenomTol = 1e-14;

// arcsin/arccos arguments may fall up to 1e-12 outside [-1, 1] from
// rounding; anything worse is a logic error.
double clip_unit(double v) {
    if (v > 1.0) {
        if (v > 1.0 + 1e-12) throw DegenerateAngle("inverse-trig argument out of range");
        return 1.0;
    }
    if (v < -1.0) {
        if (v < -1.0 - 1e-12) throw DegenerateAngle("inverse-trig argument out of range");
        return -1.0;
    }
    return v;
}

void check_domain(double beta, double theta) {
    if (!std::isfinite(beta) || !std::isfinite(theta))
        throw std::invalid_argument("non-finite beta/theta");
    if (beta <= 0.0 || beta > kPi / 2.0)
        throw std::invalid_argument("beta must lie in (0, pi/2]");
    if (theta <= 0.0 || theta >= 2.0 * kPi)
        throw std::invalid_argument("theta must lie in (0, 2pi)");
}

}  // namespace

double matched_phi(MemberKind member, double theta) {
    return member == MemberKind::EvenA2n ? -theta : theta;
}

double f_even(double beta, double theta) {
    check_domain(beta, theta);
    const double st = std::sin(theta / 2.0);
    const double sb = std::sin(beta);
    const double cb = std::cos(beta);
    const double s2b = std::sin(2.0 * beta);

    const double w = std::acos(clip_unit(1.0 - 2.0 * st * st * st * st * s2b * s2b));
    if (w < kDenomTol) throw DegenerateAngle("even-member denominator vanishes");

    // The quotient is 0/0 exactly at (beta, theta) = (pi/4, pi); its
    // limit along the matched manifold is 0 there.
    const double inner = 1.0 - st * st * s2b * s2b;
    double arg = 0.0;
    if (inner > 1e-30)
        arg = sb * (1.0 - 2.0 * st * st * cb * cb) / std::sqrt(inner);
    const double numerator = kPi / 2.0 + std::asin(clip_unit(arg));
    return numerator / w;
}

double f_odd(double beta, double theta) {
    check_domain(beta, theta);
    const double st = std::sin(theta / 2.0);
    const double ct = std::cos(theta / 2.0);
    const double sb = std::sin(beta);
    const double cb = std::cos(beta);
    const double s2b = std::sin(2.0 * beta);

    assert(1.0 - st * st * st * st * s2b * s2b >= -1e-12);

    const double w = std::acos(clip_unit(1.0 - 2.0 * st * st * st * st * s2b * s2b));
    if (w < kDenomTol) throw DegenerateAngle("odd-member denominator vanishes");

    // Residual quadrature after n blocks plus one G is
    // P cos(nw) + R sin(nw); the zero nearest the origin is
    // atan2(P, -R) / w, smooth across the sign change of R.
    const double s_term = st * st * std::sin(theta) * s2b * s2b;
    const Complex rg(ct, st * std::cos(2.0 * beta));
    const double r = std::abs(rg);
    const double gamma = std::arg(rg);
    const double sin_x_num = 2.0 * r * st * st * s2b;  // sin(phi/2) = st

    const double p_w = (1.0 - 4.0 * st * st * sb * sb) * cb * std::sin(w);
    const double r_w =
        -4.0 * st * ct * sb * sb * cb * s_term -
        (std::cos(gamma + theta / 2.0) + 4.0 * std::sin(gamma) * st * cb * cb) *
            sb * sin_x_num;
    // Both coefficients vanish identically only at (beta, theta) =
    // (pi/4, pi), where no residual zero exists at all; snap to the
    // directional limit along theta so sweep curves stay continuous.
    if (std::abs(p_w) < 1e-13 && std::abs(r_w) < 1e-13) return -0.5;
    return std::atan2(p_w, -r_w) / w;
}

double f_grover(double beta, double theta) {
    check_domain(beta, theta);
    const double arg = std::sin(theta / 2.0) * std::sin(beta);
    if (arg < kDenomTol) throw DegenerateAngle("Grover rotation angle vanishes");
    const double a = std::asin(clip_unit(arg));
    return (kPi / 2.0 - a) / (2.0 * a);
}

double delta_e(double beta, const PhaseConfig& phases, const SpectralData& sd) {
    return std::asin(
        clip_unit(std::sin(beta) * std::cos(phases.phi / 2.0 - sd.gamma)));
}

long long ceiling_policy(double f) {
    if (!std::isfinite(f)) throw std::invalid_argument("non-finite count");
    const double r = std::round(f);
    double v = (std::abs(f - r) < 1e-9) ? r : std::ceil(f);
    if (v < 0.0) v = 0.0;
    return static_cast<long long>(v);
}

CountEval oracle_calls(MemberKind member, double beta, double theta) {
    CountEval ev;
    ev.member = member;
    ev.beta = beta;
    ev.theta = theta;
    ev.delta_e = std::numeric_limits<double>::quiet_NaN();

    switch (member) {
    case MemberKind::EvenA2n: {
        ev.f_value = f_even(beta, theta);
        const double st = std::sin(theta / 2.0);
        const double s2b = std::sin(2.0 * beta);
        ev.denominator = std::acos(
            clip_unit(1.0 - 2.0 * st * st * st * st * s2b * s2b));
        ev.numerator = ev.f_value * ev.denominator;
        const PhaseConfig phases{-theta, theta};
        ev.delta_e = delta_e(beta, phases, spectral(phases, Geometry::from_beta(beta)));
        ev.n_iterations = ceiling_policy(ev.f_value);
        ev.oracle_calls = 2 * ev.n_iterations;
        break;
    }
    case MemberKind::OddA2n1: {
        ev.f_value = f_odd(beta, theta);
        const double st = std::sin(theta / 2.0);
        const double s2b = std::sin(2.0 * beta);
        ev.denominator = std::acos(
            clip_unit(1.0 - 2.0 * st * st * st * st * s2b * s2b));
        ev.numerator = ev.f_value * ev.denominator;
        ev.n_iterations = ceiling_policy(ev.f_value);
        ev.oracle_calls = 2 * ev.n_iterations + 1;
        break;
    }
    case MemberKind::GroverGn: {
        ev.f_value = f_grover(beta, theta);
        const double a = std::asin(clip_unit(std::sin(theta / 2.0) * std::sin(beta)));
        ev.numerator = kPi / 2.0 - a;
        ev.denominator = 2.0 * a;
        ev.n_iterations = ceiling_policy(ev.f_value);
        ev.oracle_calls = ev.n_iterations;
        break;
    }
    }
    return ev;
}

double call_curve(MemberKind member, double beta, double theta) {
    switch (member) {
    case MemberKind::EvenA2n:
        return 2.0 * f_even(beta, theta);
    case MemberKind::OddA2n1:
        return 2.0 * f_odd(beta, theta) + 1.0;
    case MemberKind::GroverGn:
        return f_grover(beta, theta);
    }
    throw std::invalid_argument("bad member");
}

}  // namespace ssq
