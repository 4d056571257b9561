// Copyright 2026 The ssq Authors.
// SPDX-License-Identifier: Apache-2.0

#include "planner.hpp"

#include <algorithm>
#include <cmath>

namespace ssq {

namespace {

constexpr double kPi = 3.14159265358979323846;
const Complex kI(0.0, 1.0);

// First sign change of g scanned from t = 0 in steps of `step`,
// refined by bisection.
double first_root_from_zero(const std::function<double(double)>& g,
                            double step, double tmax) {
    double t_prev = 0.0;
    double g_prev = g(0.0);
    if (g_prev == 0.0) return 0.0;
    for (double t = step; t <= tmax; t += step) {
        const double gt = g(t);
        if (gt == 0.0) return t;
        if ((gt > 0.0) != (g_prev > 0.0)) return bisect(g, t_prev, t, 1e-12);
        t_prev = t;
        g_prev = gt;
    }
    throw ConvergenceFailure("no residual zero found on scan interval");
}

double oracle_even(double beta, double theta) {
    const PhaseConfig phases{-theta, theta};
    const Geometry geom = Geometry::from_beta(beta);
    const SpectralData sd = spectral(phases, geom);
    const StateVec2 s = initial_state(geom);
    // Under phi = -theta the imaginary quadrature of <tau_perp|A(t)|s>
    // vanishes identically; root-solve the real part.
    auto g = [&](double t) {
        const Unitary2 a = block_power_continuous(t, phases, sd);
        return (a.a21 * s.c_tau + a.a22 * s.c_perp).real();
    };
    return first_root_from_zero(g, kPi / (16.0 * sd.w), kPi / sd.w + 1.0);
}

double oracle_odd(double beta, double theta) {
    const PhaseConfig phases{theta, theta};
    const Geometry geom = Geometry::from_beta(beta);
    const SpectralData sd = spectral(phases, geom);
    const StateVec2 s = initial_state(geom);
    const Unitary2 gmat = build_g(phases, geom);

    auto u = [&](double t) {
        const Unitary2 m = mat_mul(gmat, block_power_continuous(t, phases, sd));
        return m.a21 * s.c_tau + m.a22 * s.c_perp;
    };

    // Under phi = theta all u(t) are collinear through the origin:
    // u(t) = z (P cos(tw) + R sin(tw)). Anchor the direction z at
    // t = 0, where the real coefficient P is plain trigonometry.
    const double st = std::sin(theta / 2.0);
    const double sb = std::sin(beta);
    const double cb = std::cos(beta);
    const double p_coef = (1.0 - 4.0 * st * st * sb * sb) * cb;
    if (std::abs(p_coef) < 1e-300)
        throw ConvergenceFailure("odd-member direction anchor vanishes");
    const Complex z = u(0.0) / p_coef;

    auto g = [&](double t) { return (u(t) / z).real(); };
    const double r_coef = g(kPi / (2.0 * sd.w));

    // The residual zero nearest the origin (may be negative); refine
    // the analytic estimate by bisection on a bracket around it.
    const double t0 = std::atan2(p_coef, -r_coef) / sd.w;
    double half = kPi / (8.0 * sd.w);
    const double half_max = 0.499 * kPi / sd.w;
    while (half <= half_max) {
        const double lo = t0 - half, hi = t0 + half;
        if ((g(lo) > 0.0) != (g(hi) > 0.0)) return bisect(g, lo, hi, 1e-12);
        half *= 2.0;
    }
    throw ConvergenceFailure("odd-member residual bracket not found");
}

double oracle_grover(double beta, double theta) {
    const PhaseConfig phases{theta, theta};
    const Geometry geom = Geometry::from_beta(beta);
    const StateVec2 s = initial_state(geom);
    // Reduce G to SU(2): I_s = -e^{i theta/2} * (SU(2) factor) and
    // I_tau = e^{i phi/2} * (SU(2) factor), so the special-unitary
    // representative is -e^{-i(theta+phi)/2} G.
    const Unitary2 gm = build_g(phases, geom);
    const Complex scale = -std::exp(-kI * (theta + phases.phi) / 2.0);
    const Unitary2 gh{scale * gm.a11, scale * gm.a12, scale * gm.a21,
                      scale * gm.a22};
    double c = 0.5 * (gh.a11 + gh.a22).real();
    if (c > 1.0) c = 1.0;
    if (c < -1.0) c = -1.0;
    const double omega = std::acos(c);
    const double so = std::sin(omega);
    if (so < 1e-12) throw DegenerateSpectrum("Grover rotation degenerate");
    // Continuous power via the rotation generator:
    // G^t = cos(t omega) I + sin(t omega) M, M = (G - cos(omega) I)/sin(omega).
    const Complex m21 = (gh.a21) / so;
    const Complex m22 = (gh.a22 - c) / so;
    const Complex drift = m21 * s.c_tau + m22 * s.c_perp;
    auto g = [&](double t) {
        return (std::cos(t * omega) * s.c_perp + std::sin(t * omega) * drift)
            .real();
    };
    return first_root_from_zero(g, kPi / (16.0 * omega), kPi / omega + 1.0);
}

}  // namespace

double bisect(const std::function<double(double)>& f, double lo, double hi,
              double xtol) {
    double flo = f(lo);
    double fhi = f(hi);
    if (flo == 0.0) return lo;
    if (fhi == 0.0) return hi;
    if ((flo > 0.0) == (fhi > 0.0))
        throw ConvergenceFailure("bisection bracket does not straddle a root");
    while (hi - lo > xtol) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;  // interval at double resolution
        const double fm = f(mid);
        if (fm == 0.0) return mid;
        if ((fm > 0.0) == (flo > 0.0)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

long long minimal_calls(MemberKind member, double beta) {
    return oracle_calls(member, beta, kPi).oracle_calls;
}

double continuous_iteration_oracle(MemberKind member, double beta,
                                   double theta) {
    switch (member) {
    case MemberKind::EvenA2n:
        return oracle_even(beta, theta);
    case MemberKind::OddA2n1:
        return oracle_odd(beta, theta);
    case MemberKind::GroverGn:
        return oracle_grover(beta, theta);
    }
    throw std::invalid_argument("bad member");
}

Plan solve_theta_op(MemberKind member, double beta) {
    const long long target = minimal_calls(member, beta);
    auto h = [&](double th) {
        return call_curve(member, beta, th) - static_cast<double>(target);
    };

    double theta_op;
    // The call curves have their minimum at pi, so h(pi) <= 0 up to
    // the ceiling snap; a crossing exists below pi whenever h(pi) < 0.
    if (h(kPi) >= -1e-10) {
        theta_op = kPi;
    } else {
        double off = 1e-3;
        double off_prev = 0.0;
        for (;;) {
            const double lo = std::max(kPi - off, 0.01);
            if (h(lo) >= 0.0) {
                theta_op = bisect(h, lo, kPi - off_prev, 1e-12);
                break;
            }
            if (lo == 0.01)
                throw ConvergenceFailure("no bracket for theta_op in (0.01, pi]");
            off_prev = off;
            off *= 2.0;
        }
    }

    Plan plan;
    plan.member = member;
    plan.beta = beta;
    plan.theta = theta_op;
    plan.phi = matched_phi(member, theta_op);
    plan.theta_mirror = 2.0 * kPi - theta_op;
    plan.oracle_calls = target;
    switch (member) {
    case MemberKind::EvenA2n:
        plan.n_iterations = target / 2;
        break;
    case MemberKind::OddA2n1:
        plan.n_iterations = (target - 1) / 2;
        break;
    case MemberKind::GroverGn:
        plan.n_iterations = target;
        break;
    }
    plan.predicted_success = 1.0;
    return plan;
}

Plan make_plan(MemberKind member, double beta) {
    Plan plan = solve_theta_op(member, beta);
    // The count rule evaluated at the solved theta must reproduce the
    // targeted integer exactly.
    const CountEval ev = oracle_calls(member, beta, plan.theta);
    if (ev.oracle_calls != plan.oracle_calls)
        throw ConvergenceFailure("solved theta_op does not hit the call target");
    return plan;
}

}  // namespace ssq
