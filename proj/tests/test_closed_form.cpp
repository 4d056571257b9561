// Copyright 2026 The ssq Authors.
// SPDX-License-Identifier: Apache-2.0

#include "closed_form.hpp"

#include <cmath>

#include "doctest.h"
#include "test_util.hpp"

using namespace ssq;
using namespace ssq::test;

TEST_CASE("f_even anchors") {
    CHECK(f_even(1.0, kPi) ==
          doctest::Approx(1.1259691969420542).epsilon(1e-12));
    CHECK(f_even(1.0, kPi - 1.304) == doctest::Approx(2.0).epsilon(2e-3));
    CHECK_THROWS_AS(f_even(kPi / 2.0 - 1e-9, kPi), DegenerateAngle);
    CHECK_THROWS_AS(f_even(1.0, 1e-9), std::exception);
}

TEST_CASE("f_odd anchors") {
    CHECK(f_odd(1.0, kPi) == doctest::Approx(-0.75).epsilon(1e-12));
    // Zero of the continuous count: sin(theta/2) = 1/(2 sin beta).
    const double th0 = 2.0 * std::asin(1.0 / (2.0 * std::sin(1.0)));
    CHECK(std::abs(f_odd(1.0, th0)) < 1e-10);
    CHECK(std::abs(f_odd(1.0, kPi - 1.8688)) < 2e-3);
    CHECK_THROWS_AS(f_odd(kPi / 2.0 - 1e-9, kPi), DegenerateAngle);
}

TEST_CASE("f_odd is continuous across the sign change of its sine term") {
    // The call curve must not jump anywhere on the sweep range.
    for (double b : {0.3, 0.8, 1.0, 1.3}) {
        double prev = f_odd(b, 0.5);
        for (double th = 0.5005; th < 2.0 * kPi - 0.5; th += 0.0005) {
            const double cur = f_odd(b, th);
            // Slope-scaled bound: a wrong branch would jump by about
            // half a period, far above any smooth step.
            CHECK(std::abs(cur - prev) < 0.05 + 0.02 * std::abs(prev));
            prev = cur;
        }
    }
}

TEST_CASE("f_grover anchors") {
    CHECK(f_grover(1.0, kPi) ==
          doctest::Approx((kPi / 2.0 - 1.0) / 2.0).epsilon(1e-13));
    CHECK(f_grover(kPi / 6.0, kPi) == doctest::Approx(1.0).epsilon(1e-13));
    CHECK(f_grover(kPi / 2.0, kPi) == doctest::Approx(0.0).epsilon(1e-13));
    CHECK_THROWS_AS(f_grover(1e-16, kPi), DegenerateAngle);
}

TEST_CASE("delta_e anchors") {
    {
        const PhaseConfig phases{-kPi, kPi};
        const SpectralData sd = spectral(phases, Geometry::from_beta(1.0));
        CHECK(delta_e(1.0, phases, sd) == doctest::Approx(1.0).epsilon(1e-12));
    }
    {
        const double b = 1e-6;
        const PhaseConfig phases{-2.0, 2.0};
        const SpectralData sd = spectral(phases, Geometry::from_beta(b));
        CHECK(std::abs(delta_e(b, phases, sd)) < 2e-6);
    }
    {
        // cos(n w - delta_e) = 0 at a solved even-member angle.
        const double th = 1.8372099666007133;  // f_even(1, th) = 2
        const PhaseConfig phases{-th, th};
        const SpectralData sd = spectral(phases, Geometry::from_beta(1.0));
        const double de = delta_e(1.0, phases, sd);
        CHECK(std::abs(std::cos(2.0 * sd.w - de)) < 1e-10);
        // And within 1e-3 at the four-digit rounding of that angle.
        const double th4 = kPi - 1.304;
        const PhaseConfig p4{-th4, th4};
        const SpectralData sd4 = spectral(p4, Geometry::from_beta(1.0));
        CHECK(std::abs(std::cos(2.0 * sd4.w - delta_e(1.0, p4, sd4))) < 1e-3);
    }
}

TEST_CASE("f_even numerator equals pi/2 + delta_e under matching") {
    auto rng = make_rng(37);
    for (int i = 0; i < 500; ++i) {
        const double b = uniform(rng, 0.02, kPi / 2.0 - 0.02);
        const double th = uniform(rng, 0.2, 2.0 * kPi - 0.2);
        const PhaseConfig phases{-th, th};
        const SpectralData sd = spectral(phases, Geometry::from_beta(b));
        const double fe = f_even(b, th);
        CHECK(std::abs(fe * sd.w - (kPi / 2.0 + delta_e(b, phases, sd))) <
              1e-10);
    }
}

TEST_CASE("ceiling policy") {
    CHECK(ceiling_policy(1.1259691969420542) == 2);
    CHECK(ceiling_policy(2.0000000001) == 2);
    CHECK(ceiling_policy(1.9999999999) == 2);
    CHECK(ceiling_policy(2.000001) == 3);
    CHECK(ceiling_policy(-0.75) == 0);
    CHECK(ceiling_policy(-3.4) == 0);
    CHECK(ceiling_policy(0.0) == 0);
    CHECK(ceiling_policy(1e-10) == 0);
}

TEST_CASE("oracle_calls anchors and parity") {
    CHECK(oracle_calls(MemberKind::EvenA2n, 1.0, kPi).oracle_calls == 4);
    CHECK(oracle_calls(MemberKind::OddA2n1, 1.0, kPi).oracle_calls == 1);
    CHECK(oracle_calls(MemberKind::GroverGn, kPi / 6.0, kPi).oracle_calls == 1);
    CHECK(oracle_calls(MemberKind::GroverGn, 1.0, kPi).oracle_calls == 1);

    auto rng = make_rng(41);
    for (int i = 0; i < 500; ++i) {
        const double b = uniform(rng, 0.02, kPi / 2.0 - 0.02);
        const double th = uniform(rng, 0.2, 2.0 * kPi - 0.2);
        const CountEval ev_e = oracle_calls(MemberKind::EvenA2n, b, th);
        const CountEval ev_o = oracle_calls(MemberKind::OddA2n1, b, th);
        CHECK(ev_e.oracle_calls % 2 == 0);
        CHECK(ev_o.oracle_calls % 2 == 1);
        CHECK(ev_e.oracle_calls == 2 * ev_e.n_iterations);
        CHECK(ev_o.oracle_calls == 2 * ev_o.n_iterations + 1);
        CHECK(ev_e.denominator > 0.0);
        CHECK(ev_o.denominator > 0.0);
    }
}

TEST_CASE("call curves: symmetric about pi and minimal there") {
    for (double b : {1e-3, 0.1, 1.0}) {
        for (MemberKind mk : {MemberKind::EvenA2n, MemberKind::OddA2n1,
                              MemberKind::GroverGn}) {
            // Symmetry c(pi + d) = c(pi - d).
            for (double d : {0.1, 0.7, 1.9, 2.8}) {
                CHECK(std::abs(call_curve(mk, b, kPi + d) -
                               call_curve(mk, b, kPi - d)) < 1e-10);
            }
            // Minimum at the grid point nearest pi.
            const int n = 2001;
            double best = 1e300;
            int best_i = -1;
            int pi_i = -1;
            double pi_dist = 1e300;
            for (int i = 0; i < n; ++i) {
                const double th =
                    0.2 + (2.0 * kPi - 0.4) * static_cast<double>(i) /
                              static_cast<double>(n - 1);
                const double c = call_curve(mk, b, th);
                if (c < best) {
                    best = c;
                    best_i = i;
                }
                if (std::abs(th - kPi) < pi_dist) {
                    pi_dist = std::abs(th - kPi);
                    pi_i = i;
                }
            }
            CHECK(best_i == pi_i);
        }
    }
}

TEST_CASE("solved even count matches the operators") {
    // Construct (beta, theta) pairs with f_even integral by bisecting
    // the closed form, then check the residual amplitude of A_2n.
    auto rng = make_rng(43);
    int solved = 0;
    for (int i = 0; i < 400 && solved < 200; ++i) {
        const double b = uniform(rng, 0.05, kPi / 2.0 - 0.05);
        const double f_pi = f_even(b, kPi);
        const long long n = ceiling_policy(f_pi) + 1;
        double lo = kPi, hi = kPi;
        bool ok = false;
        for (double off = 1e-3; kPi - off > 0.02; off *= 2.0) {
            hi = lo;
            lo = kPi - off;
            if (f_even(b, lo) >= static_cast<double>(n)) {
                ok = true;
                break;
            }
        }
        if (!ok) continue;
        // Bisect f_even(b, th) = n on [lo, hi].
        for (int it = 0; it < 200 && hi - lo > 1e-15; ++it) {
            const double mid = 0.5 * (lo + hi);
            (f_even(b, mid) >= static_cast<double>(n) ? lo : hi) = mid;
        }
        const double th = 0.5 * (lo + hi);
        if (std::abs(f_even(b, th) - static_cast<double>(n)) > 1e-9) continue;
        const Geometry geom = Geometry::from_beta(b);
        const StateVec2 psi = mat_apply(build_a_even(n, {-th, th}, geom),
                                        initial_state(geom));
        CHECK(std::abs(psi.c_perp) < 1e-7);
        ++solved;
    }
    CHECK(solved == 200);
}
