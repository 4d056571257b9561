// Copyright 2026 The ssq Authors.
// SPDX-License-Identifier: Apache-2.0

// Black-box coverage of the extern-C surface.

#include "ssq/ssq.h"

#include <cmath>
#include <cstring>
#include <string>
#include <vector>

#include "doctest.h"

namespace {
constexpr double kPi = 3.14159265358979323846;
}

TEST_CASE("status strings") {
    CHECK(std::string(ssq_status_str(SSQ_OK)) == "ok");
    CHECK(std::strlen(ssq_status_str(SSQ_ERR_CONVERGENCE)) > 0);
    CHECK(std::strlen(ssq_status_str(SSQ_ERR_BETA_MISMATCH)) > 0);
}

TEST_CASE("minimal calls and counts") {
    int64_t calls = 0;
    CHECK(ssq_minimal_calls(SSQ_MEMBER_EVEN, 1.0, &calls) == SSQ_OK);
    CHECK(calls == 4);
    CHECK(ssq_minimal_calls(SSQ_MEMBER_ODD, 1.0, &calls) == SSQ_OK);
    CHECK(calls == 1);
    CHECK(ssq_minimal_calls(SSQ_MEMBER_GROVER, 1.0, &calls) == SSQ_OK);
    CHECK(calls == 1);
    CHECK(ssq_minimal_calls(99, 1.0, &calls) == SSQ_ERR_INVALID_ARGUMENT);
    CHECK(ssq_minimal_calls(SSQ_MEMBER_EVEN, -1.0, &calls) ==
          SSQ_ERR_INVALID_ARGUMENT);

    ssq_count count;
    CHECK(ssq_count_eval(SSQ_MEMBER_EVEN, 1.0, kPi, &count) == SSQ_OK);
    CHECK(std::abs(count.f_value - 1.1259691969420542) < 1e-12);
    CHECK(count.n_iterations == 2);
    CHECK(count.oracle_calls == 4);
    CHECK(std::abs(count.delta_e - 1.0) < 1e-12);
    CHECK(std::abs(count.numerator - count.f_value * count.denominator) <
          1e-12);

    CHECK(ssq_count_eval(SSQ_MEMBER_ODD, 1.0, kPi, &count) == SSQ_OK);
    CHECK(std::abs(count.f_value + 0.75) < 1e-12);
    CHECK(count.oracle_calls == 1);
    CHECK(std::isnan(count.delta_e));

    CHECK(ssq_count_eval(SSQ_MEMBER_EVEN, kPi / 2.0, kPi, &count) ==
          SSQ_ERR_DEGENERATE_ANGLE);
}

TEST_CASE("iteration oracle through the C surface") {
    double t = 0.0;
    CHECK(ssq_iteration_oracle(SSQ_MEMBER_GROVER, kPi / 6.0, kPi, &t) ==
          SSQ_OK);
    CHECK(std::abs(t - 1.0) < 1e-9);
    CHECK(ssq_iteration_oracle(SSQ_MEMBER_ODD, 1.0, kPi, &t) == SSQ_OK);
    CHECK(std::abs(t + 0.75) < 1e-9);
}

TEST_CASE("oracle call curves") {
    std::vector<ssq_sweep_row> rows(101);
    CHECK(ssq_oracle_call_curves(1.0, 0.2, 2.0 * kPi - 0.2, rows.size(),
                                 rows.data()) == SSQ_OK);
    CHECK(rows.front().theta == doctest::Approx(0.2));
    CHECK(rows.back().theta == doctest::Approx(2.0 * kPi - 0.2));
    for (size_t i = 1; i < rows.size(); ++i)
        CHECK(rows[i].theta > rows[i - 1].theta);
    CHECK(ssq_oracle_call_curves(1.0, 0.2, 6.0, 1, rows.data()) ==
          SSQ_ERR_INVALID_ARGUMENT);
    // Degenerate beta produces NaN rows, not a hard failure.
    std::vector<ssq_sweep_row> deg(3);
    CHECK(ssq_oracle_call_curves(kPi / 2.0, 0.2, 6.0, deg.size(), deg.data()) ==
          SSQ_OK);
    CHECK(std::isnan(deg[0].c_even));
    CHECK(std::isnan(deg[0].c_odd));
    CHECK(!std::isnan(deg[0].c_grover));
}

TEST_CASE("plan and subspace run") {
    ssq_plan plan;
    CHECK(ssq_plan_make(SSQ_MEMBER_ODD, 1.0, &plan) == SSQ_OK);
    CHECK(std::abs(plan.theta - (kPi - 1.87)) < 5e-3);
    CHECK(plan.phi == plan.theta);
    CHECK(std::abs(plan.theta_mirror - (2.0 * kPi - plan.theta)) < 1e-14);
    CHECK(plan.oracle_calls == 1);
    CHECK(plan.predicted_success == 1.0);

    ssq_sim_result res;
    CHECK(ssq_run_subspace(&plan, &res) == SSQ_OK);
    CHECK(res.success_probability >= 1.0 - 1e-9);
    CHECK(std::hypot(res.residual_re, res.residual_im) < 1e-6);
    CHECK(res.oracle_calls_used == 1);

    // Raw run with unmatched phases is a valid negative control.
    CHECK(ssq_run_subspace_raw(SSQ_MEMBER_EVEN, 1.0, kPi, kPi / 2.0, 1,
                               &res) == SSQ_OK);
    CHECK(res.success_probability < 1.0 - 1e-3);
}

TEST_CASE("full simulator handle") {
    const int64_t marked[] = {2};
    ssq_sim* sim = nullptr;
    REQUIRE(ssq_sim_create(4, marked, 1, &sim) == SSQ_OK);
    double beta = 0.0;
    CHECK(ssq_sim_beta(sim, &beta) == SSQ_OK);
    CHECK(std::abs(beta - kPi / 6.0) < 1e-14);

    ssq_plan plan;
    REQUIRE(ssq_plan_make(SSQ_MEMBER_GROVER, beta, &plan) == SSQ_OK);
    ssq_sim_result res;
    CHECK(ssq_sim_run_plan(sim, &plan, &res) == SSQ_OK);
    CHECK(res.success_probability >= 1.0 - 1e-12);

    double trace[8];
    size_t n_written = 0;
    CHECK(ssq_sim_run_trace(sim, &plan, trace, 8, &n_written) == SSQ_OK);
    REQUIRE(n_written == 2);
    CHECK(std::abs(trace[0] - 0.25) < 1e-13);
    CHECK(std::abs(trace[1] - 1.0) < 1e-12);

    plan.beta += 1e-3;
    CHECK(ssq_sim_run_plan(sim, &plan, &res) == SSQ_ERR_BETA_MISMATCH);
    ssq_sim_destroy(sim);

    // Validation failures.
    CHECK(ssq_sim_create(4, marked, 0, &sim) == SSQ_ERR_INVALID_ARGUMENT);
    const int64_t bad[] = {9};
    CHECK(ssq_sim_create(4, bad, 1, &sim) == SSQ_ERR_INVALID_ARGUMENT);
    CHECK(ssq_sim_create((1LL << 20) + 1, marked, 1, &sim) ==
          SSQ_ERR_RESOURCE);
}
