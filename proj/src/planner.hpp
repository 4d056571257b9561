// Copyright 2026 The ssq Authors.
// SPDX-License-Identifier: Apache-2.0

// Optimal-phase selection: pick theta_op nearest pi at which the
// member's continuous call curve hits the minimal integer count, and
// provide an independent continuous-iteration oracle that re-derives
// the counts from the operators alone.

#pragma once

#include <functional>

#include "closed_form.hpp"
#include "operator_core.hpp"

namespace ssq {

struct Plan {
    MemberKind member = MemberKind::GroverGn;
    double beta = 0.0;
    double theta = 0.0;
    double phi = 0.0;
    double theta_mirror = 0.0;
    long long n_iterations = 0;
    long long oracle_calls = 0;
    double predicted_success = 1.0;
};

// Bracketed bisection on [lo, hi]; f(lo), f(hi) must differ in sign.
double bisect(const std::function<double(double)>& f, double lo, double hi,
              double xtol);

// Integer call count at theta = pi (the family minimum).
long long minimal_calls(MemberKind member, double beta);

// Root of the residual quadrature in continuous iteration number t,
// computed from the operators' spectral decomposition; agrees with
// f_even / f_odd / f_grover without sharing their formulas.
double continuous_iteration_oracle(MemberKind member, double beta,
                                   double theta);

Plan solve_theta_op(MemberKind member, double beta);
Plan make_plan(MemberKind member, double beta);

}  // namespace ssq
