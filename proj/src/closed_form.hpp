// Copyright 2026 The ssq Authors.
// SPDX-License-Identifier: Apache-2.0

// Closed-form continuous iteration counts and integer oracle-call
// counts for the three family members, phases fixed by the matching
// rules (phi = -theta for the even member, phi = theta otherwise).

#pragma once

#include "operator_core.hpp"

namespace ssq {

enum class MemberKind { EvenA2n, OddA2n1, GroverGn };

struct CountEval {
    MemberKind member;
    double beta = 0.0;
    double theta = 0.0;
    double f_value = 0.0;
    double numerator = 0.0;
    double denominator = 0.0;
    double delta_e = 0.0;  // meaningful for EvenA2n only (NaN otherwise)
    long long n_iterations = 0;
    long long oracle_calls = 0;
};

double matched_phi(MemberKind member, double theta);

// Continuous iteration counts. All throw DegenerateAngle when the
// angular denominator collapses (theta -> 0 mod 2pi, beta -> 0 or,
// for even/odd, beta -> pi/2).
double f_even(double beta, double theta);
double f_odd(double beta, double theta);  // may be negative
double f_grover(double beta, double theta);

// delta_e = arcsin(sin(beta) cos(phi/2 - gamma)); even member phase.
double delta_e(double beta, const PhaseConfig& phases,
               const SpectralData& sd);

// Smallest admissible integer count: snap to round(f) when within
// 1e-9, otherwise ceil(f); clamped below at 0.
long long ceiling_policy(double f);

CountEval oracle_calls(MemberKind member, double beta, double theta);

// Continuous oracle-call curves c_e = 2 f_e, c_o = 2 f_o + 1, c = f.
double call_curve(MemberKind member, double beta, double theta);

}  // namespace ssq
