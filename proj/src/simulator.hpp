// Copyright 2026 The ssq Authors.
// SPDX-License-Identifier: Apache-2.0

// Exact plan verification: 2D invariant-subspace runs and full
// N-item statevector runs with an explicit marked set.

#pragma once

#include <vector>

#include "planner.hpp"

namespace ssq {

struct SimResult {
    double success_probability = 0.0;
    Complex residual_amplitude;  // <tau_perp | psi_final>
    long long oracle_calls_used = 0;
};

struct FullState {
    std::vector<Complex> amplitudes;
    std::vector<long long> marked;        // sorted, distinct
    std::vector<unsigned char> is_marked; // size N bitmap

    static FullState uniform(long long n_items,
                             const std::vector<long long>& marked);
    double norm_sq() const;
    double success_probability() const;
};

SimResult run_subspace(const Plan& plan);

// Explicit-phase variant; no matching assumed (negative controls).
SimResult run_subspace_raw(MemberKind member, double beta, double theta,
                           double phi, long long n_iterations);

// O(N) selective-phase and inversion-about-average updates.
void apply_i_tau_full(FullState& state, double phi, bool dagger);
void apply_i_s_full(FullState& state, double theta, bool dagger);

// Throws BetaMismatch unless arcsin(sqrt(M/N)) equals plan.beta to 1e-12.
SimResult run_full(const Plan& plan, long long n_items,
                   const std::vector<long long>& marked);

// Success probability after each member step (one block for the even
// member, plus the trailing G for the odd one, one G per step for
// Grover), preceded by the initial-state value.
std::vector<double> run_trace(const Plan& plan, long long n_items,
                              const std::vector<long long>& marked);

}  // namespace ssq
