// Copyright 2026 The ssq Authors.
// SPDX-License-Identifier: Apache-2.0

#include "simulator.hpp"

#include <algorithm>
#include <cmath>

namespace ssq {

namespace {

const Complex kI(0.0, 1.0);

Unitary2 member_matrix(MemberKind member, const PhaseConfig& phases,
                       const Geometry& geom, long long n) {
    switch (member) {
    case MemberKind::EvenA2n:
        return build_a_even(n, phases, geom);
    case MemberKind::OddA2n1:
        return build_a_odd(n, phases, geom);
    case MemberKind::GroverGn:
        return n == 0 ? mat_identity() : build_g_power(n, phases, geom);
    }
    throw std::invalid_argument("bad member");
}

}  // namespace

FullState FullState::uniform(long long n_items,
                             const std::vector<long long>& marked) {
    if (n_items < 1) throw std::invalid_argument("need N >= 1");
    if (marked.empty()) throw std::invalid_argument("need M >= 1");
    FullState st;
    st.marked = marked;
    std::sort(st.marked.begin(), st.marked.end());
    if (std::adjacent_find(st.marked.begin(), st.marked.end()) != st.marked.end())
        throw std::invalid_argument("duplicate marked index");
    if (st.marked.front() < 0 || st.marked.back() >= n_items)
        throw std::invalid_argument("marked index out of range");
    const double amp = 1.0 / std::sqrt(static_cast<double>(n_items));
    st.amplitudes.assign(static_cast<size_t>(n_items), Complex(amp, 0.0));
    st.is_marked.assign(static_cast<size_t>(n_items), 0);
    for (long long idx : st.marked) st.is_marked[static_cast<size_t>(idx)] = 1;
    return st;
}

double FullState::norm_sq() const {
    double s = 0.0;
    for (const Complex& a : amplitudes) s += std::norm(a);
    return s;
}

double FullState::success_probability() const {
    double s = 0.0;
    for (long long idx : marked) s += std::norm(amplitudes[static_cast<size_t>(idx)]);
    return s;
}

SimResult run_subspace_raw(MemberKind member, double beta, double theta,
                           double phi, long long n_iterations) {
    const Geometry geom = Geometry::from_beta(beta);
    const PhaseConfig phases{phi, theta};
    const Unitary2 op = member_matrix(member, phases, geom, n_iterations);
    const StateVec2 psi = mat_apply(op, initial_state(geom));
    SimResult res;
    res.success_probability = std::norm(psi.c_tau);
    res.residual_amplitude = psi.c_perp;
    res.oracle_calls_used =
        member == MemberKind::EvenA2n   ? 2 * n_iterations
        : member == MemberKind::OddA2n1 ? 2 * n_iterations + 1
                                        : n_iterations;
    return res;
}

SimResult run_subspace(const Plan& plan) {
    return run_subspace_raw(plan.member, plan.beta, plan.theta, plan.phi,
                            plan.n_iterations);
}

void apply_i_tau_full(FullState& state, double phi, bool dagger) {
    const Complex ph = std::exp((dagger ? -kI : kI) * phi);
    for (long long idx : state.marked)
        state.amplitudes[static_cast<size_t>(idx)] *= ph;
}

void apply_i_s_full(FullState& state, double theta, bool dagger) {
    // psi <- -psi + (1 - e^{+-i theta}) <s|psi> s, rank-one update.
    const Complex k = 1.0 - std::exp((dagger ? -kI : kI) * theta);
    const size_t n = state.amplitudes.size();
    Complex overlap(0.0, 0.0);
    for (const Complex& a : state.amplitudes) overlap += a;
    overlap /= std::sqrt(static_cast<double>(n));
    const Complex shift = k * overlap / std::sqrt(static_cast<double>(n));
    for (Complex& a : state.amplitudes) a = -a + shift;
}

namespace {

// One pass of the plan's operator sequence; calls step_cb after each
// member step when non-null.
template <typename StepCb>
void run_full_sequence(FullState& st, const Plan& plan, StepCb&& step_cb) {
    const double th = plan.theta;
    const double ph = plan.phi;
    const long long n = plan.n_iterations;
    switch (plan.member) {
    case MemberKind::EvenA2n:
    case MemberKind::OddA2n1:
        for (long long i = 0; i < n; ++i) {
            // Is^dag Itau^dag Is Itau applied right-to-left.
            apply_i_tau_full(st, ph, false);
            apply_i_s_full(st, th, false);
            apply_i_tau_full(st, ph, true);
            apply_i_s_full(st, th, true);
            step_cb(st);
        }
        if (plan.member == MemberKind::OddA2n1) {
            apply_i_tau_full(st, ph, false);
            apply_i_s_full(st, th, false);
            step_cb(st);
        }
        break;
    case MemberKind::GroverGn:
        for (long long i = 0; i < n; ++i) {
            apply_i_tau_full(st, ph, false);
            apply_i_s_full(st, th, false);
            step_cb(st);
        }
        break;
    }
}

void check_beta(const Plan& plan, long long n_items, size_t n_marked) {
    const double beta_inst = std::asin(
        std::sqrt(static_cast<double>(n_marked) / static_cast<double>(n_items)));
    if (std::abs(beta_inst - plan.beta) > 1e-12)
        throw BetaMismatch("plan beta does not match the (N, M) instance");
}

}  // namespace

SimResult run_full(const Plan& plan, long long n_items,
                   const std::vector<long long>& marked) {
    FullState st = FullState::uniform(n_items, marked);
    check_beta(plan, n_items, st.marked.size());
    run_full_sequence(st, plan, [](const FullState&) {});
    SimResult res;
    res.success_probability = st.success_probability();
    // Residual reported as the amplitude on the uniform-over-unmarked
    // direction, the full-space analogue of <tau_perp|psi>.
    Complex perp(0.0, 0.0);
    const size_t n = st.amplitudes.size();
    for (size_t i = 0; i < n; ++i)
        if (!st.is_marked[i]) perp += st.amplitudes[i];
    const size_t m = st.marked.size();
    if (n > m) perp /= std::sqrt(static_cast<double>(n - m));
    res.residual_amplitude = perp;
    res.oracle_calls_used = plan.oracle_calls;
    return res;
}

std::vector<double> run_trace(const Plan& plan, long long n_items,
                              const std::vector<long long>& marked) {
    FullState st = FullState::uniform(n_items, marked);
    check_beta(plan, n_items, st.marked.size());
    std::vector<double> trace;
    trace.push_back(st.success_probability());
    run_full_sequence(st, plan, [&](const FullState& s) {
        trace.push_back(s.success_probability());
    });
    return trace;
}

}  // namespace ssq
