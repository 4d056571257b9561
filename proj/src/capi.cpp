// Copyright 2026 The ssq Authors.
// SPDX-License-Identifier: Apache-2.0

#include "ssq/ssq.h"

#include <cmath>
#include <limits>
#include <memory>
#include <new>
#include <vector>

#include "closed_form.hpp"
#include "operator_core.hpp"
#include "planner.hpp"
#include "simulator.hpp"

namespace {

using namespace ssq;

bool to_member(int m, MemberKind* out) {
    switch (m) {
    case SSQ_MEMBER_EVEN:
        *out = MemberKind::EvenA2n;
        return true;
    case SSQ_MEMBER_ODD:
        *out = MemberKind::OddA2n1;
        return true;
    case SSQ_MEMBER_GROVER:
        *out = MemberKind::GroverGn;
        return true;
    }
    return false;
}

int from_member(MemberKind m) {
    switch (m) {
    case MemberKind::EvenA2n:
        return SSQ_MEMBER_EVEN;
    case MemberKind::OddA2n1:
        return SSQ_MEMBER_ODD;
    case MemberKind::GroverGn:
        return SSQ_MEMBER_GROVER;
    }
    return SSQ_MEMBER_GROVER;
}

// Run fn, mapping C++ exceptions onto status codes at the boundary.
template <typename Fn>
ssq_status guarded(Fn&& fn) {
    try {
        fn();
        return SSQ_OK;
    } catch (const DegenerateAngle&) {
        return SSQ_ERR_DEGENERATE_ANGLE;
    } catch (const DegenerateSpectrum&) {
        return SSQ_ERR_DEGENERATE_SPECTRUM;
    } catch (const ConvergenceFailure&) {
        return SSQ_ERR_CONVERGENCE;
    } catch (const BetaMismatch&) {
        return SSQ_ERR_BETA_MISMATCH;
    } catch (const std::bad_alloc&) {
        return SSQ_ERR_RESOURCE;
    } catch (const std::exception&) {
        return SSQ_ERR_INVALID_ARGUMENT;
    }
}

Plan plan_from_c(const ssq_plan& p, MemberKind member) {
    Plan plan;
    plan.member = member;
    plan.beta = p.beta;
    plan.theta = p.theta;
    plan.phi = p.phi;
    plan.theta_mirror = p.theta_mirror;
    plan.n_iterations = p.n_iterations;
    plan.oracle_calls = p.oracle_calls;
    plan.predicted_success = p.predicted_success;
    return plan;
}

void sim_result_to_c(const SimResult& r, ssq_sim_result* out) {
    out->success_probability = r.success_probability;
    out->residual_re = r.residual_amplitude.real();
    out->residual_im = r.residual_amplitude.imag();
    out->oracle_calls_used = r.oracle_calls_used;
}

}  // namespace

struct ssq_sim {
    long long n_items;
    std::vector<long long> marked;
    double beta;
};

extern "C" {

const char* ssq_status_str(ssq_status s) {
    switch (s) {
    case SSQ_OK:
        return "ok";
    case SSQ_ERR_INVALID_ARGUMENT:
        return "invalid argument";
    case SSQ_ERR_DEGENERATE_ANGLE:
        return "degenerate angle";
    case SSQ_ERR_DEGENERATE_SPECTRUM:
        return "degenerate spectrum";
    case SSQ_ERR_CONVERGENCE:
        return "convergence failure";
    case SSQ_ERR_BETA_MISMATCH:
        return "beta mismatch";
    case SSQ_ERR_RESOURCE:
        return "resource limit";
    }
    return "unknown status";
}

ssq_status ssq_minimal_calls(int member, double beta, int64_t* out) {
    MemberKind mk;
    if (!out || !to_member(member, &mk)) return SSQ_ERR_INVALID_ARGUMENT;
    return guarded([&] { *out = minimal_calls(mk, beta); });
}

ssq_status ssq_count_eval(int member, double beta, double theta,
                          ssq_count* out) {
    MemberKind mk;
    if (!out || !to_member(member, &mk)) return SSQ_ERR_INVALID_ARGUMENT;
    return guarded([&] {
        const CountEval ev = oracle_calls(mk, beta, theta);
        out->f_value = ev.f_value;
        out->numerator = ev.numerator;
        out->denominator = ev.denominator;
        out->delta_e = ev.delta_e;
        out->n_iterations = ev.n_iterations;
        out->oracle_calls = ev.oracle_calls;
    });
}

ssq_status ssq_iteration_oracle(int member, double beta, double theta,
                                double* out) {
    MemberKind mk;
    if (!out || !to_member(member, &mk)) return SSQ_ERR_INVALID_ARGUMENT;
    return guarded([&] { *out = continuous_iteration_oracle(mk, beta, theta); });
}

ssq_status ssq_oracle_call_curves(double beta, double theta_min,
                                  double theta_max, size_t steps,
                                  ssq_sweep_row* rows) {
    if (!rows || steps < 2 || !(theta_min < theta_max))
        return SSQ_ERR_INVALID_ARGUMENT;
    if (!std::isfinite(beta) || beta <= 0.0 || beta > 1.5707963267948966)
        return SSQ_ERR_INVALID_ARGUMENT;
    return guarded([&] {
        const double nan = std::numeric_limits<double>::quiet_NaN();
        for (size_t i = 0; i < steps; ++i) {
            const double th = theta_min + (theta_max - theta_min) *
                                              static_cast<double>(i) /
                                              static_cast<double>(steps - 1);
            rows[i].theta = th;
            for (MemberKind mk : {MemberKind::EvenA2n, MemberKind::OddA2n1,
                                  MemberKind::GroverGn}) {
                double v;
                try {
                    v = call_curve(mk, beta, th);
                } catch (const DegenerateAngle&) {
                    v = nan;
                } catch (const std::invalid_argument&) {
                    v = nan;
                }
                if (mk == MemberKind::EvenA2n)
                    rows[i].c_even = v;
                else if (mk == MemberKind::OddA2n1)
                    rows[i].c_odd = v;
                else
                    rows[i].c_grover = v;
            }
        }
    });
}

ssq_status ssq_plan_make(int member, double beta, ssq_plan* out) {
    MemberKind mk;
    if (!out || !to_member(member, &mk)) return SSQ_ERR_INVALID_ARGUMENT;
    return guarded([&] {
        const Plan p = make_plan(mk, beta);
        out->member = from_member(p.member);
        out->beta = p.beta;
        out->theta = p.theta;
        out->phi = p.phi;
        out->theta_mirror = p.theta_mirror;
        out->n_iterations = p.n_iterations;
        out->oracle_calls = p.oracle_calls;
        out->predicted_success = p.predicted_success;
    });
}

ssq_status ssq_run_subspace(const ssq_plan* plan, ssq_sim_result* out) {
    MemberKind mk;
    if (!plan || !out || !to_member(plan->member, &mk))
        return SSQ_ERR_INVALID_ARGUMENT;
    return guarded([&] {
        sim_result_to_c(run_subspace(plan_from_c(*plan, mk)), out);
    });
}

ssq_status ssq_run_subspace_raw(int member, double beta, double theta,
                                double phi, int64_t n_iterations,
                                ssq_sim_result* out) {
    MemberKind mk;
    if (!out || !to_member(member, &mk)) return SSQ_ERR_INVALID_ARGUMENT;
    if (n_iterations < 0) return SSQ_ERR_INVALID_ARGUMENT;
    return guarded([&] {
        sim_result_to_c(run_subspace_raw(mk, beta, theta, phi, n_iterations),
                        out);
    });
}

ssq_status ssq_sim_create(int64_t n_items, const int64_t* marked,
                          size_t n_marked, ssq_sim** out) {
    if (!out || !marked || n_items < 1 || n_marked < 1 ||
        n_marked > static_cast<size_t>(n_items))
        return SSQ_ERR_INVALID_ARGUMENT;
    if (n_items > (1LL << 20)) return SSQ_ERR_RESOURCE;
    *out = nullptr;
    return guarded([&] {
        auto sim = std::make_unique<ssq_sim>();
        sim->n_items = n_items;
        sim->marked.assign(marked, marked + n_marked);
        // Validate indices and derive beta through the same path the
        // runs use.
        FullState::uniform(n_items, sim->marked);
        sim->beta = std::asin(std::sqrt(static_cast<double>(n_marked) /
                                        static_cast<double>(n_items)));
        *out = sim.release();
    });
}

void ssq_sim_destroy(ssq_sim* sim) { delete sim; }

ssq_status ssq_sim_beta(const ssq_sim* sim, double* out) {
    if (!sim || !out) return SSQ_ERR_INVALID_ARGUMENT;
    *out = sim->beta;
    return SSQ_OK;
}

ssq_status ssq_sim_run_plan(ssq_sim* sim, const ssq_plan* plan,
                            ssq_sim_result* out) {
    MemberKind mk;
    if (!sim || !plan || !out || !to_member(plan->member, &mk))
        return SSQ_ERR_INVALID_ARGUMENT;
    return guarded([&] {
        sim_result_to_c(
            run_full(plan_from_c(*plan, mk), sim->n_items, sim->marked), out);
    });
}

ssq_status ssq_sim_run_trace(ssq_sim* sim, const ssq_plan* plan, double* trace,
                             size_t trace_capacity, size_t* n_written) {
    MemberKind mk;
    if (!sim || !plan || !trace || !n_written || !to_member(plan->member, &mk))
        return SSQ_ERR_INVALID_ARGUMENT;
    std::vector<double> t;
    const ssq_status st = guarded([&] {
        t = run_trace(plan_from_c(*plan, mk), sim->n_items, sim->marked);
    });
    if (st != SSQ_OK) return st;
    if (t.size() > trace_capacity) return SSQ_ERR_RESOURCE;
    for (size_t i = 0; i < t.size(); ++i) trace[i] = t[i];
    *n_written = t.size();
    return SSQ_OK;
}

}  // extern "C"
