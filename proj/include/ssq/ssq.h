// Copyright 2026 The ssq Authors.
// SPDX-License-Identifier: Apache-2.0

// C API for the sure-success search planning library.
//
// All functions return an ssq_status; results are written through out
// parameters. Matrices and states live in the 2-dimensional invariant
// subspace spanned by the marked state |tau> and its orthogonal
// complement |tau_perp>, in that basis order.

#ifndef SSQ_H_
#define SSQ_H_

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define SSQ_API __declspec(dllexport)
#else
#define SSQ_API __attribute__((visibility("default")))
#endif

typedef enum ssq_status {
    SSQ_OK = 0,
    SSQ_ERR_INVALID_ARGUMENT = 1,
    SSQ_ERR_DEGENERATE_ANGLE = 2,
    SSQ_ERR_DEGENERATE_SPECTRUM = 3,
    SSQ_ERR_CONVERGENCE = 4,
    SSQ_ERR_BETA_MISMATCH = 5,
    SSQ_ERR_RESOURCE = 6
} ssq_status;

typedef enum ssq_member {
    SSQ_MEMBER_EVEN = 0,   /* A_2n = (Is^ It^ Is It)^n, phase rule phi = -theta */
    SSQ_MEMBER_ODD = 1,    /* A_2n+1 = G * A_2n,        phase rule phi =  theta */
    SSQ_MEMBER_GROVER = 2  /* G^n,                      phase rule phi =  theta */
} ssq_member;

/* Complete sure-success run description. */
typedef struct ssq_plan {
    int member;               /* ssq_member */
    double beta;              /* problem angle, sin(beta) = sqrt(M/N) */
    double theta;             /* selected phase, nearest pi */
    double phi;               /* matched companion phase */
    double theta_mirror;      /* 2*pi - theta */
    int64_t n_iterations;
    int64_t oracle_calls;
    double predicted_success; /* 1.0 by construction */
} ssq_plan;

/* Continuous-count evaluation at one (beta, theta). */
typedef struct ssq_count {
    double f_value;     /* continuous iteration count */
    double numerator;   /* inverse-trig numerator of f */
    double denominator; /* angular denominator of f */
    double delta_e;     /* even member only; NaN otherwise */
    int64_t n_iterations;
    int64_t oracle_calls;
} ssq_count;

/* One theta sample of the three oracle-call curves. NaN marks a
 * degenerate angle for that curve. */
typedef struct ssq_sweep_row {
    double theta;
    double c_even;
    double c_odd;
    double c_grover;
} ssq_sweep_row;

typedef struct ssq_sim_result {
    double success_probability;
    double residual_re; /* <tau_perp| psi_final > */
    double residual_im;
    int64_t oracle_calls_used;
} ssq_sim_result;

SSQ_API const char* ssq_status_str(ssq_status s);

/* Minimal integer oracle-call count for the member at theta = pi. */
SSQ_API ssq_status ssq_minimal_calls(int member, double beta, int64_t* out);

/* Closed-form count evaluation at (beta, theta); phi fixed by the
 * member's phase rule. */
SSQ_API ssq_status ssq_count_eval(int member, double beta, double theta,
                                  ssq_count* out);

/* Independent continuous-iteration oracle (root solve on the residual
 * quadrature); cross-checks ssq_count_eval's f_value. */
SSQ_API ssq_status ssq_iteration_oracle(int member, double beta, double theta,
                                        double* out);

/* Evaluate c_even, c_odd, c_grover on a theta grid of `steps` points on
 * [theta_min, theta_max]. rows must hold `steps` entries. Degenerate
 * angles yield NaN entries, not an error. */
SSQ_API ssq_status ssq_oracle_call_curves(double beta, double theta_min,
                                          double theta_max, size_t steps,
                                          ssq_sweep_row* rows);

/* Plan the sure-success run: theta_op nearest pi hitting the minimal
 * call count. */
SSQ_API ssq_status ssq_plan_make(int member, double beta, ssq_plan* out);

/* Exact run in the 2D invariant subspace. */
SSQ_API ssq_status ssq_run_subspace(const ssq_plan* plan, ssq_sim_result* out);

/* As above with explicit phases and iteration count (negative-control /
 * override path; no matching assumed). */
SSQ_API ssq_status ssq_run_subspace_raw(int member, double beta, double theta,
                                        double phi, int64_t n_iterations,
                                        ssq_sim_result* out);

/* Full N-item statevector simulator; opaque handle. */
typedef struct ssq_sim ssq_sim;

/* marked: array of n_marked distinct indices in [0, n_items). */
SSQ_API ssq_status ssq_sim_create(int64_t n_items, const int64_t* marked,
                                  size_t n_marked, ssq_sim** out);
SSQ_API void ssq_sim_destroy(ssq_sim* sim);

/* beta implied by the instance: arcsin(sqrt(M/N)). */
SSQ_API ssq_status ssq_sim_beta(const ssq_sim* sim, double* out);

/* Run the plan on the full statevector. Fails with
 * SSQ_ERR_BETA_MISMATCH unless plan->beta matches the instance to
 * 1e-12. */
SSQ_API ssq_status ssq_sim_run_plan(ssq_sim* sim, const ssq_plan* plan,
                                    ssq_sim_result* out);

/* Per-step success-probability trace, including the initial state.
 * trace must hold n_iterations + 1 (+1 more for the odd member's final
 * G step) entries; the number written is returned in *n_written. */
SSQ_API ssq_status ssq_sim_run_trace(ssq_sim* sim, const ssq_plan* plan,
                                     double* trace, size_t trace_capacity,
                                     size_t* n_written);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* SSQ_H_ */
