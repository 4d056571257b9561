// Copyright 2026 The ssq Authors.
// SPDX-License-Identifier: Apache-2.0

// Command-line front end for the sure-success search planner. Talks to
// the library exclusively through the C API.
//
// Exit codes: 0 success, 1 validation/IO error, 2 numerical or
// convergence failure.

#include <algorithm>
#include <cinttypes>
#include <cmath>
#include <limits>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "ssq/ssq.h"

namespace {

using nlohmann::json;

constexpr double kPi = 3.14159265358979323846;
constexpr int kExitOk = 0;
constexpr int kExitValidation = 1;
constexpr int kExitNumerical = 2;

int status_exit_code(ssq_status st) {
    switch (st) {
    case SSQ_OK:
        return kExitOk;
    case SSQ_ERR_DEGENERATE_ANGLE:
    case SSQ_ERR_DEGENERATE_SPECTRUM:
    case SSQ_ERR_CONVERGENCE:
        return kExitNumerical;
    default:
        return kExitValidation;
    }
}

int fail(ssq_status st, const std::string& what) {
    std::cerr << "error: " << what << ": " << ssq_status_str(st) << "\n";
    return status_exit_code(st);
}

const char* member_name(int member) {
    switch (member) {
    case SSQ_MEMBER_EVEN:
        return "even";
    case SSQ_MEMBER_ODD:
        return "odd";
    case SSQ_MEMBER_GROVER:
        return "grover";
    }
    return "?";
}

std::string fmt15(double v) {
    if (std::isnan(v)) return "nan";
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.15g", v);
    return buf;
}

struct Options {
    std::optional<double> beta;
    std::optional<int64_t> n_items;
    std::vector<int64_t> marked;
    std::string member_str;
    double theta_min = 0.2;
    double theta_max = 2.0 * kPi - 0.2;
    int64_t steps = 1001;
    std::optional<double> theta_override;
    std::string output_path;
    std::string format = "csv";
};

bool parse_member(const std::string& s, int* out) {
    if (s == "even") *out = SSQ_MEMBER_EVEN;
    else if (s == "odd") *out = SSQ_MEMBER_ODD;
    else if (s == "grover") *out = SSQ_MEMBER_GROVER;
    else return false;
    return true;
}

// beta comes either directly or from a concrete (N, marked) instance.
int resolve_beta(const Options& opt, double* beta, bool* has_instance) {
    const bool inst = opt.n_items.has_value() || !opt.marked.empty();
    if (opt.beta.has_value() == inst) {
        std::cerr << "error: give exactly one of --beta or "
                     "--n-items/--marked\n";
        return kExitValidation;
    }
    if (opt.beta) {
        *beta = *opt.beta;
        *has_instance = false;
        if (!(*beta > 0.0) || !(*beta <= kPi / 2.0) || !std::isfinite(*beta)) {
            std::cerr << "error: beta out of range (0, pi/2]\n";
            return kExitValidation;
        }
        return kExitOk;
    }
    if (!opt.n_items || opt.marked.empty()) {
        std::cerr << "error: instance needs both --n-items and --marked\n";
        return kExitValidation;
    }
    for (int64_t idx : opt.marked) {
        if (idx < 0 || idx >= *opt.n_items) {
            std::cerr << "error: marked index out of range\n";
            return kExitValidation;
        }
    }
    *beta = std::asin(std::sqrt(static_cast<double>(opt.marked.size()) /
                                static_cast<double>(*opt.n_items)));
    *has_instance = true;
    return kExitOk;
}

int emit(const Options& opt, const std::string& text) {
    if (opt.output_path.empty()) {
        std::cout << text;
        return kExitOk;
    }
    std::ofstream out(opt.output_path, std::ios::binary);
    if (!out) {
        std::cerr << "error: cannot open output path: " << opt.output_path
                  << "\n";
        return kExitValidation;
    }
    out << text;
    if (!out.good()) {
        std::cerr << "error: write failed: " << opt.output_path << "\n";
        return kExitValidation;
    }
    return kExitOk;
}

json plan_to_json(const ssq_plan& p) {
    return json{{"member", member_name(p.member)},
                {"beta", p.beta},
                {"theta_op", p.theta},
                {"theta_mirror", p.theta_mirror},
                {"phi", p.phi},
                {"n_iterations", p.n_iterations},
                {"oracle_calls", p.oracle_calls},
                {"predicted_success", p.predicted_success}};
}

// Build a plan; --theta-override bypasses the solver and fixes theta
// (matched phi, count rule applied at the forced angle). Overridden
// plans are not sure-success by construction.
int build_plan(const Options& opt, int member, double beta, ssq_plan* plan,
               bool* overridden) {
    *overridden = opt.theta_override.has_value();
    if (!*overridden) {
        const ssq_status st = ssq_plan_make(member, beta, plan);
        if (st != SSQ_OK) return fail(st, "planning failed");
        return kExitOk;
    }
    const double theta = *opt.theta_override;
    ssq_count count;
    const ssq_status st = ssq_count_eval(member, beta, theta, &count);
    if (st != SSQ_OK) return fail(st, "count evaluation failed");
    plan->member = member;
    plan->beta = beta;
    plan->theta = theta;
    plan->phi = member == SSQ_MEMBER_EVEN ? -theta : theta;
    plan->theta_mirror = 2.0 * kPi - theta;
    plan->n_iterations = count.n_iterations;
    plan->oracle_calls = count.oracle_calls;
    plan->predicted_success = std::numeric_limits<double>::quiet_NaN();
    return kExitOk;
}

int cmd_plan(const Options& opt) {
    int member;
    if (!parse_member(opt.member_str, &member)) {
        std::cerr << "error: --member must be even|odd|grover\n";
        return kExitValidation;
    }
    double beta;
    bool has_instance;
    if (int rc = resolve_beta(opt, &beta, &has_instance)) return rc;
    ssq_plan plan;
    const ssq_status st = ssq_plan_make(member, beta, &plan);
    if (st != SSQ_OK) return fail(st, "planning failed");
    return emit(opt, plan_to_json(plan).dump(2) + "\n");
}

int cmd_sweep(const Options& opt) {
    double beta;
    bool has_instance;
    if (int rc = resolve_beta(opt, &beta, &has_instance)) return rc;
    if (opt.steps < 2) {
        std::cerr << "error: --steps must be >= 2\n";
        return kExitValidation;
    }
    if (!(opt.theta_min < opt.theta_max)) {
        std::cerr << "error: need --theta-min < --theta-max\n";
        return kExitValidation;
    }
    std::vector<ssq_sweep_row> rows(static_cast<size_t>(opt.steps));
    const ssq_status st = ssq_oracle_call_curves(
        beta, opt.theta_min, opt.theta_max, rows.size(), rows.data());
    if (st != SSQ_OK) return fail(st, "sweep failed");

    if (opt.format == "json") {
        json arr = json::array();
        for (const ssq_sweep_row& r : rows) {
            arr.push_back(json{{"theta", r.theta},
                               {"c_even", r.c_even},
                               {"c_odd", r.c_odd},
                               {"c_grover", r.c_grover}});
        }
        return emit(opt, arr.dump(2) + "\n");
    }
    std::string csv = "theta,c_even,c_odd,c_grover\n";
    for (const ssq_sweep_row& r : rows) {
        csv += fmt15(r.theta) + "," + fmt15(r.c_even) + "," + fmt15(r.c_odd) +
               "," + fmt15(r.c_grover) + "\n";
    }
    return emit(opt, csv);
}

int cmd_verify(const Options& opt) {
    int member;
    if (!parse_member(opt.member_str, &member)) {
        std::cerr << "error: --member must be even|odd|grover\n";
        return kExitValidation;
    }
    double beta;
    bool has_instance;
    if (int rc = resolve_beta(opt, &beta, &has_instance)) return rc;

    ssq_plan plan;
    bool overridden;
    if (int rc = build_plan(opt, member, beta, &plan, &overridden)) return rc;

    ssq_sim_result sub;
    ssq_status st = ssq_run_subspace(&plan, &sub);
    if (st != SSQ_OK) return fail(st, "subspace run failed");

    json report = plan_to_json(plan);
    report["theta_overridden"] = overridden;
    report["p_subspace"] = sub.success_probability;

    double p = sub.success_probability;
    if (has_instance) {
        ssq_sim* sim = nullptr;
        st = ssq_sim_create(*opt.n_items, opt.marked.data(), opt.marked.size(),
                            &sim);
        if (st != SSQ_OK) return fail(st, "simulator setup failed");
        ssq_sim_result full;
        st = ssq_sim_run_plan(sim, &plan, &full);
        ssq_sim_destroy(sim);
        if (st != SSQ_OK) return fail(st, "full run failed");
        report["p_full"] = full.success_probability;
        report["p_difference"] =
            std::abs(full.success_probability - sub.success_probability);
        p = std::min(p, full.success_probability);
    }
    const bool sure = p >= 1.0 - 1e-9;
    report["sure_success"] = sure;
    if (int rc = emit(opt, report.dump(2) + "\n")) return rc;
    return sure ? kExitOk : kExitNumerical;
}

int cmd_simulate(const Options& opt) {
    int member;
    if (!parse_member(opt.member_str, &member)) {
        std::cerr << "error: --member must be even|odd|grover\n";
        return kExitValidation;
    }
    if (!opt.n_items || opt.marked.empty()) {
        std::cerr << "error: simulate needs --n-items and --marked\n";
        return kExitValidation;
    }
    double beta;
    bool has_instance;
    if (int rc = resolve_beta(opt, &beta, &has_instance)) return rc;

    ssq_plan plan;
    bool overridden;
    if (int rc = build_plan(opt, member, beta, &plan, &overridden)) return rc;

    ssq_sim* sim = nullptr;
    ssq_status st =
        ssq_sim_create(*opt.n_items, opt.marked.data(), opt.marked.size(), &sim);
    if (st != SSQ_OK) return fail(st, "simulator setup failed");

    std::vector<double> trace(static_cast<size_t>(plan.n_iterations) + 2);
    size_t n_written = 0;
    st = ssq_sim_run_trace(sim, &plan, trace.data(), trace.size(), &n_written);
    ssq_sim_destroy(sim);
    if (st != SSQ_OK) return fail(st, "trace run failed");
    trace.resize(n_written);

    json doc = plan_to_json(plan);
    doc["theta_overridden"] = overridden;
    doc["n_items"] = *opt.n_items;
    doc["n_marked"] = opt.marked.size();
    doc["trace"] = trace;
    return emit(opt, doc.dump(2) + "\n");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"sure-success search planner"};
    app.require_subcommand(1);

    Options opt;
    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--beta", opt.beta, "problem angle in (0, pi/2]");
        sub->add_option("--n-items", opt.n_items, "database size N");
        sub->add_option("--marked", opt.marked,
                        "comma-separated marked indices")
            ->delimiter(',');
        sub->add_option("--member", opt.member_str, "even|odd|grover");
        sub->add_option("--theta-min", opt.theta_min, "sweep lower bound");
        sub->add_option("--theta-max", opt.theta_max, "sweep upper bound");
        sub->add_option("--steps", opt.steps, "sweep grid size (>= 2)");
        sub->add_option("--theta-override", opt.theta_override,
                        "force theta instead of solving for theta_op");
        sub->add_option("--output", opt.output_path, "output file path");
        sub->add_option("--format", opt.format, "csv|json")
            ->check(CLI::IsMember({"csv", "json"}));
    };

    CLI::App* plan = app.add_subcommand("plan", "solve for theta_op");
    CLI::App* sweep = app.add_subcommand("sweep", "oracle-call curves");
    CLI::App* verify = app.add_subcommand("verify", "plan and simulate");
    CLI::App* simulate =
        app.add_subcommand("simulate", "full statevector trace");
    for (CLI::App* sub : {plan, sweep, verify, simulate}) add_common(sub);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitValidation;
    }

    if (plan->parsed()) return cmd_plan(opt);
    if (sweep->parsed()) return cmd_sweep(opt);
    if (verify->parsed()) return cmd_verify(opt);
    if (simulate->parsed()) return cmd_simulate(opt);
    return kExitValidation;
}
