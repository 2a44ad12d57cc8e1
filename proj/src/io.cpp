#include "iprox/io.hpp"

#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <numbers>
#include <ostream>

namespace iprox {

std::string format_g17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

const char* const kTraceCsvHeader =
    "k,j,gamma,q_mu,inner_residual,primal_residual,eps_k,mu_k,grad_evals,prox_evals,"
    "outer_accept,y_inf";

void write_trace_csv(std::ostream& os, const std::vector<TraceRow>& rows) {
    os << kTraceCsvHeader << "\n";
    for (const TraceRow& r : rows) {
        os << r.outer_iter << ',' << r.inner_iter << ',' << format_g17(r.gamma) << ','
           << format_g17(r.q_mu) << ',' << format_g17(r.inner_residual) << ','
           << format_g17(r.primal_residual) << ',' << format_g17(r.eps_k) << ','
           << format_g17(r.mu_k) << ',' << r.grad_evals << ',' << r.prox_evals << ','
           << (r.outer_accept ? 1 : 0) << ',' << format_g17(r.y_inf) << "\n";
    }
}

void write_trajectory_csv(std::ostream& os, const std::vector<TraceRow>& rows) {
    int n = 0;
    for (const TraceRow& r : rows)
        if (r.z.size() > 0) { n = static_cast<int>(r.z.size()); break; }
    os << "k,j";
    for (int i = 1; i <= n; ++i) os << ",x" << i;
    os << "\n";
    for (const TraceRow& r : rows) {
        if (r.outer_accept) continue;  // inner path only; boundaries repeat the point
        os << r.outer_iter << ',' << r.inner_iter;
        for (int i = 0; i < n; ++i) os << ',' << format_g17(r.z[i]);
        os << "\n";
    }
}

void write_basin_csv(std::ostream& os, const std::vector<SingleRun>& runs,
                     const std::vector<int>& basins) {
    os << "start_index,theta,x0_1,x0_2,xstar_1,xstar_2,basin,dist_to_ref,grad_evals,"
          "prox_evals,status\n";
    const auto refs = rosenbrock_reference_minimizers();
    for (std::size_t i = 0; i < runs.size(); ++i) {
        const SingleRun& run = runs[i];
        const double theta = 2 * std::numbers::pi * static_cast<double>(i) / runs.size();
        const int basin = basins[i];
        const double dist =
            basin >= 0 ? (run.result.pair.x - refs[basin]).norm() : std::nan("");
        os << i << ',' << format_g17(theta) << ',' << format_g17(run.x0[0]) << ','
           << format_g17(run.x0[1]) << ',' << format_g17(run.result.pair.x[0]) << ','
           << format_g17(run.result.pair.x[1]) << ',' << basin + 1 << ','
           << format_g17(dist) << ',' << run.result.counters.grad_evals << ','
           << run.result.counters.prox_evals << ',' << to_string(run.result.status) << "\n";
    }
}

namespace {

nlohmann::json vec_to_json(const Vec& v) {
    nlohmann::json arr = nlohmann::json::array();
    for (Eigen::Index i = 0; i < v.size(); ++i) arr.push_back(v[i]);
    return arr;
}

nlohmann::json params_json(const OuterParams& outer, const InnerParams& inner) {
    return {
        {"eps_p", outer.eps_p},
        {"eps_d", outer.eps_d},
        {"eps0", outer.eps0},
        {"mu0", outer.mu0},
        {"theta_eps", outer.theta_eps},
        {"theta_mu", outer.theta_mu},
        {"max_outer_iters", outer.max_outer_iters},
        {"gamma0", inner.gamma0},
        {"alpha", inner.alpha},
        {"beta", inner.beta},
        {"max_inner_iters", inner.max_inner_iters},
        {"max_backtracks", inner.max_backtracks},
    };
}

nlohmann::json run_json(const SingleRun& run) {
    nlohmann::json kkt_rows = nlohmann::json::array();
    for (const KktRow& row : run.kkt.rows) {
        kkt_rows.push_back({
            {"i", row.index},
            {"c", row.c_value},
            {"y", row.y_value},
            {"complementarity", row.complementarity},
            {"active", row.active},
        });
    }
    return {
        {"problem", run.problem},
        {"start_index", run.index},
        {"x0", vec_to_json(run.x0)},
        {"x_star", vec_to_json(run.result.pair.x)},
        {"y_star", vec_to_json(run.result.pair.y)},
        {"status", to_string(run.result.status)},
        {"inner_status", to_string(run.result.last_inner_status)},
        {"outer_iterations", run.result.outer_iters},
        {"primal_residual", run.result.pair.primal_residual},
        {"dual_certificate", run.result.pair.dual_residual},
        {"inner_residual_norm", run.result.inner_residual_norm},
        {"eps_final", run.result.eps_final},
        {"mu_final", run.result.mu_final},
        {"q_at_start", run.result.q_at_start},
        {"q_at_exit", run.result.q_at_exit},
        {"grad_evals", run.result.counters.grad_evals},
        {"prox_evals", run.result.counters.prox_evals},
        {"kkt", {{"certified", run.kkt.certified},
                 {"dual_certificate", run.kkt.dual_certificate},
                 {"worst_complementarity", run.kkt.worst_complementarity},
                 {"rows", kkt_rows}}},
    };
}

}  // namespace

std::string run_summary_json(const SingleRun& run, const OuterParams& outer,
                             const InnerParams& inner) {
    nlohmann::json j = run_json(run);
    j["params"] = params_json(outer, inner);
    return j.dump(2) + "\n";
}

std::string aggregate_summary_json(const std::vector<SingleRun>& runs, const OuterParams& outer,
                                   const InnerParams& inner) {
    nlohmann::json j;
    j["params"] = params_json(outer, inner);
    j["runs"] = nlohmann::json::array();
    bool all_converged = true;
    for (const SingleRun& run : runs) {
        j["runs"].push_back(run_json(run));
        all_converged = all_converged && run.result.status == OuterStatus::converged;
    }
    j["all_converged"] = all_converged;
    return j.dump(2) + "\n";
}

}  // namespace iprox
