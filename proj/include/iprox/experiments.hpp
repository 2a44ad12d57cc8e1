#pragma once

#include "iprox/diagnostics.hpp"
#include "iprox/outer_ip.hpp"
#include "iprox/problems.hpp"
#include "iprox/trace.hpp"

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace iprox {

/// One solver run with everything the artifact writers and the analysis
/// need: inputs, result, KKT table and full trace.
struct SingleRun {
    int index = 0;
    std::string problem;
    Vec x0;
    OuterResult result;
    KktReport kkt;
    SolveTrace trace;
};

SingleRun solve_run(const RegisteredProblem& problem, const Barrier& barrier, const Vec& x0,
                    const OuterParams& outer, const InnerParams& inner, int index = 0);

/// Index (0-based) of the reference minimizer within tol of x, or -1.
int assign_basin(const Vec& x, double tol = 1e-2);

/// Writes run_<idx>_trace.csv, run_<idx>_trajectory.csv and
/// run_<idx>_summary.json into dir. Returns the summary JSON text.
std::string write_run_artifacts(const std::filesystem::path& dir, const SingleRun& run,
                                const OuterParams& outer, const InnerParams& inner);

struct ReproduceOutcome {
    std::vector<SingleRun> circle_runs;    ///< the 20-start protocol
    std::vector<SingleRun> residual_runs;  ///< the two residual-trace starts
    std::vector<int> basins;               ///< basin index per circle run
    bool all_converged = false;
};

/// Paper defaults: eps_p = eps_d = 1e-5, eps0 = mu0 = 1, theta_eps = theta_mu
/// = 1/4, gamma0 = 1, alpha = 0.99, beta = 1/2, reciprocal barrier.
OuterParams paper_outer_params();
InnerParams paper_inner_params();

/// Runs the 20-start circle protocol plus the two residual-trace starts
/// (0, 1.05) and (0.25, 0.8) with paper-default parameters. When out_dir is
/// set, writes per-run artifacts, residuals_a.csv / residuals_b.csv and
/// basins.csv there.
ReproduceOutcome reproduce_rosenbrock(const std::optional<std::filesystem::path>& out_dir,
                                      const OuterParams& outer, const InnerParams& inner);

}  // namespace iprox
