#include "iprox/experiments.hpp"

#include "iprox/barrier.hpp"
#include "iprox/io.hpp"

#include <fstream>
#include <sstream>

namespace iprox {

namespace {

void write_file(const std::filesystem::path& path, const std::string& contents) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw std::runtime_error("cannot open " + path.string() + " for writing");
    os << contents;
    if (!os) throw std::runtime_error("failed writing " + path.string());
}

std::string run_stem(int index) {
    std::ostringstream os;
    os << "run_" << (index < 10 ? "0" : "") << index;
    return os.str();
}

}  // namespace

OuterParams paper_outer_params() { return OuterParams{}; }

InnerParams paper_inner_params() { return InnerParams{}; }

SingleRun solve_run(const RegisteredProblem& problem, const Barrier& barrier, const Vec& x0,
                    const OuterParams& outer, const InnerParams& inner, int index) {
    SingleRun run;
    run.index = index;
    run.problem = problem.name;
    run.x0 = x0;
    run.result = ip_solve(problem.spec, barrier, x0, outer, inner, &run.trace);
    run.kkt = build_kkt_report(run.result.pair, problem.spec, outer);
    return run;
}

int assign_basin(const Vec& x, double tol) {
    const auto refs = rosenbrock_reference_minimizers();
    for (std::size_t i = 0; i < refs.size(); ++i)
        if ((x - refs[i]).norm() <= tol) return static_cast<int>(i);
    return -1;
}

std::string write_run_artifacts(const std::filesystem::path& dir, const SingleRun& run,
                                const OuterParams& outer, const InnerParams& inner) {
    std::filesystem::create_directories(dir);
    const std::string stem = run_stem(run.index);

    std::ostringstream trace_csv;
    write_trace_csv(trace_csv, run.trace.rows());
    write_file(dir / (stem + "_trace.csv"), trace_csv.str());

    std::ostringstream traj_csv;
    write_trajectory_csv(traj_csv, run.trace.rows());
    write_file(dir / (stem + "_trajectory.csv"), traj_csv.str());

    const std::string summary = run_summary_json(run, outer, inner);
    write_file(dir / (stem + "_summary.json"), summary);
    return summary;
}

ReproduceOutcome reproduce_rosenbrock(const std::optional<std::filesystem::path>& out_dir,
                                      const OuterParams& outer, const InnerParams& inner) {
    const RegisteredProblem problem = rosenbrock_registered();
    const Barrier barrier = reciprocal_barrier();

    ReproduceOutcome outcome;
    outcome.all_converged = true;

    const auto starts = circle_starting_points(20);
    for (std::size_t i = 0; i < starts.size(); ++i) {
        SingleRun run = solve_run(problem, barrier, starts[i], outer, inner,
                                  static_cast<int>(i));
        outcome.all_converged =
            outcome.all_converged && run.result.status == OuterStatus::converged;
        outcome.basins.push_back(assign_basin(run.result.pair.x));
        outcome.circle_runs.push_back(std::move(run));
    }

    // The two residual-trace starts of the reference experiment; the first is
    // also circle point 5, the second is off the circle.
    const Vec start_a = (Eigen::Vector2d() << 0.0, 1.05).finished();
    const Vec start_b = (Eigen::Vector2d() << 0.25, 0.8).finished();
    outcome.residual_runs.push_back(solve_run(problem, barrier, start_a, outer, inner, 100));
    outcome.residual_runs.push_back(solve_run(problem, barrier, start_b, outer, inner, 101));
    for (const SingleRun& run : outcome.residual_runs)
        outcome.all_converged =
            outcome.all_converged && run.result.status == OuterStatus::converged;

    if (out_dir) {
        std::filesystem::create_directories(*out_dir);
        for (const SingleRun& run : outcome.circle_runs)
            write_run_artifacts(*out_dir, run, outer, inner);

        std::ostringstream res_a, res_b;
        write_trace_csv(res_a, outcome.residual_runs[0].trace.rows());
        write_trace_csv(res_b, outcome.residual_runs[1].trace.rows());
        write_file(*out_dir / "residuals_a.csv", res_a.str());
        write_file(*out_dir / "residuals_b.csv", res_b.str());

        std::ostringstream basins;
        write_basin_csv(basins, outcome.circle_runs, outcome.basins);
        write_file(*out_dir / "basins.csv", basins.str());

        write_file(*out_dir / "summary.json",
                   aggregate_summary_json(outcome.circle_runs, outer, inner));
    }
    return outcome;
}

}  // namespace iprox
