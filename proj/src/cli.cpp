#include "iprox/cli.hpp"

#include "iprox/barrier.hpp"
#include "iprox/experiments.hpp"
#include "iprox/io.hpp"
#include "iprox/validation.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace iprox {

namespace {

Vec parse_point(const std::string& text) {
    std::vector<double> values;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t pos = 0;
        const double v = std::stod(item, &pos);
        if (pos != item.size()) throw PreconditionError("malformed --x0 component '" + item + "'");
        values.push_back(v);
    }
    if (values.empty()) throw PreconditionError("--x0 must contain at least one value");
    Vec x(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) x[i] = values[i];
    return x;
}

int parse_circle_protocol(const std::string& text) {
    if (text.rfind("circle:", 0) != 0)
        throw PreconditionError("unknown protocol '" + text + "'; expected circle:<count>");
    const int count = std::stoi(text.substr(7));
    if (count < 1) throw PreconditionError("protocol count must be positive");
    return count;
}

std::filesystem::path resolve_out_dir(const std::string& flag_value) {
    if (!flag_value.empty()) return flag_value;
    if (const char* env = std::getenv("IPROX_OUT_DIR"); env && *env) return env;
    return "iprox-out";
}

void ensure_writable(const std::filesystem::path& dir) {
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec) throw PreconditionError("output directory " + dir.string() + ": " + ec.message());
    const auto probe = dir / ".iprox-write-probe";
    std::ofstream os(probe);
    if (!os) throw PreconditionError("output directory " + dir.string() + " is not writable");
    os.close();
    std::filesystem::remove(probe, ec);
}

void add_param_flags(CLI::App* cmd, OuterParams* outer, InnerParams* inner) {
    cmd->add_option("--eps-p", outer->eps_p, "primal tolerance");
    cmd->add_option("--eps-d", outer->eps_d, "dual tolerance");
    cmd->add_option("--eps0", outer->eps0, "initial inner tolerance");
    cmd->add_option("--mu0", outer->mu0, "initial barrier weight");
    cmd->add_option("--theta-eps", outer->theta_eps, "inner tolerance shrink factor");
    cmd->add_option("--theta-mu", outer->theta_mu, "barrier shrink factor");
    cmd->add_option("--max-outer", outer->max_outer_iters, "outer iteration cap");
    cmd->add_option("--gamma0", inner->gamma0, "initial stepsize");
    cmd->add_option("--alpha", inner->alpha, "linesearch constant");
    cmd->add_option("--beta", inner->beta, "stepsize contraction factor");
    cmd->add_option("--max-inner", inner->max_inner_iters, "inner iteration cap");
}

void print_run_line(const SingleRun& run) {
    std::cout << "run " << run.index << ": " << to_string(run.result.status) << ", x* = [";
    for (Eigen::Index i = 0; i < run.result.pair.x.size(); ++i) {
        if (i) std::cout << ", ";
        std::cout << format_g17(run.result.pair.x[i]);
    }
    std::cout << "], primal " << format_g17(run.result.pair.primal_residual) << ", dual "
              << format_g17(run.result.pair.dual_residual) << ", outer "
              << run.result.outer_iters << ", grad evals " << run.result.counters.grad_evals
              << (run.kkt.certified ? ", KKT certified" : ", not certified") << "\n";
}

int cmd_solve(const std::string& problem_name, const std::string& x0_text,
              const std::string& protocol, const std::string& out_flag,
              const std::string& barrier_name, const OuterParams& outer,
              const InnerParams& inner) {
    if (barrier_name != "reciprocal")
        throw PreconditionError("unknown barrier '" + barrier_name + "'");
    validate(outer);

    const RegisteredProblem problem = find_problem(problem_name);
    validate(inner, problem.spec.prox_bound_threshold);
    const Barrier barrier = reciprocal_barrier();
    const std::filesystem::path out_dir = resolve_out_dir(out_flag);
    ensure_writable(out_dir);

    std::vector<Vec> starts;
    if (!protocol.empty()) {
        if (problem_name != "rosenbrock")
            throw PreconditionError("the circle protocol applies to the rosenbrock problem");
        starts = circle_starting_points(parse_circle_protocol(protocol));
    } else if (!x0_text.empty()) {
        starts.push_back(parse_point(x0_text));
    } else {
        starts.push_back(problem.default_x0);
    }

    std::vector<SingleRun> runs;
    bool all_converged = true;
    for (std::size_t i = 0; i < starts.size(); ++i) {
        if (starts[i].size() != problem.spec.n)
            throw PreconditionError("--x0 dimension does not match the problem");
        SingleRun run = solve_run(problem, barrier, starts[i], outer, inner,
                                  static_cast<int>(i));
        write_run_artifacts(out_dir, run, outer, inner);
        print_run_line(run);
        all_converged = all_converged && run.result.status == OuterStatus::converged;
        runs.push_back(std::move(run));
    }

    std::ofstream os(out_dir / "solve_summary.json", std::ios::binary);
    os << aggregate_summary_json(runs, outer, inner);
    std::cout << "artifacts written to " << out_dir.string() << "\n";
    return all_converged ? kExitOk : kExitNotConverged;
}

int cmd_reproduce(const std::string& out_flag) {
    const std::filesystem::path out_dir = resolve_out_dir(out_flag);
    ensure_writable(out_dir);
    const ReproduceOutcome outcome =
        reproduce_rosenbrock(out_dir, paper_outer_params(), paper_inner_params());

    int counts[3] = {0, 0, 0};
    for (std::size_t i = 0; i < outcome.circle_runs.size(); ++i) {
        print_run_line(outcome.circle_runs[i]);
        if (outcome.basins[i] >= 0) ++counts[outcome.basins[i]];
    }
    std::cout << "basins: x[1] x" << counts[0] << ", x[2] x" << counts[1] << ", x[3] x"
              << counts[2] << "\n";
    std::cout << "artifacts written to " << out_dir.string() << "\n";
    return outcome.all_converged ? kExitOk : kExitNotConverged;
}

int cmd_validate(const std::string& problem_name) {
    const RegisteredProblem problem = find_problem(problem_name);
    const ValidationReport report = validate_problem(problem, reciprocal_barrier());
    if (report.ok) {
        std::cout << "validate " << problem_name << ": all checks passed\n";
        return kExitOk;
    }
    std::cout << "validate " << problem_name << ": " << report.failures.size()
              << " check(s) failed\n";
    for (const auto& failure : report.failures) std::cout << "  " << failure << "\n";
    return kExitProblemFault;
}

int cmd_list() {
    for (const auto& line : list_problems()) std::cout << line << "\n";
    return kExitOk;
}

}  // namespace

int run_cli(int argc, const char* const* argv) {
    CLI::App app{"interior proximal gradient solver"};
    app.require_subcommand(1);

    OuterParams outer;
    InnerParams inner;
    std::string problem_name, x0_text, protocol, out_flag, barrier_name = "reciprocal";

    CLI::App* solve = app.add_subcommand("solve", "run the solver on a registered problem");
    solve->add_option("--problem", problem_name, "problem name")->required();
    solve->add_option("--x0", x0_text, "starting point, comma-separated reals");
    solve->add_option("--protocol", protocol, "multistart protocol, e.g. circle:20");
    solve->add_option("--out-dir", out_flag, "artifact directory")->envname("IPROX_OUT_DIR");
    solve->add_option("--barrier", barrier_name, "barrier name (reciprocal)");
    add_param_flags(solve, &outer, &inner);
    solve->set_config("--config", "", "read options from a config file");

    CLI::App* reproduce =
        app.add_subcommand("reproduce-rosenbrock", "rerun the multistart experiment");
    std::string reproduce_out;
    reproduce->add_option("--out-dir", reproduce_out, "artifact directory")
        ->envname("IPROX_OUT_DIR");

    CLI::App* validate_cmd =
        app.add_subcommand("validate", "finite-difference, prox and barrier checks");
    std::string validate_name;
    validate_cmd->add_option("problem", validate_name, "problem name")->required();

    CLI::App* list_cmd = app.add_subcommand("list-problems", "print registered problems");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return kExitConfigError;
    }

    try {
        if (solve->parsed())
            return cmd_solve(problem_name, x0_text, protocol, out_flag, barrier_name, outer,
                             inner);
        if (reproduce->parsed()) return cmd_reproduce(reproduce_out);
        if (validate_cmd->parsed()) return cmd_validate(validate_name);
        if (list_cmd->parsed()) return cmd_list();
    } catch (const EvaluationFault& e) {
        std::cerr << "problem-definition fault: " << e.what() << "\n";
        return kExitProblemFault;
    } catch (const PreconditionError& e) {
        std::cerr << "configuration error: " << e.what() << "\n";
        return kExitConfigError;
    } catch (const std::invalid_argument& e) {
        std::cerr << "configuration error: " << e.what() << "\n";
        return kExitConfigError;
    } catch (const std::out_of_range& e) {
        std::cerr << "configuration error: " << e.what() << "\n";
        return kExitConfigError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitProblemFault;
    }
    return kExitConfigError;
}

}  // namespace iprox
