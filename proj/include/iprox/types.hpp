#pragma once

#include <Eigen/Core>

#include <cmath>
#include <functional>
#include <limits>
#include <stdexcept>
#include <string>

namespace iprox {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;

inline constexpr double kInf = std::numeric_limits<double>::infinity();

/// Thrown when a user-supplied evaluator produces NaN (or a non-finite value
/// where a finite one is required). Never folded into the +inf sentinel.
class EvaluationFault : public std::runtime_error {
public:
    explicit EvaluationFault(const std::string& what) : std::runtime_error(what) {}
};

/// Thrown on violated call preconditions (infeasible starting point, bad
/// parameters, boundary point fed to a strictly-interior operation, ...).
class PreconditionError : public std::invalid_argument {
public:
    explicit PreconditionError(const std::string& what) : std::invalid_argument(what) {}
};

/// Problem data for  min f(x) + g(x)  subject to  c(x) <= 0.
///
/// All evaluators must be pure: instances are immutable after construction
/// and may be shared across concurrent solver runs.
struct ProblemSpec {
    int n = 0;  ///< decision dimension
    int m = 0;  ///< number of inequality constraints

    std::function<double(const Vec&)> f_eval;           ///< smooth cost
    std::function<Vec(const Vec&)> grad_f_eval;         ///< gradient of f
    std::function<double(const Vec&)> g_eval;           ///< nonsmooth term, extended-real
    std::function<Vec(const Vec&, double)> prox_g_eval; ///< selection from prox_{gamma g}
    std::function<Vec(const Vec&)> c_eval;              ///< constraint values, size m
    std::function<Mat(const Vec&)> jac_c_eval;          ///< Jacobian of c, m x n

    /// Prox-boundedness threshold gamma_g of g; stepsizes must stay below it.
    /// +inf when g is bounded below by an affine function.
    double prox_bound_threshold = kInf;
};

/// Scalar barrier with dom b = (-inf, 0), b >= 0, b' > 0, b(t) -> inf as t -> 0-.
/// The second derivative is carried for completeness but unused by the solvers.
struct Barrier {
    std::string name;
    std::function<double(double)> b;
    std::function<double(double)> db;
    std::function<double(double)> d2b;
};

/// Parameters of the outer interior-point loop.
struct OuterParams {
    double eps_p = 1e-5;      ///< primal tolerance
    double eps_d = 1e-5;      ///< dual tolerance
    double eps0 = 1.0;        ///< initial inner tolerance
    double mu0 = 1.0;         ///< initial barrier weight
    double theta_eps = 0.25;  ///< inner-tolerance shrink factor, in (0,1)
    double theta_mu = 0.25;   ///< barrier shrink factor, in (0,1)
    int max_outer_iters = 200;

    /// Optional schedule overrides. The defaults take the upper bounds
    /// eps_{k+1} = max{eps_d, theta_eps * eps_k} and mu_{k+1} = theta_mu * mu_k;
    /// custom rules must stay within those bounds and strictly positive.
    std::function<double(double)> eps_update;
    std::function<double(double)> mu_update;
};

/// Parameters of the inner forward-backward solver.
struct InnerParams {
    double gamma0 = 1.0;   ///< initial stepsize, must satisfy gamma0 < gamma_g
    double alpha = 0.99;   ///< linesearch constant, in (0,1)
    double beta = 0.5;     ///< stepsize contraction factor, in (0,1)
    long max_inner_iters = 1000000;
    int max_backtracks = 120;  ///< per-iteration backtracking cap
};

/// Primal-dual candidate with its residual certificates.
struct PrimalDualPair {
    Vec x;
    Vec y;
    double dual_residual = kInf;    ///< certified bound on dist(-Jc(x)^T y, dq(x))
    double primal_residual = kInf;  ///< max_i min{-c_i(x), y_i}
};

/// Cumulative evaluation counts for one solve.
struct EvalCounters {
    long grad_evals = 0;  ///< gradient-of-smooth-part evaluations (grad_f + jac_c pairs)
    long prox_evals = 0;
};

void validate(const OuterParams& params);
void validate(const InnerParams& params, double prox_bound_threshold);

/// Throws EvaluationFault if v contains NaN, or (when require_finite) any
/// non-finite entry. `what` names the offending evaluator in the message.
void check_finite(const Vec& v, const char* what);
void check_finite(double v, const char* what);
void check_no_nan(double v, const char* what);

}  // namespace iprox
