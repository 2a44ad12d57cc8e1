#pragma once

#include "iprox/trace.hpp"
#include "iprox/types.hpp"

namespace iprox {

enum class InnerStatus {
    converged,
    iteration_cap,
    backtrack_cap,
    stepsize_underflow,
};

const char* to_string(InnerStatus status);

/// Output of one inner solve. On converged status the returned point is
/// strictly feasible, has finite g, satisfies q_mu(z_star) <= q_mu(z0), and
/// residual_vector is an element of the regular subdifferential of q_mu at
/// z_star with norm residual_norm <= eps.
struct InnerResult {
    Vec z_star;
    Vec z_prev;           ///< base point of the returned step, for certificate recomputation
    Vec residual_vector;  ///< (1/gamma)(z_prev - z_star) - grad f_mu(z_prev) + grad f_mu(z_star)
    double residual_norm = kInf;
    double final_gamma = 0;
    long iterations = 0;  ///< accepted forward-backward steps
    long backtracks_total = 0;
    double q_at_start = kInf;
    double q_at_exit = kInf;
    InnerStatus status = InnerStatus::iteration_cap;
};

/// One forward-backward step zbar = prox_{gamma g}(z - gamma grad f_mu(z)).
/// Requires c(z) < 0 and gamma in (0, gamma_g). Costs one gradient and one
/// prox evaluation. The output need not be strictly feasible; callers check.
Vec forward_backward_step(const ProblemSpec& spec, const Barrier& barrier, double mu,
                          const Vec& z, double gamma, EvalCounters* counters = nullptr);

enum class LinesearchFail {
    none,
    boundary,            ///< some c_i(zbar) >= 0
    sufficient_decrease, ///< q_mu(zbar) > q_mu(z) - (1-alpha)/(2 gamma) ||zbar-z||^2
    lipschitz,           ///< ||grad(zbar) - grad(z)|| > (alpha/gamma) ||zbar-z||
};

/// Result of the three-condition linesearch test. Values computed before the
/// first failing condition are kept so an accepting caller can reuse them.
struct LinesearchOutcome {
    bool pass = false;
    LinesearchFail reason = LinesearchFail::none;
    Vec c_at_zbar;        ///< always set
    double q_at_zbar = kInf;  ///< set unless the boundary condition failed
    Vec grad_at_zbar;     ///< set only when the gradient was evaluated
};

/// Evaluates conditions (boundary, sufficient decrease, Lipschitz estimate) in
/// that order, short-circuiting on the first failure: a boundary hit costs no
/// objective or gradient evaluation, a decrease failure costs no gradient.
/// q_at_z and grad_at_z are the caller's cached values at z.
LinesearchOutcome linesearch_check(const ProblemSpec& spec, const Barrier& barrier, double mu,
                                   const Vec& z, double q_at_z, const Vec& grad_at_z,
                                   const Vec& z_bar, double gamma, double alpha,
                                   EvalCounters* counters = nullptr);

/// Adaptive-stepsize forward-backward solver for the barrier subproblem
/// min f_mu + g. Requires a strictly feasible z0 with finite g. The stepsize
/// only ever decreases (factor beta per backtrack, carried across iterations).
/// Appends one trace row per accepted step when trace is non-null; outer_iter
/// tags the rows.
InnerResult ipfb_solve(const ProblemSpec& spec, const Barrier& barrier, const Vec& z0,
                       double mu, double eps, const InnerParams& params,
                       SolveTrace* trace = nullptr, int outer_iter = 0,
                       EvalCounters* counters = nullptr);

}  // namespace iprox
