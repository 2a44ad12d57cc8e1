#pragma once

#include "iprox/inner_ipfb.hpp"
#include "iprox/trace.hpp"
#include "iprox/types.hpp"

#include <vector>

namespace iprox {

enum class OuterStatus {
    converged,
    outer_iteration_cap,
    inner_failure,
};

const char* to_string(OuterStatus status);

/// The objective chain q(x+) <= q_mu(x+) <= q_mu(x) <= q_mu_prev(x), recomputed
/// at every outer iteration (the last link is absent at k = 0).
struct SandwichRecord {
    int k = 0;
    double q_next = 0;           ///< q(x^{k+1})
    double q_mu_next = 0;        ///< q_{mu_k}(x^{k+1})
    double q_mu_cur = 0;         ///< q_{mu_k}(x^k)
    double q_mu_prev_at_cur = 0; ///< q_{mu_{k-1}}(x^k), NaN at k = 0
};

struct OuterResult {
    PrimalDualPair pair;
    OuterStatus status = OuterStatus::outer_iteration_cap;
    InnerStatus last_inner_status = InnerStatus::iteration_cap;
    int outer_iters = 0;  ///< inner solves performed
    double eps_final = 0; ///< eps_k in force at exit
    double mu_final = 0;  ///< mu_k in force at exit
    double inner_residual_norm = kInf;  ///< raw ||r|| achieved by the last inner solve
    double q_at_start = kInf;
    double q_at_exit = kInf;
    EvalCounters counters;
    std::vector<SandwichRecord> sandwich;
};

/// Interior-point multiplier recovery y_i = mu * b'(c_i). Requires all
/// c_vals < 0 and mu > 0; every output component is positive.
Vec multiplier_estimate(const Vec& c_vals, const Barrier& barrier, double mu);

/// Complementarity measure max_i min{-c_i, y_i}; zero for m = 0.
double primal_residual(const Vec& c_vals, const Vec& y);

/// Outer interior-point loop: barrier continuation with warm-started inner
/// solves, multiplier recovery and the (eps_p, eps_d)-KKT exit test
///   eps_k <= eps_d  and  max_i min{-c_i(x^{k+1}), y_i^{k+1}} <= eps_p.
/// Requires a strictly feasible x0 with finite g.
OuterResult ip_solve(const ProblemSpec& spec, const Barrier& barrier, const Vec& x0,
                     const OuterParams& outer, const InnerParams& inner,
                     SolveTrace* trace = nullptr);

}  // namespace iprox
