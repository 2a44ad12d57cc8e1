#include "iprox/inner_ipfb.hpp"

#include "iprox/objective.hpp"

#include <cassert>
#include <cmath>
#include <sstream>

namespace iprox {

namespace {

constexpr double kGammaFloor = 1e-15;

// q_mu(z) from already-computed constraint values (all < 0).
double q_from_c(const ProblemSpec& spec, const Barrier& barrier, double mu, const Vec& z,
                const Vec& c_at_z) {
    const double f = spec.f_eval(z);
    check_finite(f, "f_eval");
    double barrier_sum = 0;
    for (int i = 0; i < spec.m; ++i) {
        const double bi = barrier.b(c_at_z[i]);
        check_no_nan(bi, "barrier b");
        barrier_sum += bi;
    }
    const double g = spec.g_eval(z);
    check_no_nan(g, "g_eval");
    return f + mu * barrier_sum + g;
}

Vec eval_c_checked(const ProblemSpec& spec, const Vec& z) {
    if (spec.m == 0) return Vec(0);
    Vec c = spec.c_eval(z);
    if (c.size() != spec.m) throw EvaluationFault("c_eval returned a vector of wrong size");
    check_finite(c, "c_eval");
    return c;
}

int first_boundary_index(const Vec& c) {
    for (Eigen::Index i = 0; i < c.size(); ++i)
        if (c[i] >= 0) return static_cast<int>(i);
    return -1;
}

Vec apply_prox(const ProblemSpec& spec, const Vec& point, double gamma, EvalCounters* counters) {
    ++counters->prox_evals;
    Vec zbar = spec.prox_g_eval(point, gamma);
    if (zbar.size() != spec.n) throw EvaluationFault("prox_g_eval returned a vector of wrong size");
    check_finite(zbar, "prox_g_eval");
    return zbar;
}

// Mirrors Fig.-2-style monitoring: complementarity of the current candidate
// under the multiplier estimate mu b'(c_i).
void candidate_residuals(const Barrier& barrier, double mu, const Vec& c, double* primal,
                         double* y_inf) {
    *primal = 0;
    *y_inf = 0;
    for (Eigen::Index i = 0; i < c.size(); ++i) {
        const double y = mu * barrier.db(c[i]);
        *primal = std::max(*primal, std::min(-c[i], y));
        *y_inf = std::max(*y_inf, y);
    }
}

}  // namespace

const char* to_string(InnerStatus status) {
    switch (status) {
        case InnerStatus::converged: return "converged";
        case InnerStatus::iteration_cap: return "iteration_cap";
        case InnerStatus::backtrack_cap: return "backtrack_cap";
        case InnerStatus::stepsize_underflow: return "stepsize_underflow";
    }
    return "unknown";
}

Vec forward_backward_step(const ProblemSpec& spec, const Barrier& barrier, double mu,
                          const Vec& z, double gamma, EvalCounters* counters) {
    if (!(gamma > 0) || !(gamma < spec.prox_bound_threshold))
        throw PreconditionError("forward_backward_step requires gamma in (0, gamma_g)");
    EvalCounters local;
    EvalCounters* use = counters ? counters : &local;
    const Vec grad = eval_barrier_gradient(spec, barrier, mu, z, use);
    return apply_prox(spec, z - gamma * grad, gamma, use);
}

LinesearchOutcome linesearch_check(const ProblemSpec& spec, const Barrier& barrier, double mu,
                                   const Vec& z, double q_at_z, const Vec& grad_at_z,
                                   const Vec& z_bar, double gamma, double alpha,
                                   EvalCounters* counters) {
    LinesearchOutcome out;
    out.c_at_zbar = eval_c_checked(spec, z_bar);

    // (i) strict feasibility of the candidate. Resolving this first makes a
    // boundary hit cost no objective or gradient work.
    if (first_boundary_index(out.c_at_zbar) >= 0) {
        out.reason = LinesearchFail::boundary;
        return out;
    }

    // (ii) sufficient decrease.
    out.q_at_zbar = q_from_c(spec, barrier, mu, z_bar, out.c_at_zbar);
    const double step_sq = (z_bar - z).squaredNorm();
    if (!(out.q_at_zbar <= q_at_z - (1 - alpha) / (2 * gamma) * step_sq)) {
        out.reason = LinesearchFail::sufficient_decrease;
        return out;
    }

    // (iii) local Lipschitz estimate; the gradient computed here is reused by
    // the caller as grad f_mu(z^{j+1}) when the step is accepted.
    EvalCounters local;
    out.grad_at_zbar = eval_barrier_gradient_with_c(spec, barrier, mu, z_bar, out.c_at_zbar,
                                                    counters ? counters : &local);
    if (!((out.grad_at_zbar - grad_at_z).norm() <= alpha / gamma * std::sqrt(step_sq))) {
        out.reason = LinesearchFail::lipschitz;
        return out;
    }

    out.pass = true;
    return out;
}

InnerResult ipfb_solve(const ProblemSpec& spec, const Barrier& barrier, const Vec& z0,
                       double mu, double eps, const InnerParams& params, SolveTrace* trace,
                       int outer_iter, EvalCounters* counters) {
    validate(params, spec.prox_bound_threshold);
    if (!(mu > 0)) throw PreconditionError("ipfb_solve requires mu > 0");
    if (!(eps > 0)) throw PreconditionError("ipfb_solve requires eps > 0");
    if (z0.size() != spec.n) throw PreconditionError("z0 has wrong dimension");

    EvalCounters local;
    EvalCounters* evals = counters ? counters : &local;

    Vec c_z = eval_c_checked(spec, z0);
    if (int bad = first_boundary_index(c_z); bad >= 0) {
        std::ostringstream os;
        os << "ipfb_solve requires a strictly feasible start; constraint " << bad
           << " has value " << c_z[bad];
        throw PreconditionError(os.str());
    }
    double q_z = q_from_c(spec, barrier, mu, z0, c_z);
    if (!(q_z < kInf))
        throw PreconditionError("ipfb_solve requires g(z0) < inf at the starting point");

    Vec z = z0;
    Vec grad_z = eval_barrier_gradient_with_c(spec, barrier, mu, z, c_z, evals);
    double gamma = params.gamma0;

    InnerResult result;
    result.q_at_start = q_z;
    result.z_star = z0;
    result.z_prev = z0;
    result.q_at_exit = q_z;

    auto finish = [&](InnerStatus status) {
        result.status = status;
        return result;
    };

    for (long j = 0; j < params.max_inner_iters; ++j) {
        Vec z_bar;
        LinesearchOutcome accepted;
        int backtracks = 0;
        for (;;) {
            z_bar = apply_prox(spec, z - gamma * grad_z, gamma, evals);
            accepted = linesearch_check(spec, barrier, mu, z, q_z, grad_z, z_bar, gamma,
                                        params.alpha, evals);
            if (accepted.pass) break;
            ++backtracks;
            ++result.backtracks_total;
            if (backtracks > params.max_backtracks) return finish(InnerStatus::backtrack_cap);
            gamma *= params.beta;
            if (gamma < kGammaFloor) return finish(InnerStatus::stepsize_underflow);
        }

        const double step_sq = (z_bar - z).squaredNorm();
        assert(first_boundary_index(accepted.c_at_zbar) < 0);
        assert(accepted.q_at_zbar <= q_z - (1 - params.alpha) / (2 * gamma) * step_sq);

        const Vec residual =
            (z - z_bar) / gamma - grad_z + accepted.grad_at_zbar;
        const double residual_norm = residual.norm();

        result.z_star = z_bar;
        result.z_prev = z;
        result.residual_vector = residual;
        result.residual_norm = residual_norm;
        result.final_gamma = gamma;
        result.iterations = j + 1;
        result.q_at_exit = accepted.q_at_zbar;

        if (trace) {
            TraceRow row;
            row.outer_iter = outer_iter;
            row.inner_iter = j;
            row.gamma = gamma;
            row.q_mu = accepted.q_at_zbar;
            row.inner_residual = residual_norm;
            candidate_residuals(barrier, mu, accepted.c_at_zbar, &row.primal_residual,
                                &row.y_inf);
            row.eps_k = eps;
            row.mu_k = mu;
            row.grad_evals = evals->grad_evals;
            row.prox_evals = evals->prox_evals;
            row.q_prev = q_z;
            row.step_norm_sq = step_sq;
            row.z = z_bar;
            trace->append(row);
        }

        if (residual_norm <= eps) return finish(InnerStatus::converged);

        // Advance: z^{j+1} = zbar^j, reusing the candidate's objective value,
        // constraint values and gradient.
        z = std::move(z_bar);
        c_z = std::move(accepted.c_at_zbar);
        q_z = accepted.q_at_zbar;
        grad_z = std::move(accepted.grad_at_zbar);
    }
    return finish(InnerStatus::iteration_cap);
}

}  // namespace iprox
