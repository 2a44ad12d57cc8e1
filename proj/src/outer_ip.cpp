#include "iprox/outer_ip.hpp"

#include "iprox/objective.hpp"

#include <cassert>
#include <cmath>
#include <sstream>

namespace iprox {

namespace {

double barrier_sum(const Barrier& barrier, const Vec& c) {
    double s = 0;
    for (Eigen::Index i = 0; i < c.size(); ++i) s += barrier.b(c[i]);
    return s;
}

// q(x) = f(x) + g(x), no barrier terms.
double q_plain(const ProblemSpec& spec, const Vec& x) {
    const double f = spec.f_eval(x);
    check_finite(f, "f_eval");
    const double g = spec.g_eval(x);
    check_no_nan(g, "g_eval");
    return f + g;
}

}  // namespace

const char* to_string(OuterStatus status) {
    switch (status) {
        case OuterStatus::converged: return "converged";
        case OuterStatus::outer_iteration_cap: return "outer_iteration_cap";
        case OuterStatus::inner_failure: return "inner_failure";
    }
    return "unknown";
}

Vec multiplier_estimate(const Vec& c_vals, const Barrier& barrier, double mu) {
    if (!(mu > 0)) throw PreconditionError("multiplier_estimate requires mu > 0");
    Vec y(c_vals.size());
    for (Eigen::Index i = 0; i < c_vals.size(); ++i) {
        if (!(c_vals[i] < 0)) {
            std::ostringstream os;
            os << "multiplier_estimate requires c < 0; component " << i << " has value "
               << c_vals[i];
            throw PreconditionError(os.str());
        }
        y[i] = mu * barrier.db(c_vals[i]);
        check_finite(y[i], "barrier b'");
    }
    return y;
}

double primal_residual(const Vec& c_vals, const Vec& y) {
    if (y.size() != c_vals.size())
        throw PreconditionError("primal_residual: mismatched multiplier size");
    double r = 0;
    for (Eigen::Index i = 0; i < c_vals.size(); ++i) {
        if (!(y[i] >= 0)) throw PreconditionError("primal_residual requires y >= 0");
        r = std::max(r, std::min(-c_vals[i], y[i]));
    }
    return r;
}

OuterResult ip_solve(const ProblemSpec& spec, const Barrier& barrier, const Vec& x0,
                     const OuterParams& outer, const InnerParams& inner, SolveTrace* trace) {
    validate(outer);
    validate(inner, spec.prox_bound_threshold);
    if (x0.size() != spec.n) throw PreconditionError("x0 has wrong dimension");

    OuterResult result;
    result.q_at_start = q_plain(spec, x0);

    Vec x = x0;
    double eps_k = outer.eps0;
    double mu_k = outer.mu0;
    double mu_prev = std::numeric_limits<double>::quiet_NaN();

    for (int k = 0; k < outer.max_outer_iters; ++k) {
        const double q_mu_cur = eval_inner_objective(spec, barrier, mu_k, x);

        InnerResult step =
            ipfb_solve(spec, barrier, x, mu_k, eps_k, inner, trace, k, &result.counters);
        result.outer_iters = k + 1;
        result.last_inner_status = step.status;
        result.eps_final = eps_k;
        result.mu_final = mu_k;
        result.inner_residual_norm = step.residual_norm;

        Vec c_next(0);
        Vec y_next = Vec::Zero(spec.m);
        double primal = 0;
        if (spec.m > 0) {
            c_next = spec.c_eval(step.z_star);
            check_finite(c_next, "c_eval");
            // The inner solver only returns strictly feasible points.
            y_next = multiplier_estimate(c_next, barrier, mu_k);
            primal = primal_residual(c_next, y_next);
        }

        result.pair.x = step.z_star;
        result.pair.y = y_next;
        result.pair.dual_residual = eps_k;
        result.pair.primal_residual = primal;
        result.q_at_exit = q_plain(spec, step.z_star);

        if (step.status != InnerStatus::converged) {
            result.pair.dual_residual = step.residual_norm;
            result.status = OuterStatus::inner_failure;
            return result;
        }

        // Objective chain of the accepted outer iterate, recomputed for the
        // record: q(x+) <= q_mu(x+) <= q_mu(x) <= q_mu_prev(x).
        SandwichRecord rec;
        rec.k = k;
        rec.q_next = result.q_at_exit;
        rec.q_mu_next = rec.q_next + mu_k * barrier_sum(barrier, c_next);
        rec.q_mu_cur = q_mu_cur;
        rec.q_mu_prev_at_cur =
            k > 0 ? eval_inner_objective(spec, barrier, mu_prev, x)
                  : std::numeric_limits<double>::quiet_NaN();
        result.sandwich.push_back(rec);
        assert(rec.q_next <= rec.q_mu_next + 1e-12 * std::max(1.0, std::abs(rec.q_next)));
        assert(rec.q_mu_next <= rec.q_mu_cur + 1e-12 * std::max(1.0, std::abs(rec.q_mu_cur)));

        if (trace) {
            TraceRow row;
            row.outer_iter = k;
            row.inner_iter = step.iterations - 1;
            row.gamma = step.final_gamma;
            row.q_mu = rec.q_mu_next;
            row.inner_residual = step.residual_norm;
            row.primal_residual = primal;
            row.eps_k = eps_k;
            row.mu_k = mu_k;
            row.grad_evals = result.counters.grad_evals;
            row.prox_evals = result.counters.prox_evals;
            row.outer_accept = true;
            row.y_inf = spec.m > 0 ? y_next.maxCoeff() : 0.0;
            row.q_prev = q_mu_cur;
            row.step_norm_sq = 0;
            row.z = step.z_star;
            trace->append(row);
        }

        if (eps_k <= outer.eps_d && primal <= outer.eps_p) {
            result.status = OuterStatus::converged;
            return result;
        }

        // Tolerance and barrier updates; the defaults take the upper bounds
        // eps_{k+1} = max{eps_d, theta_eps eps_k}, mu_{k+1} = theta_mu mu_k.
        const double eps_bound = std::max(outer.eps_d, outer.theta_eps * eps_k);
        const double mu_bound = outer.theta_mu * mu_k;
        double eps_next = outer.eps_update ? outer.eps_update(eps_k) : eps_bound;
        double mu_next = outer.mu_update ? outer.mu_update(mu_k) : mu_bound;
        if (!(eps_next > 0) || eps_next > eps_bound * (1 + 1e-12))
            throw PreconditionError("eps_update must return a value in (0, max{eps_d, theta_eps eps_k}]");
        if (!(mu_next > 0) || mu_next > mu_bound * (1 + 1e-12))
            throw PreconditionError("mu_update must return a value in (0, theta_mu mu_k]");

        mu_prev = mu_k;
        mu_k = mu_next;
        eps_k = eps_next;
        x = step.z_star;
    }

    result.status = OuterStatus::outer_iteration_cap;
    return result;
}

}  // namespace iprox
