#include "iprox/objective.hpp"

#include <sstream>

namespace iprox {

namespace {

// Evaluates c(z) with fault checks; infeasible index (first c_i >= 0) is
// reported through *boundary_index when non-null.
Vec eval_constraints(const ProblemSpec& spec, const Vec& z, int* boundary_index) {
    if (boundary_index) *boundary_index = -1;
    if (spec.m == 0) return Vec(0);
    Vec c = spec.c_eval(z);
    if (c.size() != spec.m) throw EvaluationFault("c_eval returned a vector of wrong size");
    check_finite(c, "c_eval");
    if (boundary_index) {
        for (int i = 0; i < spec.m; ++i) {
            if (c[i] >= 0) {
                *boundary_index = i;
                break;
            }
        }
    }
    return c;
}

}  // namespace

double eval_barrier_objective(const ProblemSpec& spec, const Barrier& barrier, double mu,
                              const Vec& z) {
    int bad = -1;
    const Vec c = eval_constraints(spec, z, &bad);
    if (bad >= 0) return kInf;  // absorbing sentinel, regardless of f

    const double f = spec.f_eval(z);
    check_finite(f, "f_eval");
    if (mu == 0 || spec.m == 0) return f;

    double barrier_sum = 0;
    for (int i = 0; i < spec.m; ++i) {
        const double bi = barrier.b(c[i]);
        check_no_nan(bi, "barrier b");
        barrier_sum += bi;
    }
    return f + mu * barrier_sum;
}

double eval_inner_objective(const ProblemSpec& spec, const Barrier& barrier, double mu,
                            const Vec& z) {
    const double fmu = eval_barrier_objective(spec, barrier, mu, z);
    if (fmu == kInf) return kInf;
    const double g = spec.g_eval(z);
    check_no_nan(g, "g_eval");
    if (g == -kInf) throw EvaluationFault("g_eval produced -inf (g must be proper)");
    return fmu + g;
}

Vec eval_barrier_gradient(const ProblemSpec& spec, const Barrier& barrier, double mu,
                          const Vec& z, EvalCounters* counters) {
    int bad = -1;
    const Vec c = eval_constraints(spec, z, &bad);
    if (bad >= 0) {
        std::ostringstream os;
        os << "eval_barrier_gradient requires c(z) < 0; constraint " << bad
           << " has value " << c[bad];
        throw PreconditionError(os.str());
    }
    return eval_barrier_gradient_with_c(spec, barrier, mu, z, c, counters);
}

Vec eval_barrier_gradient_with_c(const ProblemSpec& spec, const Barrier& barrier, double mu,
                                 const Vec& z, const Vec& c_at_z, EvalCounters* counters) {
    if (counters) ++counters->grad_evals;

    Vec grad = spec.grad_f_eval(z);
    if (grad.size() != spec.n) throw EvaluationFault("grad_f_eval returned a vector of wrong size");
    check_finite(grad, "grad_f_eval");
    if (mu == 0 || spec.m == 0) return grad;

    const Mat jac = spec.jac_c_eval(z);
    if (jac.rows() != spec.m || jac.cols() != spec.n)
        throw EvaluationFault("jac_c_eval returned a matrix of wrong shape");
    for (int i = 0; i < spec.m; ++i) check_finite(Vec(jac.row(i)), "jac_c_eval");

    for (int i = 0; i < spec.m; ++i) {
        const double w = barrier.db(c_at_z[i]);
        check_no_nan(w, "barrier b'");
        grad.noalias() += (mu * w) * jac.row(i).transpose();
    }
    return grad;
}

}  // namespace iprox
