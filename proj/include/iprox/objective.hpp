#pragma once

#include "iprox/types.hpp"

namespace iprox {

/// f_mu(z) = f(z) + mu * sum_i b(c_i(z)).
///
/// Total on R^n: returns +inf iff some c_i(z) >= 0 (the sentinel is absorbing).
/// NaN from any evaluator raises EvaluationFault instead. mu = 0 drops the
/// barrier sum but keeps the strict-feasibility domain.
double eval_barrier_objective(const ProblemSpec& spec, const Barrier& barrier, double mu,
                              const Vec& z);

/// q_mu(z) = f_mu(z) + g(z); +inf iff z is on/outside the boundary or g(z) = +inf.
double eval_inner_objective(const ProblemSpec& spec, const Barrier& barrier, double mu,
                            const Vec& z);

/// grad f_mu(z) = grad f(z) + mu * sum_i b'(c_i(z)) grad c_i(z).
///
/// Requires c(z) < 0 componentwise; a boundary violation is a PreconditionError
/// naming the offending constraint. Consumes exactly one grad_f and one jac_c
/// evaluation (counted as one gradient evaluation when counters are passed).
Vec eval_barrier_gradient(const ProblemSpec& spec, const Barrier& barrier, double mu,
                          const Vec& z, EvalCounters* counters = nullptr);

/// Variant reusing already-computed constraint values c(z) (all < 0).
Vec eval_barrier_gradient_with_c(const ProblemSpec& spec, const Barrier& barrier, double mu,
                                 const Vec& z, const Vec& c_at_z,
                                 EvalCounters* counters = nullptr);

}  // namespace iprox
