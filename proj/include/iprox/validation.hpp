#pragma once

#include "iprox/barrier.hpp"
#include "iprox/problems.hpp"
#include "iprox/types.hpp"

#include <string>
#include <vector>

namespace iprox {

struct ValidationReport {
    bool ok = true;
    std::vector<std::string> failures;

    void fail(std::string what) {
        ok = false;
        failures.push_back(std::move(what));
    }
    void merge(const ValidationReport& other);
};

/// Central finite difference of f at z, step h_i = max(1e-6, 1e-6 |z_i|).
Vec finite_difference_gradient(const std::function<double(const Vec&)>& f, const Vec& z);

/// Central finite difference of c (componentwise), same step rule.
Mat finite_difference_jacobian(const std::function<Vec(const Vec&)>& c, int m, const Vec& z);

/// Componentwise |a - b| <= tol * max(1, |b|).
bool close_rel(const Vec& a, const Vec& b, double tol);

/// grad_f vs finite differences of f, and jac_c vs finite differences of c,
/// at the given points (relative tolerance 1e-5).
ValidationReport check_problem_derivatives(const ProblemSpec& spec,
                                           const std::vector<Vec>& points,
                                           double rel_tol = 1e-5);

/// grad f_mu vs finite differences of f_mu at strictly feasible points
/// (relative tolerance 1e-6 by default, per the chain-rule contract).
ValidationReport check_barrier_gradient(const ProblemSpec& spec, const Barrier& barrier,
                                        double mu, const std::vector<Vec>& points,
                                        double rel_tol = 1e-6);

/// prox_g selection validity against the brute-force 1-D oracle along random
/// coordinate sections: g(P(x,gamma)) + ||P(x,gamma)-x||^2/(2 gamma) must not
/// exceed the oracle value by more than 1e-8, and g(P(x,gamma)) must be finite.
ValidationReport check_prox_selection(const ProblemSpec& spec, const std::vector<Vec>& points,
                                      const std::vector<double>& gammas);

/// The full validation suite for a registered problem: derivative checks at
/// sampled strictly feasible points, barrier-gradient checks, prox selection
/// validity, and the barrier axioms.
ValidationReport validate_problem(const RegisteredProblem& problem, const Barrier& barrier,
                                  int num_points = 100);

}  // namespace iprox
