#include "iprox/types.hpp"

#include <sstream>

namespace iprox {

void validate(const OuterParams& p) {
    if (!(p.eps_p > 0) || !(p.eps_d > 0))
        throw PreconditionError("outer tolerances eps_p, eps_d must be positive");
    if (!(p.eps0 > 0) || !(p.mu0 > 0))
        throw PreconditionError("eps0 and mu0 must be positive");
    if (!(p.theta_eps > 0 && p.theta_eps < 1))
        throw PreconditionError("theta_eps must lie in (0,1)");
    if (!(p.theta_mu > 0 && p.theta_mu < 1))
        throw PreconditionError("theta_mu must lie in (0,1)");
    if (p.max_outer_iters <= 0)
        throw PreconditionError("max_outer_iters must be positive");
}

void validate(const InnerParams& p, double prox_bound_threshold) {
    if (!(p.gamma0 > 0))
        throw PreconditionError("gamma0 must be positive");
    if (!(p.gamma0 < prox_bound_threshold))
        throw PreconditionError("gamma0 must be below the prox-boundedness threshold gamma_g");
    if (!(p.alpha > 0 && p.alpha < 1))
        throw PreconditionError("alpha must lie in (0,1)");
    if (!(p.beta > 0 && p.beta < 1))
        throw PreconditionError("beta must lie in (0,1)");
    if (p.max_inner_iters <= 0 || p.max_backtracks <= 0)
        throw PreconditionError("iteration caps must be positive");
}

void check_finite(const Vec& v, const char* what) {
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        if (!std::isfinite(v[i])) {
            std::ostringstream os;
            os << what << " produced a non-finite value at component " << i;
            throw EvaluationFault(os.str());
        }
    }
}

void check_finite(double v, const char* what) {
    if (!std::isfinite(v))
        throw EvaluationFault(std::string(what) + " produced a non-finite value");
}

void check_no_nan(double v, const char* what) {
    if (std::isnan(v))
        throw EvaluationFault(std::string(what) + " produced NaN");
}

}  // namespace iprox
