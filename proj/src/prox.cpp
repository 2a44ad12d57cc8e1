#include "iprox/prox.hpp"

#include <cmath>

namespace iprox {

namespace {

void require_positive_gamma(double gamma) {
    if (!(gamma > 0)) throw PreconditionError("prox stepsize gamma must be positive");
}

// Scalar prox of |t|^{1/2}. The optimality condition on t > 0 for input x > 0
// reduces to the depressed cubic s^3 - x s + gamma/2 = 0 with s = sqrt(t);
// its largest root, via the trigonometric formula, gives the closed form
// below. The nonzero branch wins exactly for |x| above (3/2) gamma^{2/3};
// at the tie we select 0.
double prox_half_scalar(double x, double gamma) {
    const double ax = std::abs(x);
    const double threshold = 1.5 * std::cbrt(gamma * gamma);
    if (ax <= threshold) return 0.0;
    const double arg = -(gamma / 4.0) * std::pow(3.0 / ax, 1.5);
    return (2.0 / 3.0) * x * (1.0 + std::cos((2.0 / 3.0) * std::acos(arg)));
}

}  // namespace

Vec prox_half_quasinorm(const Vec& x, double gamma) {
    require_positive_gamma(gamma);
    Vec out(x.size());
    for (Eigen::Index i = 0; i < x.size(); ++i) out[i] = prox_half_scalar(x[i], gamma);
    return out;
}

Vec prox_l1(const Vec& x, double gamma, double weight) {
    require_positive_gamma(gamma);
    if (!(weight >= 0)) throw PreconditionError("l1 weight must be nonnegative");
    const double shrink = gamma * weight;
    Vec out(x.size());
    for (Eigen::Index i = 0; i < x.size(); ++i) {
        const double mag = std::abs(x[i]) - shrink;
        out[i] = mag > 0 ? std::copysign(mag, x[i]) : 0.0;
    }
    return out;
}

Vec prox_box_indicator(const Vec& x, const Vec& lo, const Vec& hi) {
    if (lo.size() != x.size() || hi.size() != x.size())
        throw PreconditionError("box bounds must match the input dimension");
    for (Eigen::Index i = 0; i < x.size(); ++i)
        if (!(lo[i] <= hi[i])) throw PreconditionError("box requires lo <= hi in every coordinate");
    return x.cwiseMax(lo).cwiseMin(hi);
}

double brute_force_prox_1d(const std::function<double(double)>& h, double gamma, double x,
                           double half_width, int grid_points) {
    require_positive_gamma(gamma);
    if (grid_points < 1000) throw PreconditionError("oracle grid must have at least 1000 points");
    if (!(half_width >= std::abs(x) + 1))
        throw PreconditionError("oracle half_width must cover the prox ball (>= |x| + 1)");

    const auto objective = [&](double t) { return h(t) + (t - x) * (t - x) / (2 * gamma); };

    const double lo0 = x - half_width, hi0 = x + half_width;
    const double step = (hi0 - lo0) / (grid_points - 1);
    double best_t = lo0, best_v = objective(lo0);
    for (int i = 1; i < grid_points; ++i) {
        const double t = lo0 + i * step;
        const double v = objective(t);
        if (v < best_v) {
            best_v = v;
            best_t = t;
        }
    }

    // Ternary search in the cell pair around the grid argmin. Valid for the
    // (possibly extended-real) unimodal windows this oracle is used on.
    double lo = best_t - step, hi = best_t + step;
    while (hi - lo > 1e-10) {
        const double m1 = lo + (hi - lo) / 3;
        const double m2 = hi - (hi - lo) / 3;
        if (objective(m1) < objective(m2))
            hi = m2;
        else
            lo = m1;
    }
    const double mid = (lo + hi) / 2;
    // The window edges can beat the interior when the minimizer sits on a
    // kink at the original best grid point.
    return objective(mid) <= best_v ? mid : best_t;
}

}  // namespace iprox
