#include "iprox/validation.hpp"

#include "iprox/objective.hpp"
#include "iprox/prox.hpp"
#include "iprox/rng.hpp"

#include <cmath>
#include <sstream>

namespace iprox {

void ValidationReport::merge(const ValidationReport& other) {
    ok = ok && other.ok;
    failures.insert(failures.end(), other.failures.begin(), other.failures.end());
}

Vec finite_difference_gradient(const std::function<double(const Vec&)>& f, const Vec& z) {
    Vec grad(z.size());
    Vec probe = z;
    for (Eigen::Index i = 0; i < z.size(); ++i) {
        const double h = std::max(1e-6, 1e-6 * std::abs(z[i]));
        probe[i] = z[i] + h;
        const double fp = f(probe);
        probe[i] = z[i] - h;
        const double fm = f(probe);
        probe[i] = z[i];
        grad[i] = (fp - fm) / (2 * h);
    }
    return grad;
}

Mat finite_difference_jacobian(const std::function<Vec(const Vec&)>& c, int m, const Vec& z) {
    Mat jac(m, z.size());
    Vec probe = z;
    for (Eigen::Index i = 0; i < z.size(); ++i) {
        const double h = std::max(1e-6, 1e-6 * std::abs(z[i]));
        probe[i] = z[i] + h;
        const Vec cp = c(probe);
        probe[i] = z[i] - h;
        const Vec cm = c(probe);
        probe[i] = z[i];
        jac.col(i) = (cp - cm) / (2 * h);
    }
    return jac;
}

bool close_rel(const Vec& a, const Vec& b, double tol) {
    for (Eigen::Index i = 0; i < a.size(); ++i)
        if (std::abs(a[i] - b[i]) > tol * std::max(1.0, std::abs(b[i]))) return false;
    return true;
}

ValidationReport check_problem_derivatives(const ProblemSpec& spec,
                                           const std::vector<Vec>& points, double rel_tol) {
    ValidationReport report;
    for (std::size_t p = 0; p < points.size(); ++p) {
        const Vec& z = points[p];
        const Vec analytic = spec.grad_f_eval(z);
        const Vec fd = finite_difference_gradient(spec.f_eval, z);
        if (!close_rel(analytic, fd, rel_tol)) {
            std::ostringstream os;
            os << "grad_f disagrees with finite differences at sample " << p
               << " (max err " << (analytic - fd).cwiseAbs().maxCoeff() << ")";
            report.fail(os.str());
        }
        if (spec.m > 0) {
            const Mat ja = spec.jac_c_eval(z);
            const Mat jf = finite_difference_jacobian(spec.c_eval, spec.m, z);
            for (int i = 0; i < spec.m; ++i) {
                if (!close_rel(ja.row(i).transpose(), jf.row(i).transpose(), rel_tol)) {
                    std::ostringstream os;
                    os << "jac_c row " << i << " disagrees with finite differences at sample "
                       << p;
                    report.fail(os.str());
                }
            }
        }
    }
    return report;
}

ValidationReport check_barrier_gradient(const ProblemSpec& spec, const Barrier& barrier,
                                        double mu, const std::vector<Vec>& points,
                                        double rel_tol) {
    ValidationReport report;
    const auto fmu = [&](const Vec& z) { return eval_barrier_objective(spec, barrier, mu, z); };
    for (std::size_t p = 0; p < points.size(); ++p) {
        const Vec& z = points[p];
        const Vec analytic = eval_barrier_gradient(spec, barrier, mu, z);
        const Vec fd = finite_difference_gradient(fmu, z);
        if (!close_rel(analytic, fd, rel_tol)) {
            std::ostringstream os;
            os << "grad f_mu disagrees with finite differences at sample " << p
               << " (max err " << (analytic - fd).cwiseAbs().maxCoeff() << ")";
            report.fail(os.str());
        }
    }
    return report;
}

ValidationReport check_prox_selection(const ProblemSpec& spec, const std::vector<Vec>& points,
                                      const std::vector<double>& gammas) {
    ValidationReport report;
    SplitMix64 rng(0x9A0C);
    for (std::size_t p = 0; p < points.size(); ++p) {
        for (double gamma : gammas) {
            if (!(gamma < spec.prox_bound_threshold)) continue;
            const Vec& x = points[p];
            const Vec out = spec.prox_g_eval(x, gamma);
            const double g_out = spec.g_eval(out);
            if (!std::isfinite(g_out)) {
                std::ostringstream os;
                os << "g(prox(x, gamma)) not finite at sample " << p << ", gamma " << gamma;
                report.fail(os.str());
                continue;
            }
            const double attained = g_out + (out - x).squaredNorm() / (2 * gamma);
            // prox must not be beaten along a random coordinate section
            // through its own output (1-D oracle on that line).
            const int coord = static_cast<int>(rng.next_u64() % spec.n);
            const auto section = [&](double t) {
                Vec probe = out;
                probe[coord] = t;
                return spec.g_eval(probe) + (probe - x).squaredNorm() / (2 * gamma);
            };
            const double best_t = brute_force_prox_1d(
                [&](double t) {
                    Vec probe = out;
                    probe[coord] = t;
                    return spec.g_eval(probe);
                },
                gamma, x[coord], std::abs(x[coord]) + 10, 20000);
            if (section(best_t) < attained - 1e-8) {
                std::ostringstream os;
                os << "prox selection beaten along coordinate " << coord << " at sample " << p
                   << ", gamma " << gamma;
                report.fail(os.str());
            }
        }
    }
    return report;
}

ValidationReport validate_problem(const RegisteredProblem& problem, const Barrier& barrier,
                                  int num_points) {
    ValidationReport report;

    std::vector<double> grid;
    for (double t = -10; t <= -1e-4; t /= 2) grid.push_back(t);
    const BarrierReport b_report = validate_barrier(barrier, grid);
    for (const auto& failure : b_report.failures) report.fail("barrier: " + failure);

    std::vector<Vec> points;
    points.reserve(num_points);
    for (int i = 0; i < num_points; ++i) points.push_back(problem.feasible_sampler(i));

    report.merge(check_problem_derivatives(problem.spec, points));
    report.merge(check_barrier_gradient(problem.spec, barrier, 1.0, points));

    std::vector<Vec> prox_points(points.begin(),
                                 points.begin() + std::min<std::size_t>(points.size(), 10));
    report.merge(check_prox_selection(problem.spec, prox_points, {0.01, 0.1, 1.0}));
    return report;
}

}  // namespace iprox
