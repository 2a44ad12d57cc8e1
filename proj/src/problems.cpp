#include "iprox/problems.hpp"

#include "iprox/prox.hpp"
#include "iprox/rng.hpp"

#include <cmath>
#include <numbers>

namespace iprox {

namespace {

const Vec kRosenbrockCenter = (Eigen::Vector2d() << -0.25, 0.25).finished();
constexpr double kRosenbrockRadius = 0.5;

}  // namespace

ProblemSpec rosenbrock_instance() {
    ProblemSpec spec;
    spec.n = 2;
    spec.m = 1;
    spec.f_eval = [](const Vec& x) {
        const double w = x[1] + 1 - (x[0] + 1) * (x[0] + 1);
        return 100 * w * w;
    };
    spec.grad_f_eval = [](const Vec& x) {
        const double w = x[1] + 1 - (x[0] + 1) * (x[0] + 1);
        Vec g(2);
        g[0] = -400 * (x[0] + 1) * w;
        g[1] = 200 * w;
        return g;
    };
    spec.g_eval = [](const Vec& x) {
        return std::sqrt(std::abs(x[0])) + std::sqrt(std::abs(x[1]));
    };
    spec.prox_g_eval = [](const Vec& x, double gamma) { return prox_half_quasinorm(x, gamma); };
    spec.c_eval = [](const Vec& x) {
        Vec c(1);
        c[0] = kRosenbrockRadius * kRosenbrockRadius - (x - kRosenbrockCenter).squaredNorm();
        return c;
    };
    spec.jac_c_eval = [](const Vec& x) {
        Mat jac(1, 2);
        jac.row(0) = -2 * (x - kRosenbrockCenter).transpose();
        return jac;
    };
    spec.prox_bound_threshold = kInf;  // g >= 0
    return spec;
}

RegisteredProblem rosenbrock_registered() {
    RegisteredProblem problem;
    problem.name = "rosenbrock";
    problem.spec = rosenbrock_instance();
    problem.default_x0 = (Eigen::Vector2d() << 0.0, 1.05).finished();
    problem.feasible_sampler = [spec = problem.spec](std::uint64_t index) {
        SplitMix64 rng(0x526f73656e62ULL + index);
        for (int tries = 0; tries < 10000; ++tries) {
            Vec x(2);
            x[0] = rng.uniform(-3, 3);
            x[1] = rng.uniform(-3, 3);
            if (spec.c_eval(x)[0] <= -0.05) return x;
        }
        return Vec((Eigen::Vector2d() << 1.0, 1.0).finished());
    };
    return problem;
}

std::vector<Vec> circle_starting_points(int count) {
    if (count < 1) throw PreconditionError("circle_starting_points requires count >= 1");
    std::vector<Vec> points;
    points.reserve(count);
    for (int i = 0; i < count; ++i) {
        const double theta = 2 * std::numbers::pi * i / count;
        Vec x(2);
        x[0] = 0.8 * std::cos(theta);
        x[1] = 0.25 + 0.8 * std::sin(theta);
        points.push_back(std::move(x));
    }
    return points;
}

std::array<Vec, 3> rosenbrock_reference_minimizers() {
    return {
        (Eigen::Vector2d() << -0.12, -0.23).finished(),
        (Eigen::Vector2d() << 0.21, 0.45).finished(),
        (Eigen::Vector2d() << -2.00, 0.0).finished(),
    };
}

QboxData quadratic_box_data(int n, std::uint64_t seed) {
    if (n < 1 || n > 16) throw PreconditionError("quadratic_box_data supports n in [1, 16]");
    // Stream seeded with n in the high half so (n, seed) pairs never collide.
    SplitMix64 rng((static_cast<std::uint64_t>(n) << 32) ^ seed);
    const int m = 2;

    QboxData data;
    Mat M(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) M(i, j) = rng.uniform(-1, 1);
    data.Q = M.transpose() * M + static_cast<double>(n) * Mat::Identity(n, n);
    data.b = Vec(n);
    for (int i = 0; i < n; ++i) data.b[i] = rng.uniform(-2, 2);
    data.lo = Vec(n);
    data.hi = Vec(n);
    for (int i = 0; i < n; ++i) {
        data.lo[i] = -rng.uniform(0.5, 2);
        data.hi[i] = rng.uniform(0.5, 2);
    }
    data.x_interior = 0.5 * (data.lo + data.hi);
    data.A = Mat(m, n);
    data.d = Vec(m);
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < n; ++j) data.A(i, j) = rng.uniform(-1, 1);
        data.A.row(i).normalize();
        const double margin = rng.uniform(0.1, 0.6);
        data.d[i] = data.A.row(i).dot(data.x_interior) + margin;
    }
    return data;
}

RegisteredProblem quadratic_box_instance(int n, std::uint64_t seed) {
    const QboxData data = quadratic_box_data(n, seed);

    ProblemSpec spec;
    spec.n = n;
    spec.m = static_cast<int>(data.A.rows());
    spec.f_eval = [data](const Vec& x) { return 0.5 * x.dot(data.Q * x) + data.b.dot(x); };
    spec.grad_f_eval = [data](const Vec& x) { return Vec(data.Q * x + data.b); };
    spec.g_eval = [data](const Vec& x) {
        for (Eigen::Index i = 0; i < x.size(); ++i)
            if (x[i] < data.lo[i] || x[i] > data.hi[i]) return kInf;
        return 0.0;
    };
    spec.prox_g_eval = [data](const Vec& x, double) {
        return prox_box_indicator(x, data.lo, data.hi);
    };
    spec.c_eval = [data](const Vec& x) { return Vec(data.A * x - data.d); };
    spec.jac_c_eval = [data](const Vec&) { return data.A; };
    spec.prox_bound_threshold = kInf;  // indicator of a nonempty set

    RegisteredProblem problem;
    problem.name = "qbox-" + std::to_string(n) + "-" + std::to_string(seed);
    problem.spec = spec;
    problem.default_x0 = data.x_interior;
    problem.feasible_sampler = [data, n, seed](std::uint64_t index) {
        SplitMix64 rng(((static_cast<std::uint64_t>(n) << 32) ^ seed) + 0xF00D + index);
        for (int tries = 0; tries < 10000; ++tries) {
            Vec x(n);
            for (int i = 0; i < n; ++i) {
                const double center = 0.5 * (data.lo[i] + data.hi[i]);
                const double width = data.hi[i] - data.lo[i];
                x[i] = center + (rng.next_double() - 0.5) * 0.9 * width;
            }
            if (((data.A * x - data.d).array() <= -0.01).all()) return x;
        }
        return data.x_interior;
    };
    return problem;
}

namespace {

// Rosenbrock with a sign-flipped gradient; exists so the validation path that
// catches bad derivatives can be exercised end to end.
RegisteredProblem corrupt_gradient_fixture() {
    RegisteredProblem problem = rosenbrock_registered();
    problem.name = "corrupt-grad";
    auto good = problem.spec.grad_f_eval;
    problem.spec.grad_f_eval = [good](const Vec& x) { return Vec(-good(x)); };
    return problem;
}

}  // namespace

RegisteredProblem find_problem(const std::string& name) {
    if (name == "rosenbrock") return rosenbrock_registered();
    if (name == "corrupt-grad") return corrupt_gradient_fixture();
    if (name.rfind("qbox-", 0) == 0) {
        const std::string rest = name.substr(5);
        const auto dash = rest.find('-');
        if (dash != std::string::npos) {
            try {
                const int n = std::stoi(rest.substr(0, dash));
                const std::uint64_t seed = std::stoull(rest.substr(dash + 1));
                return quadratic_box_instance(n, seed);
            } catch (const std::logic_error&) {
                // fall through to the unknown-problem error
            }
        }
    }
    throw PreconditionError("unknown problem '" + name +
                            "'; see list-problems for available names");
}

std::vector<std::string> list_problems() {
    return {
        "rosenbrock        nonsmooth Rosenbrock with a circular exclusion (n=2, m=1)",
        "qbox-<n>-<seed>   seeded convex quadratic over a box with two linear inequalities",
        "corrupt-grad      rosenbrock with a deliberately wrong gradient (validation fixture)",
    };
}

}  // namespace iprox
