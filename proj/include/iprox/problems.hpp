#pragma once

#include "iprox/types.hpp"

#include <array>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace iprox {

/// A benchmark instance: the problem data plus a default strictly feasible
/// starting point and a deterministic sampler of strictly feasible points.
struct RegisteredProblem {
    std::string name;
    ProblemSpec spec;
    Vec default_x0;
    /// index -> the index-th strictly feasible sample point (deterministic).
    std::function<Vec(std::uint64_t)> feasible_sampler;
};

/// Nonsmooth Rosenbrock benchmark on R^2:
///   min 100 (x2 + 1 - (x1 + 1)^2)^2 + |x1|^{1/2} + |x2|^{1/2}
///   s.t. ||x - x_C||^2 >= r_C^2,  x_C = (-1/4, 1/4), r_C = 1/2,
/// encoded as c(x) = r_C^2 - ||x - x_C||^2 <= 0.
ProblemSpec rosenbrock_instance();

RegisteredProblem rosenbrock_registered();

/// Multistart protocol: count points (4/5 cos th_i, 1/4 + 4/5 sin th_i) with
/// th_i = 2 pi i / count. Every point is strictly feasible for the Rosenbrock
/// instance.
std::vector<Vec> circle_starting_points(int count);

/// The three stationary points the Rosenbrock multistart converges to,
/// as displayed to two decimals: the global minimizer (-0.12, -0.23) and
/// local minimizers (0.21, 0.45) and (-2.00, 0).
std::array<Vec, 3> rosenbrock_reference_minimizers();

/// Raw data behind a quadratic-box instance, exposed so independent oracles
/// can resolve the instance without going through the evaluators.
struct QboxData {
    Mat Q;   ///< symmetric positive definite
    Vec b;
    Vec lo;  ///< box bounds, lo < hi
    Vec hi;
    Mat A;   ///< m x n, constraint rows
    Vec d;   ///< c(x) = A x - d <= 0
    Vec x_interior;  ///< strictly feasible point used as default start
};

QboxData quadratic_box_data(int n, std::uint64_t seed);

/// Convex sanity family: f(x) = x^T Q x / 2 + b^T x, g the box indicator
/// (prox = clamp), c(x) = A x - d with two rows. Seeded and deterministic
/// across platforms (SplitMix64 stream).
RegisteredProblem quadratic_box_instance(int n, std::uint64_t seed);

/// Resolves "rosenbrock", "qbox-<n>-<seed>", or the validation fixture
/// "corrupt-grad". Throws PreconditionError for unknown names.
RegisteredProblem find_problem(const std::string& name);

/// Names and name patterns accepted by find_problem.
std::vector<std::string> list_problems();

}  // namespace iprox
