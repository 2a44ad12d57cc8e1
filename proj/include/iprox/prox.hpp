#pragma once

#include "iprox/types.hpp"

namespace iprox {

/// Elementwise prox of sum_i |x_i|^{1/2}.
///
/// Coordinates with |x_i| <= (3/2) gamma^{2/3} map to 0 (ties included); above
/// the threshold the closed-form root of the scalar optimality cubic is used:
///   (2/3) x_i (1 + cos((2/3) arccos(-(gamma/4) (3/|x_i|)^{3/2}))).
Vec prox_half_quasinorm(const Vec& x, double gamma);

/// Soft-thresholding: coordinatewise shrink by gamma * weight.
Vec prox_l1(const Vec& x, double gamma, double weight);

/// Projection onto the box [lo, hi]; independent of the stepsize.
Vec prox_box_indicator(const Vec& x, const Vec& lo, const Vec& hi);

/// Brute-force 1-D prox oracle: argmin over a uniform grid of
/// h(t) + (t - x)^2 / (2 gamma) on [x - half_width, x + half_width], refined by
/// local ternary search to 1e-10 interval width. Verification use only; the
/// grid must have at least 1000 points and half_width must cover the prox ball
/// (>= |x| + 1).
double brute_force_prox_1d(const std::function<double(double)>& h, double gamma, double x,
                           double half_width, int grid_points);

}  // namespace iprox
