#pragma once

#include "iprox/types.hpp"

#include <vector>

namespace iprox {

/// The reciprocal barrier b(t) = -1/t on (-inf, 0), +inf elsewhere.
Barrier reciprocal_barrier();

/// Outcome of checking the barrier axioms on a sample grid.
struct BarrierReport {
    bool ok = true;
    std::vector<std::string> failures;  ///< one entry per violated axiom

    void fail(std::string what) {
        ok = false;
        failures.push_back(std::move(what));
    }
};

/// Checks, on a nonempty grid of negative abscissae: nonnegativity of b,
/// positivity of b', agreement of b' and b'' with finite differences, the
/// +inf sentinel at t >= 0, and the divergence proxy b(-1e-8) >= 1e7.
/// Report-valued; throws only on an empty or nonnegative grid.
BarrierReport validate_barrier(const Barrier& barrier, const std::vector<double>& sample_grid);

}  // namespace iprox
