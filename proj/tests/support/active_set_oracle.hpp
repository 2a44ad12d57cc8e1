#pragma once

#include "iprox/problems.hpp"

namespace iprox_test {

struct OracleSolution {
    bool found = false;
    iprox::Vec x;
    iprox::Vec y;  ///< multipliers of the linear inequalities (zero when inactive)
};

/// Exact minimizer of  1/2 x^T Q x + b^T x  over  lo <= x <= hi, A x <= d,
/// by enumerating every combination of coordinate states {lo, free, hi} and
/// active linear constraints and solving the resulting KKT systems. Intended
/// for n <= 4 only.
OracleSolution active_set_solve(const iprox::QboxData& data);

}  // namespace iprox_test
