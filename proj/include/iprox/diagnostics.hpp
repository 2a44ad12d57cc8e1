#pragma once

#include "iprox/types.hpp"

#include <vector>

namespace iprox {

struct KktRow {
    int index = 0;
    double c_value = 0;
    double y_value = 0;
    double complementarity = 0;  ///< min{-c_i, y_i}
    bool active = false;         ///< |c_i| <= 10 * eps_p, display only
};

/// Per-constraint KKT table plus the certification verdict. Certified iff the
/// dual certificate is <= eps_d and every row's complementarity is <= eps_p —
/// the same arithmetic as the outer loop's exit test.
struct KktReport {
    std::vector<KktRow> rows;
    double dual_certificate = kInf;
    double worst_complementarity = 0;
    double eps_p = 0;
    double eps_d = 0;
    bool certified = false;
};

KktReport build_kkt_report(const PrimalDualPair& pair, const ProblemSpec& spec,
                           const OuterParams& outer);

}  // namespace iprox
