#include "iprox/diagnostics.hpp"

#include <algorithm>
#include <cmath>

namespace iprox {

KktReport build_kkt_report(const PrimalDualPair& pair, const ProblemSpec& spec,
                           const OuterParams& outer) {
    KktReport report;
    report.eps_p = outer.eps_p;
    report.eps_d = outer.eps_d;
    report.dual_certificate = pair.dual_residual;

    const Vec c = spec.m > 0 ? Vec(spec.c_eval(pair.x)) : Vec(0);
    check_finite(c, "c_eval");
    if (pair.y.size() != c.size())
        throw PreconditionError("build_kkt_report: multiplier size does not match constraints");

    for (int i = 0; i < spec.m; ++i) {
        KktRow row;
        row.index = i;
        row.c_value = c[i];
        row.y_value = pair.y[i];
        row.complementarity = std::min(-c[i], pair.y[i]);
        row.active = std::abs(c[i]) <= 10 * outer.eps_p;
        report.worst_complementarity = std::max(report.worst_complementarity,
                                                row.complementarity);
        report.rows.push_back(row);
    }

    // Same arithmetic as the outer exit test.
    report.certified = report.dual_certificate <= outer.eps_d &&
                       report.worst_complementarity <= outer.eps_p;
    return report;
}

}  // namespace iprox
