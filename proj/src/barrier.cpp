#include "iprox/barrier.hpp"

#include <cmath>
#include <sstream>

namespace iprox {

Barrier reciprocal_barrier() {
    Barrier barrier;
    barrier.name = "reciprocal";
    barrier.b = [](double t) { return t < 0 ? -1.0 / t : kInf; };
    barrier.db = [](double t) { return t < 0 ? 1.0 / (t * t) : kInf; };
    barrier.d2b = [](double t) { return t < 0 ? -2.0 / (t * t * t) : kInf; };
    return barrier;
}

namespace {

// Central difference with a step that keeps both stencil points inside
// (-inf, 0).
double fd_scalar(const std::function<double(double)>& f, double t) {
    double h = std::max(1e-7, 1e-7 * std::abs(t));
    if (t + h >= 0) h = -t / 2;
    return (f(t + h) - f(t - h)) / (2 * h);
}

}  // namespace

BarrierReport validate_barrier(const Barrier& barrier, const std::vector<double>& sample_grid) {
    if (sample_grid.empty()) throw PreconditionError("barrier sample grid must be nonempty");
    for (double t : sample_grid)
        if (!(t < 0)) throw PreconditionError("barrier sample grid must be strictly negative");

    BarrierReport report;
    auto note = [&report](const char* axiom, double t, double got) {
        std::ostringstream os;
        os << axiom << " violated at t = " << t << " (got " << got << ")";
        report.fail(os.str());
    };

    for (double t : sample_grid) {
        const double bt = barrier.b(t);
        const double dbt = barrier.db(t);
        if (std::isnan(bt) || std::isnan(dbt)) {
            note("finiteness of b, b' on (-inf,0)", t, bt);
            continue;
        }
        if (!(bt >= 0)) note("nonnegativity b >= 0", t, bt);
        if (!(dbt > 0)) note("monotonicity b' > 0", t, dbt);

        const double fd_b = fd_scalar(barrier.b, t);
        if (std::abs(fd_b - dbt) > 1e-4 * std::max(1.0, std::abs(dbt)))
            note("b' vs finite difference of b", t, dbt - fd_b);
        if (barrier.d2b) {
            const double d2bt = barrier.d2b(t);
            const double fd_db = fd_scalar(barrier.db, t);
            if (std::abs(fd_db - d2bt) > 1e-4 * std::max(1.0, std::abs(d2bt)))
                note("b'' vs finite difference of b'", t, d2bt - fd_db);
        }
    }

    // dom b = (-inf, 0): the sentinel must hold at and beyond the boundary.
    if (!(barrier.b(0.0) == kInf)) note("b(0) = +inf sentinel", 0.0, barrier.b(0.0));
    if (!(barrier.b(1.0) == kInf)) note("b(t>0) = +inf sentinel", 1.0, barrier.b(1.0));

    // Divergence proxy for b(t) -> inf as t -> 0-.
    const double near = barrier.b(-1e-8);
    if (!(near >= 1e7)) note("divergence b(-1e-8) >= 1e7", -1e-8, near);

    return report;
}

}  // namespace iprox
