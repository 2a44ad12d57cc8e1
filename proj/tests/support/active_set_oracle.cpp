#include "support/active_set_oracle.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <vector>

namespace iprox_test {

using iprox::Mat;
using iprox::Vec;

namespace {

constexpr double kTol = 1e-9;

enum class CoordState { free_coord, at_lo, at_hi };

}  // namespace

OracleSolution active_set_solve(const iprox::QboxData& data) {
    const int n = static_cast<int>(data.Q.rows());
    const int m = static_cast<int>(data.A.rows());

    OracleSolution best;
    double best_value = iprox::kInf;

    std::vector<CoordState> states(n, CoordState::free_coord);
    long combos = 1;
    for (int i = 0; i < n; ++i) combos *= 3;

    for (long combo = 0; combo < combos; ++combo) {
        long code = combo;
        for (int i = 0; i < n; ++i) {
            states[i] = static_cast<CoordState>(code % 3);
            code /= 3;
        }
        std::vector<int> free_idx;
        for (int i = 0; i < n; ++i)
            if (states[i] == CoordState::free_coord) free_idx.push_back(i);

        for (int active_mask = 0; active_mask < (1 << m); ++active_mask) {
            std::vector<int> active;
            for (int s = 0; s < m; ++s)
                if (active_mask & (1 << s)) active.push_back(s);

            const int nf = static_cast<int>(free_idx.size());
            const int na = static_cast<int>(active.size());
            const int dim = nf + na;

            Vec x = Vec::Zero(n);
            for (int i = 0; i < n; ++i) {
                if (states[i] == CoordState::at_lo) x[i] = data.lo[i];
                if (states[i] == CoordState::at_hi) x[i] = data.hi[i];
            }

            // Unknowns: free coordinates then active multipliers.
            // Stationarity on free coordinates, equality on active rows.
            Mat K = Mat::Zero(dim, dim);
            Vec rhs = Vec::Zero(dim);
            for (int r = 0; r < nf; ++r) {
                const int i = free_idx[r];
                for (int ccol = 0; ccol < nf; ++ccol) K(r, ccol) = data.Q(i, free_idx[ccol]);
                for (int a = 0; a < na; ++a) K(r, nf + a) = data.A(active[a], i);
                rhs[r] = -data.b[i];
                for (int j = 0; j < n; ++j)
                    if (states[j] != CoordState::free_coord) rhs[r] -= data.Q(i, j) * x[j];
            }
            for (int a = 0; a < na; ++a) {
                const int s = active[a];
                for (int ccol = 0; ccol < nf; ++ccol) K(nf + a, ccol) = data.A(s, free_idx[ccol]);
                rhs[nf + a] = data.d[s];
                for (int j = 0; j < n; ++j)
                    if (states[j] != CoordState::free_coord) rhs[nf + a] -= data.A(s, j) * x[j];
            }

            Vec sol = Vec::Zero(dim);
            if (dim > 0) {
                Eigen::FullPivLU<Mat> lu(K);
                sol = lu.solve(rhs);
                if ((K * sol - rhs).norm() > 1e-10 * std::max(1.0, rhs.norm())) continue;
            }
            for (int r = 0; r < nf; ++r) x[free_idx[r]] = sol[r];
            Vec y = Vec::Zero(m);
            for (int a = 0; a < na; ++a) y[active[a]] = sol[nf + a];

            // KKT sign and feasibility checks.
            bool valid = true;
            for (int a = 0; a < na && valid; ++a) valid = y[active[a]] >= -kTol;
            const Vec slack = data.A * x - data.d;
            for (int s = 0; s < m && valid; ++s)
                if (!(active_mask & (1 << s))) valid = slack[s] <= kTol;
            for (int i = 0; i < n && valid; ++i)
                if (states[i] == CoordState::free_coord)
                    valid = x[i] >= data.lo[i] - kTol && x[i] <= data.hi[i] + kTol;
            const Vec stat = data.Q * x + data.b + data.A.transpose() * y;
            for (int i = 0; i < n && valid; ++i) {
                if (states[i] == CoordState::at_lo) valid = stat[i] >= -kTol;
                if (states[i] == CoordState::at_hi) valid = stat[i] <= kTol;
            }
            if (!valid) continue;

            const double value = 0.5 * x.dot(data.Q * x) + data.b.dot(x);
            if (value < best_value) {
                best_value = value;
                best.found = true;
                best.x = x;
                best.y = y;
            }
        }
    }
    return best;
}

}  // namespace iprox_test
