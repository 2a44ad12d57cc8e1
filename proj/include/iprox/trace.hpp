#pragma once

#include "iprox/types.hpp"

#include <functional>
#include <vector>

namespace iprox {

/// One accepted iteration of the inner solver (or, with outer_accept set, the
/// outer-loop acceptance of an inner solve's output).
struct TraceRow {
    int outer_iter = 0;           ///< k
    long inner_iter = 0;          ///< j within the inner solve
    double gamma = 0;             ///< stepsize of the accepted step
    double q_mu = 0;              ///< q_mu(zbar) after the step
    double inner_residual = 0;    ///< ||(1/gamma)(z - zbar) - grad(z) + grad(zbar)||
    double primal_residual = 0;   ///< max_i min{-c_i(zbar), mu b'(c_i(zbar))}
    double eps_k = 0;             ///< inner tolerance in force
    double mu_k = 0;              ///< barrier weight in force
    long grad_evals = 0;          ///< cumulative
    long prox_evals = 0;          ///< cumulative
    bool outer_accept = false;    ///< marks outer-iteration boundaries
    double y_inf = 0;             ///< max_i y_i, multiplier-boundedness monitor

    // Extra per-step data kept in memory for invariant checks; not part of
    // the CSV schema.
    double q_prev = 0;            ///< q_mu at the step's base point z
    double step_norm_sq = 0;      ///< ||zbar - z||^2
    Vec z;                        ///< the accepted point
};

/// Append-only record of a solve. An optional sink callback fires once per
/// appended row; it must not mutate solver state.
class SolveTrace {
public:
    using Sink = std::function<void(const TraceRow&)>;

    void append(const TraceRow& row) {
        rows_.push_back(row);
        if (sink_) sink_(row);
    }
    void set_sink(Sink sink) { sink_ = std::move(sink); }
    const std::vector<TraceRow>& rows() const { return rows_; }
    bool empty() const { return rows_.empty(); }
    void clear() { rows_.clear(); }

private:
    std::vector<TraceRow> rows_;
    Sink sink_;
};

}  // namespace iprox
