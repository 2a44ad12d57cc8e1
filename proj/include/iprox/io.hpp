#pragma once

#include "iprox/experiments.hpp"
#include "iprox/trace.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace iprox {

/// 17-significant-digit formatting; round-trips doubles exactly.
std::string format_g17(double v);

/// Fixed 12-column schema:
/// k,j,gamma,q_mu,inner_residual,primal_residual,eps_k,mu_k,grad_evals,prox_evals,outer_accept,y_inf
extern const char* const kTraceCsvHeader;
void write_trace_csv(std::ostream& os, const std::vector<TraceRow>& rows);

/// k,j plus the iterate coordinates x1..xn (inner rows only).
void write_trajectory_csv(std::ostream& os, const std::vector<TraceRow>& rows);

/// start_index,theta,x0_1,x0_2,xstar_1,xstar_2,basin,dist_to_ref,grad_evals,prox_evals,status
void write_basin_csv(std::ostream& os, const std::vector<SingleRun>& runs,
                     const std::vector<int>& basins);

std::string run_summary_json(const SingleRun& run, const OuterParams& outer,
                             const InnerParams& inner);

std::string aggregate_summary_json(const std::vector<SingleRun>& runs, const OuterParams& outer,
                                   const InnerParams& inner);

}  // namespace iprox
