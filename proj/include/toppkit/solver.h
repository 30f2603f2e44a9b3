#ifndef TOPPKIT_SOLVER_H_
#define TOPPKIT_SOLVER_H_

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "toppkit/discretization.h"
#include "toppkit/dynamics_model.h"
#include "toppkit/speed_profile.h"

namespace toppkit {

// Settings for the scalar maximization in each backward step.
struct StepSolverConfig {
  // Bracket width (m^2/s^2) at which bisection stops.
  double abs_tol = 1e-12;
  // Number of equal cells scanned when the end-point bracket fails.
  int scan_cells = 1024;
};

// abs_tol = 1e-12 * max(1, max_i bu(s_i)) over finite bounds, 1024 cells.
StepSolverConfig DefaultStepConfig(const Discretization& grid,
                                   const DynamicsModel& model);

// Optional squared-speed caps at the path ends.
struct Endpoints {
  std::optional<double> start;
  std::optional<double> end;
};

// Largest h in [bl(s), bu(s)] with h + fminus(s, h) * ds <= h_next, or
// nullopt if there is none. The returned value always satisfies the
// inequality and lies within cfg.abs_tol of the supremum when the residual is
// monotone on the bracket.
std::optional<double> BackwardStep(double s, double ds, double h_next,
                                   const DynamicsModel& model,
                                   const StepSolverConfig& cfg);

// min(h_cap, h_prev + fplus(s_prev, h_prev) * ds), or nullopt when that value
// falls below bl(s_prev + ds).
std::optional<double> ForwardStep(double s_prev, double ds, double h_prev,
                                  double h_cap, const DynamicsModel& model,
                                  const StepSolverConfig& cfg);

enum class Pass { kBackward, kForward };

std::string_view PassName(Pass pass);

struct Infeasibility {
  std::size_t index;
  Pass pass;
};

struct SolveReport {
  bool feasible() const { return !failure.has_value(); }

  // Meaningful only when feasible(); holds the forward sequence.
  SpeedProfile profile;
  // Pass sequences. Entries a failed solve never reached are NaN.
  std::vector<double> backward;
  std::vector<double> forward;
  std::optional<Infeasibility> failure;
  // Unset when infeasible or when the profile stalls (infinite time).
  std::optional<double> traversal_time;
  std::optional<double> error_vs_reference;
};

// Backward-forward pass over `grid`. The backward pass is seeded with
// min(bu(s_n), endpoints.end) and the forward pass with
// min(h_0^(b), endpoints.start). Throws ContractViolation for negative
// endpoint caps.
SolveReport Solve(const Discretization& grid, const DynamicsModel& model,
                  const Endpoints& endpoints, const StepSolverConfig& cfg);
SolveReport Solve(const Discretization& grid, const DynamicsModel& model,
                  const Endpoints& endpoints = {});

nlohmann::json SolveReportToJson(const SolveReport& report);

}  // namespace toppkit

#endif  // TOPPKIT_SOLVER_H_
