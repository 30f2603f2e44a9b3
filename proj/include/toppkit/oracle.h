#ifndef TOPPKIT_ORACLE_H_
#define TOPPKIT_ORACLE_H_

#include <cstdint>

#include "toppkit/discretization.h"
#include "toppkit/dynamics_model.h"
#include "toppkit/path_models.h"
#include "toppkit/solver.h"
#include "toppkit/speed_profile.h"

namespace toppkit {

inline constexpr int kDefaultOracleLevels = 512;

// Spacing of the oracle lattice: (max bu - min bl) / (levels - 1) over grid.
double LatticeSpacing(const Discretization& grid, const DynamicsModel& model,
                      int levels);

// Set-valued dynamic program. Each column holds the full set of
// backward-controllable squared speeds as a union of intervals, found by
// scanning a uniform lattice of `levels` values over [min bl, max bu] and
// refining each pass/fail boundary. The forward pass then propagates whole
// reachable sets from the largest controllable start value, and the output is
// the per-column maximum of reachable within controllable.
//
// Throws ContractViolation for levels < 8 or unbounded bounds, and
// InfeasibleInstance if some column is empty.
SpeedProfile DpOptimum(const Discretization& grid, const DynamicsModel& model,
                       int levels = kDefaultOracleLevels,
                       const Endpoints& endpoints = {});

// Agreement bound between oracle and solver: 2 * spacing + 2 * B * Delta(D).
double OracleTolerance(const Discretization& grid, const DynamicsModel& model,
                       int levels);

// Optimum of the car model with f_fr and v_max scaled by the multipliers.
// Throws InfeasibleInstance if that model has no admissible profile.
SpeedProfile TightenedOptimum(const PathSpec& path, const Discretization& grid,
                              double f_fr_scale, double v_max_scale);

// Draws multipliers in (0.3, 1) from `seed`, solves the tightened problem and
// returns its optimum, which is admissible for the original path. Infeasible
// draws are retried with multipliers moved halfway to 1, up to 8 attempts.
SpeedProfile RandomAdmissible(const PathSpec& path, const Discretization& grid,
                              std::uint64_t seed);

}  // namespace toppkit

#endif  // TOPPKIT_ORACLE_H_
