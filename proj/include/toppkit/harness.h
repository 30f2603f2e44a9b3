#ifndef TOPPKIT_HARNESS_H_
#define TOPPKIT_HARNESS_H_

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "toppkit/discretization.h"
#include "toppkit/path_models.h"

namespace toppkit {

enum class ReferenceKind { kAnalytic, kFinest };

struct ConvergenceRow {
  std::size_t n;  // grid points
  double delta;   // resolution
  double rho;     // max error at grid points against the reference
  std::optional<double> time;  // traversal time of the solve
  bool admissible;
};

// Solves `path` on uniform grids with the given point counts and measures the
// error against either the analytic optimum or a solve on a grid with
// 4 * (n_max - 1) segments. In finest mode every coarse segment count must
// divide the finest one so that coarse points are fine points.
//
// Throws ContractViolation for fewer than two or non-increasing sizes, or
// misaligned sizes in finest mode; InfeasibleInstance if a solve fails.
std::vector<ConvergenceRow> ConvergenceSweep(
    const PathSpec& path, const std::vector<std::size_t>& resolutions,
    ReferenceKind reference);

struct XiRow {
  double xi;
  double gap;  // max pointwise gap to the unrelaxed solve
  bool admissible;
};

struct XiSweepResult {
  std::vector<XiRow> rows;
  // Gaps never grow as xi decreases, up to the default tolerance.
  bool gaps_non_increasing;
};

// Throws ContractViolation unless xis is strictly decreasing and ends at 0;
// InfeasibleInstance if any relaxed solve fails.
XiSweepResult XiSweep(const PathSpec& path, const Discretization& grid,
                      const std::vector<double>& xis);

std::string ConvergenceToCsv(const std::vector<ConvergenceRow>& rows);
std::string XiSweepToCsv(const XiSweepResult& result);

}  // namespace toppkit

#endif  // TOPPKIT_HARNESS_H_
