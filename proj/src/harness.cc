#include "toppkit/harness.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "toppkit/errors.h"
#include "toppkit/profile_io.h"
#include "toppkit/solver.h"

namespace toppkit {
namespace {

SolveReport SolveOrThrow(const Discretization& grid, const DynamicsModel& model,
                         const Endpoints& endpoints, const std::string& what) {
  SolveReport report = Solve(grid, model, endpoints);
  if (!report.feasible()) {
    throw InfeasibleInstance(what + ": infeasible at index " +
                                 std::to_string(report.failure->index) + " (" +
                                 std::string(PassName(report.failure->pass)) +
                                 " pass)",
                             report.failure->index);
  }
  return report;
}

}  // namespace

std::vector<ConvergenceRow> ConvergenceSweep(
    const PathSpec& path, const std::vector<std::size_t>& resolutions,
    ReferenceKind reference) {
  if (resolutions.size() < 2) {
    throw ContractViolation("convergence sweep needs at least two sizes");
  }
  for (std::size_t k = 0; k < resolutions.size(); ++k) {
    if (resolutions[k] < 2 || (k > 0 && resolutions[k] <= resolutions[k - 1])) {
      throw ContractViolation(
          "sweep sizes must be strictly increasing and at least 2");
    }
  }
  const DynamicsModel model = BuildModel(path);

  std::optional<SolveReport> finest;
  std::size_t fine_segments = 0;
  if (reference == ReferenceKind::kFinest) {
    fine_segments = 4 * (resolutions.back() - 1);
    for (std::size_t n : resolutions) {
      if (fine_segments % (n - 1) != 0) {
        throw ContractViolation(
            "grid with " + std::to_string(n) +
            " points does not align with the reference grid of " +
            std::to_string(fine_segments + 1) + " points");
      }
    }
    finest = SolveOrThrow(UniformGrid(path, fine_segments + 1), model,
                          path.endpoints,
                          "reference grid of " +
                              std::to_string(fine_segments + 1) + " points");
  } else if (!HasAnalyticOptimum(path)) {
    throw UnsupportedInstance("analytic reference unavailable for this path");
  }

  std::vector<ConvergenceRow> rows;
  for (std::size_t n : resolutions) {
    const Discretization grid = UniformGrid(path, n);
    const SolveReport report = SolveOrThrow(
        grid, model, path.endpoints, "grid of " + std::to_string(n) + " points");
    std::vector<double> ref(n);
    if (finest) {
      const std::size_t stride = fine_segments / (n - 1);
      for (std::size_t i = 0; i < n; ++i) {
        ref[i] = finest->profile.values[i * stride];
      }
    } else {
      ref = AnalyticOptimum(path, grid).values;
    }
    double rho = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      rho = std::max(rho, std::abs(report.profile.values[i] - ref[i]));
    }
    rows.push_back({n, grid.resolution(), rho, report.traversal_time,
                    CheckAdmissible(report.profile, model).admissible()});
  }
  return rows;
}

XiSweepResult XiSweep(const PathSpec& path, const Discretization& grid,
                      const std::vector<double>& xis) {
  if (xis.empty() || xis.back() != 0.0) {
    throw ContractViolation("xi sequence must end at 0");
  }
  for (std::size_t k = 0; k < xis.size(); ++k) {
    if (!(xis[k] >= 0.0) || (k > 0 && !(xis[k] < xis[k - 1]))) {
      throw ContractViolation("xi sequence must be strictly decreasing");
    }
  }
  const DynamicsModel model = BuildModel(path);
  const SolveReport base =
      SolveOrThrow(grid, model, path.endpoints, "unrelaxed model");

  XiSweepResult result{{}, true};
  for (double xi : xis) {
    const DynamicsModel relaxed = Relax(model, xi);
    const SolveReport report = SolveOrThrow(
        grid, relaxed, path.endpoints, "relaxation xi=" + FormatDouble(xi));
    const double gap = ProfileError(report.profile, base.profile);
    const bool admissible =
        CheckAdmissible(report.profile, relaxed).admissible();
    if (!result.rows.empty() &&
        gap > result.rows.back().gap + DefaultTolerance(model)) {
      result.gaps_non_increasing = false;
    }
    result.rows.push_back({xi, gap, admissible});
  }
  return result;
}

std::string ConvergenceToCsv(const std::vector<ConvergenceRow>& rows) {
  std::string out = "n,delta,rho,time_s\n";
  for (const auto& row : rows) {
    out += std::to_string(row.n) + ',' + FormatDouble(row.delta) + ',' +
           FormatDouble(row.rho) + ',' +
           (row.time ? FormatDouble(*row.time) : std::string("inf")) + '\n';
  }
  return out;
}

std::string XiSweepToCsv(const XiSweepResult& result) {
  std::string out = "xi,gap\n";
  for (const auto& row : result.rows) {
    out += FormatDouble(row.xi) + ',' + FormatDouble(row.gap) + '\n';
  }
  return out;
}

}  // namespace toppkit
