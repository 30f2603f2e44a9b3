#include "toppkit/speed_profile.h"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "toppkit/errors.h"

namespace toppkit {

std::string_view ProvenanceName(Provenance provenance) {
  switch (provenance) {
    case Provenance::kSolver:
      return "solver";
    case Provenance::kOracle:
      return "oracle";
    case Provenance::kAnalytic:
      return "analytic";
    case Provenance::kSynthetic:
      return "synthetic";
  }
  return "synthetic";
}

Provenance ParseProvenance(std::string_view name) {
  for (Provenance p : {Provenance::kSolver, Provenance::kOracle,
                       Provenance::kAnalytic, Provenance::kSynthetic}) {
    if (ProvenanceName(p) == name) return p;
  }
  throw ContractViolation("unknown provenance '" + std::string(name) + "'");
}

SpeedProfile::SpeedProfile(Discretization grid_in, std::vector<double> values_in,
                           Provenance provenance_in,
                           std::optional<std::uint64_t> seed_in)
    : grid(std::move(grid_in)),
      values(std::move(values_in)),
      provenance(provenance_in),
      seed(seed_in) {
  if (values.size() != grid.size()) {
    throw ContractViolation("profile has " + std::to_string(values.size()) +
                            " values for a grid of " +
                            std::to_string(grid.size()) + " points");
  }
}

std::string_view ViolationName(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::kBelowLower:
      return "below lower bound";
    case ViolationKind::kAboveUpper:
      return "above upper bound";
    case ViolationKind::kSlopeBelow:
      return "slope below fminus";
    case ViolationKind::kSlopeAbove:
      return "slope above fplus";
  }
  return "unknown";
}

AdmissibilityReport CheckAdmissible(const SpeedProfile& profile,
                                    const DynamicsModel& model, double tol) {
  if (!(tol >= 0.0)) throw ContractViolation("tolerance must be >= 0");
  if (profile.values.size() != profile.grid.size()) {
    throw ContractViolation("profile values do not match its grid");
  }
  const auto& grid = profile.grid;
  const auto& h = profile.values;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double s = grid[i];
    const double lower = model.Lower(s);
    const double upper = model.Upper(s);
    if (!(h[i] >= lower - tol)) {
      return {Violation{i, ViolationKind::kBelowLower, h[i], lower}};
    }
    if (!(h[i] <= upper + tol)) {
      return {Violation{i, ViolationKind::kAboveUpper, h[i], upper}};
    }
    if (i == grid.last()) break;
    const double slope = (h[i + 1] - h[i]) / grid.step(i);
    const double fplus = model.FPlus(s, h[i]);
    const double fminus = model.FMinus(s, h[i]);
    if (!(slope >= fminus - tol)) {
      return {Violation{i, ViolationKind::kSlopeBelow, slope, fminus}};
    }
    if (!(slope <= fplus + tol)) {
      return {Violation{i, ViolationKind::kSlopeAbove, slope, fplus}};
    }
  }
  return {};
}

AdmissibilityReport CheckAdmissible(const SpeedProfile& profile,
                                    const DynamicsModel& model) {
  return CheckAdmissible(profile, model, DefaultTolerance(model));
}

double ProfileError(const SpeedProfile& candidate,
                    const SpeedProfile& reference) {
  if (!(candidate.grid == reference.grid)) {
    throw ContractViolation("profile error needs identical grids");
  }
  double err = 0.0;
  for (std::size_t i = 0; i < candidate.values.size(); ++i) {
    err = std::max(err, std::abs(candidate.values[i] - reference.values[i]));
  }
  return err;
}

}  // namespace toppkit
