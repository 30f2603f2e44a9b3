#ifndef TOPPKIT_SPEED_PROFILE_H_
#define TOPPKIT_SPEED_PROFILE_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "toppkit/discretization.h"
#include "toppkit/dynamics_model.h"

namespace toppkit {

enum class Provenance { kSolver, kOracle, kAnalytic, kSynthetic };

std::string_view ProvenanceName(Provenance provenance);
// Throws ContractViolation for unknown names.
Provenance ParseProvenance(std::string_view name);

// Squared-speed values h_i (m^2/s^2) sampled on a grid.
struct SpeedProfile {
  // Throws ContractViolation if the value count does not match the grid.
  SpeedProfile(Discretization grid, std::vector<double> values,
               Provenance provenance, std::optional<std::uint64_t> seed = {});

  Discretization grid;
  std::vector<double> values;
  Provenance provenance;
  // PRNG seed for synthetic profiles.
  std::optional<std::uint64_t> seed;
};

enum class ViolationKind { kBelowLower, kAboveUpper, kSlopeBelow, kSlopeAbove };

std::string_view ViolationName(ViolationKind kind);

struct Violation {
  std::size_t index;
  ViolationKind kind;
  // Offending quantity (a value or a segment slope) and the limit it broke.
  double value;
  double limit;
};

struct AdmissibilityReport {
  bool admissible() const { return !violation.has_value(); }
  explicit operator bool() const { return admissible(); }

  std::optional<Violation> violation;
};

// Discrete feasibility: bounds at every point and, for every segment i < n,
// fminus(s_i, h_i) <= (h_{i+1} - h_i) / (s_{i+1} - s_i) <= fplus(s_i, h_i),
// each widened by `tol`. Reports the first violation in index order, bound
// checks of point i before the slope check of segment i.
AdmissibilityReport CheckAdmissible(const SpeedProfile& profile,
                                    const DynamicsModel& model, double tol);
AdmissibilityReport CheckAdmissible(const SpeedProfile& profile,
                                    const DynamicsModel& model);

// max_i |candidate_i - reference_i|. Grids must be identical.
double ProfileError(const SpeedProfile& candidate,
                    const SpeedProfile& reference);

}  // namespace toppkit

#endif  // TOPPKIT_SPEED_PROFILE_H_
