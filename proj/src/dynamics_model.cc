#include "toppkit/dynamics_model.h"

#include <algorithm>
#include <cmath>
#include <utility>

#include "toppkit/errors.h"

namespace toppkit {

DynamicsModel::DynamicsModel(SlopeFn fplus, SlopeFn fminus, BoundFn upper,
                             BoundFn lower, double slope_cap)
    : fplus_(std::move(fplus)),
      fminus_(std::move(fminus)),
      upper_(std::move(upper)),
      lower_(std::move(lower)),
      slope_cap_(slope_cap) {
  if (!fplus_ || !fminus_ || !upper_ || !lower_) {
    throw ContractViolation("dynamics model evaluators must all be set");
  }
  if (!(slope_cap_ > 0.0) || !std::isfinite(slope_cap_)) {
    throw ContractViolation("slope cap must be positive and finite");
  }
}

DynamicsModel Relax(const DynamicsModel& model, double xi) {
  if (!(xi >= 0.0) || !std::isfinite(xi)) {
    throw ContractViolation("relaxation level must be a finite xi >= 0");
  }
  DynamicsModel relaxed = model;
  relaxed.xi_ += xi;
  return relaxed;
}

double DefaultTolerance(const DynamicsModel& model) {
  return 1e-9 * std::max(1.0, model.slope_cap());
}

}  // namespace toppkit
