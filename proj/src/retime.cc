#include "toppkit/retime.h"

#include <algorithm>
#include <cmath>

#include "toppkit/errors.h"
#include "toppkit/profile_io.h"

namespace toppkit {
namespace {

void CheckNonNegative(const SpeedProfile& profile) {
  for (double h : profile.values) {
    if (!(h >= 0.0)) {
      throw ContractViolation("squared speeds must be non-negative");
    }
  }
}

}  // namespace

std::optional<double> TraversalTime(const SpeedProfile& profile) {
  CheckNonNegative(profile);
  const auto& h = profile.values;
  double total = 0.0;
  for (std::size_t i = 0; i + 1 < h.size(); ++i) {
    const double speed_sum = std::sqrt(h[i]) + std::sqrt(h[i + 1]);
    if (speed_sum == 0.0) return std::nullopt;
    total += 2.0 * profile.grid.step(i) / speed_sum;
  }
  return total;
}

std::vector<TrajectorySample> SampleTrajectory(const SpeedProfile& profile,
                                               double dt) {
  if (!(dt > 0.0) || !std::isfinite(dt)) {
    throw ContractViolation("dt must be positive");
  }
  const auto total = TraversalTime(profile);
  if (!total) throw ContractViolation("profile has infinite traversal time");

  const auto& grid = profile.grid;
  const auto& h = profile.values;
  // Arrival time at each grid point.
  std::vector<double> arrival(h.size(), 0.0);
  for (std::size_t i = 0; i + 1 < h.size(); ++i) {
    arrival[i + 1] =
        arrival[i] + 2.0 * grid.step(i) / (std::sqrt(h[i]) + std::sqrt(h[i + 1]));
  }
  const double end_time = arrival.back();

  std::vector<TrajectorySample> samples;
  std::size_t seg = 0;
  for (std::size_t k = 0;; ++k) {
    const double t = static_cast<double>(k) * dt;
    if (t >= end_time) break;
    while (seg + 2 < arrival.size() && arrival[seg + 1] <= t) ++seg;
    // On a segment with h affine in s the speed is affine in time:
    // v(tau) = v_i + m tau / 2 and x(tau) = v_i tau + m tau^2 / 4.
    const double tau = t - arrival[seg];
    const double m = (h[seg + 1] - h[seg]) / grid.step(seg);
    const double v0 = std::sqrt(h[seg]);
    const double x = std::clamp(v0 * tau + 0.25 * m * tau * tau, 0.0,
                                grid.step(seg));
    const double speed = std::max(0.0, v0 + 0.5 * m * tau);
    samples.push_back({t, grid[seg] + x, speed});
  }
  samples.push_back({end_time, grid.b(), std::sqrt(h.back())});
  return samples;
}

std::string TrajectoryToCsv(const std::vector<TrajectorySample>& samples) {
  std::string out = "t,s,v\n";
  for (const auto& sample : samples) {
    out += FormatDouble(sample.t) + ',' + FormatDouble(sample.s) + ',' +
           FormatDouble(sample.speed) + '\n';
  }
  return out;
}

}  // namespace toppkit
