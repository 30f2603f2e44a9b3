#ifndef TOPPKIT_RETIME_H_
#define TOPPKIT_RETIME_H_

#include <optional>
#include <string>
#include <vector>

#include "toppkit/speed_profile.h"

namespace toppkit {

// Travel time with h linear on each segment: sum of 2 ds / (sqrt(h_i) +
// sqrt(h_{i+1})). nullopt when a segment has zero speed at both ends.
// Throws ContractViolation on negative values.
std::optional<double> TraversalTime(const SpeedProfile& profile);

struct TrajectorySample {
  double t;
  double s;
  double speed;
};

// Samples s(t) at t = 0, dt, 2 dt, ... below the traversal time, plus the
// final instant. Within a segment the speed is affine in time, so the
// inversion is closed form.
std::vector<TrajectorySample> SampleTrajectory(const SpeedProfile& profile,
                                               double dt);

// CSV with header "t,s,v".
std::string TrajectoryToCsv(const std::vector<TrajectorySample>& samples);

}  // namespace toppkit

#endif  // TOPPKIT_RETIME_H_
