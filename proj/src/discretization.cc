#include "toppkit/discretization.h"

#include <cmath>
#include <string>
#include <utility>

#include "toppkit/errors.h"

namespace toppkit {

Discretization::Discretization(std::vector<double> points)
    : points_(std::move(points)) {
  if (points_.size() < 2) {
    throw ContractViolation("discretization needs at least two points");
  }
  for (std::size_t i = 0; i < points_.size(); ++i) {
    if (!std::isfinite(points_[i])) {
      throw ContractViolation("discretization point " + std::to_string(i) +
                              " is not finite");
    }
    if (i > 0) {
      const double gap = points_[i] - points_[i - 1];
      if (!(gap > 0.0)) {
        throw ContractViolation("discretization not strictly increasing at " +
                                std::to_string(i));
      }
      resolution_ = std::max(resolution_, gap);
    }
  }
}

Discretization Discretization::Uniform(double a, double b,
                                       std::size_t num_points) {
  if (num_points < 2) {
    throw ContractViolation("uniform grid needs at least two points");
  }
  if (!(b > a)) {
    throw ContractViolation("uniform grid needs b > a");
  }
  std::vector<double> points(num_points);
  const double n = static_cast<double>(num_points - 1);
  for (std::size_t i = 0; i < num_points; ++i) {
    // Interpolating from both ends keeps points[last] == b exactly.
    const double t = static_cast<double>(i) / n;
    points[i] = a * (1.0 - t) + b * t;
  }
  points.front() = a;
  points.back() = b;
  return Discretization(std::move(points));
}

}  // namespace toppkit
