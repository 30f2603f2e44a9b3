#ifndef TOPPKIT_DISCRETIZATION_H_
#define TOPPKIT_DISCRETIZATION_H_

#include <cstddef>
#include <span>
#include <vector>

namespace toppkit {

// Strictly increasing grid of path positions s_0 < ... < s_n covering [a, b].
class Discretization {
 public:
  // Throws ContractViolation unless `points` has at least two entries and is
  // strictly increasing with finite values.
  explicit Discretization(std::vector<double> points);

  // `num_points` equally spaced positions from a to b inclusive.
  static Discretization Uniform(double a, double b, std::size_t num_points);

  std::span<const double> points() const { return points_; }
  double operator[](std::size_t i) const { return points_[i]; }
  std::size_t size() const { return points_.size(); }
  // Index of the last point (n); size() == n + 1.
  std::size_t last() const { return points_.size() - 1; }

  double a() const { return points_.front(); }
  double b() const { return points_.back(); }

  // Length of segment [s_i, s_{i+1}].
  double step(std::size_t i) const { return points_[i + 1] - points_[i]; }

  // Largest gap between consecutive points.
  double resolution() const { return resolution_; }

  bool operator==(const Discretization& other) const {
    return points_ == other.points_;
  }

 private:
  std::vector<double> points_;
  double resolution_ = 0.0;
};

}  // namespace toppkit

#endif  // TOPPKIT_DISCRETIZATION_H_
