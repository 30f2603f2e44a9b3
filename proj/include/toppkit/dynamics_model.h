#ifndef TOPPKIT_DYNAMICS_MODEL_H_
#define TOPPKIT_DYNAMICS_MODEL_H_

#include <functional>

namespace toppkit {

// Constraint data of a squared-speed planning problem over [a, b]:
//
//   bl(s) <= h(s) <= bu(s)
//   fminus(s, h(s)) <= slope of h at s <= fplus(s, h(s))
//
// `slope_cap` is a bound B with |fplus|, |fminus| <= B on the feasible region.
// The model also carries a relaxation level xi >= 0 that widens the slope
// band to [fminus - xi, fplus + xi]; see Relax().
class DynamicsModel {
 public:
  using SlopeFn = std::function<double(double s, double h)>;
  using BoundFn = std::function<double(double s)>;

  // Throws ContractViolation if any evaluator is empty or slope_cap <= 0.
  DynamicsModel(SlopeFn fplus, SlopeFn fminus, BoundFn upper, BoundFn lower,
                double slope_cap);

  double FPlus(double s, double h) const { return fplus_(s, h) + xi_; }
  double FMinus(double s, double h) const { return fminus_(s, h) - xi_; }
  double Upper(double s) const { return upper_(s); }
  double Lower(double s) const { return lower_(s); }

  double slope_cap() const { return slope_cap_ + xi_; }
  double xi() const { return xi_; }

 private:
  friend DynamicsModel Relax(const DynamicsModel& model, double xi);

  SlopeFn fplus_;
  SlopeFn fminus_;
  BoundFn upper_;
  BoundFn lower_;
  double slope_cap_;
  double xi_ = 0.0;
};

// Widens the slope band of `model` by xi on both sides. Bounds are unchanged.
// Relaxations compose additively. Throws ContractViolation for xi < 0.
DynamicsModel Relax(const DynamicsModel& model, double xi);

// Admissibility tolerance used when none is given: 1e-9 * max(1, slope_cap).
double DefaultTolerance(const DynamicsModel& model);

}  // namespace toppkit

#endif  // TOPPKIT_DYNAMICS_MODEL_H_
