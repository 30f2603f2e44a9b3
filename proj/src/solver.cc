#include "toppkit/solver.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "toppkit/errors.h"
#include "toppkit/retime.h"

namespace toppkit {
namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
constexpr int kMaxBisections = 200;

// Largest point found with g <= 0 inside [lo, hi], given g(lo) <= 0 < g(hi).
template <typename Residual>
double MaximizeOnBracket(const Residual& g, double lo, double hi, double g_lo,
                         double g_hi, double tol) {
  // One regula falsi probe first; exact for residuals affine in h.
  const double guess = lo - g_lo * (hi - lo) / (g_hi - g_lo);
  if (guess > lo && guess < hi) {
    const double g_guess = g(guess);
    if (g_guess <= 0.0) {
      const double above = std::min(hi, guess + tol);
      if (above >= hi || g(above) > 0.0) return guess;
      lo = guess;
      g_lo = g_guess;
    } else {
      hi = guess;
      g_hi = g_guess;
    }
  }
  for (int it = 0; it < kMaxBisections && hi - lo > tol; ++it) {
    const double mid = lo + 0.5 * (hi - lo);
    if (mid <= lo || mid >= hi) break;
    const double g_mid = g(mid);
    if (g_mid <= 0.0) {
      lo = mid;
      g_lo = g_mid;
    } else {
      hi = mid;
      g_hi = g_mid;
    }
  }
  const double secant = lo - g_lo * (hi - lo) / (g_hi - g_lo);
  if (secant > lo && secant < hi && g(secant) <= 0.0) return secant;
  return lo;
}

void CheckStepArgs(double ds, double h) {
  if (!(ds > 0.0) || !std::isfinite(ds)) {
    throw ContractViolation("step length must be positive and finite");
  }
  if (!std::isfinite(h)) {
    throw ContractViolation("squared speed must be finite");
  }
}

std::optional<double> ForwardStepTo(double s_prev, double s_next, double ds,
                                    double h_prev, double h_cap,
                                    const DynamicsModel& model) {
  const double pushed = h_prev + model.FPlus(s_prev, h_prev) * ds;
  const double h = std::min(h_cap, pushed);
  if (!(h >= model.Lower(s_next))) return std::nullopt;
  return h;
}

}  // namespace

StepSolverConfig DefaultStepConfig(const Discretization& grid,
                                   const DynamicsModel& model) {
  double bu_max = 1.0;
  for (double s : grid.points()) {
    const double bu = model.Upper(s);
    if (std::isfinite(bu)) bu_max = std::max(bu_max, bu);
  }
  return StepSolverConfig{1e-12 * bu_max, 1024};
}

std::optional<double> BackwardStep(double s, double ds, double h_next,
                                   const DynamicsModel& model,
                                   const StepSolverConfig& cfg) {
  CheckStepArgs(ds, h_next);
  if (!(cfg.abs_tol > 0.0) || cfg.scan_cells < 2) {
    throw ContractViolation("step solver needs abs_tol > 0, scan_cells >= 2");
  }
  const double lower = model.Lower(s);
  const double upper = model.Upper(s);
  if (!(upper >= lower)) return std::nullopt;

  const auto g = [&](double h) {
    return h + model.FMinus(s, h) * ds - h_next;
  };
  // |fminus| <= slope_cap, so every h above h_next + slope_cap * ds fails.
  const double hi = std::min(upper, h_next + model.slope_cap() * ds);
  if (hi < lower) return std::nullopt;
  const double g_hi = g(hi);
  if (g_hi <= 0.0) return hi;
  const double g_lo = g(lower);
  if (g_lo <= 0.0) {
    return MaximizeOnBracket(g, lower, hi, g_lo, g_hi, cfg.abs_tol);
  }

  // No end-point bracket: scan downward for the highest sign change.
  const double width = hi - lower;
  double above = hi;
  double g_above = g_hi;
  for (int k = cfg.scan_cells - 1; k >= 1; --k) {
    const double x = lower + width * (static_cast<double>(k) / cfg.scan_cells);
    const double gx = g(x);
    if (gx <= 0.0) {
      return MaximizeOnBracket(g, x, above, gx, g_above, cfg.abs_tol);
    }
    above = x;
    g_above = gx;
  }
  return std::nullopt;
}

std::optional<double> ForwardStep(double s_prev, double ds, double h_prev,
                                  double h_cap, const DynamicsModel& model,
                                  [[maybe_unused]] const StepSolverConfig& cfg) {
  CheckStepArgs(ds, h_prev);
  return ForwardStepTo(s_prev, s_prev + ds, ds, h_prev, h_cap, model);
}

std::string_view PassName(Pass pass) {
  return pass == Pass::kBackward ? "backward" : "forward";
}

SolveReport Solve(const Discretization& grid, const DynamicsModel& model,
                  const Endpoints& endpoints, const StepSolverConfig& cfg) {
  for (const auto& cap : {endpoints.start, endpoints.end}) {
    if (cap && !(*cap >= 0.0)) {
      throw ContractViolation("endpoint squared speeds must be >= 0");
    }
  }
  const std::size_t n = grid.last();
  SolveReport report{
      SpeedProfile(grid, std::vector<double>(grid.size(), kNaN),
                   Provenance::kSolver),
      std::vector<double>(grid.size(), kNaN),
      std::vector<double>(grid.size(), kNaN),
      std::nullopt,
      std::nullopt,
      std::nullopt};
  auto& backward = report.backward;
  auto& forward = report.forward;

  double seed = model.Upper(grid[n]);
  if (endpoints.end) seed = std::min(seed, *endpoints.end);
  if (!(seed >= model.Lower(grid[n])) || !std::isfinite(seed)) {
    report.failure = Infeasibility{n, Pass::kBackward};
    return report;
  }
  backward[n] = seed;
  for (std::size_t i = n; i-- > 0;) {
    const auto h = BackwardStep(grid[i], grid.step(i), backward[i + 1], model,
                                cfg);
    if (!h) {
      report.failure = Infeasibility{i, Pass::kBackward};
      return report;
    }
    backward[i] = *h;
  }

  double start = backward[0];
  if (endpoints.start) start = std::min(start, *endpoints.start);
  if (!(start >= model.Lower(grid[0]))) {
    report.failure = Infeasibility{0, Pass::kForward};
    return report;
  }
  forward[0] = start;
  for (std::size_t i = 1; i <= n; ++i) {
    const auto h = ForwardStepTo(grid[i - 1], grid[i], grid.step(i - 1),
                                 forward[i - 1], backward[i], model);
    if (!h) {
      report.failure = Infeasibility{i, Pass::kForward};
      return report;
    }
    forward[i] = *h;
  }

  report.profile.values = forward;
  report.traversal_time = TraversalTime(report.profile);
  return report;
}

SolveReport Solve(const Discretization& grid, const DynamicsModel& model,
                  const Endpoints& endpoints) {
  return Solve(grid, model, endpoints, DefaultStepConfig(grid, model));
}

nlohmann::json SolveReportToJson(const SolveReport& report) {
  const auto nullable = [](const std::optional<double>& v) {
    return v ? nlohmann::json(*v) : nlohmann::json(nullptr);
  };
  const auto sequence = [](const std::vector<double>& xs) {
    nlohmann::json arr = nlohmann::json::array();
    for (double x : xs) {
      arr.push_back(std::isfinite(x) ? nlohmann::json(x)
                                     : nlohmann::json(nullptr));
    }
    return arr;
  };
  const auto& pts = report.profile.grid.points();
  nlohmann::json j;
  j["status"] = report.feasible() ? "feasible" : "infeasible";
  if (report.failure) {
    j["failure"] = {{"index", report.failure->index},
                    {"pass", std::string(PassName(report.failure->pass))}};
  } else {
    j["failure"] = nullptr;
  }
  j["grid"] = std::vector<double>(pts.begin(), pts.end());
  j["backward"] = sequence(report.backward);
  j["forward"] = sequence(report.forward);
  j["profile"] = report.feasible() ? sequence(report.profile.values)
                                   : nlohmann::json(nullptr);
  j["traversal_time"] = nullable(report.traversal_time);
  j["error_vs_reference"] = nullable(report.error_vs_reference);
  return j;
}

}  // namespace toppkit
