#include "toppkit/oracle.h"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "toppkit/errors.h"

namespace toppkit {
namespace {

using Interval = std::pair<double, double>;
// Sorted, disjoint closed intervals.
using IntervalSet = std::vector<Interval>;

constexpr int kMaxRefinements = 200;

struct Lattice {
  double lo;
  double spacing;
  int levels;

  double value(int k) const { return lo + spacing * k; }
};

Lattice MakeLattice(const Discretization& grid, const DynamicsModel& model,
                    int levels) {
  if (levels < 8) throw ContractViolation("oracle needs at least 8 levels");
  double lo = model.Lower(grid[0]);
  double hi = model.Upper(grid[0]);
  for (double s : grid.points()) {
    lo = std::min(lo, model.Lower(s));
    hi = std::max(hi, model.Upper(s));
  }
  if (!std::isfinite(lo) || !std::isfinite(hi)) {
    throw ContractViolation("oracle needs finite squared-speed bounds");
  }
  const double spacing = hi > lo ? (hi - lo) / (levels - 1) : 0.0;
  return Lattice{lo, spacing, levels};
}

// Points of [lo, hi] to test: both ends and every lattice value in between.
std::vector<double> ColumnSamples(const Lattice& lattice, double lo,
                                  double hi) {
  std::vector<double> xs{lo};
  if (lattice.spacing > 0.0) {
    const int first = std::max(
        0, static_cast<int>(std::floor((lo - lattice.lo) / lattice.spacing)));
    for (int k = first; k < lattice.levels; ++k) {
      const double v = lattice.value(k);
      if (v >= hi) break;
      if (v > lo) xs.push_back(v);
    }
  }
  if (hi > lo) xs.push_back(hi);
  return xs;
}

// Boundary between a passing point and a failing one, from the passing side.
template <typename Pred>
double RefineBoundary(const Pred& pass, double in, double out, double tol) {
  for (int it = 0; it < kMaxRefinements && std::abs(out - in) > tol; ++it) {
    const double mid = in + 0.5 * (out - in);
    if (mid == in || mid == out) break;
    (pass(mid) ? in : out) = mid;
  }
  return in;
}

// Subset of the sampled range where `pass` holds, with every pass/fail
// transition between adjacent samples refined to `tol`.
template <typename Pred>
IntervalSet ScanSet(const std::vector<double>& xs, const Pred& pass,
                    double tol) {
  IntervalSet set;
  std::vector<char> ok(xs.size());
  for (std::size_t j = 0; j < xs.size(); ++j) ok[j] = pass(xs[j]);
  std::size_t j = 0;
  while (j < xs.size()) {
    if (!ok[j]) {
      ++j;
      continue;
    }
    const double start =
        j > 0 ? RefineBoundary(pass, xs[j], xs[j - 1], tol) : xs[j];
    std::size_t k = j;
    while (k + 1 < xs.size() && ok[k + 1]) ++k;
    const double end =
        k + 1 < xs.size() ? RefineBoundary(pass, xs[k], xs[k + 1], tol) : xs[k];
    set.emplace_back(start, end);
    j = k + 1;
  }
  return set;
}

bool Intersects(const IntervalSet& set, double lo, double hi) {
  const auto it = std::lower_bound(
      set.begin(), set.end(), lo,
      [](const Interval& iv, double value) { return iv.second < value; });
  return it != set.end() && it->first <= hi;
}

IntervalSet Merge(IntervalSet set) {
  std::sort(set.begin(), set.end());
  IntervalSet merged;
  for (const auto& iv : set) {
    if (!merged.empty() && iv.first <= merged.back().second) {
      merged.back().second = std::max(merged.back().second, iv.second);
    } else {
      merged.push_back(iv);
    }
  }
  return merged;
}

IntervalSet Intersect(const IntervalSet& a, const IntervalSet& b) {
  IntervalSet out;
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.size() && j < b.size()) {
    const double lo = std::max(a[i].first, b[j].first);
    const double hi = std::min(a[i].second, b[j].second);
    if (lo <= hi) out.emplace_back(lo, hi);
    (a[i].second < b[j].second ? i : j) += 1;
  }
  return out;
}

}  // namespace

double LatticeSpacing(const Discretization& grid, const DynamicsModel& model,
                      int levels) {
  return MakeLattice(grid, model, levels).spacing;
}

double OracleTolerance(const Discretization& grid, const DynamicsModel& model,
                       int levels) {
  return 2.0 * LatticeSpacing(grid, model, levels) +
         2.0 * model.slope_cap() * grid.resolution();
}

SpeedProfile DpOptimum(const Discretization& grid, const DynamicsModel& model,
                       int levels, const Endpoints& endpoints) {
  const Lattice lattice = MakeLattice(grid, model, levels);
  const double tol =
      1e-13 * std::max({1.0, std::abs(lattice.lo),
                        std::abs(lattice.value(lattice.levels - 1))});
  const std::size_t n = grid.last();
  std::vector<IntervalSet> controllable(grid.size());

  double end_cap = model.Upper(grid[n]);
  if (endpoints.end) end_cap = std::min(end_cap, *endpoints.end);
  if (!(end_cap >= model.Lower(grid[n]))) {
    throw InfeasibleInstance("oracle: empty terminal set", n);
  }
  controllable[n] = {{model.Lower(grid[n]), end_cap}};

  for (std::size_t i = n; i-- > 0;) {
    const double s = grid[i];
    const double ds = grid.step(i);
    const double lo = model.Lower(s);
    const double hi = model.Upper(s);
    if (hi >= lo) {
      const auto& next = controllable[i + 1];
      const auto pass = [&](double g) {
        return Intersects(next, g + model.FMinus(s, g) * ds,
                          g + model.FPlus(s, g) * ds);
      };
      controllable[i] = ScanSet(ColumnSamples(lattice, lo, hi), pass, tol);
    }
    if (controllable[i].empty()) {
      throw InfeasibleInstance(
          "oracle: no controllable state at index " + std::to_string(i), i);
    }
  }

  std::vector<double> values(grid.size());
  double start = -INFINITY;
  const double start_cap = endpoints.start.value_or(INFINITY);
  for (const auto& [lo, hi] : controllable[0]) {
    if (lo <= start_cap) start = std::min(hi, start_cap);
  }
  if (!std::isfinite(start)) {
    throw InfeasibleInstance("oracle: no admissible start value", 0);
  }
  IntervalSet reachable{{start, start}};
  values[0] = start;
  for (std::size_t i = 1; i <= n; ++i) {
    const double s_prev = grid[i - 1];
    const double ds = grid.step(i - 1);
    IntervalSet image;
    for (const auto& [lo, hi] : reachable) {
      double low = INFINITY;
      double high = -INFINITY;
      for (double x : ColumnSamples(lattice, lo, hi)) {
        low = std::min(low, x + model.FMinus(s_prev, x) * ds);
        high = std::max(high, x + model.FPlus(s_prev, x) * ds);
      }
      image.emplace_back(low, high);
    }
    reachable = Intersect(controllable[i], Merge(std::move(image)));
    if (reachable.empty()) {
      throw InfeasibleInstance(
          "oracle: no reachable state at index " + std::to_string(i), i);
    }
    values[i] = reachable.back().second;
  }
  return SpeedProfile(grid, std::move(values), Provenance::kOracle);
}

SpeedProfile TightenedOptimum(const PathSpec& path, const Discretization& grid,
                              double f_fr_scale, double v_max_scale) {
  if (!(f_fr_scale > 0.0 && f_fr_scale <= 1.0 && v_max_scale > 0.0 &&
        v_max_scale <= 1.0)) {
    throw ContractViolation("tightening multipliers must lie in (0, 1]");
  }
  PathSpec tight = path;
  tight.f_fr *= f_fr_scale;
  tight.v_max *= v_max_scale;
  const auto report = Solve(grid, BuildModel(tight), tight.endpoints);
  if (!report.feasible()) {
    throw InfeasibleInstance("tightened model is infeasible",
                             report.failure->index);
  }
  SpeedProfile profile = report.profile;
  profile.provenance = Provenance::kSynthetic;
  return profile;
}

SpeedProfile RandomAdmissible(const PathSpec& path, const Discretization& grid,
                              std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> draw(0.3, 1.0);
  double u_f = draw(rng);
  double u_v = draw(rng);
  const DynamicsModel original = BuildModel(path);
  for (int attempt = 0; attempt < 8; ++attempt) {
    try {
      SpeedProfile profile = TightenedOptimum(path, grid, u_f, u_v);
      profile.seed = seed;
      if (!CheckAdmissible(profile, original)) {
        throw std::logic_error(
            "tightened optimum is not admissible for the original model");
      }
      return profile;
    } catch (const InfeasibleInstance&) {
      u_f = 0.5 * (1.0 + u_f);
      u_v = 0.5 * (1.0 + u_v);
    }
  }
  throw InfeasibleInstance(
      "no feasible tightening found for seed " + std::to_string(seed), 0);
}

}  // namespace toppkit
