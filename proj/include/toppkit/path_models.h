#ifndef TOPPKIT_PATH_MODELS_H_
#define TOPPKIT_PATH_MODELS_H_

#include <utility>
#include <variant>
#include <vector>

#include "json.hpp"
#include "toppkit/discretization.h"
#include "toppkit/dynamics_model.h"
#include "toppkit/solver.h"
#include "toppkit/speed_profile.h"

namespace toppkit {

struct LinePath {
  double length;
};

struct ArcPath {
  double radius;
  double angle;  // radians
};

// Curvature samples (s, kappa) of an arc-length parametrized path, linearly
// interpolated in between.
struct CurvatureTable {
  std::vector<std::pair<double, double>> samples;
};

using PathGeometry = std::variant<LinePath, ArcPath, CurvatureTable>;

// A path traversed by a point mass with |v| <= v_max and |a| <= f_fr.
struct PathSpec {
  PathGeometry geometry;
  double v_max = 0.0;
  double f_fr = 0.0;
  Endpoints endpoints;
  // Lower squared-speed bound, constant along the path.
  double min_h = 0.0;
};

// Throws ContractViolation if any length, limit or table entry is invalid.
void ValidatePath(const PathSpec& path);

// Arc-length domain [a, b]: [0, S] for lines, [0, R*phi] for arcs, the
// sample span for tables.
std::pair<double, double> PathDomain(const PathSpec& path);

double Curvature(const PathSpec& path, double s);

// fplus/fminus = +-2 sqrt(max(0, f_fr^2 - kappa(s)^2 h^2)),
// bu = min(v_max^2, f_fr / kappa), bl = min_h, slope_cap = 2 f_fr.
DynamicsModel BuildModel(const PathSpec& path);

// Uniform grid over PathDomain(path).
Discretization UniformGrid(const PathSpec& path, std::size_t num_points);

// Exact optimum sampled on `grid`. Supported: lines at rest at both ends or
// with free ends, and arcs with free ends. Throws UnsupportedInstance
// otherwise.
SpeedProfile AnalyticOptimum(const PathSpec& path, const Discretization& grid);
// Exact minimum traversal time for the instances AnalyticOptimum supports.
double AnalyticTraversalTime(const PathSpec& path);
bool HasAnalyticOptimum(const PathSpec& path);

// JSON schema:
//   {"kind": "line", "length": S, ...}
//   {"kind": "arc", "radius": R, "angle": phi, ...}
//   {"kind": "table", "table": [[s, kappa], ...], ...}
// with common fields "v_max", "f_fr", optional "endpoints": {"start_h",
// "end_h"} and optional "min_h". Throws ContractViolation naming the field.
PathSpec PathSpecFromJson(const nlohmann::json& j);
nlohmann::json PathSpecToJson(const PathSpec& path);

}  // namespace toppkit

#endif  // TOPPKIT_PATH_MODELS_H_
