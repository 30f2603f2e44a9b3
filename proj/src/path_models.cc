#include "toppkit/path_models.h"

#include <algorithm>
#include <cmath>
#include <memory>
#include <string>

#include "toppkit/errors.h"

namespace toppkit {
namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

bool PositiveFinite(double x) { return x > 0.0 && std::isfinite(x); }

double TableCurvature(const CurvatureTable& table, double s) {
  const auto& samples = table.samples;
  const auto it = std::upper_bound(
      samples.begin(), samples.end(), s,
      [](double value, const auto& sample) { return value < sample.first; });
  if (it == samples.end()) return samples.back().second;
  if (it == samples.begin()) return samples.front().second;
  const auto& [s1, k1] = *it;
  const auto& [s0, k0] = *(it - 1);
  const double t = (s - s0) / (s1 - s0);
  return k0 + t * (k1 - k0);
}

bool IsRestToRest(const Endpoints& e) {
  return e.start && e.end && *e.start == 0.0 && *e.end == 0.0;
}

bool IsFree(const Endpoints& e) { return !e.start && !e.end; }

const nlohmann::json& Field(const nlohmann::json& j, const char* name) {
  if (!j.is_object() || !j.contains(name)) {
    throw ContractViolation(std::string("field '") + name + "': missing");
  }
  return j.at(name);
}

double Number(const nlohmann::json& j, const char* name) {
  const auto& v = Field(j, name);
  if (!v.is_number()) {
    throw ContractViolation(std::string("field '") + name +
                            "': expected a number");
  }
  return v.get<double>();
}

}  // namespace

void ValidatePath(const PathSpec& path) {
  std::visit(
      Overloaded{
          [](const LinePath& line) {
            if (!PositiveFinite(line.length)) {
              throw ContractViolation("line length must be positive");
            }
          },
          [](const ArcPath& arc) {
            if (!PositiveFinite(arc.radius) || !PositiveFinite(arc.angle)) {
              throw ContractViolation("arc radius and angle must be positive");
            }
          },
          [](const CurvatureTable& table) {
            if (table.samples.size() < 2) {
              throw ContractViolation("curvature table needs two samples");
            }
            for (std::size_t i = 0; i < table.samples.size(); ++i) {
              const auto& [s, kappa] = table.samples[i];
              if (!std::isfinite(s) || !(kappa >= 0.0) ||
                  !std::isfinite(kappa)) {
                throw ContractViolation("curvature table entry " +
                                        std::to_string(i) + " is invalid");
              }
              if (i > 0 && !(s > table.samples[i - 1].first)) {
                throw ContractViolation(
                    "curvature table positions must increase strictly");
              }
            }
          }},
      path.geometry);
  if (!PositiveFinite(path.v_max) || !PositiveFinite(path.f_fr)) {
    throw ContractViolation("v_max and f_fr must be positive");
  }
  if (!(path.min_h >= 0.0) || !std::isfinite(path.min_h)) {
    throw ContractViolation("min_h must be >= 0");
  }
  for (const auto& cap : {path.endpoints.start, path.endpoints.end}) {
    if (cap && (!(*cap >= 0.0) || !std::isfinite(*cap))) {
      throw ContractViolation("endpoint squared speeds must be >= 0");
    }
  }
}

std::pair<double, double> PathDomain(const PathSpec& path) {
  return std::visit(
      Overloaded{[](const LinePath& line) {
                   return std::pair{0.0, line.length};
                 },
                 [](const ArcPath& arc) {
                   return std::pair{0.0, arc.radius * arc.angle};
                 },
                 [](const CurvatureTable& table) {
                   return std::pair{table.samples.front().first,
                                    table.samples.back().first};
                 }},
      path.geometry);
}

double Curvature(const PathSpec& path, double s) {
  const auto [a, b] = PathDomain(path);
  if (!(s >= a && s <= b)) {
    throw ContractViolation("position " + std::to_string(s) +
                            " outside path domain");
  }
  return std::visit(
      Overloaded{[](const LinePath&) { return 0.0; },
                 [](const ArcPath& arc) { return 1.0 / arc.radius; },
                 [s](const CurvatureTable& table) {
                   return TableCurvature(table, s);
                 }},
      path.geometry);
}

DynamicsModel BuildModel(const PathSpec& path) {
  ValidatePath(path);
  auto shared = std::make_shared<const PathSpec>(path);
  const double f_fr = path.f_fr;
  const double v_sq = path.v_max * path.v_max;
  const double min_h = path.min_h;

  auto radical = [shared, f_fr](double s, double h) {
    const double kappa = Curvature(*shared, s);
    const double radicand = f_fr * f_fr - kappa * kappa * h * h;
    return 2.0 * std::sqrt(std::max(0.0, radicand));
  };
  auto upper = [shared, f_fr, v_sq](double s) {
    const double kappa = Curvature(*shared, s);
    return kappa > 0.0 ? std::min(v_sq, f_fr / kappa) : v_sq;
  };
  return DynamicsModel(
      radical, [radical](double s, double h) { return -radical(s, h); },
      upper, [min_h](double) { return min_h; }, 2.0 * f_fr);
}

Discretization UniformGrid(const PathSpec& path, std::size_t num_points) {
  const auto [a, b] = PathDomain(path);
  return Discretization::Uniform(a, b, num_points);
}

bool HasAnalyticOptimum(const PathSpec& path) {
  if (path.min_h != 0.0) return false;
  if (std::holds_alternative<LinePath>(path.geometry)) {
    return IsRestToRest(path.endpoints) || IsFree(path.endpoints);
  }
  if (std::holds_alternative<ArcPath>(path.geometry)) {
    return IsFree(path.endpoints);
  }
  return false;
}

SpeedProfile AnalyticOptimum(const PathSpec& path,
                             const Discretization& grid) {
  ValidatePath(path);
  if (!HasAnalyticOptimum(path)) {
    throw UnsupportedInstance(
        "analytic optimum needs a line (rest-to-rest or free ends) or an arc "
        "with free ends and no lower bound");
  }
  const auto [a, b] = PathDomain(path);
  if (grid.a() != a || grid.b() != b) {
    throw ContractViolation("grid does not span the path domain");
  }
  const double v_sq = path.v_max * path.v_max;
  std::vector<double> values(grid.size());
  if (const auto* line = std::get_if<LinePath>(&path.geometry)) {
    const bool rest = IsRestToRest(path.endpoints);
    for (std::size_t i = 0; i < grid.size(); ++i) {
      const double s = grid[i];
      values[i] = rest ? std::min({2.0 * path.f_fr * s,
                                   2.0 * path.f_fr * (line->length - s), v_sq})
                       : v_sq;
    }
  } else {
    const auto& arc = std::get<ArcPath>(path.geometry);
    std::fill(values.begin(), values.end(),
              std::min(v_sq, path.f_fr * arc.radius));
  }
  return SpeedProfile(grid, std::move(values), Provenance::kAnalytic);
}

double AnalyticTraversalTime(const PathSpec& path) {
  ValidatePath(path);
  if (!HasAnalyticOptimum(path)) {
    throw UnsupportedInstance("no closed-form traversal time for this path");
  }
  const double v = path.v_max;
  const double f = path.f_fr;
  if (const auto* line = std::get_if<LinePath>(&path.geometry)) {
    const double length = line->length;
    if (IsFree(path.endpoints)) return length / v;
    // Bang-bang with |a| = f_fr, cruising at v_max when it is reached.
    if (v * v >= f * length) return 2.0 * std::sqrt(length / f);
    return 2.0 * v / f + (length - v * v / f) / v;
  }
  const auto& arc = std::get<ArcPath>(path.geometry);
  const double speed = std::sqrt(std::min(v * v, f * arc.radius));
  return arc.radius * arc.angle / speed;
}

PathSpec PathSpecFromJson(const nlohmann::json& j) {
  if (!j.is_object()) throw ContractViolation("path spec must be an object");
  PathSpec path;
  const auto& kind_field = Field(j, "kind");
  if (!kind_field.is_string()) {
    throw ContractViolation("field 'kind': expected a string");
  }
  const auto kind = kind_field.get<std::string>();
  if (kind == "line") {
    path.geometry = LinePath{Number(j, "length")};
  } else if (kind == "arc") {
    path.geometry = ArcPath{Number(j, "radius"), Number(j, "angle")};
  } else if (kind == "table") {
    const auto& rows = Field(j, "table");
    if (!rows.is_array()) {
      throw ContractViolation("field 'table': expected an array");
    }
    CurvatureTable table;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const auto& row = rows[i];
      if (!row.is_array() || row.size() != 2 || !row[0].is_number() ||
          !row[1].is_number()) {
        throw ContractViolation("field 'table[" + std::to_string(i) +
                                "]': expected [s, kappa]");
      }
      table.samples.emplace_back(row[0].get<double>(), row[1].get<double>());
    }
    path.geometry = std::move(table);
  } else {
    throw ContractViolation("field 'kind': unknown value '" + kind + "'");
  }
  path.v_max = Number(j, "v_max");
  path.f_fr = Number(j, "f_fr");
  if (j.contains("endpoints")) {
    const auto& e = j.at("endpoints");
    if (!e.is_object()) {
      throw ContractViolation("field 'endpoints': expected an object");
    }
    if (e.contains("start_h")) path.endpoints.start = Number(e, "start_h");
    if (e.contains("end_h")) path.endpoints.end = Number(e, "end_h");
  }
  if (j.contains("min_h")) path.min_h = Number(j, "min_h");
  ValidatePath(path);
  return path;
}

nlohmann::json PathSpecToJson(const PathSpec& path) {
  nlohmann::json j;
  std::visit(Overloaded{[&](const LinePath& line) {
                          j["kind"] = "line";
                          j["length"] = line.length;
                        },
                        [&](const ArcPath& arc) {
                          j["kind"] = "arc";
                          j["radius"] = arc.radius;
                          j["angle"] = arc.angle;
                        },
                        [&](const CurvatureTable& table) {
                          j["kind"] = "table";
                          j["table"] = nlohmann::json::array();
                          for (const auto& [s, kappa] : table.samples) {
                            j["table"].push_back({s, kappa});
                          }
                        }},
             path.geometry);
  j["v_max"] = path.v_max;
  j["f_fr"] = path.f_fr;
  if (path.endpoints.start || path.endpoints.end) {
    j["endpoints"] = nlohmann::json::object();
    if (path.endpoints.start) j["endpoints"]["start_h"] = *path.endpoints.start;
    if (path.endpoints.end) j["endpoints"]["end_h"] = *path.endpoints.end;
  }
  if (path.min_h != 0.0) j["min_h"] = path.min_h;
  return j;
}

}  // namespace toppkit
