#include "cli.h"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <iomanip>
#include <limits>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "toppkit/errors.h"
#include "toppkit/harness.h"
#include "toppkit/oracle.h"
#include "toppkit/path_models.h"
#include "toppkit/profile_io.h"
#include "toppkit/retime.h"
#include "toppkit/solver.h"

namespace toppkit::cli {
namespace {

namespace fs = std::filesystem;

// Input problems that map to exit code 1.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

PathSpec LoadPathSpec(const std::string& file) {
  std::string text;
  try {
    text = ReadFile(file);
  } catch (const std::exception& e) {
    throw InputError(e.what());
  }
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    const auto upto = std::min<std::size_t>(e.byte, text.size());
    const auto line = 1 + std::count(text.begin(), text.begin() + upto, '\n');
    throw InputError(file + ":" + std::to_string(line) + ": malformed JSON: " +
                     e.what());
  }
  try {
    return PathSpecFromJson(j);
  } catch (const ContractViolation& e) {
    throw InputError(file + ": " + e.what());
  }
}

SpeedProfile LoadProfile(const std::string& file) {
  std::string text;
  try {
    text = ReadFile(file);
  } catch (const std::exception& e) {
    throw InputError(e.what());
  }
  try {
    if (fs::path(file).extension() == ".json") {
      return ProfileFromJson(nlohmann::json::parse(text));
    }
    return ProfileFromCsv(text);
  } catch (const std::exception& e) {
    throw InputError(file + ": " + e.what());
  }
}

// Admissibility tolerance, overridable through TOPPKIT_TOL.
double AdmissibilityTolerance(const DynamicsModel& model) {
  const char* env = std::getenv("TOPPKIT_TOL");
  if (env == nullptr || *env == '\0') return DefaultTolerance(model);
  char* end = nullptr;
  const double tol = std::strtod(env, &end);
  if (*end != '\0' || !(tol >= 0.0)) {
    throw InputError(std::string("TOPPKIT_TOL is not a tolerance: ") + env);
  }
  return tol;
}

fs::path PrepareOutDir(const std::string& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw InputError("cannot create " + dir + ": " + ec.message());
  return fs::path(dir);
}

std::vector<std::size_t> ParseSizes(const std::string& list) {
  std::vector<std::size_t> sizes;
  std::stringstream ss(list);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      const long long value = std::stoll(item, &used);
      if (used != item.size() || value < 2) throw std::invalid_argument(item);
      sizes.push_back(static_cast<std::size_t>(value));
    } catch (const std::exception&) {
      throw InputError("bad resolution '" + item + "'");
    }
  }
  return sizes;
}

int RunSolve(const std::string& input, std::size_t n, const std::string& out_dir,
             std::ostream& out, std::ostream& err) {
  const PathSpec path = LoadPathSpec(input);
  const DynamicsModel model = BuildModel(path);
  const double tol = AdmissibilityTolerance(model);
  const auto dir = PrepareOutDir(out_dir);
  const Discretization grid = UniformGrid(path, n);
  const SolveReport report = Solve(grid, model, path.endpoints);

  nlohmann::json j = SolveReportToJson(report);
  if (!report.feasible()) {
    WriteFile(dir / "report.json", j.dump(2) + "\n");
    err << "infeasible at index " << report.failure->index << " ("
        << PassName(report.failure->pass) << " pass)\n";
    return kExitInfeasible;
  }
  const auto check = CheckAdmissible(report.profile, model, tol);
  j["admissible"] = check.admissible();
  j["tolerance"] = tol;
  WriteFile(dir / "profile.csv", ProfileToCsv(report.profile));
  WriteFile(dir / "report.json", j.dump(2) + "\n");
  if (report.traversal_time) {
    out << "traversal_time_s " << std::setprecision(10)
        << *report.traversal_time << "\n";
  } else {
    out << "traversal_time_s inf\n";
  }
  if (!check) {
    err << "warning: profile fails admissibility at index "
        << check.violation->index << " ("
        << ViolationName(check.violation->kind) << ")\n";
  }
  return kExitOk;
}

int RunSweep(const std::string& input, const std::string& resolutions,
             const std::string& reference, const std::string& out_dir,
             std::ostream& out) {
  const PathSpec path = LoadPathSpec(input);
  const auto sizes = ParseSizes(resolutions);
  const auto kind = reference == "analytic" ? ReferenceKind::kAnalytic
                                            : ReferenceKind::kFinest;
  std::vector<ConvergenceRow> rows;
  try {
    rows = ConvergenceSweep(path, sizes, kind);
  } catch (const ContractViolation& e) {
    throw InputError(e.what());
  } catch (const UnsupportedInstance& e) {
    throw InputError(e.what());
  }
  const auto dir = PrepareOutDir(out_dir);
  const std::string csv = ConvergenceToCsv(rows);
  WriteFile(dir / "sweep.csv", csv);
  out << csv;
  return kExitOk;
}

int RunOracle(const std::string& input, std::size_t n, int levels,
              const std::string& out_dir, std::ostream& out,
              std::ostream& err) {
  if (levels < 8) throw InputError("--levels must be at least 8");
  const PathSpec path = LoadPathSpec(input);
  const DynamicsModel model = BuildModel(path);
  const Discretization grid = UniformGrid(path, n);
  const auto dir = PrepareOutDir(out_dir);

  const SolveReport report = Solve(grid, model, path.endpoints);
  if (!report.feasible()) {
    err << "solver: infeasible at index " << report.failure->index << "\n";
    return kExitInfeasible;
  }
  const SpeedProfile oracle = DpOptimum(grid, model, levels, path.endpoints);
  const double agreement = ProfileError(oracle, report.profile);
  const double tolerance = OracleTolerance(grid, model, levels);
  WriteFile(dir / "oracle_profile.csv", ProfileToCsv(oracle));
  nlohmann::json summary = {{"n", n},
                            {"levels", levels},
                            {"spacing", LatticeSpacing(grid, model, levels)},
                            {"agreement", agreement},
                            {"tolerance", tolerance},
                            {"within_tolerance", agreement <= tolerance}};
  WriteFile(dir / "oracle.json", summary.dump(2) + "\n");
  out << "agreement " << std::setprecision(10) << agreement << " tolerance "
      << tolerance << "\n";
  return agreement <= tolerance ? kExitOk : kExitDisagreement;
}

int RunRetime(const std::string& profile_file, double dt,
              const std::string& out_dir, std::ostream& out) {
  const SpeedProfile profile = LoadProfile(profile_file);
  if (!(dt > 0.0)) throw InputError("--dt must be positive");
  std::vector<TrajectorySample> samples;
  try {
    samples = SampleTrajectory(profile, dt);
  } catch (const ContractViolation& e) {
    throw InputError(e.what());
  }
  const auto dir = PrepareOutDir(out_dir);
  WriteFile(dir / "trajectory.csv", TrajectoryToCsv(samples));
  out << "traversal_time_s " << std::setprecision(10) << samples.back().t
      << "\n";
  return kExitOk;
}

}  // namespace

int Run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Time-optimal speed profiles along fixed paths"};
  app.require_subcommand(1);

  std::string input;
  std::string out_dir;
  std::size_t n = 0;

  auto* solve = app.add_subcommand("solve", "Backward-forward solve");
  solve->add_option("--input", input, "Path spec JSON")->required();
  solve->add_option("--n", n, "Grid points")->required()->check(
      CLI::Range(std::size_t{2}, std::numeric_limits<std::size_t>::max()));
  solve->add_option("--out", out_dir, "Output directory")->required();

  std::string resolutions;
  std::string reference = "analytic";
  auto* sweep = app.add_subcommand("sweep", "Error versus grid resolution");
  sweep->add_option("--input", input, "Path spec JSON")->required();
  sweep->add_option("--resolutions", resolutions, "Comma separated sizes")
      ->required();
  sweep->add_option("--reference", reference, "analytic | finest")
      ->check(CLI::IsMember({"analytic", "finest"}));
  sweep->add_option("--out", out_dir, "Output directory")->required();

  int levels = kDefaultOracleLevels;
  auto* oracle = app.add_subcommand("oracle", "Lattice DP cross-check");
  oracle->add_option("--input", input, "Path spec JSON")->required();
  oracle->add_option("--n", n, "Grid points")->required()->check(
      CLI::Range(std::size_t{2}, std::numeric_limits<std::size_t>::max()));
  oracle->add_option("--levels", levels, "Lattice levels");
  oracle->add_option("--out", out_dir, "Output directory")->required();

  std::string profile_file;
  double dt = 0.0;
  auto* retime = app.add_subcommand("retime", "Sample s(t) from a profile");
  retime->add_option("--profile", profile_file, "Profile CSV or JSON")
      ->required();
  retime->add_option("--dt", dt, "Sample period in seconds")->required();
  retime->add_option("--out", out_dir, "Output directory")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend() - 1);
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return kExitInputError;
  }

  try {
    if (*solve) return RunSolve(input, n, out_dir, out, err);
    if (*sweep) return RunSweep(input, resolutions, reference, out_dir, out);
    if (*oracle) return RunOracle(input, n, levels, out_dir, out, err);
    if (*retime) return RunRetime(profile_file, dt, out_dir, out);
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const InfeasibleInstance& e) {
    err << "infeasible: " << e.what() << "\n";
    return kExitInfeasible;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitInputError;
}

}  // namespace toppkit::cli
