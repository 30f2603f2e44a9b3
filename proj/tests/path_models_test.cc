#include <cmath>
#include <numbers>
#include <random>

#include "gtest/gtest.h"
#include "test_instances.h"
#include "toppkit/errors.h"
#include "toppkit/oracle.h"
#include "toppkit/path_models.h"
#include "toppkit/speed_profile.h"

namespace toppkit {
namespace {

using ::toppkit::testing::LoadInstance;

PathSpec Line(double length, double v_max, double f_fr) {
  PathSpec path;
  path.geometry = LinePath{length};
  path.v_max = v_max;
  path.f_fr = f_fr;
  path.endpoints = {0.0, 0.0};
  return path;
}

PathSpec Arc(double radius, double angle, double v_max, double f_fr) {
  PathSpec path;
  path.geometry = ArcPath{radius, angle};
  path.v_max = v_max;
  path.f_fr = f_fr;
  return path;
}

TEST(CurvatureTest, Examples) {
  EXPECT_EQ(Curvature(Line(3.0, 1.0, 1.0), 1.7), 0.0);
  EXPECT_EQ(Curvature(Arc(2.0, 1.0, 1.0, 1.0), 0.4), 0.5);
  PathSpec table = Line(1.0, 1.0, 1.0);
  table.geometry = CurvatureTable{{{0.0, 0.0}, {1.0, 1.0}}};
  EXPECT_DOUBLE_EQ(Curvature(table, 0.25), 0.25);
  EXPECT_DOUBLE_EQ(Curvature(table, 1.0), 1.0);
  EXPECT_THROW(Curvature(table, 1.5), ContractViolation);
  EXPECT_THROW(Curvature(Line(3.0, 1.0, 1.0), -0.1), ContractViolation);
}

TEST(BuildModelTest, Line) {
  PathSpec line = Line(1.0, 10.0, 1.0);
  const auto model = BuildModel(line);
  for (double s : {0.0, 0.3, 1.0}) {
    EXPECT_EQ(model.FPlus(s, 5.0), 2.0);
    EXPECT_EQ(model.FMinus(s, 5.0), -2.0);
    EXPECT_EQ(model.Upper(s), 100.0);
    EXPECT_EQ(model.Lower(s), 0.0);
  }
  EXPECT_EQ(model.slope_cap(), 2.0);
}

TEST(BuildModelTest, UnitArcSaturates) {
  const auto model = BuildModel(Arc(1.0, 1.0, 10.0, 1.0));
  EXPECT_EQ(model.Upper(0.5), 1.0);
  EXPECT_EQ(model.FPlus(0.5, 1.0), 0.0);
  // Above the saturation point the radicand is clamped, not negative.
  EXPECT_EQ(model.FPlus(0.5, 1.5), 0.0);
}

TEST(BuildModelTest, FrictionCircleSlope) {
  const auto model = BuildModel(Arc(1.0, 1.0, 10.0, 2.0));
  EXPECT_NEAR(model.FPlus(0.1, 1.0), 3.4641016151377544, 1e-14);
  EXPECT_NEAR(model.FMinus(0.1, 1.0), -3.4641016151377544, 1e-14);
}

TEST(BuildModelTest, RejectsInvalidPaths) {
  EXPECT_THROW(BuildModel(Line(0.0, 1.0, 1.0)), ContractViolation);
  EXPECT_THROW(BuildModel(Line(1.0, -1.0, 1.0)), ContractViolation);
  EXPECT_THROW(BuildModel(Arc(1.0, 0.0, 1.0, 1.0)), ContractViolation);
  PathSpec table = Line(1.0, 1.0, 1.0);
  table.geometry = CurvatureTable{{{0.0, 0.0}, {0.0, 1.0}}};
  EXPECT_THROW(BuildModel(table), ContractViolation);
  table.geometry = CurvatureTable{{{0.0, 0.0}, {1.0, -1.0}}};
  EXPECT_THROW(BuildModel(table), ContractViolation);
}

TEST(BuildModelTest, ModelInvariantsOnSampledPairs) {
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int trial = 0; trial < 10; ++trial) {
    const PathSpec path = testing::RandomTablePath(rng);
    const auto model = BuildModel(path);
    const auto [a, b] = PathDomain(path);
    for (int k = 0; k < 1000; ++k) {
      const double s = a + (b - a) * unit(rng);
      const double bu = model.Upper(s);
      const double bl = model.Lower(s);
      ASSERT_GE(bu, bl);
      ASSERT_GE(bl, 0.0);
      const double h = bl + (bu - bl) * unit(rng);
      const double fp = model.FPlus(s, h);
      const double fm = model.FMinus(s, h);
      EXPECT_GE(fp, fm);
      EXPECT_LE(std::abs(fp), model.slope_cap());
      EXPECT_LE(std::abs(fm), model.slope_cap());
      EXPECT_EQ(fp, -fm);
    }
  }
}

TEST(BuildModelTest, FplusConcaveFminusConvexInH) {
  const auto model = BuildModel(LoadInstance("chicane"));
  for (double s = 0.0; s <= 10.0; s += 0.25) {
    const double bu = model.Upper(s);
    const double step = bu / 400.0;
    for (double h = step; h + step <= bu; h += step) {
      const double d2p = model.FPlus(s, h + step) - 2.0 * model.FPlus(s, h) +
                         model.FPlus(s, h - step);
      const double d2m = model.FMinus(s, h + step) -
                         2.0 * model.FMinus(s, h) + model.FMinus(s, h - step);
      EXPECT_LE(d2p, 1e-12) << "s=" << s << " h=" << h;
      EXPECT_GE(d2m, -1e-12) << "s=" << s << " h=" << h;
    }
  }
}

TEST(AnalyticOptimumTest, LineRestToRest) {
  const PathSpec line = Line(1.0, 10.0, 1.0);
  const auto grid = UniformGrid(line, 11);
  const auto profile = AnalyticOptimum(line, grid);
  EXPECT_NEAR(profile.values[5], 1.0, 1e-15);
  EXPECT_EQ(profile.values[0], 0.0);
  EXPECT_EQ(profile.values[10], 0.0);
  EXPECT_DOUBLE_EQ(AnalyticTraversalTime(line), 2.0);
  EXPECT_EQ(profile.provenance, Provenance::kAnalytic);
}

TEST(AnalyticOptimumTest, FullCircle) {
  const PathSpec circle = LoadInstance("circle");
  const auto profile = AnalyticOptimum(circle, UniformGrid(circle, 33));
  for (double h : profile.values) EXPECT_EQ(h, 1.0);
  EXPECT_NEAR(AnalyticTraversalTime(circle), 2.0 * std::numbers::pi, 1e-12);
}

TEST(AnalyticOptimumTest, TrapezoidMatchesOracle) {
  const PathSpec trap = LoadInstance("trapezoid");
  const auto grid = UniformGrid(trap, 201);
  const auto profile = AnalyticOptimum(trap, grid);
  double peak = 0.0;
  for (double h : profile.values) peak = std::max(peak, h);
  EXPECT_EQ(peak, 0.25);
  // Accelerate over 0.125 m, cruise 0.75 m at 0.5 m/s, brake over 0.125 m.
  EXPECT_NEAR(AnalyticTraversalTime(trap), 0.5 + 1.5 + 0.5, 1e-12);
  const auto model = BuildModel(trap);
  const auto dp = DpOptimum(grid, model, 512, trap.endpoints);
  EXPECT_LE(ProfileError(dp, profile), OracleTolerance(grid, model, 512));
}

TEST(AnalyticOptimumTest, AdmissibleWithinDiscretizationSlack) {
  for (const auto& name : {"line", "circle", "trapezoid"}) {
    const PathSpec path = LoadInstance(name);
    const auto model = BuildModel(path);
    for (std::size_t n : {10u, 101u, 1000u}) {
      const auto grid = UniformGrid(path, n);
      EXPECT_TRUE(CheckAdmissible(AnalyticOptimum(path, grid), model,
                                  model.slope_cap() * grid.resolution()))
          << name << " n=" << n;
    }
  }
}

TEST(AnalyticOptimumTest, UnsupportedInstances) {
  const PathSpec table = LoadInstance("chicane");
  EXPECT_FALSE(HasAnalyticOptimum(table));
  EXPECT_THROW(AnalyticOptimum(table, UniformGrid(table, 10)),
               UnsupportedInstance);
  const PathSpec arc_rest = LoadInstance("arc_rest");
  EXPECT_THROW(AnalyticTraversalTime(arc_rest), UnsupportedInstance);
  PathSpec half = Line(1.0, 1.0, 1.0);
  half.endpoints = {0.0, std::nullopt};
  EXPECT_FALSE(HasAnalyticOptimum(half));
}

TEST(PathSpecJsonTest, ParsesBundledInstances) {
  const PathSpec line = LoadInstance("line");
  ASSERT_TRUE(std::holds_alternative<LinePath>(line.geometry));
  EXPECT_EQ(std::get<LinePath>(line.geometry).length, 1.0);
  EXPECT_EQ(line.endpoints.start, 0.0);
  EXPECT_EQ(line.endpoints.end, 0.0);

  const PathSpec chicane = LoadInstance("chicane");
  const auto back = PathSpecFromJson(PathSpecToJson(chicane));
  EXPECT_EQ(std::get<CurvatureTable>(back.geometry).samples,
            std::get<CurvatureTable>(chicane.geometry).samples);
  EXPECT_EQ(back.endpoints.end, 1.0);
  EXPECT_EQ(back.endpoints.start, 0.0);
}

TEST(PathSpecJsonTest, NamesTheOffendingField) {
  const auto message = [](const char* text) {
    try {
      PathSpecFromJson(nlohmann::json::parse(text));
    } catch (const ContractViolation& e) {
      return std::string(e.what());
    }
    return std::string("no error");
  };
  EXPECT_NE(message(R"({"kind":"line","v_max":1,"f_fr":1})").find("length"),
            std::string::npos);
  EXPECT_NE(message(R"({"kind":"line","length":1,"v_max":"fast","f_fr":1})")
                .find("v_max"),
            std::string::npos);
  EXPECT_NE(message(R"({"kind":"spiral","v_max":1,"f_fr":1})").find("kind"),
            std::string::npos);
  EXPECT_NE(message(R"({"kind":"table","table":[[0,1],[1]],"v_max":1,"f_fr":1})")
                .find("table[1]"),
            std::string::npos);
}

}  // namespace
}  // namespace toppkit
