#include <cmath>

#include "gtest/gtest.h"
#include "test_instances.h"
#include "toppkit/errors.h"
#include "toppkit/harness.h"
#include "toppkit/path_models.h"

namespace toppkit {
namespace {

using ::toppkit::testing::LoadInstance;

TEST(ConvergenceSweepTest, LineAgainstAnalytic) {
  const auto rows = ConvergenceSweep(LoadInstance("line"), {10, 100, 1000},
                                     ReferenceKind::kAnalytic);
  ASSERT_EQ(rows.size(), 3u);
  for (const auto& row : rows) {
    EXPECT_TRUE(row.admissible);
    EXPECT_LT(row.rho, 1e-2);
    ASSERT_TRUE(row.time.has_value());
  }
  EXPECT_EQ(rows[1].n, 100u);
  EXPECT_NEAR(rows[1].delta, 1.0 / 99.0, 1e-15);
}

TEST(ConvergenceSweepTest, CircleIsGridExact) {
  for (const auto& row : ConvergenceSweep(LoadInstance("circle"), {3, 17, 301},
                                          ReferenceKind::kAnalytic)) {
    EXPECT_LE(row.rho, 2e-9);
    EXPECT_NEAR(*row.time, 2.0 * M_PI, 1e-9);
  }
}

TEST(ConvergenceSweepTest, FinestReferenceConverges) {
  // Sizes whose segment counts divide 4 * (641 - 1).
  const auto rows = ConvergenceSweep(LoadInstance("arc_rest"),
                                     {11, 41, 161, 641}, ReferenceKind::kFinest);
  for (std::size_t k = 1; k < rows.size(); ++k) {
    EXPECT_LT(rows[k].rho, rows[k - 1].rho);
  }
  for (const auto& row : rows) EXPECT_TRUE(row.admissible);
}

TEST(ConvergenceSweepTest, Preconditions) {
  const PathSpec line = LoadInstance("line");
  EXPECT_THROW(ConvergenceSweep(line, {10}, ReferenceKind::kAnalytic),
               ContractViolation);
  EXPECT_THROW(ConvergenceSweep(line, {100, 10}, ReferenceKind::kAnalytic),
               ContractViolation);
  // 15 - 1 = 14 segments do not divide 4 * (20 - 1) = 76.
  EXPECT_THROW(ConvergenceSweep(line, {15, 20}, ReferenceKind::kFinest),
               ContractViolation);
  EXPECT_THROW(ConvergenceSweep(LoadInstance("chicane"), {11, 21},
                                ReferenceKind::kAnalytic),
               UnsupportedInstance);
  EXPECT_THROW(ConvergenceSweep(LoadInstance("infeasible"), {11, 31},
                                ReferenceKind::kFinest),
               InfeasibleInstance);
}

TEST(ConvergenceSweepTest, CsvColumns) {
  const auto csv = ConvergenceToCsv(ConvergenceSweep(
      LoadInstance("line"), {5, 9}, ReferenceKind::kFinest));
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "n,delta,rho,time_s");
}

TEST(XiSweepTest, LineGapsShrinkToZero) {
  const PathSpec line = LoadInstance("line");
  const auto result =
      XiSweep(line, UniformGrid(line, 201), {0.2, 0.1, 0.05, 0.0});
  EXPECT_TRUE(result.gaps_non_increasing);
  ASSERT_EQ(result.rows.size(), 4u);
  EXPECT_EQ(result.rows.back().gap, 0.0);
  // The tent peak rises by xi / 2 when the slope band widens by xi.
  EXPECT_NEAR(result.rows[0].gap, 0.1, 1e-9);
  for (const auto& row : result.rows) EXPECT_TRUE(row.admissible);
}

TEST(XiSweepTest, ZeroOnlyIsIdentity) {
  const PathSpec path = LoadInstance("chicane");
  const auto result = XiSweep(path, UniformGrid(path, 101), {0.0});
  ASSERT_EQ(result.rows.size(), 1u);
  EXPECT_EQ(result.rows[0].gap, 0.0);
}

TEST(XiSweepTest, CircleGapStaysWithinIntegratedRelaxation) {
  const PathSpec circle = LoadInstance("circle");
  const auto grid = UniformGrid(circle, 101);
  const auto result = XiSweep(circle, grid, {0.5, 0.1, 0.0});
  EXPECT_TRUE(result.gaps_non_increasing);
  for (const auto& row : result.rows) {
    EXPECT_LE(row.gap, row.xi * (grid.b() - grid.a()) + 1e-12);
  }
}

TEST(XiSweepTest, Preconditions) {
  const PathSpec line = LoadInstance("line");
  const auto grid = UniformGrid(line, 11);
  EXPECT_THROW(XiSweep(line, grid, {0.1, 0.2, 0.0}), ContractViolation);
  EXPECT_THROW(XiSweep(line, grid, {0.2, 0.1}), ContractViolation);
  EXPECT_THROW(XiSweep(line, grid, {}), ContractViolation);
}

}  // namespace
}  // namespace toppkit
