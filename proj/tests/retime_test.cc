#include <cmath>
#include <random>

#include "gtest/gtest.h"
#include "test_instances.h"
#include "toppkit/errors.h"
#include "toppkit/path_models.h"
#include "toppkit/retime.h"
#include "toppkit/solver.h"

namespace toppkit {
namespace {

SpeedProfile Profile(std::vector<double> grid, std::vector<double> values) {
  return SpeedProfile(Discretization(std::move(grid)), std::move(values),
                      Provenance::kSynthetic);
}

TEST(TraversalTimeTest, Examples) {
  // 2 * 0.5 / (0 + 1) on each half.
  EXPECT_DOUBLE_EQ(*TraversalTime(Profile({0.0, 0.5, 1.0}, {0.0, 1.0, 0.0})),
                   2.0);
  EXPECT_DOUBLE_EQ(*TraversalTime(Profile({0.0, 3.0, 8.0}, {4.0, 4.0, 4.0})),
                   4.0);
  EXPECT_FALSE(TraversalTime(Profile({0.0, 1.0, 2.0}, {1.0, 0.0, 0.0})));
  EXPECT_THROW(TraversalTime(Profile({0.0, 1.0}, {1.0, -1e-3})),
               ContractViolation);
}

TEST(TraversalTimeTest, DominanceOrdersTimes) {
  std::mt19937_64 rng(8);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const auto grid = Discretization::Uniform(0.0, 5.0, 40);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<double> p(grid.size());
    std::vector<double> q(grid.size());
    for (std::size_t i = 0; i < p.size(); ++i) {
      p[i] = 0.01 + 3.0 * unit(rng);
      q[i] = p[i] + unit(rng);
    }
    const auto tp = TraversalTime(SpeedProfile(grid, p, Provenance::kSynthetic));
    const auto tq = TraversalTime(SpeedProfile(grid, q, Provenance::kSynthetic));
    EXPECT_GE(*tp, *tq);
  }
}

TEST(TraversalTimeTest, MidpointRefinementAgrees) {
  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<double> s{0.0};
    std::vector<double> h{unit(rng) < 0.3 ? 0.0 : unit(rng)};
    for (int i = 0; i < 30; ++i) {
      s.push_back(s.back() + 0.01 + unit(rng));
      h.push_back(0.05 + 4.0 * unit(rng));
    }
    std::vector<double> fine_s;
    std::vector<double> fine_h;
    for (std::size_t i = 0; i + 1 < s.size(); ++i) {
      fine_s.push_back(s[i]);
      fine_h.push_back(h[i]);
      fine_s.push_back(0.5 * (s[i] + s[i + 1]));
      fine_h.push_back(0.5 * (h[i] + h[i + 1]));
    }
    fine_s.push_back(s.back());
    fine_h.push_back(h.back());
    const double coarse = *TraversalTime(Profile(s, h));
    const double fine = *TraversalTime(Profile(fine_s, fine_h));
    EXPECT_NEAR(coarse, fine, 1e-12 * coarse);
  }
}

TEST(SampleTrajectoryTest, UnitSpeed) {
  const auto samples =
      SampleTrajectory(Profile({0.0, 0.5, 1.0}, {1.0, 1.0, 1.0}), 0.25);
  ASSERT_EQ(samples.size(), 5u);
  for (std::size_t k = 0; k < samples.size(); ++k) {
    EXPECT_NEAR(samples[k].t, 0.25 * k, 1e-15);
    EXPECT_NEAR(samples[k].s, 0.25 * k, 1e-15);
    EXPECT_NEAR(samples[k].speed, 1.0, 1e-15);
  }
}

TEST(SampleTrajectoryTest, BangBangMidpoint) {
  const PathSpec line = testing::LoadInstance("line");
  const auto grid = UniformGrid(line, 1001);
  const auto report = Solve(grid, BuildModel(line), line.endpoints);
  const auto samples = SampleTrajectory(report.profile, 0.5);
  ASSERT_GE(samples.size(), 5u);
  EXPECT_EQ(samples[2].t, 1.0);
  EXPECT_NEAR(samples.back().t, 2.0, 1e-12);
  EXPECT_NEAR(samples[2].s, 0.5, 1e-9);
  EXPECT_NEAR(samples[2].speed, 1.0, 1e-9);
  // Constant acceleration of 1 m/s^2 from rest: s = t^2 / 2.
  EXPECT_NEAR(samples[1].s, 0.125, 1e-9);
}

TEST(SampleTrajectoryTest, TimestampsAndBounds) {
  const PathSpec path = testing::LoadInstance("chicane");
  const auto model = BuildModel(path);
  const auto grid = UniformGrid(path, 400);
  const auto report = Solve(grid, model, path.endpoints);
  double bu_max = 0.0;
  for (double s : grid.points()) bu_max = std::max(bu_max, model.Upper(s));
  for (double dt : {0.01, 0.137, 1.0}) {
    const auto samples = SampleTrajectory(report.profile, dt);
    EXPECT_EQ(samples.front().t, 0.0);
    EXPECT_EQ(samples.front().s, grid.a());
    EXPECT_EQ(samples.back().s, grid.b());
    EXPECT_NEAR(samples.back().t, *report.traversal_time, 1e-12);
    for (std::size_t k = 1; k < samples.size(); ++k) {
      EXPECT_GT(samples[k].t, samples[k - 1].t);
      EXPECT_GE(samples[k].s, samples[k - 1].s);
    }
    for (const auto& sample : samples) {
      EXPECT_LE(sample.speed, std::sqrt(bu_max) + 1e-9);
    }
  }
}

TEST(SampleTrajectoryTest, Preconditions) {
  const auto p = Profile({0.0, 1.0}, {1.0, 1.0});
  EXPECT_THROW(SampleTrajectory(p, 0.0), ContractViolation);
  EXPECT_THROW(SampleTrajectory(p, -1.0), ContractViolation);
  EXPECT_THROW(SampleTrajectory(Profile({0.0, 1.0}, {0.0, 0.0}), 0.1),
               ContractViolation);
}

TEST(SampleTrajectoryTest, CsvHeader) {
  const auto csv = TrajectoryToCsv(
      SampleTrajectory(Profile({0.0, 1.0}, {1.0, 1.0}), 0.5));
  EXPECT_EQ(csv.substr(0, 6), "t,s,v\n");
}

}  // namespace
}  // namespace toppkit
