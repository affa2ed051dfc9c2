/*
 * Copyright 2026 The rangeesc Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "rangeesc/error.hpp"
#include "rangeesc/plant.hpp"
#include "rangeesc/sim.hpp"

namespace
{

using namespace rangeesc::sim;
using rangeesc::InvalidConfig;
using rangeesc::MismatchedConfig;
namespace esc = rangeesc::esc;
namespace plant = rangeesc::plant;

constexpr double kDeg = std::numbers::pi / 180.0;

SimConfig base_config(double k_v = 0.025, double k_s = 0.02)
{
  SimConfig c;
  c.speed_channel = {0.15, 1.0, 1.0, 1.0, k_v, 2.2, {0.2, 8.0}, std::nullopt};
  c.sideslip_channel = {7.5 * kDeg, 0.5, 0.5, 0.5, k_s, 50.0 * kDeg, {0.0, std::numbers::pi},
                        std::nullopt};
  return c;
}

TEST(Simulation, RecordCountAndSpacing)
{
  auto c = base_config();
  c.duration = 130.0;
  const auto trace = run_simulation(c);
  ASSERT_EQ(trace.records.size(), 13000u);
  EXPECT_EQ(step_count(130.0, 0.01), 13000u);
  for (std::size_t k = 0; k < trace.records.size(); k += 997) {
    EXPECT_NEAR(trace.records[k].t, static_cast<double>(k) * 0.01, 1e-12);
  }
}

TEST(Simulation, FrozenGainGivesPureDither)
{
  auto c = base_config(1e-12, 1e-12);
  c.duration = 130.0;
  const auto trace = run_simulation(c);
  for (const auto &r : trace.records) {
    ASSERT_NEAR(r.speed_ref, 2.2 + 0.15 * std::sin(r.t), 1e-8);
    ASSERT_NEAR(r.sideslip_ref, 50.0 * kDeg + 7.5 * kDeg * std::sin(0.5 * r.t), 1e-8);
  }
}

TEST(Simulation, SameSeedSameTrace)
{
  const auto c = base_config();
  const auto a = run_simulation(c);
  const auto b = run_simulation(c);
  ASSERT_EQ(a.records.size(), b.records.size());
  for (std::size_t k = 0; k < a.records.size(); ++k) {
    ASSERT_EQ(a.records[k].cost_measured, b.records[k].cost_measured);
    ASSERT_EQ(a.records[k].speed_ref, b.records[k].speed_ref);
  }
  auto other = c;
  other.seed = 2;
  const auto d = run_simulation(other);
  EXPECT_NE(a.records.back().cost_measured, d.records.back().cost_measured);
}

TEST(Simulation, NoiselessCostMatchesPlant)
{
  auto c = base_config();
  c.power_noise_std = 0.0;
  c.duration = 130.0;
  const auto trace = run_simulation(c);
  for (std::size_t k = 0; k < trace.records.size(); k += 101) {
    const auto &r = trace.records[k];
    const double expected =
        plant::evaluate_cost(c.vehicle, {r.speed_actual, r.sideslip_actual});
    ASSERT_EQ(r.cost_measured, expected);
    ASSERT_EQ(r.power_measured, r.power_true);
  }
}

TEST(Simulation, LagFollowsReferenceWithinFiveTau)
{
  auto c = base_config(1e-12, 1e-12);
  c.tracking_time_constant = 2.0;
  c.speed_channel.dither_frequency = 0.05;
  c.speed_channel.hp_cutoff = 0.05;
  c.speed_channel.lp_cutoff = 0.05;
  c.sideslip_channel.dither_frequency = 0.06;
  c.sideslip_channel.hp_cutoff = 0.06;
  c.sideslip_channel.lp_cutoff = 0.06;
  c.duration = 1300.0;
  const auto trace = run_simulation(c);
  // The dither is slow compared with tau, so after 5 tau the lag error is
  // bounded by the dither slope times tau.
  const double slope_bound = 0.15 * 0.05 * 2.0;
  for (const auto &r : trace.records) {
    if (r.t < 10.0) continue;
    ASSERT_NEAR(r.speed_actual, r.speed_ref, 0.01 * r.speed_ref + slope_bound);
  }
}

TEST(Simulation, PerfectTrackingWhenTauZero)
{
  auto c = base_config();
  c.tracking_time_constant = 0.0;
  c.duration = 130.0;
  const auto trace = run_simulation(c);
  for (const auto &r : trace.records) {
    ASSERT_EQ(r.speed_actual, r.speed_ref);
    ASSERT_EQ(r.sideslip_actual, r.sideslip_ref);
  }
}

TEST(Simulation, RejectsBadConfig)
{
  auto c = base_config();
  c.dt = 0.0;
  EXPECT_THROW((void)run_simulation(c), InvalidConfig);
  c = base_config();
  c.duration = 20.0;
  EXPECT_THROW((void)run_simulation(c), InvalidConfig);
  c = base_config();
  c.power_noise_std = -1.0;
  EXPECT_THROW((void)run_simulation(c), InvalidConfig);
  c = base_config();
  c.speed_channel.setpoint_bounds.min = 0.1;
  EXPECT_THROW((void)run_simulation(c), InvalidConfig);
}

SimTrace constant_trace(double speed, double sideslip, std::size_t n = 20000)
{
  SimTrace t;
  t.dt = 0.01;
  t.duration = static_cast<double>(n) * 0.01;
  t.speed_dither_frequency = 1.0;
  t.sideslip_dither_frequency = 0.5;
  for (std::size_t k = 0; k < n; ++k) {
    TraceRecord r;
    r.t = static_cast<double>(k) * 0.01;
    r.speed_ref = speed;
    r.sideslip_ref = sideslip;
    r.cost_measured = 40.0;
    t.records.push_back(r);
  }
  return t;
}

TEST(Settling, ImmediateAndNever)
{
  const SettlingTarget target{2.0, 1.0, 0.15, 0.13};
  EXPECT_EQ(settling_time(constant_trace(2.05, 1.0), target), 0.0);
  EXPECT_EQ(settling_time(constant_trace(3.0, 1.0), target), kDidNotSettle);
}

TEST(Settling, StepIntoBand)
{
  auto trace = constant_trace(3.0, 1.0);
  for (auto &r : trace.records) {
    if (r.t >= 50.0) r.speed_ref = 2.0;
  }
  const SettlingTarget target{2.0, 1.0, 0.15, 0.13};
  const double ts = settling_time(trace, target);
  // The period mean crosses into the band a fraction of a period later.
  EXPECT_GT(ts, 50.0);
  EXPECT_LT(ts, 50.0 + 2.0 * std::numbers::pi);
}

TEST(Settling, PeriodAverageOfSineIsZero)
{
  std::vector<double> s;
  for (int k = 0; k < 5000; ++k) s.push_back(std::sin(0.01 * k));
  const auto avg = period_average(s, 0.01, 1.0);
  ASSERT_EQ(avg.size(), s.size());
  EXPECT_NEAR(avg.back(), 0.0, 2e-3);
}

TEST(Compare, IdenticalRunsGiveUnitRatio)
{
  auto c = base_config();
  c.duration = 130.0;
  const auto t = run_simulation(c);
  const SettlingTarget loose{2.2, 50.0 * kDeg, 5.0, 2.0};
  const auto report = compare_runs(t, t, loose);
  ASSERT_TRUE(report.ratio.has_value());
  EXPECT_EQ(*report.ratio, 1.0);
}

TEST(Compare, MismatchedTracesThrow)
{
  auto a = constant_trace(2.0, 1.0, 20000);
  auto b = constant_trace(2.0, 1.0, 15000);
  EXPECT_THROW((void)compare_runs(a, b, {2.0, 1.0, 0.1, 0.1}), MismatchedConfig);
}

TEST(Compare, UnsettledRunHasNoRatio)
{
  const SettlingTarget target{2.0, 1.0, 0.15, 0.13};
  const auto report = compare_runs(constant_trace(2.0, 1.0), constant_trace(5.0, 1.0), target);
  EXPECT_TRUE(report.a.settled());
  EXPECT_FALSE(report.b.settled());
  EXPECT_FALSE(report.ratio.has_value());
}

}  // namespace
