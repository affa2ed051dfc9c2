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

#include <algorithm>
#include <cmath>
#include <numbers>

#include "rangeesc/error.hpp"
#include "rangeesc/oracle.hpp"

namespace
{

using namespace rangeesc::oracle;
namespace plant = rangeesc::plant;

constexpr double kPi = std::numbers::pi;

plant::VehicleParams symmetric_drag()
{
  plant::VehicleParams p;
  p.mu1_lat = p.mu1_long;
  p.mu2_lat = p.mu2_long;
  return p;
}

TEST(GridSearch, DefaultOptimumIsInterior)
{
  const auto r = grid_search({}, {});
  EXPECT_TRUE(r.interior);
  EXPECT_EQ(r.surface.speeds.size(), 157u);
  EXPECT_EQ(r.surface.sideslips.size(), 181u);
  EXPECT_NEAR(r.speed_resolution, 0.05, 1e-12);
  EXPECT_NEAR(r.sideslip_resolution, kPi / 180.0, 1e-12);
  const double c = *std::min_element(r.surface.cost.begin(), r.surface.cost.end());
  EXPECT_EQ(r.optimal_cost, c);
}

TEST(GridSearch, SymmetricDragIsFlatInSideslip)
{
  // Every sideslip ties up to rounding, so the optimum speed is the same for
  // all of them and the reported cost equals the beta = 0 column minimum.
  const auto r = grid_search(symmetric_drag(), {});
  const auto at_zero = grid_search(symmetric_drag(), {{0.2, 8.0}, {0.0, 1e-9}, 157, 16});
  EXPECT_EQ(r.optimal_speed, at_zero.optimal_speed);
  EXPECT_NEAR(r.optimal_cost, at_zero.optimal_cost, 1e-12 * at_zero.optimal_cost);
}

TEST(GridSearch, TiesBreakTowardLowerSpeedAndSideslip)
{
  // Symmetric drag makes +beta and -beta exact ties; the lowest sideslip
  // among the minimal-cost nodes must win.
  GridSpec g{{0.2, 8.0}, {-1.0, 1.0}, 157, 17};
  const auto r = grid_search(symmetric_drag(), g);
  const auto &s = r.surface;
  const std::size_t i = static_cast<std::size_t>(
    std::find(s.speeds.begin(), s.speeds.end(), r.optimal_speed) - s.speeds.begin());
  for (std::size_t j = 0; j < s.sideslips.size(); ++j) {
    if (s.at(j, i) == r.optimal_cost) {
      EXPECT_EQ(s.sideslips[j], r.optimal_sideslip);
      break;
    }
  }
}

TEST(GridSearch, RejectsBadGrids)
{
  GridSpec g;
  g.speed_steps = 15;
  EXPECT_THROW((void)grid_search({}, g), rangeesc::InvalidInput);
  g = {};
  g.speed.min = 0.0;
  EXPECT_THROW((void)grid_search({}, g), rangeesc::InvalidSpeed);
  g = {};
  g.sideslip = {1.0, 1.0};
  EXPECT_THROW((void)grid_search({}, g), rangeesc::InvalidInput);
}

TEST(Refine, ZeroLevelsIsIdentity)
{
  const auto coarse = grid_search({}, {});
  const auto same = refine({}, coarse, 0);
  EXPECT_EQ(same.optimal_speed, coarse.optimal_speed);
  EXPECT_EQ(same.optimal_sideslip, coarse.optimal_sideslip);
  EXPECT_EQ(same.optimal_cost, coarse.optimal_cost);
}

TEST(Refine, CostNeverIncreasesAndResolutionHalves)
{
  const auto coarse = grid_search({}, {});
  double prev = coarse.optimal_cost;
  for (std::size_t levels = 1; levels <= 5; ++levels) {
    const auto r = refine({}, coarse, levels);
    EXPECT_LE(r.optimal_cost, prev);
    EXPECT_NEAR(r.speed_resolution, coarse.speed_resolution / std::pow(2.0, levels), 1e-15);
    prev = r.optimal_cost;
  }
}

TEST(Refine, AgreesWithDenseGrid)
{
  const auto coarse = grid_search({}, {});
  const auto fine = refine({}, coarse, 4);
  // 16x denser grid around the coarse optimum.
  GridSpec dense;
  dense.speed = {coarse.optimal_speed - 2 * coarse.speed_resolution,
                 coarse.optimal_speed + 2 * coarse.speed_resolution};
  dense.sideslip = {coarse.optimal_sideslip - 2 * coarse.sideslip_resolution,
                    coarse.optimal_sideslip + 2 * coarse.sideslip_resolution};
  dense.speed_steps = 65;
  dense.sideslip_steps = 65;
  const auto d = grid_search({}, dense);
  EXPECT_NEAR(fine.optimal_speed, d.optimal_speed, 2 * d.speed_resolution);
  EXPECT_NEAR(fine.optimal_sideslip, d.optimal_sideslip, 2 * d.sideslip_resolution);
  EXPECT_LE(fine.optimal_cost, d.optimal_cost + 1e-6);
}

TEST(Surface, ExportOrderAndRoundTrip)
{
  GridSpec g;
  g.speed_steps = 20;
  g.sideslip_steps = 17;
  const auto r = grid_search({}, g);
  const auto rows = export_surface(r);
  ASSERT_EQ(rows.size(), 20u * 17u);
  EXPECT_EQ(rows[0].speed, r.surface.speeds[0]);
  EXPECT_EQ(rows[1].speed, r.surface.speeds[1]);
  EXPECT_EQ(rows[1].sideslip, r.surface.sideslips[0]);
  EXPECT_EQ(rows[20].sideslip, r.surface.sideslips[1]);

  const auto back = import_surface(rows);
  EXPECT_EQ(back.optimal_speed, r.optimal_speed);
  EXPECT_EQ(back.optimal_sideslip, r.optimal_sideslip);
  EXPECT_EQ(back.optimal_cost, r.optimal_cost);
  EXPECT_EQ(back.surface.cost, r.surface.cost);
  EXPECT_EQ(back.interior, r.interior);
}

TEST(Surface, ImportRejectsRaggedGrid)
{
  auto rows = export_surface(grid_search({}, {{0.2, 8.0}, {0.0, kPi}, 16, 16}));
  rows.pop_back();
  EXPECT_THROW((void)import_surface(rows), rangeesc::InvalidInput);
  EXPECT_THROW((void)import_surface({}), rangeesc::InvalidInput);
}

}  // namespace
