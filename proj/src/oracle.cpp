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

#include "rangeesc/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <tuple>

#include "rangeesc/error.hpp"

namespace rangeesc::oracle
{

namespace
{

std::vector<double> linspace(const Range &range, std::size_t steps)
{
  std::vector<double> out(steps);
  const double span = range.max - range.min;
  for (std::size_t i = 0; i < steps; ++i) {
    out[i] = range.min + span * static_cast<double>(i) / static_cast<double>(steps - 1);
  }
  out.back() = range.max;
  return out;
}

struct Candidate
{
  double cost{std::numeric_limits<double>::infinity()};
  double speed{0.0};
  double sideslip{0.0};

  // Lexicographic, so the reduction is independent of evaluation order.
  [[nodiscard]] bool better_than(const Candidate &other) const
  {
    return std::tie(cost, speed, sideslip) < std::tie(other.cost, other.speed, other.sideslip);
  }
};

OracleResult evaluate(const plant::VehicleParams &params, std::vector<double> speeds,
                      std::vector<double> sideslips, const Range &speed_domain,
                      const Range &sideslip_domain)
{
  OracleResult result;
  result.surface.speeds = std::move(speeds);
  result.surface.sideslips = std::move(sideslips);
  const auto &vs = result.surface.speeds;
  const auto &bs = result.surface.sideslips;
  result.surface.cost.resize(vs.size() * bs.size());

  Candidate best;
  for (std::size_t j = 0; j < bs.size(); ++j) {
    for (std::size_t i = 0; i < vs.size(); ++i) {
      const double c = plant::evaluate_cost(params, {vs[i], bs[j]});
      result.surface.cost[j * vs.size() + i] = c;
      const Candidate here{c, vs[i], bs[j]};
      if (here.better_than(best)) {
        best = here;
      }
    }
  }
  result.optimal_cost = best.cost;
  result.optimal_speed = best.speed;
  result.optimal_sideslip = best.sideslip;
  result.speed_resolution = vs.size() > 1 ? vs[1] - vs[0] : 0.0;
  result.sideslip_resolution = bs.size() > 1 ? bs[1] - bs[0] : 0.0;
  result.speed_domain = speed_domain;
  result.sideslip_domain = sideslip_domain;
  result.interior = best.speed > speed_domain.min && best.speed < speed_domain.max &&
                    best.sideslip > sideslip_domain.min && best.sideslip < sideslip_domain.max;
  return result;
}

// Nodes center + j * step for j in [-2, 2] that fall inside the domain.
std::vector<double> local_axis(double center, double step, const Range &domain)
{
  std::vector<double> out;
  for (int j = -2; j <= 2; ++j) {
    const double x = j == 0 ? center : center + j * step;
    if (x >= domain.min && x <= domain.max) {
      out.push_back(x);
    }
  }
  return out;
}

}  // namespace

OracleResult grid_search_unchecked(const plant::VehicleParams &params, const GridSpec &grid)
{
  if (!(grid.speed.max > grid.speed.min) || !(grid.sideslip.max > grid.sideslip.min)) {
    throw InvalidInput("grid_search: ranges must be non-degenerate");
  }
  if (grid.speed_steps < 2 || grid.sideslip_steps < 2) {
    throw InvalidInput("grid_search: at least 2 steps per axis");
  }
  if (!(grid.speed.min > 0.0)) {
    throw InvalidSpeed("grid_search: speed range must start above 0");
  }
  return evaluate(params, linspace(grid.speed, grid.speed_steps),
                  linspace(grid.sideslip, grid.sideslip_steps), grid.speed, grid.sideslip);
}

OracleResult grid_search(const plant::VehicleParams &params, const GridSpec &grid)
{
  if (grid.speed_steps < 16 || grid.sideslip_steps < 16) {
    throw InvalidInput("grid_search: at least 16 steps per axis");
  }
  return grid_search_unchecked(params, grid);
}

OracleResult refine(const plant::VehicleParams &params, const OracleResult &coarse,
                    std::size_t levels)
{
  OracleResult current = coarse;
  double speed_step = coarse.speed_resolution;
  double sideslip_step = coarse.sideslip_resolution;
  for (std::size_t level = 0; level < levels; ++level) {
    speed_step *= 0.5;
    sideslip_step *= 0.5;
    OracleResult next =
      evaluate(params, local_axis(current.optimal_speed, speed_step, coarse.speed_domain),
               local_axis(current.optimal_sideslip, sideslip_step, coarse.sideslip_domain),
               coarse.speed_domain, coarse.sideslip_domain);
    next.speed_resolution = speed_step;
    next.sideslip_resolution = sideslip_step;
    current = std::move(next);
  }
  return current;
}

std::vector<SurfaceRow> export_surface(const OracleResult &result)
{
  const auto &s = result.surface;
  std::vector<SurfaceRow> rows;
  rows.reserve(s.cost.size());
  for (std::size_t j = 0; j < s.sideslips.size(); ++j) {
    for (std::size_t i = 0; i < s.speeds.size(); ++i) {
      rows.push_back({s.speeds[i], s.sideslips[j], s.at(j, i)});
    }
  }
  return rows;
}

OracleResult import_surface(const std::vector<SurfaceRow> &rows)
{
  if (rows.empty()) {
    throw InvalidInput("import_surface: no rows");
  }
  std::vector<double> speeds;
  std::vector<double> sideslips;
  for (const auto &row : rows) {
    if (sideslips.empty() || row.sideslip != sideslips.back()) {
      sideslips.push_back(row.sideslip);
    }
    if (sideslips.size() == 1) {
      speeds.push_back(row.speed);
    }
  }
  if (speeds.size() * sideslips.size() != rows.size()) {
    throw InvalidInput("import_surface: rows do not form a complete grid");
  }

  OracleResult result;
  result.surface.speeds = speeds;
  result.surface.sideslips = sideslips;
  Candidate best;
  for (std::size_t k = 0; k < rows.size(); ++k) {
    const auto &row = rows[k];
    if (row.speed != speeds[k % speeds.size()]) {
      throw InvalidInput("import_surface: speed column is not repeated per sideslip");
    }
    result.surface.cost.push_back(row.cost);
    const Candidate here{row.cost, row.speed, row.sideslip};
    if (here.better_than(best)) {
      best = here;
    }
  }
  result.optimal_cost = best.cost;
  result.optimal_speed = best.speed;
  result.optimal_sideslip = best.sideslip;
  result.speed_resolution = speeds.size() > 1 ? speeds[1] - speeds[0] : 0.0;
  result.sideslip_resolution = sideslips.size() > 1 ? sideslips[1] - sideslips[0] : 0.0;
  result.speed_domain = {speeds.front(), speeds.back()};
  result.sideslip_domain = {sideslips.front(), sideslips.back()};
  result.interior = best.speed > speeds.front() && best.speed < speeds.back() &&
                    best.sideslip > sideslips.front() && best.sideslip < sideslips.back();
  return result;
}

}  // namespace rangeesc::oracle
