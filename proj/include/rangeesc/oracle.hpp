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

#ifndef RANGEESC_ORACLE_HPP_
#define RANGEESC_ORACLE_HPP_

#include <cstddef>
#include <numbers>
#include <vector>

#include "rangeesc/plant.hpp"

namespace rangeesc::oracle
{

struct Range
{
  double min{0.0};
  double max{0.0};
};

struct GridSpec
{
  Range speed{0.2, 8.0};                   // m/s
  Range sideslip{0.0, std::numbers::pi};  // rad
  std::size_t speed_steps{157};
  std::size_t sideslip_steps{181};
};

/// Cost values on a (sideslip x speed) lattice, row-major by sideslip.
struct CostSurface
{
  std::vector<double> speeds;
  std::vector<double> sideslips;
  std::vector<double> cost;

  [[nodiscard]] double at(std::size_t sideslip_index, std::size_t speed_index) const
  {
    return cost[sideslip_index * speeds.size() + speed_index];
  }
};

struct OracleResult
{
  double optimal_speed{0.0};
  double optimal_sideslip{0.0};
  double optimal_cost{0.0};
  double speed_resolution{0.0};
  double sideslip_resolution{0.0};
  bool interior{false};  // false: the optimum sits on the domain edge
  Range speed_domain{};
  Range sideslip_domain{};
  CostSurface surface;
};

/**
 * Evaluates the cost at every node and returns the minimizer, ties broken
 * toward lower speed and then lower sideslip.
 *
 * Requires speed.min > 0, non-degenerate ranges and >= 16 steps per axis.
 */
[[nodiscard]] OracleResult grid_search(const plant::VehicleParams &params, const GridSpec &grid);

/// Grid search where every axis may have any step count >= 2 (used by refine).
[[nodiscard]] OracleResult grid_search_unchecked(const plant::VehicleParams &params,
                                                 const GridSpec &grid);

/**
 * Repeated local search in a +-1 cell window around the incumbent, halving
 * the resolution each level. `levels == 0` returns the input unchanged.
 * The returned surface is the last local window.
 */
[[nodiscard]] OracleResult refine(const plant::VehicleParams &params, const OracleResult &coarse,
                                  std::size_t levels);

struct SurfaceRow
{
  double speed{0.0};
  double sideslip{0.0};
  double cost{0.0};
};

/// Long-format rows, sideslip-major then speed.
[[nodiscard]] std::vector<SurfaceRow> export_surface(const OracleResult &result);

/// Rebuilds an OracleResult from exported rows.
[[nodiscard]] OracleResult import_surface(const std::vector<SurfaceRow> &rows);

}  // namespace rangeesc::oracle

#endif  // RANGEESC_ORACLE_HPP_
