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

#ifndef RANGEESC_SIM_HPP_
#define RANGEESC_SIM_HPP_

#include <cstdint>
#include <limits>
#include <optional>
#include <vector>

#include "rangeesc/esc.hpp"
#include "rangeesc/plant.hpp"

namespace rangeesc::sim
{

struct SimConfig
{
  double dt{0.01};                     // s
  double duration{300.0};              // s
  std::uint64_t seed{1};
  double power_noise_std{2.0};         // W, additive Gaussian
  double tracking_time_constant{0.3};  // s, 0 = perfect tracking
  plant::VehicleParams vehicle{};
  esc::EscChannelConfig speed_channel{};
  esc::EscChannelConfig sideslip_channel{};

  /// Throws InvalidConfig (or the module error of a nested config).
  void validate() const;
};

/// One closed-loop step. Angles in radians.
struct TraceRecord
{
  double t{0.0};
  double speed_ref{0.0};
  double sideslip_ref{0.0};
  double speed_actual{0.0};
  double sideslip_actual{0.0};
  double power_true{0.0};
  double power_measured{0.0};
  double cost_measured{0.0};
  double q_lp_v{0.0};
  double q_lp_s{0.0};
  double g_v{0.0};
  double g_s{0.0};
  double r_hat_v{0.0};
  double r_hat_s{0.0};
};

struct SimTrace
{
  double dt{0.0};
  double duration{0.0};
  double speed_dither_frequency{0.0};
  double sideslip_dither_frequency{0.0};
  std::vector<TraceRecord> records;
};

/**
 * Runs the controller against the plant for floor(duration / dt) steps.
 *
 * Each step the controller turns the previous cost measurement into
 * references, the vehicle follows them through a first-order lag, and the
 * plant power at the actual condition (plus seeded Gaussian noise from
 * std::mt19937_64) divided by the actual speed becomes the next measurement.
 */
[[nodiscard]] SimTrace run_simulation(const SimConfig &config);

/// Number of records a run with this config produces.
[[nodiscard]] std::size_t step_count(double duration, double dt);

struct SettlingTarget
{
  double speed{0.0};         // m/s
  double sideslip{0.0};      // rad
  double tol_speed{0.0};     // m/s
  double tol_sideslip{0.0};  // rad
};

inline constexpr double kDidNotSettle = std::numeric_limits<double>::infinity();

/// Trailing one-dither-period mean of a reference series (partial windows at the start).
[[nodiscard]] std::vector<double> period_average(const std::vector<double> &series, double dt,
                                                 double dither_frequency);

/**
 * Earliest time after which both period-averaged references stay within
 * tolerance of the target. kDidNotSettle if the trace ends outside it.
 */
[[nodiscard]] double settling_time(const SimTrace &trace, const SettlingTarget &target);

struct RunSummary
{
  double settling_time{kDidNotSettle};
  double final_cost{0.0};            // period-averaged measured cost at the end
  double final_speed{0.0};           // period-averaged references at the end
  double final_sideslip{0.0};
  double final_speed_error{0.0};     // final_* minus target
  double final_sideslip_error{0.0};

  [[nodiscard]] bool settled() const noexcept { return settling_time != kDidNotSettle; }
};

struct ComparisonReport
{
  RunSummary a;
  RunSummary b;
  std::optional<double> ratio;  // a / b settling time, empty unless both settled
};

[[nodiscard]] RunSummary summarize(const SimTrace &trace, const SettlingTarget &target);

/// Throws MismatchedConfig if the traces differ in dt or duration.
[[nodiscard]] ComparisonReport compare_runs(const SimTrace &a, const SimTrace &b,
                                            const SettlingTarget &target);

}  // namespace rangeesc::sim

#endif  // RANGEESC_SIM_HPP_
