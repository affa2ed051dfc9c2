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

#ifndef RANGEESC_COMMANDS_HPP_
#define RANGEESC_COMMANDS_HPP_

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "rangeesc/config.hpp"
#include "rangeesc/oracle.hpp"
#include "rangeesc/sim.hpp"

namespace rangeesc::cli
{

/// Column order of every trace CSV.
inline const std::vector<std::string> kTraceColumns = {
  "t",           "speed_ref",      "sideslip_ref", "speed_actual", "sideslip_actual", "power_measured",
  "cost_measured", "q_lp_v",       "q_lp_s",       "g_v",          "g_s"};

/// `%.9g` formatting.
[[nodiscard]] std::string format_value(double value);

/// Writes the header and every `decimation`-th record. Angles in degrees.
void write_trace_csv(std::ostream &out, const sim::SimTrace &trace, std::size_t decimation);

/// Columns speed, sideslip (degrees), cost.
void write_surface_csv(std::ostream &out, const std::vector<oracle::SurfaceRow> &rows);

/// Grid search over the configured domain followed by local refinement.
[[nodiscard]] oracle::OracleResult compute_oracle(const config::ExperimentConfig &config);

/// Oracle optimum with the dither amplitudes as tolerances.
[[nodiscard]] sim::SettlingTarget settling_target(const config::ExperimentConfig &config,
                                                  const oracle::OracleResult &optimum);

struct SimulateOutcome
{
  std::filesystem::path trace_path;
  std::filesystem::path summary_path;
  oracle::OracleResult optimum;
  sim::RunSummary summary;
};

struct CompareOutcome
{
  std::filesystem::path adaptive_trace_path;
  std::filesystem::path standard_trace_path;
  std::filesystem::path report_path;
  oracle::OracleResult optimum;
  sim::ComparisonReport report;  // a = adaptive, b = standard
};

struct OracleOutcome
{
  std::filesystem::path surface_path;
  std::filesystem::path optimum_path;
  oracle::OracleResult coarse;
  oracle::OracleResult refined;
};

/// trace_<mode>.csv and summary_<mode>.txt in `out_dir`. Throws IoError on write failure.
SimulateOutcome cmd_simulate(const config::ExperimentConfig &config, config::Mode mode,
                             const std::filesystem::path &out_dir);

/// Both variants with identical seed and plant; trace_*.csv and comparison.txt.
CompareOutcome cmd_compare(const config::ExperimentConfig &config,
                           const std::filesystem::path &out_dir);

/// surface.csv over the coarse grid and a one-line optimum.txt.
OracleOutcome cmd_oracle(const config::ExperimentConfig &config,
                         const std::filesystem::path &out_dir);

}  // namespace rangeesc::cli

#endif  // RANGEESC_COMMANDS_HPP_
