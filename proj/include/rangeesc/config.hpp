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

#ifndef RANGEESC_CONFIG_HPP_
#define RANGEESC_CONFIG_HPP_

#include <array>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <string>

#include "rangeesc/esc.hpp"
#include "rangeesc/oracle.hpp"
#include "rangeesc/plant.hpp"
#include "rangeesc/sim.hpp"

namespace rangeesc::config
{

enum class Mode
{
  Adaptive,
  Standard
};

[[nodiscard]] const char *to_string(Mode mode) noexcept;
/// Throws ValidationError for anything but "adaptive" / "standard".
[[nodiscard]] Mode parse_mode(const std::string &text, const std::string &key_path = "mode");

/// Per-variable controller settings as written in the file. The sideslip
/// channel stores amplitude, initial setpoint and bounds in degrees.
struct ChannelSection
{
  double a{0.0};
  double omega{0.0};
  double hp_cutoff{0.0};
  double lp_cutoff{0.0};
  double k_adaptive{0.0};
  double k_standard{0.0};
  double r0{0.0};
  std::array<double, 2> bounds{};

  bool operator==(const ChannelSection &) const = default;
};

struct DomainSection
{
  double speed_min{0.2};
  double speed_max{8.0};
  double sideslip_min_deg{0.0};
  double sideslip_max_deg{180.0};
  std::size_t speed_steps{157};
  std::size_t sideslip_steps{181};
  std::size_t refine_levels{4};

  bool operator==(const DomainSection &) const = default;
};

struct SimSection
{
  double dt{0.01};
  double duration{300.0};
  std::uint64_t seed{1};
  double power_noise_std{2.0};
  double tracking_tau{0.3};

  bool operator==(const SimSection &) const = default;
};

struct OutputSection
{
  std::string directory{"out"};
  std::size_t decimation{1};

  bool operator==(const OutputSection &) const = default;
};

struct ExperimentConfig
{
  plant::VehicleParams vehicle{};
  DomainSection domain{};
  Mode mode{Mode::Adaptive};
  ChannelSection speed_channel{0.15, 1.0, 1.0, 1.0, 0.1, 0.025, 2.2, {0.2, 8.0}};
  ChannelSection sideslip_channel{7.5, 0.5, 0.5, 0.5, 0.1, 0.02, 50.0, {0.0, 180.0}};
  esc::AdapterConfig adapter{};
  SimSection sim{};
  OutputSection output{};

  bool operator==(const ExperimentConfig &) const = default;
};

/// Reference experiment: default vehicle and the standard controller gains.
[[nodiscard]] ExperimentConfig default_config();

/**
 * Parses JSON text. Missing keys keep their defaults; unknown keys are
 * rejected. Throws ParseError (with line/column) or ValidationError (with
 * the dotted key path).
 */
[[nodiscard]] ExperimentConfig parse_config(const std::string &text);

/// Reads and parses a file. Throws IoError if it cannot be read.
[[nodiscard]] ExperimentConfig load_config(const std::filesystem::path &path);

/// Re-checks every invariant. Throws ValidationError.
void validate(const ExperimentConfig &config);

/// Complete JSON document with every key set; parse_config() inverts it.
[[nodiscard]] std::string to_json(const ExperimentConfig &config);

[[nodiscard]] esc::EscChannelConfig speed_channel_config(const ExperimentConfig &config, Mode mode);
[[nodiscard]] esc::EscChannelConfig sideslip_channel_config(const ExperimentConfig &config,
                                                            Mode mode);
[[nodiscard]] sim::SimConfig sim_config(const ExperimentConfig &config, Mode mode);
[[nodiscard]] oracle::GridSpec grid_spec(const ExperimentConfig &config);

}  // namespace rangeesc::config

#endif  // RANGEESC_CONFIG_HPP_
