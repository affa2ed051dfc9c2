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

#ifndef RANGEESC_ESC_HPP_
#define RANGEESC_ESC_HPP_

#include <cstdint>
#include <optional>

namespace rangeesc::esc
{

enum class FilterKind
{
  HighPass,
  LowPass
};

/**
 * First-order filter discretized with backward Euler.
 *
 * The first sample initializes the state: a low-pass starts at the signal,
 * a high-pass starts at zero output.
 */
class FirstOrderFilter
{
public:
  FirstOrderFilter(FilterKind kind, double cutoff);

  /// Throws InvalidTimestep for dt <= 0.
  double step(double input, double dt);

  /// Forces the state as if `prev_input` produced `prev_output`.
  void prime(double prev_input, double prev_output);
  void reset() noexcept { initialized_ = false; }

  [[nodiscard]] FilterKind kind() const noexcept { return kind_; }
  [[nodiscard]] double cutoff() const noexcept { return cutoff_; }
  [[nodiscard]] double output() const noexcept { return prev_output_; }
  [[nodiscard]] bool initialized() const noexcept { return initialized_; }

private:
  FilterKind kind_;
  double cutoff_;
  double prev_input_{0.0};
  double prev_output_{0.0};
  bool initialized_{false};
};

struct AdapterConfig
{
  double beta1{0.9};
  double beta2{0.999};
  double epsilon{1e-8};
  double threshold{1.0};

  bool operator==(const AdapterConfig &) const = default;
};

/// Moment-normalizing step-size adapter fed by the gradient estimate.
class StepSizeAdapter
{
public:
  explicit StepSizeAdapter(AdapterConfig config = {});

  /// Consumes one gradient estimate and returns the scaled gradient g.
  double step(double q_lp);

  [[nodiscard]] const AdapterConfig &config() const noexcept { return config_; }
  [[nodiscard]] double first_moment() const noexcept { return m_; }
  [[nodiscard]] double second_moment() const noexcept { return v_; }
  [[nodiscard]] std::uint64_t step_index() const noexcept { return index_; }
  [[nodiscard]] bool initialized() const noexcept { return initialized_; }

private:
  AdapterConfig config_;
  double m_{0.0};
  double v_{0.0};
  std::uint64_t index_{0};
  bool initialized_{false};
};

struct Bounds
{
  double min{0.0};
  double max{0.0};

  bool operator==(const Bounds &) const = default;
};

struct EscChannelConfig
{
  double dither_amplitude{0.0};  // variable units
  double dither_frequency{0.0};  // rad/s
  double hp_cutoff{0.0};         // rad/s
  double lp_cutoff{0.0};         // rad/s
  double gain{0.0};
  double initial_setpoint{0.0};
  Bounds setpoint_bounds{};
  std::optional<AdapterConfig> adapter{};  // empty: constant step size

  /// Throws ConfigError naming the violated rule.
  void validate() const;

  bool operator==(const EscChannelConfig &) const = default;
};

/// Internal signals of the most recent channel step.
struct ChannelSignals
{
  double q_hp{0.0};
  double xi{0.0};
  double q_lp{0.0};
  double g{0.0};
  double integrator{0.0};
  double setpoint{0.0};   // r0 + integrator
  double reference{0.0};  // setpoint + dither
};

/// One dither / demodulate / filter / integrate chain.
class EscChannel
{
public:
  explicit EscChannel(EscChannelConfig config);

  /// Returns the dithered reference for time t.
  double step(double cost_measurement, double t, double dt);

  [[nodiscard]] const EscChannelConfig &config() const noexcept { return config_; }
  [[nodiscard]] const ChannelSignals &signals() const noexcept { return signals_; }
  [[nodiscard]] double integrator() const noexcept { return integrator_; }
  [[nodiscard]] double setpoint() const noexcept { return signals_.setpoint; }
  [[nodiscard]] const std::optional<StepSizeAdapter> &adapter() const noexcept { return adapter_; }

private:
  EscChannelConfig config_;
  FirstOrderFilter hp_;
  FirstOrderFilter lp_;
  std::optional<StepSizeAdapter> adapter_;
  double integrator_{0.0};
  ChannelSignals signals_{};
};

struct References
{
  double speed{0.0};
  double sideslip{0.0};
};

/**
 * Two-channel controller over speed and sideslip sharing one scalar cost.
 *
 * Construction rejects dither frequencies that coincide or lie within 1%
 * of each other.
 */
class EscController
{
public:
  EscController(EscChannelConfig speed, EscChannelConfig sideslip);

  References step(double cost_measurement, double t, double dt);

  [[nodiscard]] const EscChannel &speed() const noexcept { return speed_; }
  [[nodiscard]] const EscChannel &sideslip() const noexcept { return sideslip_; }

private:
  EscChannel speed_;
  EscChannel sideslip_;
};

}  // namespace rangeesc::esc

#endif  // RANGEESC_ESC_HPP_
