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

#include "rangeesc/esc.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "rangeesc/error.hpp"

namespace rangeesc::esc
{

FirstOrderFilter::FirstOrderFilter(FilterKind kind, double cutoff) : kind_{kind}, cutoff_{cutoff}
{
  if (!(cutoff > 0.0) || !std::isfinite(cutoff)) {
    throw ConfigError("filter cutoff must be > 0");
  }
}

double FirstOrderFilter::step(double input, double dt)
{
  if (!(dt > 0.0)) {
    throw InvalidTimestep("filter step: dt must be > 0");
  }
  if (!initialized_) {
    prev_input_ = input;
    prev_output_ = kind_ == FilterKind::LowPass ? input : 0.0;
    initialized_ = true;
    return prev_output_;
  }
  const double wdt = cutoff_ * dt;
  double out = 0.0;
  if (kind_ == FilterKind::LowPass) {
    out = prev_output_ + (wdt / (1.0 + wdt)) * (input - prev_output_);
  } else {
    out = (prev_output_ + input - prev_input_) / (1.0 + wdt);
  }
  prev_input_ = input;
  prev_output_ = out;
  return out;
}

void FirstOrderFilter::prime(double prev_input, double prev_output)
{
  prev_input_ = prev_input;
  prev_output_ = prev_output;
  initialized_ = true;
}

StepSizeAdapter::StepSizeAdapter(AdapterConfig config) : config_{config}
{
  if (!(config_.beta1 >= 0.0 && config_.beta1 < 1.0)) {
    throw ConfigError("adapter beta1 must lie in [0, 1)");
  }
  if (!(config_.beta2 >= 0.0 && config_.beta2 < 1.0)) {
    throw ConfigError("adapter beta2 must lie in [0, 1)");
  }
  if (!(config_.epsilon > 0.0)) {
    throw ConfigError("adapter epsilon must be > 0");
  }
  if (!(config_.threshold > 0.0)) {
    throw ConfigError("adapter threshold must be > 0");
  }
}

double StepSizeAdapter::step(double q_lp)
{
  // The first sample seeds both moments and then goes through the regular
  // update as well.
  if (!initialized_) {
    m_ = q_lp;
    v_ = q_lp * q_lp;
    initialized_ = true;
  }
  ++index_;
  m_ = config_.beta1 * m_ + (1.0 - config_.beta1) * q_lp;
  v_ = config_.beta2 * v_ + (1.0 - config_.beta2) * q_lp * q_lp;
  const double rms = std::sqrt(v_);
  if (rms > config_.threshold) {
    return m_ / (rms + config_.epsilon);
  }
  return m_ * (rms + config_.epsilon) / (config_.threshold * config_.threshold);
}

void EscChannelConfig::validate() const
{
  auto positive = [](double x) { return std::isfinite(x) && x > 0.0; };
  if (!positive(dither_amplitude)) {
    throw ConfigError("dither amplitude must be > 0");
  }
  if (!positive(dither_frequency)) {
    throw ConfigError("dither frequency must be > 0");
  }
  if (!positive(hp_cutoff) || !positive(lp_cutoff)) {
    throw ConfigError("filter cutoffs must be > 0");
  }
  if (!positive(gain)) {
    throw ConfigError("gain must be > 0");
  }
  if (!(setpoint_bounds.min < setpoint_bounds.max)) {
    throw ConfigError("setpoint bounds must satisfy min < max");
  }
  if (!(initial_setpoint >= setpoint_bounds.min && initial_setpoint <= setpoint_bounds.max)) {
    throw ConfigError("initial setpoint must lie within bounds");
  }
}

namespace
{

EscChannelConfig validated(EscChannelConfig config)
{
  config.validate();
  return config;
}

}  // namespace

EscChannel::EscChannel(EscChannelConfig config)
  : config_{validated(std::move(config))},
    hp_{FilterKind::HighPass, config_.hp_cutoff},
    lp_{FilterKind::LowPass, config_.lp_cutoff}
{
  if (config_.adapter) {
    adapter_.emplace(*config_.adapter);
  }
  signals_.setpoint = config_.initial_setpoint;
  signals_.reference = config_.initial_setpoint;
}

double EscChannel::step(double cost_measurement, double t, double dt)
{
  const double phase = std::sin(config_.dither_frequency * t);

  const double q_hp = hp_.step(cost_measurement, dt);
  const double xi = q_hp * phase;
  const double q_lp = lp_.step(xi, dt);
  const double g = adapter_ ? adapter_->step(q_lp) : q_lp;

  // Positive gain descends.
  // Integrate the absolute setpoint so the clamp holds exactly; the offset
  // from r0 is derived from it.
  const double r0 = config_.initial_setpoint;
  const double next = std::clamp(signals_.setpoint - config_.gain * g * dt,
                                 config_.setpoint_bounds.min, config_.setpoint_bounds.max);
  integrator_ = next - r0;

  signals_ = {q_hp, xi, q_lp, g, integrator_, next, next + config_.dither_amplitude * phase};
  return signals_.reference;
}

namespace
{

void require_distinct(double a, double b)
{
  if (std::abs(a - b) <= 0.01 * std::max(a, b)) {
    throw ConfigError("dither frequencies must be distinct (got " + std::to_string(a) + " and " +
                      std::to_string(b) + " rad/s, within 1%)");
  }
}

EscChannelConfig checked_pair(EscChannelConfig speed, const EscChannelConfig &sideslip)
{
  speed.validate();
  sideslip.validate();
  require_distinct(speed.dither_frequency, sideslip.dither_frequency);
  return speed;
}

}  // namespace

EscController::EscController(EscChannelConfig speed, EscChannelConfig sideslip)
  : speed_{checked_pair(std::move(speed), sideslip)}, sideslip_{std::move(sideslip)}
{
}

References EscController::step(double cost_measurement, double t, double dt)
{
  References refs;
  refs.speed = speed_.step(cost_measurement, t, dt);
  refs.sideslip = sideslip_.step(cost_measurement, t, dt);
  return refs;
}

}  // namespace rangeesc::esc
