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

#include "rangeesc/sim.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "rangeesc/error.hpp"

namespace rangeesc::sim
{

void SimConfig::validate() const
{
  if (!(dt > 0.0) || !std::isfinite(dt)) {
    throw InvalidConfig("sim.dt must be > 0");
  }
  vehicle.validate();
  speed_channel.validate();
  sideslip_channel.validate();
  const double slowest =
    std::min(speed_channel.dither_frequency, sideslip_channel.dither_frequency);
  const double longest_period = 2.0 * std::numbers::pi / slowest;
  if (!(duration >= 10.0 * longest_period)) {
    throw InvalidConfig("sim.duration must cover at least 10 dither periods");
  }
  if (!(tracking_time_constant >= 0.0)) {
    throw InvalidConfig("sim.tracking_tau must be >= 0");
  }
  if (!(power_noise_std >= 0.0)) {
    throw InvalidConfig("sim.power_noise_std must be >= 0");
  }
  if (!(speed_channel.setpoint_bounds.min - speed_channel.dither_amplitude > 0.0)) {
    throw InvalidConfig("speed reference floor: bounds.min must exceed the dither amplitude");
  }
}

std::size_t step_count(double duration, double dt)
{
  // Guard against 300 / 0.01 landing a hair below an integer.
  return static_cast<std::size_t>(std::floor(duration / dt + 1e-9));
}

SimTrace run_simulation(const SimConfig &config)
{
  config.validate();

  esc::EscController controller{config.speed_channel, config.sideslip_channel};
  std::mt19937_64 rng{config.seed};
  std::normal_distribution<double> noise{0.0, 1.0};

  const double dt = config.dt;
  const double tau = config.tracking_time_constant;
  const double lag = tau > 0.0 ? std::min(1.0, dt / tau) : 1.0;

  plant::FlightCondition actual{config.speed_channel.initial_setpoint,
                                config.sideslip_channel.initial_setpoint};

  auto measure = [&](const plant::FlightCondition &condition, TraceRecord &rec) {
    rec.power_true = plant::trim(config.vehicle, condition).total_power;
    rec.power_measured = rec.power_true;
    if (config.power_noise_std > 0.0) {
      rec.power_measured += config.power_noise_std * noise(rng);
    }
    rec.cost_measured = rec.power_measured / condition.speed;
  };

  TraceRecord seed_record;
  measure(actual, seed_record);
  double cost = seed_record.cost_measured;

  SimTrace trace;
  trace.dt = dt;
  trace.duration = config.duration;
  trace.speed_dither_frequency = config.speed_channel.dither_frequency;
  trace.sideslip_dither_frequency = config.sideslip_channel.dither_frequency;
  const std::size_t n = step_count(config.duration, dt);
  trace.records.reserve(n);

  for (std::size_t k = 0; k < n; ++k) {
    const double t = static_cast<double>(k) * dt;
    const esc::References refs = controller.step(cost, t, dt);

    actual.speed += lag * (refs.speed - actual.speed);
    actual.sideslip += lag * (refs.sideslip - actual.sideslip);

    TraceRecord rec;
    rec.t = t;
    rec.speed_ref = refs.speed;
    rec.sideslip_ref = refs.sideslip;
    rec.speed_actual = actual.speed;
    rec.sideslip_actual = actual.sideslip;
    measure(actual, rec);
    const auto &sv = controller.speed().signals();
    const auto &ss = controller.sideslip().signals();
    rec.q_lp_v = sv.q_lp;
    rec.q_lp_s = ss.q_lp;
    rec.g_v = sv.g;
    rec.g_s = ss.g;
    rec.r_hat_v = sv.integrator;
    rec.r_hat_s = ss.integrator;
    trace.records.push_back(rec);

    cost = rec.cost_measured;
  }
  return trace;
}

std::vector<double> period_average(const std::vector<double> &series, double dt,
                                   double dither_frequency)
{
  const auto window = std::max<std::size_t>(
    1, static_cast<std::size_t>(std::lround(2.0 * std::numbers::pi / dither_frequency / dt)));
  std::vector<double> out(series.size());
  double sum = 0.0;
  for (std::size_t k = 0; k < series.size(); ++k) {
    sum += series[k];
    if (k >= window) {
      sum -= series[k - window];
    }
    out[k] = sum / static_cast<double>(std::min(k + 1, window));
  }
  return out;
}

namespace
{

template <typename Field>
std::vector<double> column(const SimTrace &trace, Field field)
{
  std::vector<double> out;
  out.reserve(trace.records.size());
  for (const auto &rec : trace.records) {
    out.push_back(rec.*field);
  }
  return out;
}

}  // namespace

double settling_time(const SimTrace &trace, const SettlingTarget &target)
{
  if (trace.records.empty()) {
    return kDidNotSettle;
  }
  const auto speed = period_average(column(trace, &TraceRecord::speed_ref), trace.dt,
                                    trace.speed_dither_frequency);
  const auto sideslip = period_average(column(trace, &TraceRecord::sideslip_ref), trace.dt,
                                       trace.sideslip_dither_frequency);
  auto inside = [&](std::size_t k) {
    return std::abs(speed[k] - target.speed) <= target.tol_speed &&
           std::abs(sideslip[k] - target.sideslip) <= target.tol_sideslip;
  };
  std::size_t k = trace.records.size();
  while (k > 0 && inside(k - 1)) {
    --k;
  }
  if (k == trace.records.size()) {
    return kDidNotSettle;
  }
  return trace.records[k].t;
}

RunSummary summarize(const SimTrace &trace, const SettlingTarget &target)
{
  RunSummary summary;
  summary.settling_time = settling_time(trace, target);
  if (trace.records.empty()) {
    return summary;
  }
  const auto speed = period_average(column(trace, &TraceRecord::speed_ref), trace.dt,
                                    trace.speed_dither_frequency);
  const auto sideslip = period_average(column(trace, &TraceRecord::sideslip_ref), trace.dt,
                                       trace.sideslip_dither_frequency);
  const double slowest = std::min(trace.speed_dither_frequency, trace.sideslip_dither_frequency);
  const auto cost = period_average(column(trace, &TraceRecord::cost_measured), trace.dt, slowest);
  summary.final_cost = cost.back();
  summary.final_speed = speed.back();
  summary.final_sideslip = sideslip.back();
  summary.final_speed_error = speed.back() - target.speed;
  summary.final_sideslip_error = sideslip.back() - target.sideslip;
  return summary;
}

ComparisonReport compare_runs(const SimTrace &a, const SimTrace &b, const SettlingTarget &target)
{
  if (a.dt != b.dt || a.duration != b.duration) {
    throw MismatchedConfig("compare_runs: traces differ in dt or duration");
  }
  ComparisonReport report{summarize(a, target), summarize(b, target), std::nullopt};
  if (report.a.settled() && report.b.settled()) {
    if (report.b.settling_time > 0.0) {
      report.ratio = report.a.settling_time / report.b.settling_time;
    } else if (report.a.settling_time == 0.0) {
      report.ratio = 1.0;
    }
  }
  return report;
}

}  // namespace rangeesc::sim
