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

#include "rangeesc/config.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <initializer_list>
#include <numbers>
#include <sstream>
#include <string_view>

#include "json.hpp"
#include "rangeesc/error.hpp"

namespace rangeesc::config
{

using nlohmann::json;

namespace
{

constexpr double kDegToRad = std::numbers::pi / 180.0;

std::string join(const std::string &path, std::string_view key)
{
  return path.empty() ? std::string(key) : path + "." + std::string(key);
}

// Read-side view of one JSON object with its dotted key path.
class Section
{
public:
  Section(const json &node, std::string path, std::initializer_list<std::string_view> allowed)
    : node_{node}, path_{std::move(path)}
  {
    if (!node_.is_object()) {
      throw ValidationError(path_.empty() ? "<root>" : path_, "expected an object");
    }
    for (const auto &item : node_.items()) {
      if (std::find(allowed.begin(), allowed.end(), item.key()) == allowed.end()) {
        throw ValidationError(join(path_, item.key()), "unknown key");
      }
    }
  }

  [[nodiscard]] bool has(std::string_view key) const { return node_.contains(key); }

  [[nodiscard]] Section child(std::string_view key,
                              std::initializer_list<std::string_view> allowed) const
  {
    return Section(node_.at(key), join(path_, key), allowed);
  }

  void number(std::string_view key, double &out) const
  {
    if (!has(key)) {
      return;
    }
    const auto &v = node_.at(key);
    if (!v.is_number()) {
      throw ValidationError(join(path_, key), "expected a number");
    }
    out = v.get<double>();
  }

  template <typename Unsigned>
  void count(std::string_view key, Unsigned &out) const
  {
    if (!has(key)) {
      return;
    }
    const auto &v = node_.at(key);
    if (!v.is_number_unsigned()) {
      throw ValidationError(join(path_, key), "expected a non-negative integer");
    }
    out = v.get<Unsigned>();
  }

  void text(std::string_view key, std::string &out) const
  {
    if (!has(key)) {
      return;
    }
    const auto &v = node_.at(key);
    if (!v.is_string()) {
      throw ValidationError(join(path_, key), "expected a string");
    }
    out = v.get<std::string>();
  }

  void pair(std::string_view key, std::array<double, 2> &out) const
  {
    if (!has(key)) {
      return;
    }
    const auto &v = node_.at(key);
    if (!v.is_array() || v.size() != 2 || !v[0].is_number() || !v[1].is_number()) {
      throw ValidationError(join(path_, key), "expected [min, max]");
    }
    out = {v[0].get<double>(), v[1].get<double>()};
  }

  [[nodiscard]] const std::string &path() const noexcept { return path_; }

private:
  const json &node_;
  std::string path_;
};

void read_channel(const Section &esc, std::string_view key, ChannelSection &channel)
{
  if (!esc.has(key)) {
    return;
  }
  const Section s =
    esc.child(key, {"a", "omega", "hp_cutoff", "lp_cutoff", "k", "r0", "bounds"});
  s.number("a", channel.a);
  s.number("omega", channel.omega);
  s.number("hp_cutoff", channel.hp_cutoff);
  s.number("lp_cutoff", channel.lp_cutoff);
  s.number("r0", channel.r0);
  s.pair("bounds", channel.bounds);
  if (s.has("k")) {
    const Section k = s.child("k", {"adaptive", "standard"});
    k.number("adaptive", channel.k_adaptive);
    k.number("standard", channel.k_standard);
  }
}

void check(bool ok, const std::string &key_path, const std::string &what)
{
  if (!ok) {
    throw ValidationError(key_path, what);
  }
}

bool finite_positive(double x)
{
  return std::isfinite(x) && x > 0.0;
}

void validate_channel(const ChannelSection &c, const std::string &path)
{
  check(finite_positive(c.a), path + ".a", "must be > 0");
  check(finite_positive(c.omega), path + ".omega", "must be > 0");
  check(finite_positive(c.hp_cutoff), path + ".hp_cutoff", "must be > 0");
  check(finite_positive(c.lp_cutoff), path + ".lp_cutoff", "must be > 0");
  check(finite_positive(c.k_adaptive), path + ".k.adaptive", "must be > 0");
  check(finite_positive(c.k_standard), path + ".k.standard", "must be > 0");
  check(std::isfinite(c.bounds[0]) && std::isfinite(c.bounds[1]) && c.bounds[0] < c.bounds[1],
        path + ".bounds", "must satisfy min < max");
  check(c.r0 >= c.bounds[0] && c.r0 <= c.bounds[1], path + ".r0", "must lie within bounds");
}

json channel_json(const ChannelSection &c)
{
  return json{{"a", c.a},
              {"omega", c.omega},
              {"hp_cutoff", c.hp_cutoff},
              {"lp_cutoff", c.lp_cutoff},
              {"k", {{"adaptive", c.k_adaptive}, {"standard", c.k_standard}}},
              {"r0", c.r0},
              {"bounds", {c.bounds[0], c.bounds[1]}}};
}

}  // namespace

const char *to_string(Mode mode) noexcept
{
  return mode == Mode::Adaptive ? "adaptive" : "standard";
}

Mode parse_mode(const std::string &text, const std::string &key_path)
{
  if (text == "adaptive") {
    return Mode::Adaptive;
  }
  if (text == "standard") {
    return Mode::Standard;
  }
  throw ValidationError(key_path, "expected \"adaptive\" or \"standard\", got \"" + text + "\"");
}

ExperimentConfig default_config()
{
  return ExperimentConfig{};
}

ExperimentConfig parse_config(const std::string &text)
{
  json root;
  try {
    root = json::parse(text, nullptr, true, /*ignore_comments=*/true);
  } catch (const json::parse_error &e) {
    throw ParseError(e.what());
  }

  ExperimentConfig cfg = default_config();
  const Section top(root, "", {"vehicle", "domain", "esc", "sim", "output"});

  if (top.has("vehicle")) {
    const Section s = top.child("vehicle", {"mass", "rotor_radius", "air_density", "gravity",
                                            "eta", "kappa", "mu1_long", "mu1_lat", "mu2_long",
                                            "mu2_lat"});
    auto &v = cfg.vehicle;
    s.number("mass", v.mass);
    s.number("rotor_radius", v.rotor_radius);
    s.number("air_density", v.air_density);
    s.number("gravity", v.gravity);
    s.number("eta", v.eta);
    s.number("kappa", v.kappa);
    s.number("mu1_long", v.mu1_long);
    s.number("mu1_lat", v.mu1_lat);
    s.number("mu2_long", v.mu2_long);
    s.number("mu2_lat", v.mu2_lat);
  }

  if (top.has("domain")) {
    const Section s = top.child("domain", {"speed_min", "speed_max", "sideslip_min_deg",
                                           "sideslip_max_deg", "speed_steps", "sideslip_steps",
                                           "refine_levels"});
    auto &d = cfg.domain;
    s.number("speed_min", d.speed_min);
    s.number("speed_max", d.speed_max);
    s.number("sideslip_min_deg", d.sideslip_min_deg);
    s.number("sideslip_max_deg", d.sideslip_max_deg);
    s.count("speed_steps", d.speed_steps);
    s.count("sideslip_steps", d.sideslip_steps);
    s.count("refine_levels", d.refine_levels);
  }

  if (top.has("esc")) {
    const Section s =
      top.child("esc", {"mode", "speed_channel", "sideslip_channel", "adapter"});
    if (s.has("mode")) {
      std::string mode;
      s.text("mode", mode);
      cfg.mode = parse_mode(mode, "esc.mode");
    }
    read_channel(s, "speed_channel", cfg.speed_channel);
    read_channel(s, "sideslip_channel", cfg.sideslip_channel);
    if (s.has("adapter")) {
      const Section a = s.child("adapter", {"beta1", "beta2", "epsilon", "threshold"});
      a.number("beta1", cfg.adapter.beta1);
      a.number("beta2", cfg.adapter.beta2);
      a.number("epsilon", cfg.adapter.epsilon);
      a.number("threshold", cfg.adapter.threshold);
    }
  }

  if (top.has("sim")) {
    const Section s =
      top.child("sim", {"dt", "duration", "seed", "power_noise_std", "tracking_tau"});
    s.number("dt", cfg.sim.dt);
    s.number("duration", cfg.sim.duration);
    s.count("seed", cfg.sim.seed);
    s.number("power_noise_std", cfg.sim.power_noise_std);
    s.number("tracking_tau", cfg.sim.tracking_tau);
  }

  if (top.has("output")) {
    const Section s = top.child("output", {"directory", "decimation"});
    s.text("directory", cfg.output.directory);
    s.count("decimation", cfg.output.decimation);
  }

  validate(cfg);
  return cfg;
}

ExperimentConfig load_config(const std::filesystem::path &path)
{
  std::ifstream in(path);
  if (!in) {
    throw IoError("cannot read config file " + path.string());
  }
  std::ostringstream text;
  text << in.rdbuf();
  return parse_config(text.str());
}

void validate(const ExperimentConfig &cfg)
{
  const auto &v = cfg.vehicle;
  check(finite_positive(v.mass), "vehicle.mass", "must be > 0");
  check(finite_positive(v.rotor_radius), "vehicle.rotor_radius", "must be > 0");
  check(finite_positive(v.air_density), "vehicle.air_density", "must be > 0");
  check(finite_positive(v.gravity), "vehicle.gravity", "must be > 0");
  check(v.eta > 0.0 && v.eta <= 1.0, "vehicle.eta", "must lie in (0, 1]");
  check(std::isfinite(v.kappa) && v.kappa >= 1.0, "vehicle.kappa", "must be >= 1");
  check(std::isfinite(v.mu1_long) && v.mu1_long >= 0.0, "vehicle.mu1_long", "must be >= 0");
  check(std::isfinite(v.mu1_lat) && v.mu1_lat >= 0.0, "vehicle.mu1_lat", "must be >= 0");
  check(std::isfinite(v.mu2_long) && v.mu2_long >= 0.0, "vehicle.mu2_long", "must be >= 0");
  check(std::isfinite(v.mu2_lat) && v.mu2_lat >= 0.0, "vehicle.mu2_lat", "must be >= 0");
  check(v.mu2_long + v.mu2_lat > 0.0, "vehicle.mu2_long",
        "mu2_long + mu2_lat must be > 0 (quadratic drag required)");

  const auto &d = cfg.domain;
  check(finite_positive(d.speed_min), "domain.speed_min", "must be > 0");
  check(std::isfinite(d.speed_max) && d.speed_max > d.speed_min, "domain.speed_max",
        "must exceed speed_min");
  check(std::isfinite(d.sideslip_min_deg), "domain.sideslip_min_deg", "must be finite");
  check(std::isfinite(d.sideslip_max_deg) && d.sideslip_max_deg > d.sideslip_min_deg,
        "domain.sideslip_max_deg", "must exceed sideslip_min_deg");
  check(d.speed_steps >= 16, "domain.speed_steps", "must be >= 16");
  check(d.sideslip_steps >= 16, "domain.sideslip_steps", "must be >= 16");

  validate_channel(cfg.speed_channel, "esc.speed_channel");
  validate_channel(cfg.sideslip_channel, "esc.sideslip_channel");
  const double wv = cfg.speed_channel.omega;
  const double ws = cfg.sideslip_channel.omega;
  check(std::abs(wv - ws) > 0.01 * std::max(wv, ws), "esc.sideslip_channel.omega",
        "speed and sideslip dither need distinct frequencies (more than 1% apart)");
  check(cfg.speed_channel.bounds[0] > cfg.speed_channel.a, "esc.speed_channel.bounds",
        "lower bound must exceed the dither amplitude so the speed reference stays > 0");

  const auto &a = cfg.adapter;
  check(a.beta1 >= 0.0 && a.beta1 < 1.0, "esc.adapter.beta1", "must lie in [0, 1)");
  check(a.beta2 >= 0.0 && a.beta2 < 1.0, "esc.adapter.beta2", "must lie in [0, 1)");
  check(finite_positive(a.epsilon), "esc.adapter.epsilon", "must be > 0");
  check(finite_positive(a.threshold), "esc.adapter.threshold", "must be > 0");

  const auto &s = cfg.sim;
  check(finite_positive(s.dt), "sim.dt", "must be > 0");
  const double longest_period = 2.0 * std::numbers::pi / std::min(wv, ws);
  check(std::isfinite(s.duration) && s.duration >= 10.0 * longest_period, "sim.duration",
        "must cover at least 10 periods of the slowest dither");
  check(std::isfinite(s.power_noise_std) && s.power_noise_std >= 0.0, "sim.power_noise_std",
        "must be >= 0");
  check(std::isfinite(s.tracking_tau) && s.tracking_tau >= 0.0, "sim.tracking_tau",
        "must be >= 0");

  check(!cfg.output.directory.empty(), "output.directory", "must not be empty");
  check(cfg.output.decimation >= 1, "output.decimation", "must be >= 1");
}

std::string to_json(const ExperimentConfig &cfg)
{
  const auto &v = cfg.vehicle;
  const auto &d = cfg.domain;
  const auto &a = cfg.adapter;
  json root;
  root["vehicle"] = {{"mass", v.mass},         {"rotor_radius", v.rotor_radius},
                     {"air_density", v.air_density}, {"gravity", v.gravity},
                     {"eta", v.eta},           {"kappa", v.kappa},
                     {"mu1_long", v.mu1_long}, {"mu1_lat", v.mu1_lat},
                     {"mu2_long", v.mu2_long}, {"mu2_lat", v.mu2_lat}};
  root["domain"] = {{"speed_min", d.speed_min},
                    {"speed_max", d.speed_max},
                    {"sideslip_min_deg", d.sideslip_min_deg},
                    {"sideslip_max_deg", d.sideslip_max_deg},
                    {"speed_steps", d.speed_steps},
                    {"sideslip_steps", d.sideslip_steps},
                    {"refine_levels", d.refine_levels}};
  root["esc"] = {{"mode", to_string(cfg.mode)},
                 {"speed_channel", channel_json(cfg.speed_channel)},
                 {"sideslip_channel", channel_json(cfg.sideslip_channel)},
                 {"adapter",
                  {{"beta1", a.beta1},
                   {"beta2", a.beta2},
                   {"epsilon", a.epsilon},
                   {"threshold", a.threshold}}}};
  root["sim"] = {{"dt", cfg.sim.dt},
                 {"duration", cfg.sim.duration},
                 {"seed", cfg.sim.seed},
                 {"power_noise_std", cfg.sim.power_noise_std},
                 {"tracking_tau", cfg.sim.tracking_tau}};
  root["output"] = {{"directory", cfg.output.directory},
                    {"decimation", cfg.output.decimation}};
  return root.dump(2) + "\n";
}

esc::EscChannelConfig speed_channel_config(const ExperimentConfig &cfg, Mode mode)
{
  const auto &c = cfg.speed_channel;
  esc::EscChannelConfig out;
  out.dither_amplitude = c.a;
  out.dither_frequency = c.omega;
  out.hp_cutoff = c.hp_cutoff;
  out.lp_cutoff = c.lp_cutoff;
  out.gain = mode == Mode::Adaptive ? c.k_adaptive : c.k_standard;
  out.initial_setpoint = c.r0;
  out.setpoint_bounds = {c.bounds[0], c.bounds[1]};
  if (mode == Mode::Adaptive) {
    out.adapter = cfg.adapter;
  }
  return out;
}

esc::EscChannelConfig sideslip_channel_config(const ExperimentConfig &cfg, Mode mode)
{
  const auto &c = cfg.sideslip_channel;
  esc::EscChannelConfig out;
  out.dither_amplitude = c.a * kDegToRad;
  out.dither_frequency = c.omega;
  out.hp_cutoff = c.hp_cutoff;
  out.lp_cutoff = c.lp_cutoff;
  out.gain = mode == Mode::Adaptive ? c.k_adaptive : c.k_standard;
  out.initial_setpoint = c.r0 * kDegToRad;
  out.setpoint_bounds = {c.bounds[0] * kDegToRad, c.bounds[1] * kDegToRad};
  if (mode == Mode::Adaptive) {
    out.adapter = cfg.adapter;
  }
  return out;
}

sim::SimConfig sim_config(const ExperimentConfig &cfg, Mode mode)
{
  sim::SimConfig out;
  out.dt = cfg.sim.dt;
  out.duration = cfg.sim.duration;
  out.seed = cfg.sim.seed;
  out.power_noise_std = cfg.sim.power_noise_std;
  out.tracking_time_constant = cfg.sim.tracking_tau;
  out.vehicle = cfg.vehicle;
  out.speed_channel = speed_channel_config(cfg, mode);
  out.sideslip_channel = sideslip_channel_config(cfg, mode);
  return out;
}

oracle::GridSpec grid_spec(const ExperimentConfig &cfg)
{
  const auto &d = cfg.domain;
  return {{d.speed_min, d.speed_max},
          {d.sideslip_min_deg * kDegToRad, d.sideslip_max_deg * kDegToRad},
          d.speed_steps,
          d.sideslip_steps};
}

}  // namespace rangeesc::config
