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

#include "rangeesc/commands.hpp"

#include <cstdio>
#include <fstream>
#include <future>
#include <numbers>
#include <ostream>

#include "rangeesc/error.hpp"

namespace rangeesc::cli
{

namespace fs = std::filesystem;

namespace
{

constexpr double kRadToDeg = 180.0 / std::numbers::pi;

void ensure_directory(const fs::path &dir)
{
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) {
    throw IoError("cannot create output directory " + dir.string() + ": " + ec.message());
  }
}

template <typename Writer>
void write_file(const fs::path &path, Writer &&writer)
{
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    throw IoError("cannot open " + path.string() + " for writing");
  }
  writer(out);
  out.flush();
  if (!out) {
    throw IoError("write failed for " + path.string());
  }
}

std::string settle_text(double t)
{
  if (t == sim::kDidNotSettle) {
    return "did not settle";
  }
  return format_value(t) + " s";
}

void describe_optimum(std::ostream &out, const oracle::OracleResult &optimum)
{
  out << "oracle optimum: speed " << format_value(optimum.optimal_speed) << " m/s, sideslip "
      << format_value(optimum.optimal_sideslip * kRadToDeg) << " deg, cost "
      << format_value(optimum.optimal_cost) << " W s/m"
      << (optimum.interior ? "" : " (on domain edge)") << "\n";
}

void describe_run(std::ostream &out, const char *label, const sim::RunSummary &run)
{
  out << label << " settling time: " << settle_text(run.settling_time) << "\n";
  out << label << " final period-averaged cost: " << format_value(run.final_cost) << " W s/m\n";
  out << label << " final speed error: " << format_value(run.final_speed_error) << " m/s\n";
  out << label << " final sideslip error: " << format_value(run.final_sideslip_error * kRadToDeg)
      << " deg\n";
}

}  // namespace

std::string format_value(double value)
{
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.9g", value);
  return buf;
}

void write_trace_csv(std::ostream &out, const sim::SimTrace &trace, std::size_t decimation)
{
  if (decimation == 0) {
    throw InvalidInput("trace decimation must be >= 1");
  }
  for (std::size_t c = 0; c < kTraceColumns.size(); ++c) {
    out << (c ? "," : "") << kTraceColumns[c];
  }
  out << "\n";
  for (std::size_t k = 0; k < trace.records.size(); k += decimation) {
    const auto &r = trace.records[k];
    const double row[] = {r.t,
                          r.speed_ref,
                          r.sideslip_ref * kRadToDeg,
                          r.speed_actual,
                          r.sideslip_actual * kRadToDeg,
                          r.power_measured,
                          r.cost_measured,
                          r.q_lp_v,
                          r.q_lp_s,
                          r.g_v,
                          r.g_s};
    for (std::size_t c = 0; c < std::size(row); ++c) {
      out << (c ? "," : "") << format_value(row[c]);
    }
    out << "\n";
  }
}

void write_surface_csv(std::ostream &out, const std::vector<oracle::SurfaceRow> &rows)
{
  out << "speed,sideslip,cost\n";
  for (const auto &row : rows) {
    out << format_value(row.speed) << "," << format_value(row.sideslip * kRadToDeg) << ","
        << format_value(row.cost) << "\n";
  }
}

oracle::OracleResult compute_oracle(const config::ExperimentConfig &config)
{
  const auto coarse = oracle::grid_search(config.vehicle, config::grid_spec(config));
  return oracle::refine(config.vehicle, coarse, config.domain.refine_levels);
}

sim::SettlingTarget settling_target(const config::ExperimentConfig &config,
                                    const oracle::OracleResult &optimum)
{
  return {optimum.optimal_speed, optimum.optimal_sideslip, config.speed_channel.a,
          config.sideslip_channel.a * std::numbers::pi / 180.0};
}

SimulateOutcome cmd_simulate(const config::ExperimentConfig &config, config::Mode mode,
                             const fs::path &out_dir)
{
  config::validate(config);
  SimulateOutcome outcome;
  outcome.optimum = compute_oracle(config);
  const auto trace = sim::run_simulation(config::sim_config(config, mode));
  outcome.summary = sim::summarize(trace, settling_target(config, outcome.optimum));

  ensure_directory(out_dir);
  const std::string tag = config::to_string(mode);
  outcome.trace_path = out_dir / ("trace_" + tag + ".csv");
  outcome.summary_path = out_dir / ("summary_" + tag + ".txt");
  write_file(outcome.trace_path,
             [&](std::ostream &out) { write_trace_csv(out, trace, config.output.decimation); });
  write_file(outcome.summary_path, [&](std::ostream &out) {
    out << "mode: " << tag << "\n";
    out << "seed: " << config.sim.seed << "\n";
    out << "records: " << trace.records.size() << "\n";
    describe_optimum(out, outcome.optimum);
    describe_run(out, tag.c_str(), outcome.summary);
  });
  return outcome;
}

CompareOutcome cmd_compare(const config::ExperimentConfig &config, const fs::path &out_dir)
{
  config::validate(config);
  CompareOutcome outcome;
  outcome.optimum = compute_oracle(config);
  const auto target = settling_target(config, outcome.optimum);

  // Independent runs with no shared state.
  auto adaptive = std::async(std::launch::async, [&] {
    return sim::run_simulation(config::sim_config(config, config::Mode::Adaptive));
  });
  const auto standard = sim::run_simulation(config::sim_config(config, config::Mode::Standard));
  const auto adaptive_trace = adaptive.get();

  outcome.report = sim::compare_runs(adaptive_trace, standard, target);

  ensure_directory(out_dir);
  outcome.adaptive_trace_path = out_dir / "trace_adaptive.csv";
  outcome.standard_trace_path = out_dir / "trace_standard.csv";
  outcome.report_path = out_dir / "comparison.txt";
  write_file(outcome.adaptive_trace_path, [&](std::ostream &out) {
    write_trace_csv(out, adaptive_trace, config.output.decimation);
  });
  write_file(outcome.standard_trace_path, [&](std::ostream &out) {
    write_trace_csv(out, standard, config.output.decimation);
  });
  write_file(outcome.report_path, [&](std::ostream &out) {
    out << "seed: " << config.sim.seed << "\n";
    describe_optimum(out, outcome.optimum);
    describe_run(out, "adaptive", outcome.report.a);
    describe_run(out, "standard", outcome.report.b);
    if (outcome.report.ratio) {
      out << "settling ratio (adaptive / standard): " << format_value(*outcome.report.ratio)
          << "\n";
    } else {
      out << "settling ratio (adaptive / standard): n/a, a run did not settle\n";
    }
  });
  return outcome;
}

OracleOutcome cmd_oracle(const config::ExperimentConfig &config, const fs::path &out_dir)
{
  config::validate(config);
  OracleOutcome outcome;
  outcome.coarse = oracle::grid_search(config.vehicle, config::grid_spec(config));
  outcome.refined = oracle::refine(config.vehicle, outcome.coarse, config.domain.refine_levels);

  ensure_directory(out_dir);
  outcome.surface_path = out_dir / "surface.csv";
  outcome.optimum_path = out_dir / "optimum.txt";
  write_file(outcome.surface_path, [&](std::ostream &out) {
    write_surface_csv(out, oracle::export_surface(outcome.coarse));
  });
  write_file(outcome.optimum_path, [&](std::ostream &out) {
    const auto &r = outcome.refined;
    out << "speed=" << format_value(r.optimal_speed)
        << " sideslip_deg=" << format_value(r.optimal_sideslip * kRadToDeg)
        << " cost=" << format_value(r.optimal_cost) << " interior=" << (r.interior ? 1 : 0)
        << "\n";
  });
  return outcome;
}

}  // namespace rangeesc::cli
