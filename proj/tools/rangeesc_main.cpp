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

// rangeesc: closed-loop range optimization simulator.
//
//   rangeesc generate-config [--out FILE]
//   rangeesc simulate --config FILE [--mode adaptive|standard] [--out DIR] [--seed N]
//   rangeesc compare  --config FILE [--out DIR] [--seed N]
//   rangeesc oracle   --config FILE [--out DIR]

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "rangeesc/commands.hpp"
#include "rangeesc/config.hpp"
#include "rangeesc/error.hpp"

namespace
{

using namespace rangeesc;

struct Options
{
  std::string config_path;
  std::string out;
  std::string mode;
  std::optional<std::uint64_t> seed;
};

config::ExperimentConfig prepare(const Options &opts)
{
  auto cfg = config::load_config(opts.config_path);
  if (opts.seed) {
    cfg.sim.seed = *opts.seed;
  }
  if (!opts.out.empty()) {
    cfg.output.directory = opts.out;
  }
  return cfg;
}

void print_file(const std::filesystem::path &path)
{
  std::ifstream in(path);
  std::cout << in.rdbuf();
}

}  // namespace

int main(int argc, char **argv)
{
  CLI::App app{"Extremum seeking range optimization simulator"};
  app.require_subcommand(1);

  Options opts;

  auto *generate = app.add_subcommand("generate-config", "Write the default experiment config");
  generate->add_option("--out", opts.out, "Destination file (stdout if omitted)");

  auto *simulate = app.add_subcommand("simulate", "Run one closed-loop simulation");
  simulate->add_option("--config", opts.config_path, "Experiment config (JSON)")->required();
  simulate->add_option("--mode", opts.mode, "adaptive or standard (default: esc.mode)")
    ->check(CLI::IsMember({"adaptive", "standard"}));
  simulate->add_option("--out", opts.out, "Output directory");
  simulate->add_option("--seed", opts.seed, "Noise seed override");

  auto *compare = app.add_subcommand("compare", "Run adaptive and standard side by side");
  compare->add_option("--config", opts.config_path, "Experiment config (JSON)")->required();
  compare->add_option("--out", opts.out, "Output directory");
  compare->add_option("--seed", opts.seed, "Noise seed override");

  auto *oracle_cmd = app.add_subcommand("oracle", "Brute-force the cost surface");
  oracle_cmd->add_option("--config", opts.config_path, "Experiment config (JSON)")->required();
  oracle_cmd->add_option("--out", opts.out, "Output directory");

  CLI11_PARSE(app, argc, argv);

  try {
    if (generate->parsed()) {
      const std::string text = config::to_json(config::default_config());
      if (opts.out.empty()) {
        std::cout << text;
      } else {
        std::ofstream out(opts.out, std::ios::binary | std::ios::trunc);
        out << text;
        if (!out.flush()) {
          throw IoError("cannot write " + opts.out);
        }
      }
      return 0;
    }

    const auto cfg = prepare(opts);
    const std::filesystem::path out_dir = cfg.output.directory;

    if (simulate->parsed()) {
      const auto mode = opts.mode.empty() ? cfg.mode : config::parse_mode(opts.mode, "--mode");
      const auto result = cli::cmd_simulate(cfg, mode, out_dir);
      print_file(result.summary_path);
      std::cout << "trace: " << result.trace_path.string() << "\n";
    } else if (compare->parsed()) {
      const auto result = cli::cmd_compare(cfg, out_dir);
      print_file(result.report_path);
      std::cout << "traces: " << result.adaptive_trace_path.string() << ", "
                << result.standard_trace_path.string() << "\n";
    } else if (oracle_cmd->parsed()) {
      const auto result = cli::cmd_oracle(cfg, out_dir);
      print_file(result.optimum_path);
      std::cout << "surface: " << result.surface_path.string() << "\n";
    }
  } catch (const rangeesc::Error &e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
