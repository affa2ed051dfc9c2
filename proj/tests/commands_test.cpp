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

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "rangeesc/commands.hpp"
#include "rangeesc/error.hpp"

namespace
{

namespace fs = std::filesystem;
using namespace rangeesc;

std::string slurp(const fs::path &path)
{
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<std::string> split(const std::string &line)
{
  std::vector<std::string> out;
  std::stringstream ss(line);
  std::string cell;
  while (std::getline(ss, cell, ',')) out.push_back(cell);
  return out;
}

std::vector<std::string> lines(const std::string &text)
{
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string line;
  while (std::getline(ss, line)) out.push_back(line);
  return out;
}

fs::path scratch(const std::string &name)
{
  const auto dir = fs::temp_directory_path() / ("rangeesc_commands_test_" + name);
  fs::remove_all(dir);
  return dir;
}

config::ExperimentConfig short_config()
{
  auto c = config::default_config();
  c.sim.duration = 130.0;
  return c;
}

TEST(TraceCsv, HeaderAndRows)
{
  const auto dir = scratch("header");
  const auto out = cli::cmd_simulate(short_config(), config::Mode::Standard, dir);
  const auto rows = lines(slurp(out.trace_path));
  ASSERT_EQ(rows.size(), 13001u);
  EXPECT_EQ(rows[0],
            "t,speed_ref,sideslip_ref,speed_actual,sideslip_actual,power_measured,cost_measured,"
            "q_lp_v,q_lp_s,g_v,g_s");
  const auto first = split(rows[1]);
  ASSERT_EQ(first.size(), cli::kTraceColumns.size());
  EXPECT_EQ(std::stod(first[0]), 0.0);
  // Angles are written in degrees.
  EXPECT_NEAR(std::stod(first[2]), 50.0, 1e-6);
  EXPECT_NEAR(std::stod(split(rows.back())[0]), 129.99, 1e-9);
  EXPECT_TRUE(fs::exists(out.summary_path));
}

TEST(TraceCsv, DecimationKeepsEveryNthRow)
{
  auto c = short_config();
  c.output.decimation = 10;
  const auto out = cli::cmd_simulate(c, config::Mode::Adaptive, scratch("decimate"));
  const auto rows = lines(slurp(out.trace_path));
  ASSERT_EQ(rows.size(), 1301u);
  EXPECT_NEAR(std::stod(split(rows[2])[0]), 0.1, 1e-12);
}

TEST(TraceCsv, SameSeedIsByteIdentical)
{
  const auto c = short_config();
  const auto a = cli::cmd_simulate(c, config::Mode::Adaptive, scratch("bytes_a"));
  const auto b = cli::cmd_simulate(c, config::Mode::Adaptive, scratch("bytes_b"));
  EXPECT_EQ(slurp(a.trace_path), slurp(b.trace_path));
  auto other = c;
  other.sim.seed = 99;
  const auto d = cli::cmd_simulate(other, config::Mode::Adaptive, scratch("bytes_d"));
  EXPECT_NE(slurp(a.trace_path), slurp(d.trace_path));
}

TEST(TraceCsv, RejectsZeroDecimation)
{
  std::ostringstream out;
  EXPECT_THROW(cli::write_trace_csv(out, {}, 0), InvalidInput);
}

TEST(FormatValue, RoundTripsToNinePlaces)
{
  EXPECT_EQ(cli::format_value(0.0), "0");
  EXPECT_EQ(cli::format_value(1.5), "1.5");
  EXPECT_EQ(cli::format_value(36.53640123456), "36.5364012");
}

TEST(Oracle, WritesSurfaceAndOptimum)
{
  auto c = config::default_config();
  c.domain.speed_steps = 40;
  c.domain.sideslip_steps = 37;
  const auto out = cli::cmd_oracle(c, scratch("oracle"));
  const auto rows = lines(slurp(out.surface_path));
  ASSERT_EQ(rows.size(), 40u * 37u + 1u);
  EXPECT_EQ(rows[0], "speed,sideslip,cost");
  const auto optimum = slurp(out.optimum_path);
  EXPECT_EQ(optimum.rfind("speed=", 0), 0u);
  EXPECT_NE(optimum.find("interior=1"), std::string::npos);
  EXPECT_LE(out.refined.optimal_cost, out.coarse.optimal_cost);
}

TEST(Oracle, SymmetricDragSurfaceIsFlatInSideslip)
{
  auto c = config::default_config();
  c.vehicle.mu1_lat = c.vehicle.mu1_long;
  c.vehicle.mu2_lat = c.vehicle.mu2_long;
  c.domain.speed_steps = 20;
  c.domain.sideslip_steps = 19;
  const auto out = cli::cmd_oracle(c, scratch("symmetric"));
  const auto &s = out.coarse.surface;
  for (std::size_t j = 0; j < s.sideslips.size(); ++j) {
    for (std::size_t i = 0; i < s.speeds.size(); ++i) {
      ASSERT_NEAR(s.at(j, i), s.at(0, i), 1e-12 * s.at(0, i));
    }
  }
  EXPECT_FALSE(out.refined.interior);
}

TEST(Compare, WritesBothTracesAndReport)
{
  const auto out = cli::cmd_compare(config::default_config(), scratch("compare"));
  EXPECT_TRUE(fs::exists(out.adaptive_trace_path));
  EXPECT_TRUE(fs::exists(out.standard_trace_path));
  const auto report = slurp(out.report_path);
  EXPECT_NE(report.find("adaptive settling time"), std::string::npos);
  EXPECT_NE(report.find("settling ratio"), std::string::npos);
  ASSERT_TRUE(out.report.ratio.has_value());
  EXPECT_LT(*out.report.ratio, 1.0);
}

TEST(Commands, InvalidConfigIsRejectedBeforeWriting)
{
  auto c = config::default_config();
  c.sideslip_channel.omega = c.speed_channel.omega;
  const auto dir = scratch("invalid");
  EXPECT_THROW((void)cli::cmd_simulate(c, config::Mode::Adaptive, dir), ValidationError);
  EXPECT_FALSE(fs::exists(dir));
}

}  // namespace
