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

#include "rangeesc/plant.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "rangeesc/error.hpp"

namespace rangeesc::plant
{

namespace
{

constexpr int kNewtonMaxIterations = 50;
constexpr int kBisectionMaxIterations = 2000;
constexpr double kResidualTolerance = 1e-10;  // relative to nu_h^2, accepted
constexpr double kResidualTarget = 1e-13;     // relative to nu_h^2, aimed for

// Signed form of the implicit relation. Positive above the root.
double implicit_gap(double nu, double nu_h, double nu_inf, double alpha)
{
  const double axial = nu_inf * std::sin(alpha) + nu;
  const double tangential = nu_inf * std::cos(alpha);
  return nu * std::hypot(tangential, axial) - nu_h * nu_h;
}

double implicit_gap_derivative(double nu, double nu_inf, double alpha)
{
  const double axial = nu_inf * std::sin(alpha) + nu;
  const double tangential = nu_inf * std::cos(alpha);
  const double flow = std::hypot(tangential, axial);
  if (flow == 0.0) {
    return 0.0;
  }
  return flow + nu * axial / flow;
}

void require(bool ok, const char *field, const char *rule)
{
  if (!ok) {
    throw InvalidInput(std::string("vehicle.") + field + " " + rule);
  }
}

}  // namespace

void VehicleParams::validate() const
{
  require(std::isfinite(mass) && mass > 0.0, "mass", "must be > 0");
  require(std::isfinite(rotor_radius) && rotor_radius > 0.0, "rotor_radius", "must be > 0");
  require(std::isfinite(air_density) && air_density > 0.0, "air_density", "must be > 0");
  require(std::isfinite(gravity) && gravity > 0.0, "gravity", "must be > 0");
  require(eta > 0.0 && eta <= 1.0, "eta", "must lie in (0, 1]");
  require(std::isfinite(kappa) && kappa >= 1.0, "kappa", "must be >= 1");
  require(std::isfinite(mu1_long) && mu1_long >= 0.0, "mu1_long", "must be >= 0");
  require(std::isfinite(mu1_lat) && mu1_lat >= 0.0, "mu1_lat", "must be >= 0");
  require(std::isfinite(mu2_long) && mu2_long >= 0.0, "mu2_long", "must be >= 0");
  require(std::isfinite(mu2_lat) && mu2_lat >= 0.0, "mu2_lat", "must be >= 0");
  require(mu2_long + mu2_lat > 0.0, "mu2_long", "plus mu2_lat must be > 0");
}

DragCoefficients drag_coefficients(const VehicleParams &params, double sideslip)
{
  const double c = std::cos(sideslip);
  const double s = std::sin(sideslip);
  const double c2 = c * c;
  const double s2 = s * s;
  return {params.mu1_long * c2 + params.mu1_lat * s2, params.mu2_long * c2 + params.mu2_lat * s2};
}

double drag_magnitude(double mu1, double mu2, double speed)
{
  return mu1 * speed + mu2 * speed * speed;
}

double hover_induced_velocity(const VehicleParams &params)
{
  const double disk = 8.0 * params.air_density * std::numbers::pi * params.rotor_radius *
                      params.rotor_radius;
  return std::sqrt(params.weight() / disk);
}

double induced_velocity_residual(double nu, double nu_h, double nu_inf, double alpha)
{
  return std::abs(implicit_gap(nu, nu_h, nu_inf, alpha));
}

double induced_velocity(double nu_h, double nu_inf, double alpha)
{
  if (!(nu_h > 0.0) || !std::isfinite(nu_h) || !(nu_inf >= 0.0) || !std::isfinite(nu_inf) ||
      !std::isfinite(alpha)) {
    throw NonConvergence("induced_velocity: invalid input");
  }
  const double tolerance = kResidualTolerance * nu_h * nu_h;
  const double target = kResidualTarget * nu_h * nu_h;

  double nu = nu_h;
  double best = nu;
  double best_gap = std::numeric_limits<double>::infinity();
  for (int i = 0; i < kNewtonMaxIterations; ++i) {
    const double gap = implicit_gap(nu, nu_h, nu_inf, alpha);
    if (std::abs(gap) < target) {
      return nu;
    }
    if (std::abs(gap) < best_gap) {
      best = nu;
      best_gap = std::abs(gap);
    }
    const double slope = implicit_gap_derivative(nu, nu_inf, alpha);
    if (!(slope != 0.0) || !std::isfinite(slope)) {
      break;
    }
    nu -= gap / slope;
    if (!(nu > 0.0) || !std::isfinite(nu)) {
      break;
    }
  }

  if (best_gap < tolerance) {
    return best;
  }

  // Bisection. The gap is negative near zero and grows without bound, so
  // widen the bracket until it straddles a sign change.
  double lo = 1e-6 * nu_h;
  double hi = nu_h;
  while (implicit_gap(lo, nu_h, nu_inf, alpha) > 0.0 && lo > 1e-300) {
    lo *= 1e-3;
  }
  while (implicit_gap(hi, nu_h, nu_inf, alpha) < 0.0 && std::isfinite(hi)) {
    hi *= 2.0;
  }
  if (!std::isfinite(hi)) {
    throw NonConvergence("induced_velocity: failed to bracket root");
  }
  for (int i = 0; i < kBisectionMaxIterations; ++i) {
    const double mid = 0.5 * (lo + hi);
    const double gap = implicit_gap(mid, nu_h, nu_inf, alpha);
    if (std::abs(gap) < target) {
      return mid;
    }
    if (mid == lo || mid == hi) {
      // Out of representable midpoints; accept if within tolerance.
      if (std::abs(gap) < tolerance) {
        return mid;
      }
      break;
    }
    (gap < 0.0 ? lo : hi) = mid;
  }
  throw NonConvergence("induced_velocity: Newton and bisection both failed");
}

double induced_power(double kappa, double nu, double nu_inf, double alpha, double thrust_total)
{
  return kappa * (nu + nu_inf * std::sin(alpha)) * thrust_total;
}

double total_power(const VehicleParams &params, double induced_power)
{
  return induced_power / params.eta;
}

TrimState trim(const VehicleParams &params, const FlightCondition &condition)
{
  TrimState state;
  const auto [mu1, mu2] = drag_coefficients(params, condition.sideslip);
  const double weight = params.weight();
  state.drag = drag_magnitude(mu1, mu2, condition.speed);
  state.thrust_total = std::hypot(weight, state.drag);
  state.tilt = std::atan(state.drag / weight);
  // Tilting into the wind drives free stream through the disk along the
  // induced flow, so the inflow angle equals the tilt.
  state.angle_of_attack = state.tilt;
  state.hover_induced_velocity = hover_induced_velocity(params);
  state.induced_velocity =
    induced_velocity(state.hover_induced_velocity, condition.speed, state.angle_of_attack);
  state.induced_power = induced_power(params.kappa, state.induced_velocity, condition.speed,
                                      state.angle_of_attack, state.thrust_total);
  state.total_power = total_power(params, state.induced_power);
  return state;
}

double evaluate_cost(const VehicleParams &params, const FlightCondition &condition)
{
  if (!(condition.speed > 0.0)) {
    throw InvalidSpeed("evaluate_cost: speed must be > 0, got " + std::to_string(condition.speed));
  }
  return trim(params, condition).total_power / condition.speed;
}

double flight_range(double speed, double power, double delta_energy)
{
  if (!(power > 0.0)) {
    throw InvalidInput("flight_range: power must be > 0");
  }
  if (!(speed > 0.0)) {
    throw InvalidInput("flight_range: speed must be > 0");
  }
  if (!(delta_energy >= 0.0)) {
    throw InvalidInput("flight_range: delta_energy must be >= 0");
  }
  return speed * delta_energy / power;
}

}  // namespace rangeesc::plant
