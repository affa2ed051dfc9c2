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

#ifndef RANGEESC_PLANT_HPP_
#define RANGEESC_PLANT_HPP_

namespace rangeesc::plant
{

/**
 * Physical constants of the simulated quadcopter.
 *
 * Mass and rotor radius describe a 660 g airframe with 203 mm propellers.
 * The remaining values are plausible stand-ins, not measured data: the drag
 * is that of a bulky payload carried broadside, large enough to put the
 * best-range speed near 2 m/s with the lowest drag at 90 deg sideslip.
 * Drag coefficients are given along the body forward (long) and lateral (lat)
 * axes and blended by sideslip, see drag_coefficients().
 */
struct VehicleParams
{
  double mass{0.66};           // kg
  double rotor_radius{0.1015}; // m
  double air_density{1.225};   // kg/m^3
  double gravity{9.81};        // m/s^2
  double eta{0.6};             // motor/propeller efficiency, (0, 1]
  double kappa{1.15};          // induced-power correction, >= 1
  double mu1_long{1.15};       // N s/m
  double mu1_lat{0.30};
  double mu2_long{1.4};        // N s^2/m^2
  double mu2_lat{0.9};

  [[nodiscard]] double weight() const noexcept { return mass * gravity; }

  /// Throws InvalidInput naming the first violated field.
  void validate() const;

  bool operator==(const VehicleParams &) const = default;
};

/// Horizontal airspeed (m/s) and sideslip (rad).
struct FlightCondition
{
  double speed{0.0};
  double sideslip{0.0};
};

struct TrimState
{
  double drag{0.0};                   // N
  double thrust_total{0.0};           // N
  double tilt{0.0};                   // rad, rotor plane from horizontal
  double angle_of_attack{0.0};        // rad, rotor disk inflow angle
  double induced_velocity{0.0};       // m/s
  double hover_induced_velocity{0.0}; // m/s
  double induced_power{0.0};          // W
  double total_power{0.0};            // W
};

struct DragCoefficients
{
  double mu1{0.0};
  double mu2{0.0};
};

/// Elliptical blend mu(beta) = mu_long cos^2(beta) + mu_lat sin^2(beta).
[[nodiscard]] DragCoefficients drag_coefficients(const VehicleParams &params, double sideslip);

/// mu1 v + mu2 v^2.
[[nodiscard]] double drag_magnitude(double mu1, double mu2, double speed);

/// sqrt(m g / (8 rho pi r^2)).
[[nodiscard]] double hover_induced_velocity(const VehicleParams &params);

/**
 * Solves nu * sqrt((v cos a)^2 + (v sin a + nu)^2) = nu_h^2 for nu > 0.
 *
 * Newton-Raphson from nu_h, falling back to bracketed bisection when an
 * iterate leaves (0, inf) or 50 iterations pass without meeting the
 * residual tolerance 1e-10 nu_h^2. Throws NonConvergence if both fail.
 */
[[nodiscard]] double induced_velocity(double nu_h, double nu_inf, double alpha);

/// Absolute residual of the implicit induced-velocity relation.
[[nodiscard]] double induced_velocity_residual(double nu, double nu_h, double nu_inf, double alpha);

/// kappa (nu + nu_inf sin alpha) T.
[[nodiscard]] double induced_power(double kappa, double nu, double nu_inf, double alpha,
                                   double thrust_total);

/// induced_power / eta.
[[nodiscard]] double total_power(const VehicleParams &params, double induced_power);

/// Quasi-static level-flight force balance and power at the given condition.
[[nodiscard]] TrimState trim(const VehicleParams &params, const FlightCondition &condition);

/// P / v. Throws InvalidSpeed for speed <= 0.
[[nodiscard]] double evaluate_cost(const VehicleParams &params, const FlightCondition &condition);

/// speed * delta_energy / power. Throws InvalidInput on nonpositive power or speed.
[[nodiscard]] double flight_range(double speed, double power, double delta_energy);

}  // namespace rangeesc::plant

#endif  // RANGEESC_PLANT_HPP_
