/*
 Copyright 2026 The plantrack Authors

 Licensed under the Apache License, Version 2.0 (the "License");
 you may not use this file except in compliance with the License.
 You may obtain a copy of the License at

      https://www.apache.org/licenses/LICENSE-2.0

 Unless required by applicable law or agreed to in writing, software
 distributed under the License is distributed on an "AS IS" BASIS,
 WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 See the License for the specific language governing permissions and
 limitations under the License.
*/
#pragma once

namespace plantrack {

/// Physical constants of the planar quadrotor. Defaults are the reference vehicle.
struct ModelParams {
    double mass = 0.54;          // kg, lumped over both rotors
    double arm_length = 0.12164; // m
    double gravity = 9.81;       // m/s^2

    double hover_thrust() const { return mass * gravity; }

    /// Throws DomainError unless every field is finite and strictly positive.
    void validate() const;
};

struct PlanarState {
    double x = 0.0;
    double y = 0.0;
    double q = 0.0;
    double x_dot = 0.0;
    double y_dot = 0.0;
    double q_dot = 0.0;

    bool finite() const;
};

struct RotorThrusts {
    double u1 = 0.0; // left rotor, N
    double u2 = 0.0; // right rotor, N

    double total() const { return u1 + u2; }
};

/// Time derivative of a PlanarState: velocity pass-through followed by accelerations.
struct PlanarDerivative {
    double x_dot = 0.0;
    double y_dot = 0.0;
    double q_dot = 0.0;
    double x_ddot = 0.0;
    double y_ddot = 0.0;
    double q_ddot = 0.0;
};

/// Rigid-body planar dynamics. Saturation and drag are not modeled.
PlanarDerivative nonlinear_derivative(const PlanarState& state, const RotorThrusts& thrusts,
                                      const ModelParams& params);

struct AltitudeDerivative {
    double y_dot = 0.0;
    double y_ddot = 0.0;
};

/// Altitude channel linearized about hover (q = 0).
AltitudeDerivative linear_altitude_derivative(double y, double y_dot, double total_thrust,
                                              const ModelParams& params);

} // namespace plantrack
