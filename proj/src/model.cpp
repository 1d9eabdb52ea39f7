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
#include "plantrack/model.hpp"

#include <cmath>
#include <string>

#include "plantrack/errors.hpp"

namespace plantrack {

namespace {

bool positive_finite(double v) { return std::isfinite(v) && v > 0.0; }

} // namespace

void ModelParams::validate() const
{
    if (!positive_finite(mass))
        throw DomainError("ModelParams: mass must be finite and > 0, got " + std::to_string(mass));
    if (!positive_finite(arm_length))
        throw DomainError("ModelParams: arm_length must be finite and > 0, got " +
                          std::to_string(arm_length));
    if (!positive_finite(gravity))
        throw DomainError("ModelParams: gravity must be finite and > 0, got " +
                          std::to_string(gravity));
}

bool PlanarState::finite() const
{
    return std::isfinite(x) && std::isfinite(y) && std::isfinite(q) && std::isfinite(x_dot) &&
           std::isfinite(y_dot) && std::isfinite(q_dot);
}

PlanarDerivative nonlinear_derivative(const PlanarState& state, const RotorThrusts& thrusts,
                                      const ModelParams& params)
{
    if (!state.finite() || !std::isfinite(thrusts.u1) || !std::isfinite(thrusts.u2))
        throw DomainError("nonlinear_derivative: non-finite state or thrust");

    const double total = thrusts.total();
    PlanarDerivative d;
    d.x_dot = state.x_dot;
    d.y_dot = state.y_dot;
    d.q_dot = state.q_dot;
    d.x_ddot = -std::sin(state.q) * total / params.mass;
    d.y_ddot = total * std::cos(state.q) / params.mass - params.gravity;
    d.q_ddot = (thrusts.u2 - thrusts.u1) / (params.mass * params.arm_length);
    return d;
}

AltitudeDerivative linear_altitude_derivative(double y, double y_dot, double total_thrust,
                                              const ModelParams& params)
{
    if (!std::isfinite(y) || !std::isfinite(y_dot) || !std::isfinite(total_thrust))
        throw DomainError("linear_altitude_derivative: non-finite input");
    return {y_dot, total_thrust / params.mass - params.gravity};
}

} // namespace plantrack
