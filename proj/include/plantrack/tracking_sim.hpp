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

#include <functional>
#include <vector>

#include "plantrack/collocation_planner.hpp"
#include "plantrack/lqr.hpp"
#include "plantrack/model.hpp"

namespace plantrack {

/// Altitude reference as a function of time. Only the position is exposed to the controller.
using ReferenceFn = std::function<double(double)>;

/// Cubic Hermite interpolation of the knot (y, v) pairs; holds the terminal altitude past the
/// horizon and the initial altitude before zero.
double reference_lookup(const PlannedTrajectory& traj, double t);

/// Fixed RK4 step for a controller: min(1e-3, 0.2 / |lambda_fast|), shrunk so that an integer
/// number of steps spans `knot_spacing` exactly.
double default_step(const ControllerSpec& controller, double knot_spacing);

struct SimConfig {
    double step = 1e-3;    // s
    double horizon = 1.0;  // s, scoring window [0, horizon]
    ReferenceFn reference; // y_ref(t)
    ControllerSpec controller;
    ModelParams params;

    /// Tracking of a planned trajectory over its own horizon with the default step rule.
    static SimConfig for_trajectory(const PlannedTrajectory& traj, const ControllerSpec& controller,
                                    const ModelParams& params);

    void validate() const;
};

struct TrackingSample {
    double t = 0.0;
    PlanarState state;
    RotorThrusts thrusts;
    PlanarDerivative derivative; // accelerations evaluated at (t, state)
    double y_ref = 0.0;
    double error = 0.0; // y_ref - y
};

struct TrackingResult {
    std::vector<TrackingSample> history; // uniform at SimConfig::step, t = 0 .. horizon
    double step = 0.0;
    double actual_cost = 0.0;           // trapezoid of x_ddot^2 + y_ddot^2 + q_ddot^2
    double actual_error_integral = 0.0; // trapezoid of (y_ref - y)^2
};

/// Closed-loop thrusts at one instant: altitude feedback without feed-forward, and the
/// position/attitude cascade holding x = 0.
RotorThrusts closed_loop_thrusts(const PlanarState& state, double y_ref,
                                 const ControllerSpec& controller, const ModelParams& params);

/// Fixed-step RK4 on the nonlinear planar model from the trimmed hover state at the origin.
/// Throws SimulationDiverged when the state becomes non-finite.
TrackingResult simulate(const SimConfig& config);

struct TrackingScore {
    double actual_cost = 0.0;
    double actual_error_integral = 0.0;
};

/// Recomputes both quadratures from the stored history.
TrackingScore score(const TrackingResult& result);

} // namespace plantrack
