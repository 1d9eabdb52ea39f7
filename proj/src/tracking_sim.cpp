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
#include "plantrack/tracking_sim.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "plantrack/error_estimator.hpp"
#include "plantrack/errors.hpp"
#include "plantrack/integrator.hpp"

namespace plantrack {

namespace {

// Position loop gains (x_ddot command) and attitude loop gains (q_ddot command).
constexpr double kPosD = 10.0;
constexpr double kPosP = 100.0;
constexpr double kAttD = 80.0;
constexpr double kAttP = 100.0;

constexpr double kMaxStep = 1e-3;
constexpr double kStepsPerFastPole = 0.2;

using StateVec = StateArray<6>;

StateVec pack(const PlanarState& p) { return {p.x, p.y, p.q, p.x_dot, p.y_dot, p.q_dot}; }

PlanarState unpack(const StateVec& v) { return {v[0], v[1], v[2], v[3], v[4], v[5]}; }

StateVec pack(const PlanarDerivative& d)
{
    return {d.x_dot, d.y_dot, d.q_dot, d.x_ddot, d.y_ddot, d.q_ddot};
}

} // namespace

double reference_lookup(const PlannedTrajectory& traj, double t)
{
    const std::size_t n = traj.size();
    if (n == 0)
        throw DomainError("reference_lookup: empty trajectory");
    if (n == 1 || t >= traj.t.back())
        return traj.y.back();
    if (t <= traj.t.front())
        return traj.y.front();

    const double h = traj.dt();
    auto i = static_cast<std::size_t>((t - traj.t.front()) / h);
    i = std::min(i, n - 2);
    const double s = (t - traj.t[i]) / (traj.t[i + 1] - traj.t[i]);
    const double hs = traj.t[i + 1] - traj.t[i];
    const double s2 = s * s;
    const double s3 = s2 * s;
    const double h00 = 2.0 * s3 - 3.0 * s2 + 1.0;
    const double h10 = s3 - 2.0 * s2 + s;
    const double h01 = -2.0 * s3 + 3.0 * s2;
    const double h11 = s3 - s2;
    return h00 * traj.y[i] + h10 * hs * traj.v[i] + h01 * traj.y[i + 1] + h11 * hs * traj.v[i + 1];
}

double default_step(const ControllerSpec& controller, double knot_spacing)
{
    const double fast = std::max(std::abs(controller.pair.lambda_fast),
                                 std::abs(controller.pair.lambda_slow));
    const double rule = std::min(kMaxStep, kStepsPerFastPole / fast);
    if (!(knot_spacing > 0.0))
        return rule;
    const double per_knot = std::ceil(knot_spacing / rule - 1e-9);
    return knot_spacing / per_knot;
}

SimConfig SimConfig::for_trajectory(const PlannedTrajectory& traj,
                                    const ControllerSpec& controller, const ModelParams& params)
{
    if (traj.size() < 2)
        throw DomainError("SimConfig: reference trajectory needs at least two knots");
    SimConfig cfg;
    cfg.step = default_step(controller, traj.dt());
    cfg.horizon = traj.horizon();
    cfg.controller = controller;
    cfg.params = params;
    cfg.reference = [traj](double t) { return reference_lookup(traj, t); };
    return cfg;
}

void SimConfig::validate() const
{
    params.validate();
    if (!std::isfinite(step) || step <= 0.0)
        throw DomainError("SimConfig: step must be finite and > 0");
    if (!std::isfinite(horizon) || horizon <= 0.0)
        throw DomainError("SimConfig: horizon must be finite and > 0");
    if (step > horizon)
        throw DomainError("SimConfig: step exceeds horizon");
    if (!reference)
        throw DomainError("SimConfig: no reference");
    controller.pair.validate();
}

RotorThrusts closed_loop_thrusts(const PlanarState& state, double y_ref,
                                 const ControllerSpec& controller, const ModelParams& params)
{
    const double total = control_law(controller, state.y, state.y_dot, y_ref, params);

    // Lateral target is x = 0 with zero feed-forward terms.
    const double x_ddot_cmd = kPosD * (0.0 - state.x_dot) + kPosP * (0.0 - state.x);
    // Small-angle inversion of x_ddot = -sin(q) T / M.
    const double q_cmd = std::abs(total) > 1e-12 ? -params.mass * x_ddot_cmd / total : 0.0;
    const double q_ddot_cmd = kAttD * (0.0 - state.q_dot) + kAttP * (q_cmd - state.q);

    const double diff = params.mass * params.arm_length * q_ddot_cmd; // u2 - u1
    return {0.5 * (total - diff), 0.5 * (total + diff)};
}

TrackingResult simulate(const SimConfig& config)
{
    config.validate();

    const double h = config.step;
    const auto steps = static_cast<std::size_t>(std::llround(config.horizon / h));
    if (std::abs(static_cast<double>(steps) * h - config.horizon) > 1e-9 * config.horizon)
        throw DomainError("SimConfig: step " + std::to_string(h) +
                          " does not divide the horizon evenly");

    const ControllerSpec& ctrl = config.controller;
    const ModelParams& params = config.params;

    auto rhs = [&](double t, const StateVec& x) {
        const PlanarState s = unpack(x);
        const RotorThrusts u = closed_loop_thrusts(s, config.reference(t), ctrl, params);
        // an RK4 stage can blow up before the step completes
        if (!s.finite() || !std::isfinite(u.u1) || !std::isfinite(u.u2))
            throw SimulationDiverged("simulate: state diverged at t = " + std::to_string(t), t);
        return pack(nonlinear_derivative(s, u, params));
    };

    auto record = [&](double t, const StateVec& x) {
        TrackingSample smp;
        smp.t = t;
        smp.state = unpack(x);
        smp.y_ref = config.reference(t);
        smp.thrusts = closed_loop_thrusts(smp.state, smp.y_ref, ctrl, params);
        smp.derivative = nonlinear_derivative(smp.state, smp.thrusts, params);
        smp.error = smp.y_ref - smp.state.y;
        return smp;
    };

    TrackingResult result;
    result.step = h;
    result.history.reserve(steps + 1);

    StateVec x = pack(PlanarState{});
    result.history.push_back(record(0.0, x));
    for (std::size_t i = 0; i < steps; ++i) {
        const double t = h * static_cast<double>(i);
        x = rk4_step(rhs, t, x, h);

        const double t_next = (i + 1 == steps) ? config.horizon : h * static_cast<double>(i + 1);
        if (!unpack(x).finite())
            throw SimulationDiverged("simulate: state diverged at t = " + std::to_string(t_next),
                                     t_next);
        result.history.push_back(record(t_next, x));
    }

    const TrackingScore sc = score(result);
    result.actual_cost = sc.actual_cost;
    result.actual_error_integral = sc.actual_error_integral;
    return result;
}

TrackingScore score(const TrackingResult& result)
{
    const auto& hist = result.history;
    if (hist.size() < 2)
        throw DomainError("score: history needs at least two samples");
    std::vector<double> acc(hist.size());
    std::vector<double> err(hist.size());
    for (std::size_t i = 0; i < hist.size(); ++i) {
        const auto& d = hist[i].derivative;
        acc[i] = d.x_ddot * d.x_ddot + d.y_ddot * d.y_ddot + d.q_ddot * d.q_ddot;
        err[i] = hist[i].error * hist[i].error;
    }
    return {trapezoid_quadrature(std::span<const double>(acc), result.step),
            trapezoid_quadrature(std::span<const double>(err), result.step)};
}

} // namespace plantrack
