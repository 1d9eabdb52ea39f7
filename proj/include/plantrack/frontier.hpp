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

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

#include "plantrack/collocation_planner.hpp"
#include "plantrack/lqr.hpp"

namespace plantrack {

/// One trajectory of a weighted-sum sweep: its design-stage objectives (Pareto frontier) and
/// the objectives realized by tracking it (pseudo-Pareto frontier).
struct FrontierPoint {
    double mu = 0.0;
    double designed_cost = 0.0;
    double predicted_error_integral = 0.0;
    double actual_cost = 0.0;
    double actual_error_integral = 0.0;
    std::size_t trajectory_id = 0;
    double max_abs_x = 0.0; // lateral excursion seen while tracking, m
    double max_abs_q = 0.0; // attitude excursion seen while tracking, rad
};

struct Frontier {
    ControllerSpec controller;
    std::vector<FrontierPoint> points; // mu ascending
};

/// Hooke spring fitted to the neck of a pseudo-Pareto frontier.
struct SpringFit {
    double a = 0.0; // largest decrease below the initial actual cost
    double b = 0.0; // half the initial actual cost
    double k = 0.0; // +inf when no neck exists
    bool neck_found = false;
    // Unit load applied at the rope midpoint; the restoring force is F = -k dx.
    static constexpr double force = 1.0;
};

enum class GridSpacing { Log, Linear };

/// {0} followed by `count` values from `min` to `max`.
std::vector<double> make_mu_grid(std::size_t count, double min, double max,
                                 GridSpacing spacing = GridSpacing::Log);

/// A sweep job failed; `mu()` names the offending weight.
class SweepFailure : public std::runtime_error {
public:
    SweepFailure(const std::string& what, double mu) : std::runtime_error(what), mu_(mu) {}
    double mu() const noexcept { return mu_; }

private:
    double mu_;
};

struct SweepOptions {
    std::size_t workers = 1;
    std::optional<double> sim_step; // overrides the default RK4 step rule
};

/// Plans and tracks one trajectory per weight. The template's mu and lambda are replaced by
/// each grid value and the controller's dominant eigenvalue. Output is independent of the
/// worker count.
Frontier sweep(const ControllerSpec& controller, const std::vector<double>& mu_grid,
               const PlanProblem& problem_template, const SweepOptions& options = {});

/// Plan, track and score a single weight.
FrontierPoint evaluate_point(const ControllerSpec& controller, double mu,
                             const PlanProblem& problem_template,
                             std::optional<double> sim_step = std::nullopt);

/// Point with the least actual cost; ties go to the smaller mu.
FrontierPoint best_compromise(const Frontier& frontier);

/// b = C0 / 2, a = C0 - min C, k = 1 / (4a (1 - (1 + (a/b)^2)^(-1/2))) with C0 the actual
/// cost at mu = 0.
SpringFit spring_fit(const Frontier& frontier);

/// Stiffness from rope geometry: half-length b, midpoint sag a.
double spring_constant(double a, double b);

/// Mean |actual_cost - designed_cost| over the frontier.
double frontier_gap(const Frontier& frontier);

} // namespace plantrack
