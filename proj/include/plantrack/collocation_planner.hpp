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
#include <vector>

#include "plantrack/error_estimator.hpp"
#include "plantrack/model.hpp"
#include "plantrack/qp_solver.hpp"

namespace plantrack {

/// Altitude trajectory design problem: minimize int a^2 + mu * e^2 over a fixed horizon,
/// where e is the predicted first-order tracking lag of the planned velocity.
struct PlanProblem {
    double horizon = 1.0;      // s
    std::size_t segments = 60; // uniform collocation segments
    double y0 = 0.0;           // m
    double v0 = 0.0;           // m/s
    double yf = 5.0;           // m, terminal velocity and acceleration are free
    double y_lower = 0.0;      // m
    double y_upper = 5.0;      // m
    double mu = 0.0;           // weight on the squared predicted error
    double lambda = 20.0;      // 1/s, dominant decay rate of the tracking controller
    ModelParams params;
    bool enforce_initial_accel_zero = false;

    std::size_t knots() const { return segments + 1; }
    double dt() const { return horizon / static_cast<double>(segments); }

    /// Throws DomainError for malformed fields and InfeasibleProblem for boundary data
    /// outside the altitude bounds.
    void validate() const;
};

/// Index layout of the collocation decision vector (y_0..y_N, v_0..v_N, a_0..a_N).
struct CollocationLayout {
    std::size_t knots = 0;

    Eigen::Index y(std::size_t k) const { return static_cast<Eigen::Index>(k); }
    Eigen::Index v(std::size_t k) const { return static_cast<Eigen::Index>(knots + k); }
    Eigen::Index a(std::size_t k) const { return static_cast<Eigen::Index>(2 * knots + k); }
    Eigen::Index size() const { return static_cast<Eigen::Index>(3 * knots); }
};

struct Transcription {
    QuadraticProgram qp;
    CollocationLayout layout;
    std::size_t dynamics_rows = 0;
    std::size_t boundary_rows = 0;
};

/// Trapezoid direct collocation of the problem as a convex QP.
Transcription transcribe(const PlanProblem& problem);

struct PlannedTrajectory {
    std::vector<double> t;
    std::vector<double> y;
    std::vector<double> v;
    std::vector<double> a;
    std::vector<double> u; // total thrust M (a + g)
    ErrorSeries predicted_error;
    double designed_cost = 0.0;            // trapezoid of a^2
    double predicted_error_integral = 0.0; // trapezoid of e^2
    double mu = 0.0;
    double lambda = 0.0;
    double objective = 0.0;    // designed_cost + mu * predicted_error_integral as solved
    double kkt_residual = 0.0; // max-norm optimality certificate of the QP solution
    int qp_iterations = 0;

    std::size_t size() const { return t.size(); }
    double horizon() const { return t.empty() ? 0.0 : t.back(); }
    double dt() const { return t.size() < 2 ? 0.0 : t[1] - t[0]; }
};

/// Globally optimal collocated trajectory. Throws InfeasibleProblem or NumericalFailure.
PlannedTrajectory solve(const PlanProblem& problem, const QpSettings& settings = {});

/// Trapezoid quadrature of the knot accelerations squared.
double designed_cost(const PlannedTrajectory& traj);

} // namespace plantrack
