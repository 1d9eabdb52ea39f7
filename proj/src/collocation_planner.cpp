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
#include "plantrack/collocation_planner.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "plantrack/errors.hpp"

namespace plantrack {

void PlanProblem::validate() const
{
    params.validate();
    if (segments < 2)
        throw DomainError("PlanProblem: segments must be >= 2");
    if (!std::isfinite(horizon) || horizon <= 0.0)
        throw DomainError("PlanProblem: horizon must be finite and > 0");
    if (!std::isfinite(mu) || mu < 0.0)
        throw DomainError("PlanProblem: mu must be finite and >= 0");
    if (!std::isfinite(lambda) || lambda <= 0.0)
        throw DomainError("PlanProblem: lambda must be a positive decay rate");
    if (!std::isfinite(y0) || !std::isfinite(v0) || !std::isfinite(yf) || std::isnan(y_lower) ||
        std::isnan(y_upper))
        throw DomainError("PlanProblem: non-finite boundary data");
    if (y_lower > y_upper)
        throw InfeasibleProblem("PlanProblem: empty altitude bounds [" + std::to_string(y_lower) +
                                ", " + std::to_string(y_upper) + "]");
    if (y0 < y_lower || y0 > y_upper)
        throw InfeasibleProblem("PlanProblem: initial altitude " + std::to_string(y0) +
                                " outside bounds");
    if (yf < y_lower || yf > y_upper)
        throw InfeasibleProblem("PlanProblem: final altitude " + std::to_string(yf) +
                                " outside bounds");
}

Transcription transcribe(const PlanProblem& problem)
{
    problem.validate();

    const std::size_t knots = problem.knots();
    const std::size_t segs = problem.segments;
    const double dt = problem.dt();
    const CollocationLayout L{knots};
    const Eigen::Index n = L.size();

    Transcription out;
    out.layout = L;
    out.dynamics_rows = 2 * segs;
    out.boundary_rows = problem.enforce_initial_accel_zero ? 4 : 3;

    auto& qp = out.qp;
    qp.hessian = Eigen::MatrixXd::Zero(n, n);
    qp.gradient = Eigen::VectorXd::Zero(n);

    // a-block: trapezoid weights on a^2, doubled for the 1/2 x'Hx convention
    for (std::size_t k = 0; k < knots; ++k) {
        const double w = (k == 0 || k == segs) ? 0.5 : 1.0;
        qp.hessian(L.a(k), L.a(k)) = 2.0 * w * dt;
    }
    // v-block: mu * e'We with e = Lv
    if (problem.mu > 0.0) {
        const Eigen::MatrixXd E = error_integral_map(knots, dt, problem.lambda);
        Eigen::VectorXd w = Eigen::VectorXd::Constant(static_cast<Eigen::Index>(knots), dt);
        w(0) *= 0.5;
        w(static_cast<Eigen::Index>(segs)) *= 0.5;
        const Eigen::MatrixXd block = 2.0 * problem.mu * (E.transpose() * w.asDiagonal() * E);
        qp.hessian.block(L.v(0), L.v(0), static_cast<Eigen::Index>(knots),
                         static_cast<Eigen::Index>(knots)) = block;
    }

    const auto rows = static_cast<Eigen::Index>(out.dynamics_rows + out.boundary_rows);
    qp.eq_matrix = Eigen::MatrixXd::Zero(rows, n);
    qp.eq_rhs = Eigen::VectorXd::Zero(rows);
    Eigen::Index r = 0;
    for (std::size_t k = 1; k < knots; ++k) {
        // y_k - y_{k-1} = dt/2 (v_k + v_{k-1})
        qp.eq_matrix(r, L.y(k)) = 1.0;
        qp.eq_matrix(r, L.y(k - 1)) = -1.0;
        qp.eq_matrix(r, L.v(k)) = -0.5 * dt;
        qp.eq_matrix(r, L.v(k - 1)) = -0.5 * dt;
        ++r;
        // v_k - v_{k-1} = dt/2 (a_k + a_{k-1})
        qp.eq_matrix(r, L.v(k)) = 1.0;
        qp.eq_matrix(r, L.v(k - 1)) = -1.0;
        qp.eq_matrix(r, L.a(k)) = -0.5 * dt;
        qp.eq_matrix(r, L.a(k - 1)) = -0.5 * dt;
        ++r;
    }
    auto pin = [&](Eigen::Index col, double value) {
        qp.eq_matrix(r, col) = 1.0;
        qp.eq_rhs(r) = value;
        ++r;
    };
    pin(L.y(0), problem.y0);
    pin(L.v(0), problem.v0);
    pin(L.y(segs), problem.yf);
    if (problem.enforce_initial_accel_zero)
        pin(L.a(0), 0.0);

    // Box bounds on interior altitudes only; the endpoints are pinned above.
    constexpr double inf = std::numeric_limits<double>::infinity();
    qp.lower = Eigen::VectorXd::Constant(n, -inf);
    qp.upper = Eigen::VectorXd::Constant(n, inf);
    for (std::size_t k = 1; k < segs; ++k) {
        qp.lower(L.y(k)) = problem.y_lower;
        qp.upper(L.y(k)) = problem.y_upper;
    }
    return out;
}

namespace {

// Altitude interpolated linearly between the endpoints, with velocity and acceleration
// recovered by running both trapezoid chains forward. Always satisfies every constraint.
Eigen::VectorXd feasible_start(const PlanProblem& problem, const CollocationLayout& L)
{
    const std::size_t segs = problem.segments;
    const double dt = problem.dt();
    Eigen::VectorXd x = Eigen::VectorXd::Zero(L.size());
    for (std::size_t k = 0; k <= segs; ++k) {
        const double s = static_cast<double>(k) / static_cast<double>(segs);
        x(L.y(k)) = problem.y0 + s * (problem.yf - problem.y0);
    }
    x(L.y(segs)) = problem.yf;
    x(L.v(0)) = problem.v0;
    x(L.a(0)) = 0.0;
    for (std::size_t k = 1; k <= segs; ++k) {
        x(L.v(k)) = 2.0 * (x(L.y(k)) - x(L.y(k - 1))) / dt - x(L.v(k - 1));
        x(L.a(k)) = 2.0 * (x(L.v(k)) - x(L.v(k - 1))) / dt - x(L.a(k - 1));
    }
    return x;
}

} // namespace

PlannedTrajectory solve(const PlanProblem& problem, const QpSettings& settings)
{
    const Transcription tr = transcribe(problem);
    const CollocationLayout& L = tr.layout;
    const QpSolution sol = solve_active_set(tr.qp, feasible_start(problem, L), settings);

    const std::size_t knots = problem.knots();
    const double dt = problem.dt();
    PlannedTrajectory traj;
    traj.t.resize(knots);
    traj.y.resize(knots);
    traj.v.resize(knots);
    traj.a.resize(knots);
    traj.u.resize(knots);
    for (std::size_t k = 0; k < knots; ++k) {
        traj.t[k] = dt * static_cast<double>(k);
        traj.y[k] = sol.x(L.y(k));
        traj.v[k] = sol.x(L.v(k));
        traj.a[k] = sol.x(L.a(k));
        traj.u[k] = problem.params.mass * (traj.a[k] + problem.params.gravity);
    }
    traj.t.back() = problem.horizon;
    // pinned values are reported as given, not as the factorization returned them
    traj.y.front() = problem.y0;
    traj.v.front() = problem.v0;
    traj.y.back() = problem.yf;
    if (problem.enforce_initial_accel_zero) {
        traj.a.front() = 0.0;
        traj.u.front() = problem.params.mass * problem.params.gravity;
    }

    traj.predicted_error = error_integral_form(VelocityProfile(dt, traj.v), problem.lambda);
    std::vector<double> e2(knots);
    for (std::size_t k = 0; k < knots; ++k)
        e2[k] = traj.predicted_error.values[k] * traj.predicted_error.values[k];
    traj.designed_cost = designed_cost(traj);
    traj.predicted_error_integral = trapezoid_quadrature(std::span<const double>(e2), dt);
    traj.mu = problem.mu;
    traj.lambda = problem.lambda;
    traj.objective = sol.objective;
    traj.kkt_residual = sol.kkt_residual;
    traj.qp_iterations = sol.iterations;
    return traj;
}

double designed_cost(const PlannedTrajectory& traj)
{
    if (traj.size() < 2)
        throw DomainError("designed_cost: trajectory needs at least two knots");
    std::vector<double> a2(traj.a.size());
    for (std::size_t k = 0; k < a2.size(); ++k)
        a2[k] = traj.a[k] * traj.a[k];
    return trapezoid_quadrature(std::span<const double>(a2), traj.dt());
}

} // namespace plantrack
