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
#include "plantrack/frontier.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <limits>
#include <mutex>
#include <string>
#include <thread>

#include "plantrack/errors.hpp"
#include "plantrack/tracking_sim.hpp"

namespace plantrack {

std::vector<double> make_mu_grid(std::size_t count, double min, double max, GridSpacing spacing)
{
    if (!std::isfinite(min) || !std::isfinite(max) || min <= 0.0 || max < min)
        throw DomainError("make_mu_grid: need 0 < min <= max");
    std::vector<double> grid{0.0};
    if (count == 0)
        return grid;
    if (count == 1) {
        grid.push_back(min);
        return grid;
    }
    const double span = static_cast<double>(count - 1);
    for (std::size_t i = 0; i < count; ++i) {
        const double s = static_cast<double>(i) / span;
        const double mu = spacing == GridSpacing::Log
                              ? std::pow(10.0, std::log10(min) + s * (std::log10(max) - std::log10(min)))
                              : min + s * (max - min);
        grid.push_back(mu);
    }
    grid.back() = max;
    return grid;
}

FrontierPoint evaluate_point(const ControllerSpec& controller, double mu,
                             const PlanProblem& problem_template, std::optional<double> sim_step)
{
    PlanProblem problem = problem_template;
    problem.mu = mu;
    problem.lambda = controller.dominant_lambda;
    const PlannedTrajectory traj = solve(problem);

    SimConfig cfg = SimConfig::for_trajectory(traj, controller, problem.params);
    if (sim_step)
        cfg.step = *sim_step;
    const TrackingResult run = simulate(cfg);

    FrontierPoint pt;
    pt.mu = mu;
    pt.designed_cost = traj.designed_cost;
    pt.predicted_error_integral = traj.predicted_error_integral;
    pt.actual_cost = run.actual_cost;
    pt.actual_error_integral = run.actual_error_integral;
    for (const auto& s : run.history) {
        pt.max_abs_x = std::max(pt.max_abs_x, std::abs(s.state.x));
        pt.max_abs_q = std::max(pt.max_abs_q, std::abs(s.state.q));
    }
    return pt;
}

Frontier sweep(const ControllerSpec& controller, const std::vector<double>& mu_grid,
               const PlanProblem& problem_template, const SweepOptions& options)
{
    if (mu_grid.empty() || mu_grid.front() != 0.0)
        throw DomainError("sweep: mu grid must start at 0");
    if (!std::is_sorted(mu_grid.begin(), mu_grid.end()))
        throw DomainError("sweep: mu grid must be sorted ascending");

    const std::size_t jobs = mu_grid.size();
    std::vector<FrontierPoint> points(jobs);
    std::vector<std::exception_ptr> failures(jobs);
    std::atomic<std::size_t> next{0};

    auto worker = [&] {
        for (std::size_t i = next++; i < jobs; i = next++) {
            try {
                points[i] = evaluate_point(controller, mu_grid[i], problem_template,
                                           options.sim_step);
                points[i].trajectory_id = i;
            }
            catch (...) {
                failures[i] = std::current_exception();
            }
        }
    };

    const std::size_t threads = std::clamp<std::size_t>(options.workers, 1, jobs);
    if (threads == 1) {
        worker();
    }
    else {
        std::vector<std::jthread> pool;
        pool.reserve(threads);
        for (std::size_t t = 0; t < threads; ++t)
            pool.emplace_back(worker);
    }

    for (std::size_t i = 0; i < jobs; ++i) {
        if (!failures[i])
            continue;
        std::string why = "unknown error";
        try {
            std::rethrow_exception(failures[i]);
        }
        catch (const std::exception& e) {
            why = e.what();
        }
        catch (...) {
        }
        throw SweepFailure("sweep " + controller.pair.label() + ": mu = " +
                               std::to_string(mu_grid[i]) + " failed: " + why,
                           mu_grid[i]);
    }
    return {controller, std::move(points)};
}

FrontierPoint best_compromise(const Frontier& frontier)
{
    if (frontier.points.empty())
        throw DomainError("best_compromise: empty frontier");
    const FrontierPoint* best = &frontier.points.front();
    for (const auto& p : frontier.points) {
        if (p.actual_cost < best->actual_cost ||
            (p.actual_cost == best->actual_cost && p.mu < best->mu))
            best = &p;
    }
    return *best;
}

double spring_constant(double a, double b)
{
    if (!std::isfinite(a) || a < 0.0 || !std::isfinite(b) || b <= 0.0)
        throw DomainError("spring_constant: need a >= 0 and b > 0");
    if (a == 0.0)
        return std::numeric_limits<double>::infinity();
    const double r = a / b;
    // 1 - (1 + r^2)^(-1/2) written to avoid cancellation for small r
    const double s = std::sqrt(1.0 + r * r);
    const double sag = r * r / (s * (s + 1.0));
    return 1.0 / (4.0 * a * sag);
}

SpringFit spring_fit(const Frontier& frontier)
{
    auto head = std::find_if(frontier.points.begin(), frontier.points.end(),
                             [](const FrontierPoint& p) { return p.mu == 0.0; });
    if (head == frontier.points.end())
        throw DomainError("spring_fit: frontier has no mu = 0 point");
    const double initial = head->actual_cost;
    if (!(initial > 0.0))
        throw DomainError("spring_fit: initial actual cost must be > 0");

    SpringFit fit;
    fit.b = 0.5 * initial;
    fit.a = initial - best_compromise(frontier).actual_cost;
    fit.neck_found = fit.a > 0.0;
    if (!fit.neck_found)
        fit.a = 0.0;
    fit.k = spring_constant(fit.a, fit.b);
    return fit;
}

double frontier_gap(const Frontier& frontier)
{
    if (frontier.points.empty())
        throw DomainError("frontier_gap: empty frontier");
    double sum = 0.0;
    for (const auto& p : frontier.points)
        sum += std::abs(p.actual_cost - p.designed_cost);
    return sum / static_cast<double>(frontier.points.size());
}

} // namespace plantrack
