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
// Acceptance suite. Prints one PASS/FAIL line per criterion; exit status is nonzero when any
// selected criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

#include <CLI11.hpp>

#include "oracles.hpp"
#include "plantrack/cli.hpp"
#include "plantrack/collocation_planner.hpp"
#include "plantrack/config.hpp"
#include "plantrack/error_estimator.hpp"
#include "plantrack/frontier.hpp"
#include "plantrack/io.hpp"
#include "plantrack/lqr.hpp"
#include "plantrack/tracking_sim.hpp"

using namespace plantrack;
namespace fs = std::filesystem;

namespace {

struct Outcome {
    bool pass;
    std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start)
{
    return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string fmt(const char* f, double a)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, f, a);
    return buf;
}

// The default sweep for every configured controller, computed once per process.
const std::vector<Frontier>& default_sweep()
{
    static const std::vector<Frontier> all = [] {
        const RunConfig cfg;
        std::vector<Frontier> out;
        for (const auto& pair : cfg.pairs)
            out.push_back(
                sweep(design_controller(pair, cfg.model), cfg.mu_grid(), cfg.plan_template()));
        return out;
    }();
    return all;
}

Outcome planner_oracle()
{
    const auto start = Clock::now();
    const PlannedTrajectory traj = solve(PlanProblem{});
    const double elapsed = seconds_since(start);
    double dev = 0.0;
    for (std::size_t k = 0; k < traj.size(); ++k)
        dev = std::max(dev, std::abs(traj.y[k] - oracle::cubic_y(traj.t[k])));
    const double cost_err = std::abs(traj.designed_cost - 75.0);
    const bool pass = dev < 1e-6 && cost_err <= 1e-3 && elapsed < 1.0;
    return {pass, "max knot deviation " + fmt("%.3e", dev) + " m (tol 1e-6), designed cost " +
                      fmt("%.10g", traj.designed_cost) + " (tol 75 +/- 1e-3), " +
                      fmt("%.3f", elapsed) + " s"};
}

Outcome estimator_ode()
{
    const auto start = Clock::now();
    const double dt = 1.0 / 60.0;
    const std::size_t knots = 61;
    std::mt19937 rng(20260101);
    double worst_ratio = 0.0;
    for (int trial = 0; trial < 100; ++trial) {
        const auto profile = oracle::random_piecewise_linear(rng, dt, knots);
        std::vector<double> v(knots);
        double vmax = 0.0;
        for (std::size_t k = 0; k < knots; ++k) {
            v[k] = profile(dt * static_cast<double>(k));
            vmax = std::max(vmax, std::abs(v[k]));
        }
        for (double lambda : {10.0, 20.0, 30.0, 50.0}) {
            const auto e = error_integral_form(VelocityProfile(dt, v), lambda);
            const auto ref = oracle::lag_ode(profile, lambda, dt, knots);
            double dev = 0.0;
            for (std::size_t k = 0; k < knots; ++k)
                dev = std::max(dev, std::abs(e.values[k] - ref[k]));
            worst_ratio = std::max(worst_ratio, dev / (10.0 * dt * dt * vmax));
        }
    }
    const double elapsed = seconds_since(start);
    return {worst_ratio < 1.0 && elapsed < 5.0,
            "worst deviation " + fmt("%.3f", worst_ratio) +
                " of the 10 dt^2 max|v| bound over 400 cases, " + fmt("%.3f", elapsed) + " s"};
}

Outcome discrete_limit()
{
    const double lambda = 20.0;
    const double closed = 5.0 / lambda * (1.0 - std::exp(-lambda));
    const VelocityProfile constant(1.0, {5.0, 5.0});
    std::vector<double> gaps;
    for (std::size_t n : {100, 1000, 10000, 100000})
        gaps.push_back(std::abs(error_discrete_limit_form(constant, lambda, n) - closed));
    bool shrinking = true;
    for (std::size_t i = 1; i < gaps.size(); ++i)
        shrinking = shrinking && gaps[i] < gaps[i - 1];
    return {gaps.back() < 1e-3 && shrinking,
            "gap at n=1e5 " + fmt("%.3e", gaps.back()) + " (tol 1e-3), gaps " +
                fmt("%.2e", gaps[0]) + " > " + fmt("%.2e", gaps[1]) + " > " +
                fmt("%.2e", gaps[2]) + " > " + fmt("%.2e", gaps[3]) +
                (shrinking ? "" : " NOT monotone")};
}

Outcome steady_state()
{
    const RunConfig cfg;
    bool pass = true;
    std::string detail;
    for (const auto& pair : cfg.pairs) {
        const ControllerSpec ctrl = design_controller(pair, cfg.model);
        SimConfig sim;
        sim.horizon = 20.0 / ctrl.dominant_lambda;
        sim.step = default_step(ctrl, sim.horizon);
        sim.reference = [](double) { return 5.0; };
        sim.controller = ctrl;
        sim.params = cfg.model;
        const double miss = std::abs(simulate(sim).history.back().state.y - 5.0);
        pass = pass && miss < 1e-6;
        detail += pair.label() + " " + fmt("%.2e", miss) + "  ";
    }
    return {pass, "terminal |y-5| (tol 1e-6): " + detail};
}

Outcome monotone()
{
    constexpr double slack = 1e-9;
    std::size_t violations = 0;
    for (const auto& fr : default_sweep()) {
        for (std::size_t i = 1; i < fr.points.size(); ++i) {
            const auto& lo = fr.points[i - 1];
            const auto& hi = fr.points[i];
            violations += hi.designed_cost < lo.designed_cost - slack;
            violations += hi.predicted_error_integral > lo.predicted_error_integral + slack;
        }
    }
    return {violations == 0, std::to_string(violations) + " ordering violations over " +
                                 std::to_string(default_sweep().size()) + " controllers"};
}

Outcome neck()
{
    bool pass = true;
    std::string detail;
    for (const auto& fr : default_sweep()) {
        const FrontierPoint best = best_compromise(fr);
        const double head = fr.points.front().actual_cost;
        pass = pass && best.mu > 0.0 && best.actual_cost < head;
        detail += fr.controller.pair.label() + " mu* " + fmt("%.4g", best.mu) + " (" +
                  fmt("%.4f", best.actual_cost) + " < " + fmt("%.4f", head) + ")  ";
    }
    return {pass, detail};
}

Outcome gap_ordering()
{
    bool pass = true;
    std::string detail;
    double prev = INFINITY;
    for (const auto& fr : default_sweep()) {
        const double g = frontier_gap(fr);
        pass = pass && g < prev;
        prev = g;
        detail += fr.controller.pair.label() + " " + fmt("%.4f", g) + "  ";
    }
    return {pass, "frontier gap: " + detail};
}

Outcome stiffness_ordering()
{
    bool pass = true;
    std::string detail;
    double prev = -INFINITY;
    for (const auto& fr : default_sweep()) {
        const SpringFit fit = spring_fit(fr);
        pass = pass && fit.neck_found && fit.k > prev;
        prev = fit.k;
        detail += fr.controller.pair.label() + " " + fmt("%.6g", fit.k) + "  ";
    }
    return {pass, "spring constant: " + detail};
}

Outcome vertical_purity()
{
    double x = 0.0, q = 0.0;
    for (const auto& fr : default_sweep())
        for (const auto& p : fr.points) {
            x = std::max(x, p.max_abs_x);
            q = std::max(q, p.max_abs_q);
        }
    return {x < 1e-9 && q < 1e-9,
            "max|x| " + fmt("%.3e", x) + " m, max|q| " + fmt("%.3e", q) + " rad (tol 1e-9)"};
}

Outcome full_sweep()
{
    const fs::path root =
        fs::temp_directory_path() / ("plantrack_acceptance_" + std::to_string(::getpid()));
    fs::remove_all(root);
    std::ostringstream sink;
    const auto start = Clock::now();
    const int first = cli::run({"sweep", "--out", (root / "a").string()}, sink, sink);
    const double elapsed = seconds_since(start);
    const int second = cli::run({"sweep", "--out", (root / "b").string()}, sink, sink);

    bool identical = first == cli::kOk && second == cli::kOk;
    std::size_t files = 0;
    if (identical) {
        for (const auto& entry : fs::directory_iterator(root / "a")) {
            const fs::path other = root / "b" / entry.path().filename();
            identical = identical && fs::exists(other) &&
                        io::read_file(entry.path()) == io::read_file(other);
            ++files;
        }
    }
    fs::remove_all(root);
    return {identical && files == 9 && elapsed < 120.0,
            std::to_string(files) + " files, " + (identical ? "byte-identical" : "DIFFERENT") +
                " on rerun, " + fmt("%.2f", elapsed) + " s"};
}

struct Criterion {
    int id;
    const char* name;
    std::function<Outcome()> check;
};

const std::vector<Criterion>& criteria()
{
    static const std::vector<Criterion> all = {
        {1, "analytic planner oracle", planner_oracle},
        {2, "estimator matches lag ODE", estimator_ode},
        {3, "discrete limit convergence", discrete_limit},
        {4, "zero steady-state error", steady_state},
        {5, "scalarization monotonicity", monotone},
        {6, "pseudo-frontier neck", neck},
        {7, "frontier gap ordering", gap_ordering},
        {8, "stiffness ordering", stiffness_ordering},
        {9, "vertical-task purity", vertical_purity},
        {10, "full sweep runtime and determinism", full_sweep},
    };
    return all;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"plantrack acceptance suite"};
    std::vector<int> selected;
    app.add_option("--criterion", selected, "Criterion number(s) to run; all if omitted")
        ->check(CLI::Range(1, 10));
    CLI11_PARSE(app, argc, argv);

    int failures = 0;
    for (const auto& c : criteria()) {
        if (!selected.empty() && std::find(selected.begin(), selected.end(), c.id) == selected.end())
            continue;
        Outcome o;
        try {
            o = c.check();
        }
        catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        std::printf("[%s] criterion %d: %s: %s\n", o.pass ? "PASS" : "FAIL", c.id, c.name,
                    o.detail.c_str());
        failures += !o.pass;
    }
    std::fflush(stdout);
    return failures == 0 ? 0 : 1;
}
