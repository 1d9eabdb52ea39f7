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
#include "plantrack/cli.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <limits>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "plantrack/collocation_planner.hpp"
#include "plantrack/config.hpp"
#include "plantrack/errors.hpp"
#include "plantrack/frontier.hpp"
#include "plantrack/io.hpp"
#include "plantrack/lqr.hpp"
#include "plantrack/tracking_sim.hpp"

namespace plantrack::cli {

namespace fs = std::filesystem;

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct CommonArgs {
    std::string config;
    std::string out;
};

RunConfig resolve_config(const CommonArgs& args)
{
    RunConfig cfg = args.config.empty() ? RunConfig{} : load_config(args.config);
    cfg.validate();
    if (!args.out.empty())
        cfg.output_dir = args.out;
    return cfg;
}

EigenvaluePair configured_pair(const RunConfig& cfg, const std::string& text)
{
    const EigenvaluePair pair = parse_pair(text);
    if (std::find(cfg.pairs.begin(), cfg.pairs.end(), pair) == cfg.pairs.end())
        throw UsageError("eigenpair " + pair.label() + " is not listed in controller.pairs");
    return pair;
}

void ensure_dir(const fs::path& dir)
{
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec)
        throw std::runtime_error("cannot create output directory '" + dir.string() +
                                 "': " + ec.message());
}

std::string dump(const nlohmann::ordered_json& j) { return j.dump(2) + "\n"; }

int cmd_plan(const CommonArgs& common, double mu, const std::string& pair_text,
             std::ostream& out)
{
    const RunConfig cfg = resolve_config(common);
    const EigenvaluePair pair = configured_pair(cfg, pair_text);
    const ControllerSpec ctrl = design_controller(pair, cfg.model);

    PlanProblem problem = cfg.plan_template();
    problem.mu = mu;
    problem.lambda = ctrl.dominant_lambda;
    const PlannedTrajectory traj = solve(problem);

    std::ostringstream csv;
    io::write_trajectory_csv(csv, traj);
    const std::string summary = dump(io::plan_summary_json(traj, pair));

    ensure_dir(cfg.output_dir);
    io::write_file_atomic(cfg.output_dir / "trajectory.csv", csv.str());
    io::write_file_atomic(cfg.output_dir / "plan_summary.json", summary);
    out << summary;
    return kOk;
}

int cmd_track(const CommonArgs& common, const std::string& trajectory_path,
              const std::string& pair_text, std::optional<double> mu, std::ostream& out)
{
    const RunConfig cfg = resolve_config(common);
    const EigenvaluePair pair = configured_pair(cfg, pair_text);
    const ControllerSpec ctrl = design_controller(pair, cfg.model);

    std::ifstream in(trajectory_path);
    if (!in)
        throw SchemaError("cannot open trajectory file '" + trajectory_path + "'");
    const PlannedTrajectory traj = io::read_trajectory_csv(in);

    SimConfig sim = SimConfig::for_trajectory(traj, ctrl, cfg.model);
    if (cfg.sim_step)
        sim.step = *cfg.sim_step;
    const TrackingResult run = simulate(sim);

    std::ostringstream csv;
    io::write_tracking_csv(csv, run);
    const std::string summary = dump(io::run_summary_json(
        mu.value_or(std::numeric_limits<double>::quiet_NaN()), pair,
        {run.actual_cost, run.actual_error_integral}, traj.designed_cost,
        traj.predicted_error_integral));

    ensure_dir(cfg.output_dir);
    io::write_file_atomic(cfg.output_dir / "tracking.csv", csv.str());
    io::write_file_atomic(cfg.output_dir / "track_summary.json", summary);
    out << summary;
    return kOk;
}

int cmd_sweep(const CommonArgs& common, std::optional<std::size_t> jobs, std::ostream& out,
              std::ostream& err)
{
    RunConfig cfg = resolve_config(common);
    if (jobs)
        cfg.workers = std::max<std::size_t>(1, *jobs);
    const std::vector<double> grid = cfg.mu_grid();
    const std::string canonical = canonical_config(cfg);

    ensure_dir(cfg.output_dir);

    nlohmann::ordered_json manifest;
    manifest["config_sha256"] = io::sha256_hex(canonical);
    manifest["mu_grid"] = grid;
    manifest["files"] = nlohmann::ordered_json::array();
    manifest["controllers"] = nlohmann::ordered_json::array();
    manifest["failures"] = nlohmann::ordered_json::array();

    auto emit = [&](const std::string& name, const std::string& contents) {
        io::write_file_atomic(cfg.output_dir / name, contents);
        manifest["files"].push_back({{"name", name}, {"sha256", io::sha256_hex(contents)}});
    };

    SweepOptions opts;
    opts.workers = cfg.workers;
    opts.sim_step = cfg.sim_step;

    bool failed = false;
    for (const auto& pair : cfg.pairs) {
        const std::string tag = pair_tag(pair);
        try {
            const ControllerSpec ctrl = design_controller(pair, cfg.model);
            const Frontier frontier = sweep(ctrl, grid, cfg.plan_template(), opts);
            const SpringFit fit = spring_fit(frontier);
            const FrontierPoint best = best_compromise(frontier);

            std::ostringstream csv;
            io::write_frontier_csv(csv, frontier);
            emit("frontier_" + tag + ".csv", csv.str());
            emit("spring_" + tag + ".json", dump(io::spring_json(fit, &pair)));

            nlohmann::ordered_json c;
            c["eigenpair"] = io::pair_json(pair);
            c["best_mu"] = best.mu;
            c["best_actual_cost"] = best.actual_cost;
            c["frontier_gap"] = frontier_gap(frontier);
            manifest["controllers"].push_back(c);
            out << "controller " << pair.label() << ": best mu " << io::format_double(best.mu)
                << ", k " << io::format_double(fit.k) << '\n';
        }
        catch (const SweepFailure& e) {
            failed = true;
            manifest["failures"].push_back(
                {{"eigenpair", io::pair_json(pair)}, {"mu", e.mu()}, {"error", e.what()}});
            err << "error: " << e.what() << '\n';
        }
        catch (const std::exception& e) {
            failed = true;
            manifest["failures"].push_back(
                {{"eigenpair", io::pair_json(pair)}, {"mu", nullptr}, {"error", e.what()}});
            err << "error: controller " << pair.label() << ": " << e.what() << '\n';
        }
    }
    io::write_file_atomic(cfg.output_dir / "manifest.json", dump(manifest));
    return failed ? kFailure : kOk;
}

int cmd_stiffness(const std::string& frontier_path, const std::string& pair_text,
                  const std::string& out_dir, std::ostream& out)
{
    std::ifstream in(frontier_path);
    if (!in)
        throw SchemaError("cannot open frontier file '" + frontier_path + "'");
    Frontier frontier;
    frontier.points = io::read_frontier_csv(in);
    if (frontier.points.empty())
        throw SchemaError("frontier csv: no data rows");

    std::optional<EigenvaluePair> pair;
    if (!pair_text.empty())
        pair = parse_pair(pair_text);
    const SpringFit fit = spring_fit(frontier);
    const std::string json = dump(io::spring_json(fit, pair ? &*pair : nullptr));
    if (!out_dir.empty()) {
        ensure_dir(out_dir);
        const std::string name = pair ? "spring_" + pair_tag(*pair) + ".json" : "spring.json";
        io::write_file_atomic(fs::path(out_dir) / name, json);
    }
    out << json;
    return kOk;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Plan altitude trajectories, track them with a feed-forward-free controller, "
                 "and analyze the resulting trade-off frontiers",
                 "plantrack"};
    app.require_subcommand(1);

    CommonArgs common;
    double mu = 0.0;
    std::optional<double> track_mu;
    std::string pair_text;
    std::string trajectory_path;
    std::string frontier_path;
    std::optional<std::size_t> jobs;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--config", common.config, "Run config (INI); defaults if omitted");
        sub->add_option("--out", common.out, "Output directory (overrides run.output_dir)");
    };

    auto* plan = app.add_subcommand("plan", "Design one trajectory");
    add_common(plan);
    plan->add_option("--mu", mu, "Weight on the squared predicted error")->required();
    plan->add_option("--pair", pair_text, "Controller poles slow,fast, e.g. --pair=-20,-200")
        ->required();

    auto* track = app.add_subcommand("track", "Track a planned trajectory file");
    add_common(track);
    track->add_option("--trajectory", trajectory_path, "Trajectory CSV from 'plan'")->required();
    track->add_option("--pair", pair_text, "Controller poles slow,fast")->required();
    track->add_option("--mu", track_mu, "Weight the trajectory was planned with (label only)");

    auto* sweep = app.add_subcommand("sweep", "Frontier sweep for every configured controller");
    add_common(sweep);
    sweep->add_option("--jobs", jobs, "Worker threads per sweep (overrides run.workers)");

    auto* stiff = app.add_subcommand("stiffness", "Refit the spring model from a frontier CSV");
    stiff->add_option("--frontier", frontier_path, "Frontier CSV from 'sweep'")->required();
    stiff->add_option("--pair", pair_text, "Controller poles slow,fast (label only)");
    stiff->add_option("--out", common.out, "Directory for the spring JSON");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    }
    catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    }
    catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << '\n' << app.help();
        return kUsage;
    }

    try {
        if (plan->parsed())
            return cmd_plan(common, mu, pair_text, out);
        if (track->parsed())
            return cmd_track(common, trajectory_path, pair_text, track_mu, out);
        if (sweep->parsed())
            return cmd_sweep(common, jobs, out, err);
        return cmd_stiffness(frontier_path, pair_text, common.out, out);
    }
    catch (const UsageError& e) {
        err << "usage error: " << e.what() << '\n';
        return kUsage;
    }
    catch (const SchemaError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }
    catch (const DomainError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }
    catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kFailure;
    }
}

} // namespace plantrack::cli
