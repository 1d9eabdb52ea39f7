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

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "plantrack/collocation_planner.hpp"
#include "plantrack/frontier.hpp"
#include "plantrack/lqr.hpp"
#include "plantrack/model.hpp"

namespace plantrack {

/// Everything a pipeline run needs. Defaults reproduce the reference experiment: four
/// controllers, 1 s horizon, 60 segments, climb from 0 to 5 m.
struct RunConfig {
    ModelParams model;
    std::vector<EigenvaluePair> pairs = {
        {-100.0, -10.0}, {-200.0, -20.0}, {-300.0, -30.0}, {-500.0, -50.0}};
    PlanProblem plan;
    std::size_t mu_count = 30;
    double mu_min = 1e-2;
    double mu_max = 1e6;
    GridSpacing mu_spacing = GridSpacing::Log;
    std::optional<double> sim_step; // empty: per-controller step rule
    std::filesystem::path output_dir = "out";
    std::size_t workers = 1;

    std::vector<double> mu_grid() const;

    /// Plan template for a controller: plan fields plus model, mu and lambda left to the caller.
    PlanProblem plan_template() const;

    void validate() const;
};

/// INI-style config: `[section]` headers followed by `key = value` lines; `#` comments run to
/// the end of the line, `;` comments must start a line.
/// Missing keys keep their defaults; unknown sections or keys are rejected with SchemaError.
RunConfig load_config(const std::filesystem::path& path);
RunConfig parse_config(std::istream& in);

/// Canonical text form of a resolved config. Hashing it identifies a run.
std::string canonical_config(const RunConfig& config);

/// Parses "slow,fast" (either sign accepted; poles are stored negative).
EigenvaluePair parse_pair(const std::string& text);

/// Short filename tag, e.g. "20_200".
std::string pair_tag(const EigenvaluePair& pair);

} // namespace plantrack
