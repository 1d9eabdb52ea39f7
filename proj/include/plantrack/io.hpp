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
#include <string>
#include <vector>

#include "json.hpp"

#include "plantrack/collocation_planner.hpp"
#include "plantrack/frontier.hpp"
#include "plantrack/tracking_sim.hpp"

namespace plantrack::io {

/// Shortest-safe decimal form: 17 significant digits, exact on round trip.
std::string format_double(double v);

extern const std::vector<std::string> kTrajectoryColumns; // t,y,v,a,u,e_pred
extern const std::vector<std::string> kTrackingColumns;   // t,x,y,q,xdot,ydot,qdot,u1,u2,y_ref,err
extern const std::vector<std::string> kFrontierColumns;

void write_trajectory_csv(std::ostream& out, const PlannedTrajectory& traj);
/// Throws SchemaError naming the offending column or line.
PlannedTrajectory read_trajectory_csv(std::istream& in);

void write_tracking_csv(std::ostream& out, const TrackingResult& result);

void write_frontier_csv(std::ostream& out, const Frontier& frontier);
/// Points only; the controller is not stored in the file.
std::vector<FrontierPoint> read_frontier_csv(std::istream& in);

nlohmann::ordered_json pair_json(const EigenvaluePair& pair);
nlohmann::ordered_json plan_summary_json(const PlannedTrajectory& traj, const EigenvaluePair& pair);
nlohmann::ordered_json run_summary_json(double mu, const EigenvaluePair& pair,
                                        const TrackingScore& actual, double designed_cost,
                                        double predicted_error_integral);
nlohmann::ordered_json spring_json(const SpringFit& fit, const EigenvaluePair* pair);

std::string sha256_hex(const std::string& bytes);
std::string sha256_file(const std::filesystem::path& path);

/// Writes to `path` via a temporary sibling and rename, so readers never see partial files.
void write_file_atomic(const std::filesystem::path& path, const std::string& contents);

std::string read_file(const std::filesystem::path& path);

} // namespace plantrack::io
