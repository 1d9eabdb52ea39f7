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
#include "plantrack/io.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include <openssl/evp.h>

#include "plantrack/error_estimator.hpp"
#include "plantrack/errors.hpp"

namespace plantrack::io {

const std::vector<std::string> kTrajectoryColumns = {"t", "y", "v", "a", "u", "e_pred"};
const std::vector<std::string> kTrackingColumns = {"t",    "x",    "y",  "q",  "xdot", "ydot",
                                                   "qdot", "u1",   "u2", "y_ref", "err"};
const std::vector<std::string> kFrontierColumns = {"mu", "designed_cost",
                                                   "predicted_error_sq_integral", "actual_cost",
                                                   "actual_error_sq_integral"};

namespace {

std::vector<std::string> split_row(const std::string& line)
{
    std::vector<std::string> cells;
    std::string cell;
    std::istringstream is(line);
    while (std::getline(is, cell, ','))
        cells.push_back(cell);
    if (!line.empty() && line.back() == ',')
        cells.emplace_back();
    for (auto& c : cells) {
        const auto b = c.find_first_not_of(" \t\r");
        const auto e = c.find_last_not_of(" \t\r");
        c = b == std::string::npos ? std::string() : c.substr(b, e - b + 1);
    }
    return cells;
}

void write_header(std::ostream& out, const std::vector<std::string>& cols)
{
    for (std::size_t i = 0; i < cols.size(); ++i)
        out << (i ? "," : "") << cols[i];
    out << '\n';
}

void write_row(std::ostream& out, std::initializer_list<double> values)
{
    bool first = true;
    for (double v : values) {
        out << (first ? "" : ",") << format_double(v);
        first = false;
    }
    out << '\n';
}

// Reads a numeric table whose header must equal `columns` exactly.
std::vector<std::vector<double>> read_table(std::istream& in,
                                            const std::vector<std::string>& columns,
                                            const char* what)
{
    std::string line;
    if (!std::getline(in, line))
        throw SchemaError(std::string(what) + ": empty file, header row missing");
    const auto header = split_row(line);
    for (std::size_t i = 0; i < columns.size(); ++i) {
        if (i >= header.size())
            throw SchemaError(std::string(what) + ": missing column '" + columns[i] + "'");
        if (header[i] != columns[i])
            throw SchemaError(std::string(what) + ": column " + std::to_string(i + 1) +
                              " is '" + header[i] + "', expected '" + columns[i] + "'");
    }
    if (header.size() > columns.size())
        throw SchemaError(std::string(what) + ": unexpected column '" + header[columns.size()] +
                          "'");

    std::vector<std::vector<double>> rows;
    std::size_t lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.find_first_not_of(" \t\r") == std::string::npos)
            continue;
        const auto cells = split_row(line);
        if (cells.size() != columns.size())
            throw SchemaError(std::string(what) + ": line " + std::to_string(lineno) + " has " +
                              std::to_string(cells.size()) + " fields, expected " +
                              std::to_string(columns.size()));
        std::vector<double> row(cells.size());
        for (std::size_t i = 0; i < cells.size(); ++i) {
            const auto& c = cells[i];
            const auto [ptr, ec] = std::from_chars(c.data(), c.data() + c.size(), row[i]);
            if (ec != std::errc() || ptr != c.data() + c.size() || c.empty())
                throw SchemaError(std::string(what) + ": line " + std::to_string(lineno) +
                                  ", column '" + columns[i] + "': not a number: '" + c + "'");
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

} // namespace

std::string format_double(double v)
{
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

void write_trajectory_csv(std::ostream& out, const PlannedTrajectory& traj)
{
    write_header(out, kTrajectoryColumns);
    for (std::size_t k = 0; k < traj.size(); ++k)
        write_row(out, {traj.t[k], traj.y[k], traj.v[k], traj.a[k], traj.u[k],
                        traj.predicted_error.values[k]});
}

PlannedTrajectory read_trajectory_csv(std::istream& in)
{
    const auto rows = read_table(in, kTrajectoryColumns, "trajectory csv");
    if (rows.size() < 2)
        throw SchemaError("trajectory csv: at least two knots required");

    PlannedTrajectory traj;
    for (const auto& r : rows) {
        traj.t.push_back(r[0]);
        traj.y.push_back(r[1]);
        traj.v.push_back(r[2]);
        traj.a.push_back(r[3]);
        traj.u.push_back(r[4]);
        traj.predicted_error.values.push_back(r[5]);
    }
    const double dt = traj.dt();
    if (traj.t.front() != 0.0 || !(dt > 0.0))
        throw SchemaError("trajectory csv: column 't' must start at 0 and increase");
    for (std::size_t k = 1; k < traj.t.size(); ++k)
        if (std::abs((traj.t[k] - traj.t[k - 1]) - dt) > 1e-9 * dt)
            throw SchemaError("trajectory csv: column 't' is not uniformly spaced at row " +
                              std::to_string(k + 1));
    traj.predicted_error.dt = dt;
    traj.designed_cost = designed_cost(traj);
    std::vector<double> e2;
    for (double e : traj.predicted_error.values)
        e2.push_back(e * e);
    traj.predicted_error_integral = trapezoid_quadrature(std::span<const double>(e2), dt);
    return traj;
}

void write_tracking_csv(std::ostream& out, const TrackingResult& result)
{
    write_header(out, kTrackingColumns);
    for (const auto& s : result.history)
        write_row(out, {s.t, s.state.x, s.state.y, s.state.q, s.state.x_dot, s.state.y_dot,
                        s.state.q_dot, s.thrusts.u1, s.thrusts.u2, s.y_ref, s.error});
}

void write_frontier_csv(std::ostream& out, const Frontier& frontier)
{
    write_header(out, kFrontierColumns);
    for (const auto& p : frontier.points)
        write_row(out, {p.mu, p.designed_cost, p.predicted_error_integral, p.actual_cost,
                        p.actual_error_integral});
}

std::vector<FrontierPoint> read_frontier_csv(std::istream& in)
{
    const auto rows = read_table(in, kFrontierColumns, "frontier csv");
    std::vector<FrontierPoint> points;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const auto& r = rows[i];
        FrontierPoint p;
        p.mu = r[0];
        p.designed_cost = r[1];
        p.predicted_error_integral = r[2];
        p.actual_cost = r[3];
        p.actual_error_integral = r[4];
        p.trajectory_id = i;
        points.push_back(p);
    }
    return points;
}

nlohmann::ordered_json pair_json(const EigenvaluePair& pair)
{
    return nlohmann::ordered_json::array({pair.lambda_slow, pair.lambda_fast});
}

nlohmann::ordered_json plan_summary_json(const PlannedTrajectory& traj, const EigenvaluePair& pair)
{
    nlohmann::ordered_json j;
    j["mu"] = traj.mu;
    j["eigenpair"] = pair_json(pair);
    j["lambda"] = traj.lambda;
    j["designed_cost"] = traj.designed_cost;
    j["predicted_error_integral"] = traj.predicted_error_integral;
    j["objective"] = traj.objective;
    j["kkt_residual"] = traj.kkt_residual;
    j["knots"] = traj.size();
    return j;
}

nlohmann::ordered_json run_summary_json(double mu, const EigenvaluePair& pair,
                                        const TrackingScore& actual, double designed_cost,
                                        double predicted_error_integral)
{
    nlohmann::ordered_json j;
    if (std::isnan(mu))
        j["mu"] = nullptr;
    else
        j["mu"] = mu;
    j["eigenpair"] = pair_json(pair);
    j["actual_cost"] = actual.actual_cost;
    j["actual_error_integral"] = actual.actual_error_integral;
    j["designed_cost"] = designed_cost;
    j["predicted_error_integral"] = predicted_error_integral;
    return j;
}

nlohmann::ordered_json spring_json(const SpringFit& fit, const EigenvaluePair* pair)
{
    nlohmann::ordered_json j;
    j["eigenpair"] = pair ? pair_json(*pair) : nlohmann::ordered_json(nullptr);
    j["a"] = fit.a;
    j["b"] = fit.b;
    if (std::isfinite(fit.k))
        j["k"] = fit.k;
    else
        j["k"] = nullptr; // no neck: infinitely stiff
    j["neck_found"] = fit.neck_found;
    return j;
}

std::string sha256_hex(const std::string& bytes)
{
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    EVP_MD_CTX* ctx = EVP_MD_CTX_new();
    if (!ctx || EVP_DigestInit_ex(ctx, EVP_sha256(), nullptr) != 1 ||
        EVP_DigestUpdate(ctx, bytes.data(), bytes.size()) != 1 ||
        EVP_DigestFinal_ex(ctx, digest, &len) != 1) {
        EVP_MD_CTX_free(ctx);
        throw std::runtime_error("sha256: digest failed");
    }
    EVP_MD_CTX_free(ctx);
    static const char* hex = "0123456789abcdef";
    std::string out;
    for (unsigned int i = 0; i < len; ++i) {
        out += hex[digest[i] >> 4];
        out += hex[digest[i] & 0xF];
    }
    return out;
}

std::string read_file(const std::filesystem::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw SchemaError("cannot open '" + path.string() + "'");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

std::string sha256_file(const std::filesystem::path& path) { return sha256_hex(read_file(path)); }

void write_file_atomic(const std::filesystem::path& path, const std::string& contents)
{
    std::filesystem::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out)
            throw std::runtime_error("cannot write '" + tmp.string() + "'");
        out << contents;
        if (!out)
            throw std::runtime_error("write failed for '" + tmp.string() + "'");
    }
    std::filesystem::rename(tmp, path);
}

} // namespace plantrack::io
