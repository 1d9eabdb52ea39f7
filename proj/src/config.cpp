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
#include "plantrack/config.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>

#include "plantrack/errors.hpp"
#include "plantrack/io.hpp"

namespace plantrack {

namespace pt = boost::property_tree;

namespace {

const std::map<std::string, std::set<std::string>> kSchema = {
    {"model", {"mass", "arm_length", "gravity"}},
    {"controller", {"pairs"}},
    {"plan",
     {"horizon", "segments", "y0", "v0", "yf", "y_lower", "y_upper", "initial_accel_zero"}},
    {"mu_grid", {"count", "min", "max", "spacing"}},
    {"sim", {"step"}},
    {"run", {"output_dir", "workers"}},
};

std::string trim(const std::string& s)
{
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos)
        return {};
    const auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

double to_double(const std::string& key, const std::string& text)
{
    const std::string t = trim(text);
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
    if (ec != std::errc() || ptr != t.data() + t.size() || t.empty())
        throw SchemaError("config: '" + key + "' expects a number, got '" + text + "'");
    return v;
}

std::size_t to_count(const std::string& key, const std::string& text)
{
    const std::string t = trim(text);
    std::size_t v = 0;
    const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
    if (ec != std::errc() || ptr != t.data() + t.size() || t.empty())
        throw SchemaError("config: '" + key + "' expects a non-negative integer, got '" + text +
                          "'");
    return v;
}

bool to_bool(const std::string& key, const std::string& text)
{
    const std::string t = trim(text);
    if (t == "true" || t == "1" || t == "yes" || t == "on")
        return true;
    if (t == "false" || t == "0" || t == "no" || t == "off")
        return false;
    throw SchemaError("config: '" + key + "' expects a boolean, got '" + text + "'");
}

} // namespace

std::vector<double> RunConfig::mu_grid() const
{
    return make_mu_grid(mu_count, mu_min, mu_max, mu_spacing);
}

PlanProblem RunConfig::plan_template() const
{
    PlanProblem p = plan;
    p.params = model;
    return p;
}

void RunConfig::validate() const
{
    model.validate();
    if (pairs.empty())
        throw SchemaError("config: controller.pairs is empty");
    for (const auto& p : pairs) {
        p.validate();
        if (p.lambda_fast == p.lambda_slow)
            throw SchemaError("config: repeated pole pair " + p.label());
    }
    PlanProblem probe = plan_template();
    probe.validate();
    (void)mu_grid();
    if (sim_step && !(*sim_step > 0.0 && std::isfinite(*sim_step)))
        throw SchemaError("config: sim.step must be 'auto' or a positive number");
    if (workers == 0)
        throw SchemaError("config: run.workers must be >= 1");
}

EigenvaluePair parse_pair(const std::string& text)
{
    const auto comma = text.find(',');
    if (comma == std::string::npos)
        throw SchemaError("eigenpair '" + text + "' must be written as slow,fast");
    const double a = to_double("pair", text.substr(0, comma));
    const double b = to_double("pair", text.substr(comma + 1));
    if (std::abs(a) == std::abs(b))
        throw SchemaError("eigenpair '" + text + "': repeated pole");
    try {
        return EigenvaluePair::from(-std::abs(a), -std::abs(b));
    }
    catch (const DomainError& e) {
        throw SchemaError(std::string("eigenpair '") + text + "': " + e.what());
    }
}

std::string pair_tag(const EigenvaluePair& pair)
{
    std::ostringstream os;
    os << std::abs(pair.lambda_slow) << '_' << std::abs(pair.lambda_fast);
    return os.str();
}

RunConfig parse_config(std::istream& in)
{
    // '#' starts a comment anywhere on a line; no value contains one.
    std::ostringstream cleaned;
    std::string line;
    while (std::getline(in, line)) {
        const auto hash = line.find('#');
        if (hash != std::string::npos)
            line.erase(hash);
        cleaned << line << '\n';
    }
    std::istringstream ini(cleaned.str());

    pt::ptree tree;
    try {
        pt::read_ini(ini, tree);
    }
    catch (const pt::ini_parser_error& e) {
        throw SchemaError(std::string("config: ") + e.what());
    }

    RunConfig cfg;
    for (const auto& [section, body] : tree) {
        auto schema = kSchema.find(section);
        if (schema == kSchema.end() || !body.data().empty())
            throw SchemaError("config: unknown section or top-level key '" + section + "'");
        for (const auto& [key, node] : body) {
            if (!schema->second.count(key))
                throw SchemaError("config: unknown key '" + section + "." + key + "'");
            const std::string full = section + "." + key;
            const std::string value = node.get_value<std::string>();

            if (section == "model") {
                double& dst = key == "mass" ? cfg.model.mass
                              : key == "arm_length" ? cfg.model.arm_length
                                                    : cfg.model.gravity;
                dst = to_double(full, value);
            }
            else if (section == "controller") {
                cfg.pairs.clear();
                std::istringstream items(value);
                std::string item;
                while (items >> item)
                    cfg.pairs.push_back(parse_pair(item));
            }
            else if (section == "plan") {
                if (key == "segments")
                    cfg.plan.segments = to_count(full, value);
                else if (key == "initial_accel_zero")
                    cfg.plan.enforce_initial_accel_zero = to_bool(full, value);
                else {
                    double& dst = key == "horizon" ? cfg.plan.horizon
                                  : key == "y0"    ? cfg.plan.y0
                                  : key == "v0"    ? cfg.plan.v0
                                  : key == "yf"    ? cfg.plan.yf
                                  : key == "y_lower" ? cfg.plan.y_lower
                                                     : cfg.plan.y_upper;
                    dst = to_double(full, value);
                }
            }
            else if (section == "mu_grid") {
                if (key == "count")
                    cfg.mu_count = to_count(full, value);
                else if (key == "min")
                    cfg.mu_min = to_double(full, value);
                else if (key == "max")
                    cfg.mu_max = to_double(full, value);
                else {
                    const std::string s = trim(value);
                    if (s == "log")
                        cfg.mu_spacing = GridSpacing::Log;
                    else if (s == "linear")
                        cfg.mu_spacing = GridSpacing::Linear;
                    else
                        throw SchemaError("config: mu_grid.spacing must be 'log' or 'linear'");
                }
            }
            else if (section == "sim") {
                const std::string s = trim(value);
                if (s == "auto")
                    cfg.sim_step.reset();
                else
                    cfg.sim_step = to_double(full, s);
            }
            else if (section == "run") {
                if (key == "output_dir")
                    cfg.output_dir = trim(value);
                else
                    cfg.workers = to_count(full, value);
            }
        }
    }

    try {
        cfg.validate();
    }
    catch (const SchemaError&) {
        throw;
    }
    catch (const std::exception& e) {
        throw SchemaError(std::string("config: ") + e.what());
    }
    return cfg;
}

RunConfig load_config(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in)
        throw SchemaError("config: cannot open '" + path.string() + "'");
    return parse_config(in);
}

std::string canonical_config(const RunConfig& c)
{
    using io::format_double;
    std::ostringstream os;
    os << "[model]\n"
       << "mass = " << format_double(c.model.mass) << '\n'
       << "arm_length = " << format_double(c.model.arm_length) << '\n'
       << "gravity = " << format_double(c.model.gravity) << '\n'
       << "[controller]\npairs =";
    for (const auto& p : c.pairs)
        os << ' ' << format_double(p.lambda_slow) << ',' << format_double(p.lambda_fast);
    os << "\n[plan]\n"
       << "horizon = " << format_double(c.plan.horizon) << '\n'
       << "segments = " << c.plan.segments << '\n'
       << "y0 = " << format_double(c.plan.y0) << '\n'
       << "v0 = " << format_double(c.plan.v0) << '\n'
       << "yf = " << format_double(c.plan.yf) << '\n'
       << "y_lower = " << format_double(c.plan.y_lower) << '\n'
       << "y_upper = " << format_double(c.plan.y_upper) << '\n'
       << "initial_accel_zero = " << (c.plan.enforce_initial_accel_zero ? "true" : "false")
       << "\n[mu_grid]\n"
       << "count = " << c.mu_count << '\n'
       << "min = " << format_double(c.mu_min) << '\n'
       << "max = " << format_double(c.mu_max) << '\n'
       << "spacing = " << (c.mu_spacing == GridSpacing::Log ? "log" : "linear") << '\n'
       << "[sim]\nstep = " << (c.sim_step ? format_double(*c.sim_step) : std::string("auto"))
       << '\n';
    // output_dir and workers do not affect results and are left out.
    return os.str();
}

} // namespace plantrack
