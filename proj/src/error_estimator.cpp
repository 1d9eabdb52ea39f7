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
#include "plantrack/error_estimator.hpp"

#include <cmath>
#include <string>

#include "plantrack/errors.hpp"

namespace plantrack {

namespace {

constexpr double kUniformTol = 1e-12;

void check_lambda(double lambda, const char* who)
{
    if (!std::isfinite(lambda) || lambda <= 0.0)
        throw DomainError(std::string(who) + ": lambda must be a positive decay rate, got " +
                          std::to_string(lambda));
}

void check_terms(std::size_t n, const char* who)
{
    if (n == 0)
        throw DomainError(std::string(who) + ": term count n must be >= 1");
}

} // namespace

VelocityProfile::VelocityProfile(double dt, std::vector<double> values)
    : dt_(dt), values_(std::move(values))
{
    if (!std::isfinite(dt_) || dt_ <= 0.0)
        throw DomainError("VelocityProfile: dt must be finite and > 0");
    if (values_.empty())
        throw DomainError("VelocityProfile: at least one knot required");
    for (double v : values_)
        if (!std::isfinite(v))
            throw DomainError("VelocityProfile: non-finite velocity sample");
}

VelocityProfile VelocityProfile::from_knots(std::span<const std::pair<double, double>> knots)
{
    if (knots.size() < 2)
        throw DomainError("VelocityProfile: at least two knots required");
    if (knots.front().first != 0.0)
        throw DomainError("VelocityProfile: first knot must be at t = 0");
    const double dt = (knots.back().first - knots.front().first) /
                      static_cast<double>(knots.size() - 1);
    std::vector<double> values;
    values.reserve(knots.size());
    for (std::size_t k = 0; k < knots.size(); ++k) {
        const double expected = dt * static_cast<double>(k);
        if (std::abs(knots[k].first - expected) > kUniformTol * std::max(1.0, std::abs(expected)))
            throw DomainError("VelocityProfile: knot " + std::to_string(k) +
                              " is off the uniform grid");
        values.push_back(knots[k].second);
    }
    return VelocityProfile(dt, std::move(values));
}

double VelocityProfile::value_at(double t) const
{
    const double end = end_time();
    if (!(t >= 0.0) || t > end * (1.0 + kUniformTol) + kUniformTol)
        throw DomainError("VelocityProfile: t = " + std::to_string(t) + " outside [0, " +
                          std::to_string(end) + "]");
    if (values_.size() == 1)
        return values_.front();
    const double s = std::min(t, end) / dt_;
    auto i = static_cast<std::size_t>(s);
    if (i >= values_.size() - 1)
        return values_.back();
    const double frac = s - static_cast<double>(i);
    return values_[i] + frac * (values_[i + 1] - values_[i]);
}

double error_discrete_limit_form(const VelocityProfile& profile, double lambda, std::size_t n)
{
    check_lambda(lambda, "error_discrete_limit_form");
    check_terms(n, "error_discrete_limit_form");
    const double t = profile.end_time();
    const double h = t / static_cast<double>(n);
    // (1 - p)^(n + 1 - i) = exp(-lambda h (n + 1 - i))
    double sum = 0.0;
    for (std::size_t i = 1; i <= n; ++i) {
        const double decay = std::exp(-lambda * h * static_cast<double>(n + 1 - i));
        sum += profile.value_at(h * static_cast<double>(i)) * decay;
    }
    return h * sum;
}

ErrorSeries error_integral_form(const VelocityProfile& profile, double lambda)
{
    check_lambda(lambda, "error_integral_form");
    if (profile.size() < 2)
        throw DomainError("error_integral_form: at least two knots required");

    const double dt = profile.dt();
    const double decay = std::exp(-lambda * dt);
    const auto& v = profile.values();

    ErrorSeries out;
    out.dt = dt;
    out.values.assign(v.size(), 0.0);
    // e_k = exp(-lambda dt) (e_{k-1} + dt/2 v_{k-1}) + dt/2 v_k
    for (std::size_t k = 1; k < v.size(); ++k)
        out.values[k] = decay * (out.values[k - 1] + 0.5 * dt * v[k - 1]) + 0.5 * dt * v[k];
    return out;
}

double error_sum_discretization(const VelocityProfile& profile, double lambda, std::size_t n)
{
    check_lambda(lambda, "error_sum_discretization");
    check_terms(n, "error_sum_discretization");
    const double t = profile.end_time();
    const double h = t / static_cast<double>(n);
    double sum = 0.0;
    for (std::size_t i = 1; i <= n; ++i) {
        const double ti = h * static_cast<double>(i);
        sum += profile.value_at(ti) * std::exp(-lambda * (t - ti));
    }
    return h * sum;
}

Eigen::MatrixXd error_integral_map(std::size_t knots, double dt, double lambda)
{
    check_lambda(lambda, "error_integral_map");
    const auto n = static_cast<Eigen::Index>(knots);
    Eigen::MatrixXd L = Eigen::MatrixXd::Zero(n, n);
    for (Eigen::Index k = 1; k < n; ++k) {
        for (Eigen::Index i = 0; i <= k; ++i) {
            const double w = (i == 0 || i == k) ? 0.5 : 1.0;
            L(k, i) = w * dt * std::exp(-lambda * dt * static_cast<double>(k - i));
        }
    }
    return L;
}

double trapezoid_quadrature(std::span<const double> samples, double dt)
{
    if (samples.size() < 2)
        throw DomainError("trapezoid_quadrature: at least two samples required");
    double sum = 0.5 * (samples.front() + samples.back());
    for (std::size_t i = 1; i + 1 < samples.size(); ++i)
        sum += samples[i];
    return sum * dt;
}

double trapezoid_quadrature(std::span<const std::pair<double, double>> samples, double dt)
{
    if (samples.size() < 2)
        throw DomainError("trapezoid_quadrature: at least two samples required");
    std::vector<double> h;
    h.reserve(samples.size());
    for (std::size_t i = 0; i < samples.size(); ++i) {
        if (i > 0) {
            const double step = samples[i].first - samples[i - 1].first;
            if (std::abs(step - dt) > 1e-9 * dt)
                throw DomainError("trapezoid_quadrature: non-uniform grid at sample " +
                                  std::to_string(i));
        }
        h.push_back(samples[i].second);
    }
    return trapezoid_quadrature(std::span<const double>(h), dt);
}

} // namespace plantrack
