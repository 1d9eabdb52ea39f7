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

#include <span>
#include <utility>
#include <vector>

#include <Eigen/Dense>

namespace plantrack {

/// Reference velocity sampled on a uniform grid starting at t = 0.
class VelocityProfile {
public:
    /// Knots at t_k = k * dt.
    VelocityProfile(double dt, std::vector<double> values);

    /// Explicit (t, v) knots. Rejects grids that are not uniform to 1e-12 relative or do not
    /// start at zero.
    static VelocityProfile from_knots(std::span<const std::pair<double, double>> knots);

    double dt() const { return dt_; }
    std::size_t size() const { return values_.size(); }
    double end_time() const { return dt_ * static_cast<double>(values_.size() - 1); }
    double time(std::size_t k) const { return dt_ * static_cast<double>(k); }
    const std::vector<double>& values() const { return values_; }

    /// Linear interpolation between knots; t must lie in [0, end_time()].
    double value_at(double t) const;

private:
    double dt_;
    std::vector<double> values_;
};

/// Predicted tracking error on the grid of its source profile, e(0) = 0.
struct ErrorSeries {
    double dt = 0.0;
    std::vector<double> values;

    double time(std::size_t k) const { return dt * static_cast<double>(k); }
};

/// Finite-n lag sum e(t, n) with p = 1 - exp(-lambda t / n), evaluated at the profile's end
/// time. lambda is a positive decay rate.
double error_discrete_limit_form(const VelocityProfile& profile, double lambda, std::size_t n);

/// e(t_k) = exp(-lambda t_k) * int_0^{t_k} v(s) exp(lambda s) ds with the trapezoid rule on the
/// profile's own knots. This is the solution of e' = v - lambda e, e(0) = 0.
ErrorSeries error_integral_form(const VelocityProfile& profile, double lambda);

/// Right-endpoint rectangle discretization of the same integral with n terms. Converges to
/// the integral form as n grows; kept for comparison with the finite-n lag sum.
double error_sum_discretization(const VelocityProfile& profile, double lambda, std::size_t n);

/// Lower-triangular matrix L with e = L * v, identical in value to error_integral_form on a
/// grid of `knots` points spaced `dt` apart.
Eigen::MatrixXd error_integral_map(std::size_t knots, double dt, double lambda);

/// Composite trapezoid with weights (1/2, 1, ..., 1, 1/2) * dt.
double trapezoid_quadrature(std::span<const double> samples, double dt);

/// Same over explicit (t, h) samples; rejects grids whose spacing deviates from dt.
double trapezoid_quadrature(std::span<const std::pair<double, double>> samples, double dt);

} // namespace plantrack
