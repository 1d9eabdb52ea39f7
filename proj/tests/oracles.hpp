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
// Independent reference computations used only by the tests. Nothing here calls into the
// code paths it is used to check.
#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <random>
#include <vector>

#include <Eigen/Dense>
#include <unsupported/Eigen/MatrixFunctions>

namespace plantrack::oracle {

/// Unconstrained minimizer of int_0^1 y''^2 with y(0)=0, y'(0)=0, y(1)=5, free end slope.
inline double cubic_y(double t) { return 7.5 * t * t - 2.5 * t * t * t; }
inline double cubic_v(double t) { return 15.0 * t - 7.5 * t * t; }
inline double cubic_a(double t) { return 15.0 - 15.0 * t; }

/// RK4 on e' = v(t) - lambda e, e(0) = 0, sampled every `dt` for `knots` samples, with
/// `substeps` internal steps per sample interval.
inline std::vector<double> lag_ode(const std::function<double(double)>& v, double lambda,
                                   double dt, std::size_t knots, int substeps = 200)
{
    std::vector<double> out(knots, 0.0);
    const double h = dt / substeps;
    double e = 0.0;
    for (std::size_t k = 1; k < knots; ++k) {
        double t = dt * static_cast<double>(k - 1);
        for (int s = 0; s < substeps; ++s) {
            auto f = [&](double tt, double ee) { return v(tt) - lambda * ee; };
            const double k1 = f(t, e);
            const double k2 = f(t + 0.5 * h, e + 0.5 * h * k1);
            const double k3 = f(t + 0.5 * h, e + 0.5 * h * k2);
            const double k4 = f(t + h, e + h * k3);
            e += h / 6.0 * (k1 + 2 * k2 + 2 * k3 + k4);
            t += h;
        }
        out[k] = e;
    }
    return out;
}

/// Random piecewise-linear velocity profile with breakpoints on the sampling grid.
struct PiecewiseLinear {
    std::vector<double> times;
    std::vector<double> values;

    double operator()(double t) const
    {
        if (t <= times.front())
            return values.front();
        for (std::size_t i = 1; i < times.size(); ++i) {
            if (t <= times[i]) {
                const double s = (t - times[i - 1]) / (times[i] - times[i - 1]);
                return values[i - 1] + s * (values[i] - values[i - 1]);
            }
        }
        return values.back();
    }
};

inline PiecewiseLinear random_piecewise_linear(std::mt19937& rng, double dt, std::size_t knots)
{
    std::uniform_int_distribution<int> pieces(1, 8);
    std::uniform_real_distribution<double> val(-10.0, 10.0);
    const int n = pieces(rng);
    PiecewiseLinear p;
    p.times.push_back(0.0);
    p.values.push_back(val(rng));
    std::vector<std::size_t> cuts;
    std::uniform_int_distribution<std::size_t> pick(1, knots - 2);
    for (int i = 0; i < n - 1; ++i)
        cuts.push_back(pick(rng));
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
    for (auto c : cuts) {
        p.times.push_back(dt * static_cast<double>(c));
        p.values.push_back(val(rng));
    }
    p.times.push_back(dt * static_cast<double>(knots - 1));
    p.values.push_back(val(rng));
    return p;
}

/// Exact response of the linear altitude loop y'' = (k1 (r - y) - k2 y') / M to a
/// piecewise-cubic reference, via the matrix exponential of the loop augmented with the
/// reference's Taylor chain. `segments` holds (t_start, c0, c1, c2, c3) per piece, with
/// r(t) = c0 + c1 s + c2 s^2 + c3 s^3 and s = t - t_start. Returns (y, y_dot) at every
/// multiple of `step` up to `horizon`; `step` must divide each piece.
struct CubicPiece {
    double t0, c0, c1, c2, c3;
};

inline std::vector<Eigen::Vector2d> linear_loop_response(const std::vector<CubicPiece>& pieces,
                                                         double piece_len, double k1, double k2,
                                                         double mass, double step,
                                                         std::size_t steps_per_piece)
{
    Eigen::Matrix<double, 6, 6> A = Eigen::Matrix<double, 6, 6>::Zero();
    // z = [y, y', r, r', r'', r''']
    A(0, 1) = 1.0;
    A(1, 0) = -k1 / mass;
    A(1, 1) = -k2 / mass;
    A(1, 2) = k1 / mass;
    A(2, 3) = 1.0;
    A(3, 4) = 1.0;
    A(4, 5) = 1.0;
    const Eigen::Matrix<double, 6, 6> Phi = (A * step).exp();
    (void)piece_len;

    std::vector<Eigen::Vector2d> out;
    Eigen::Vector2d yv(0.0, 0.0);
    out.push_back(yv);
    for (const auto& p : pieces) {
        Eigen::Matrix<double, 6, 1> z;
        z << yv(0), yv(1), p.c0, p.c1, 2.0 * p.c2, 6.0 * p.c3;
        for (std::size_t s = 0; s < steps_per_piece; ++s) {
            z = Phi * z;
            out.emplace_back(z(0), z(1));
        }
        yv << z(0), z(1);
    }
    return out;
}

} // namespace plantrack::oracle
