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

#include <cstddef>
#include <vector>

#include <Eigen/Dense>

namespace plantrack {

/// min 1/2 x'Hx + g'x  s.t.  A x = b,  lower <= x <= upper.
/// Infinite bounds mark free variables. Variables pinned by equality rows should be left
/// unbounded so the working-set KKT rows stay independent.
struct QuadraticProgram {
    Eigen::MatrixXd hessian;
    Eigen::VectorXd gradient;
    Eigen::MatrixXd eq_matrix;
    Eigen::VectorXd eq_rhs;
    Eigen::VectorXd lower;
    Eigen::VectorXd upper;

    Eigen::Index variables() const { return hessian.rows(); }
    Eigen::Index equalities() const { return eq_matrix.rows(); }

    double objective(const Eigen::VectorXd& x) const;
};

struct QpSettings {
    int max_iterations = 500;
    double feasibility_tol = 1e-10;
    double step_tol = 1e-12;
    double multiplier_tol = 1e-10;
    double min_rcond = 1e-15;
};

struct QpSolution {
    Eigen::VectorXd x;
    Eigen::VectorXd eq_multipliers;    // nu with H x + g + A' nu - z_lo + z_hi = 0
    Eigen::VectorXd bound_multipliers; // signed: > 0 lower active, < 0 upper active, 0 free
    std::vector<Eigen::Index> active;  // indices of bounds held in the final working set
    int iterations = 0;
    double objective = 0.0;
    double kkt_residual = 0.0;
};

/// Max-norm KKT residual: stationarity, primal feasibility, dual sign, complementarity.
double kkt_residual(const QuadraticProgram& qp, const QpSolution& sol);

/// Primal active-set method for a convex QP whose Hessian is positive definite on the null
/// space of the working-set constraints. `start` must satisfy every constraint.
/// Throws NumericalFailure on a singular KKT system or when the iteration limit is hit.
QpSolution solve_active_set(const QuadraticProgram& qp, const Eigen::VectorXd& start,
                            const QpSettings& settings = {});

} // namespace plantrack
