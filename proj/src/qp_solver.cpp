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
#include "plantrack/qp_solver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <string>

#include "plantrack/errors.hpp"

namespace plantrack {

namespace {

enum class Side { Lower, Upper };

struct WorkingBound {
    Eigen::Index index;
    Side side;
};

struct EqpResult {
    Eigen::VectorXd x;
    Eigen::VectorXd nu;
    Eigen::VectorXd w; // one entry per working bound
};

// Solves the equality-constrained subproblem with the working bounds held fixed.
EqpResult solve_eqp(const QuadraticProgram& qp, const std::vector<WorkingBound>& working,
                    const QpSettings& settings)
{
    const Eigen::Index n = qp.variables();
    const Eigen::Index m = qp.equalities();
    const auto nw = static_cast<Eigen::Index>(working.size());
    const Eigen::Index dim = n + m + nw;

    Eigen::MatrixXd kkt = Eigen::MatrixXd::Zero(dim, dim);
    Eigen::VectorXd rhs(dim);
    kkt.topLeftCorner(n, n) = qp.hessian;
    kkt.block(0, n, n, m) = qp.eq_matrix.transpose();
    kkt.block(n, 0, m, n) = qp.eq_matrix;
    rhs.head(n) = -qp.gradient;
    rhs.segment(n, m) = qp.eq_rhs;
    for (Eigen::Index j = 0; j < nw; ++j) {
        const auto& wb = working[static_cast<std::size_t>(j)];
        kkt(n + m + j, wb.index) = 1.0;
        kkt(wb.index, n + m + j) = 1.0;
        rhs(n + m + j) = wb.side == Side::Lower ? qp.lower(wb.index) : qp.upper(wb.index);
    }

    Eigen::PartialPivLU<Eigen::MatrixXd> lu(kkt);
    const double rcond = lu.rcond();
    if (!(rcond > settings.min_rcond))
        throw NumericalFailure("active-set QP: singular KKT system (dim " + std::to_string(dim) +
                                   ", " + std::to_string(nw) + " working bounds, rcond " +
                                   std::to_string(rcond) + ")",
                               rcond);
    Eigen::VectorXd sol = lu.solve(rhs);
    // one step of iterative refinement
    sol += lu.solve(rhs - kkt * sol);

    return {sol.head(n), sol.segment(n, m), sol.tail(nw)};
}

} // namespace

double QuadraticProgram::objective(const Eigen::VectorXd& x) const
{
    return 0.5 * x.dot(hessian * x) + gradient.dot(x);
}

double kkt_residual(const QuadraticProgram& qp, const QpSolution& sol)
{
    const Eigen::VectorXd& x = sol.x;
    const Eigen::VectorXd& z = sol.bound_multipliers;
    Eigen::VectorXd stat = qp.hessian * x + qp.gradient + qp.eq_matrix.transpose() * sol.eq_multipliers - z;
    double r = stat.lpNorm<Eigen::Infinity>();
    if (qp.equalities() > 0)
        r = std::max(r, (qp.eq_matrix * x - qp.eq_rhs).lpNorm<Eigen::Infinity>());
    for (Eigen::Index i = 0; i < x.size(); ++i) {
        r = std::max(r, qp.lower(i) - x(i));
        r = std::max(r, x(i) - qp.upper(i));
        if (z(i) > 0.0) // lower bound multiplier
            r = std::max(r, std::abs(z(i) * (x(i) - qp.lower(i))));
        else if (z(i) < 0.0)
            r = std::max(r, std::abs(z(i) * (qp.upper(i) - x(i))));
    }
    return r;
}

QpSolution solve_active_set(const QuadraticProgram& qp, const Eigen::VectorXd& start,
                            const QpSettings& settings)
{
    const Eigen::Index n = qp.variables();
    if (start.size() != n || qp.gradient.size() != n || qp.lower.size() != n ||
        qp.upper.size() != n || qp.eq_matrix.cols() != n)
        throw NumericalFailure("active-set QP: dimension mismatch");

    Eigen::VectorXd x = start;
    std::vector<WorkingBound> working;
    for (Eigen::Index i = 0; i < n; ++i) {
        if (std::isfinite(qp.lower(i)) && x(i) <= qp.lower(i) + settings.feasibility_tol)
            working.push_back({i, Side::Lower});
        else if (std::isfinite(qp.upper(i)) && x(i) >= qp.upper(i) - settings.feasibility_tol)
            working.push_back({i, Side::Upper});
    }

    for (int iter = 1; iter <= settings.max_iterations; ++iter) {
        EqpResult eqp = solve_eqp(qp, working, settings);
        Eigen::VectorXd p = eqp.x - x;
        const double scale = std::max(1.0, x.lpNorm<Eigen::Infinity>());

        if (p.lpNorm<Eigen::Infinity>() <= settings.step_tol * scale) {
            x = eqp.x;
            // Lagrange multiplier of each working bound, nonnegative at optimality.
            std::size_t worst = working.size();
            double worst_value = -settings.multiplier_tol;
            for (std::size_t j = 0; j < working.size(); ++j) {
                const double w = eqp.w(static_cast<Eigen::Index>(j));
                const double mult = working[j].side == Side::Lower ? -w : w;
                if (mult < worst_value) {
                    worst_value = mult;
                    worst = j;
                }
            }
            if (worst == working.size()) {
                QpSolution out;
                out.x = std::move(x);
                out.eq_multipliers = std::move(eqp.nu);
                out.bound_multipliers = Eigen::VectorXd::Zero(n);
                for (std::size_t j = 0; j < working.size(); ++j) {
                    // z_lo - z_hi convention: lower -> +mult, upper -> -mult
                    out.bound_multipliers(working[j].index) = -eqp.w(static_cast<Eigen::Index>(j));
                    out.active.push_back(working[j].index);
                }
                out.iterations = iter;
                out.objective = qp.objective(out.x);
                out.kkt_residual = kkt_residual(qp, out);
                return out;
            }
            working.erase(working.begin() + static_cast<std::ptrdiff_t>(worst));
            continue;
        }

        double alpha = 1.0;
        std::optional<WorkingBound> blocking;
        for (Eigen::Index i = 0; i < n; ++i) {
            const bool in_working =
                std::any_of(working.begin(), working.end(), [i](const WorkingBound& wb) { return wb.index == i; });
            if (in_working)
                continue;
            if (p(i) < 0.0 && std::isfinite(qp.lower(i))) {
                const double a = (qp.lower(i) - x(i)) / p(i);
                if (a < alpha) {
                    alpha = std::max(a, 0.0);
                    blocking = WorkingBound{i, Side::Lower};
                }
            }
            else if (p(i) > 0.0 && std::isfinite(qp.upper(i))) {
                const double a = (qp.upper(i) - x(i)) / p(i);
                if (a < alpha) {
                    alpha = std::max(a, 0.0);
                    blocking = WorkingBound{i, Side::Upper};
                }
            }
        }
        x += alpha * p;
        if (blocking) {
            x(blocking->index) = blocking->side == Side::Lower ? qp.lower(blocking->index)
                                                               : qp.upper(blocking->index);
            working.push_back(*blocking);
        }
    }
    throw NumericalFailure("active-set QP: iteration limit of " +
                           std::to_string(settings.max_iterations) + " exceeded (cycling?)");
}

} // namespace plantrack
