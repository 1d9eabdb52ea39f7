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

#include <stdexcept>
#include <string>

namespace plantrack {

/// Non-finite or out-of-domain input to a model or estimator routine.
class DomainError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Boundary data and bounds admit no feasible trajectory.
class InfeasibleProblem : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Linear-algebra breakdown (singular KKT system, active-set cycling).
class NumericalFailure : public std::runtime_error {
public:
    NumericalFailure(const std::string& what, double rcond = 0.0)
        : std::runtime_error(what), rcond_(rcond) {}

    /// Reciprocal condition estimate of the offending KKT matrix, 0 if not applicable.
    double rcond() const noexcept { return rcond_; }

private:
    double rcond_;
};

class SimulationDiverged : public std::runtime_error {
public:
    SimulationDiverged(const std::string& what, double time)
        : std::runtime_error(what), time_(time) {}

    double time() const noexcept { return time_; }

private:
    double time_;
};

/// Malformed input file (CSV schema, config syntax).
class SchemaError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace plantrack
