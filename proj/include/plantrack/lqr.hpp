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

#include <string>

#include "plantrack/model.hpp"

namespace plantrack {

/// Closed-loop pole pair of the altitude channel. Both poles real and negative.
struct EigenvaluePair {
    double lambda_fast = -200.0; // 1/s
    double lambda_slow = -20.0;  // 1/s

    /// Orders two poles by magnitude. Throws DomainError if either is not strictly negative.
    static EigenvaluePair from(double a, double b);

    void validate() const;

    /// "[-20 -200]" style label, slow pole first.
    std::string label() const;

    bool operator==(const EigenvaluePair&) const = default;
};

/// Altitude feedback u1 + u2 = -k1*y - k2*y_dot + n1*reference + n2*0 + M*g.
struct ControllerSpec {
    EigenvaluePair pair;
    double k1 = 0.0;              // N/m
    double k2 = 0.0;              // N*s/m
    double n1 = 0.0;              // N/m, equals k1 for zero steady-state error
    double n2 = 0.0;              // N*s/m, multiplies a zero entry
    double dominant_lambda = 0.0; // positive decay rate of the slow pole
};

/// Pole placement on the double integrator with zero steady-state offset (n1 = k1).
/// Repeated poles are rejected: the estimator needs a distinct dominant pole.
ControllerSpec design_controller(const EigenvaluePair& pair, const ModelParams& params);

/// Total thrust commanded for the current altitude state. No feed-forward term.
double control_law(const ControllerSpec& spec, double y, double y_dot, double reference,
                   const ModelParams& params);

/// Magnitude of the slower pole, used as a first-order equivalent decay rate.
double dominant_eigenvalue(const EigenvaluePair& pair);

} // namespace plantrack
