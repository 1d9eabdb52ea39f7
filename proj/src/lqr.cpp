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
#include "plantrack/lqr.hpp"

#include <cmath>
#include <algorithm>
#include <cstdio>

#include "plantrack/errors.hpp"

namespace plantrack {

EigenvaluePair EigenvaluePair::from(double a, double b)
{
    EigenvaluePair pair;
    if (std::abs(a) <= std::abs(b)) {
        pair.lambda_slow = a;
        pair.lambda_fast = b;
    }
    else {
        pair.lambda_slow = b;
        pair.lambda_fast = a;
    }
    pair.validate();
    return pair;
}

void EigenvaluePair::validate() const
{
    if (!std::isfinite(lambda_fast) || !std::isfinite(lambda_slow) || lambda_fast >= 0.0 ||
        lambda_slow >= 0.0)
        throw DomainError("EigenvaluePair: poles must be finite and strictly negative, got " +
                          label());
    if (std::abs(lambda_slow) > std::abs(lambda_fast))
        throw DomainError("EigenvaluePair: |lambda_slow| must not exceed |lambda_fast|, got " +
                          label());
}

std::string EigenvaluePair::label() const
{
    char buf[64];
    std::snprintf(buf, sizeof(buf), "[%g %g]", lambda_slow, lambda_fast);
    return buf;
}

ControllerSpec design_controller(const EigenvaluePair& pair, const ModelParams& params)
{
    pair.validate();
    params.validate();
    if (pair.lambda_fast == pair.lambda_slow)
        throw DomainError("design_controller: repeated pole " + pair.label() +
                          " has no distinct dominant eigenvalue");

    // s^2 + (k2/M) s + k1/M = (s - l1)(s - l2)
    ControllerSpec spec;
    spec.pair = pair;
    spec.k1 = params.mass * pair.lambda_fast * pair.lambda_slow;
    spec.k2 = -params.mass * (pair.lambda_fast + pair.lambda_slow);
    spec.n1 = spec.k1;
    spec.n2 = 0.0;
    spec.dominant_lambda = dominant_eigenvalue(pair);
    return spec;
}

double control_law(const ControllerSpec& spec, double y, double y_dot, double reference,
                   const ModelParams& params)
{
    return -spec.k1 * y - spec.k2 * y_dot + spec.n1 * reference + params.hover_thrust();
}

double dominant_eigenvalue(const EigenvaluePair& pair)
{
    pair.validate();
    return std::min(std::abs(pair.lambda_slow), std::abs(pair.lambda_fast));
}

} // namespace plantrack
