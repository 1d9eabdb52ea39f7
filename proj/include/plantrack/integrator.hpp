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

#include <array>
#include <cstddef>

namespace plantrack {

template <std::size_t N>
using StateArray = std::array<double, N>;

/// One classical fourth-order Runge-Kutta step of x' = f(t, x).
template <std::size_t N, class Rhs>
StateArray<N> rk4_step(const Rhs& f, double t, const StateArray<N>& x, double h)
{
    auto shifted = [&x](double a, const StateArray<N>& k) {
        StateArray<N> r;
        for (std::size_t i = 0; i < N; ++i)
            r[i] = x[i] + a * k[i];
        return r;
    };
    const StateArray<N> k1 = f(t, x);
    const StateArray<N> k2 = f(t + 0.5 * h, shifted(0.5 * h, k1));
    const StateArray<N> k3 = f(t + 0.5 * h, shifted(0.5 * h, k2));
    const StateArray<N> k4 = f(t + h, shifted(h, k3));
    StateArray<N> out;
    for (std::size_t i = 0; i < N; ++i)
        out[i] = x[i] + h / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
    return out;
}

} // namespace plantrack
