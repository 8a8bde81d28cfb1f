// SPDX-License-Identifier: Apache-2.0
//
// thzmc - Multi-connectivity performance analysis for indoor THz networks
// with self-blockage and mobile human blockers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef THZMC_QUADRATURE_HPP
#define THZMC_QUADRATURE_HPP

#include <boost/math/quadrature/gauss_kronrod.hpp>

namespace thzmc
{

// Adaptive Gauss-Kronrod integration over [a, b].  The tolerance is the
// target relative error; depth 12 allows up to 2^12 panel subdivisions,
// far more than the smooth integrands here ever trigger.
template <typename F>
double integrate(F &&f, double a, double b, double rel_tol = 1e-9)
{
    return boost::math::quadrature::gauss_kronrod<double, 15>::integrate(std::forward<F>(f), a, b,
                                                                         12, rel_tol);
}

// Iterated integral over the ordered triangle a <= x1 <= x2 <= b:
// integral dx1 integral_{x1}^{b} dx2 f(x1, x2).
template <typename F>
double integrate_ordered_pair(F &&f, double a, double b, double rel_tol = 1e-8)
{
    auto outer = [&](double x1) {
        auto inner = [&](double x2) { return f(x1, x2); };
        return integrate(inner, x1, b, rel_tol);
    };
    return integrate(outer, a, b, rel_tol);
}

} // namespace thzmc

#endif
