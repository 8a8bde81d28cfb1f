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

#ifndef THZMC_SPECIAL_HPP
#define THZMC_SPECIAL_HPP

#include <cmath>
#include <stdexcept>

namespace thzmc
{

// Scaled complementary error function erfcx(z) = exp(z^2) * erfc(z) for
// z >= 0.  The closed-form connection probability contains exp(w^2)*erfc(w),
// whose naive evaluation overflows for w > ~26; the scaled form stays O(1/z).
// For moderate z the direct product is exact to machine precision; for large
// z the standard asymptotic series 1/(z sqrt(pi)) * sum (-1)^k (2k-1)!!/(2z^2)^k
// converges to full double precision before its divergent tail matters.
inline double erfcx(double z)
{
    if (!(z >= 0.0))
        throw std::invalid_argument("erfcx: argument must be >= 0");
    if (z < 12.0)
        return std::exp(z * z) * std::erfc(z);
    const double inv2z2 = 1.0 / (2.0 * z * z);
    double term = 1.0;
    double sum = 1.0;
    for (int k = 1; k <= 10; ++k)
    {
        term *= -(2.0 * k - 1.0) * inv2z2;
        sum += term;
    }
    constexpr double inv_sqrt_pi = 0.564189583547756286948;
    return sum * inv_sqrt_pi / z;
}

} // namespace thzmc

#endif
