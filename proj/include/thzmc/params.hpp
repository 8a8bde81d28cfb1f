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

#ifndef THZMC_PARAMS_HPP
#define THZMC_PARAMS_HPP

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace thzmc
{

// Geometry and density parameters of a single indoor deployment scenario.
// Ceiling-mounted access points (APs) serve a user equipment (UE) carried at
// height h_u; pedestrians of shoulder radius r_b and height h_b move on the
// floor and intermittently block the AP-UE rays. All lengths are in meters,
// densities in 1/m^2, speeds in m/s, angles in radians.
struct SystemParams
{
    double h_a = 3.0;        // AP (ceiling) height
    double h_u = 1.2;        // UE antenna height
    double h_b = 1.7;        // blocker height
    double r_b = 0.3;        // blocker cylinder radius
    double lambda_b = 0.2;   // blocker density on the floor plane
    double lambda_a = 1e-2;  // AP density on the ceiling plane
    double v_b = 1.0;        // blocker walking speed
    double omega = std::numbers::pi; // azimuth sector not lost to self-blockage
    double r0 = 1.0;         // minimum horizontal AP-UE separation

    // Throws std::invalid_argument if the parameter set is not physically
    // meaningful (heights must satisfy h_a > h_b > h_u, sector in (0, 2*pi],
    // densities non-negative, remaining lengths/speeds positive).
    void validate() const
    {
        if (!(h_a > h_b))
            throw std::invalid_argument("SystemParams: AP height must exceed blocker height");
        if (!(h_b > h_u))
            throw std::invalid_argument("SystemParams: blocker height must exceed UE height");
        if (!(r_b > 0.0))
            throw std::invalid_argument("SystemParams: blocker radius must be positive");
        if (!(lambda_b >= 0.0))
            throw std::invalid_argument("SystemParams: blocker density must be non-negative");
        if (!(lambda_a > 0.0))
            throw std::invalid_argument("SystemParams: AP density must be positive");
        if (!(v_b > 0.0))
            throw std::invalid_argument("SystemParams: blocker speed must be positive");
        if (!(omega > 0.0) || omega > 2.0 * std::numbers::pi + 1e-12)
            throw std::invalid_argument("SystemParams: sector angle must lie in (0, 2*pi]");
        if (!(r0 > 0.0))
            throw std::invalid_argument("SystemParams: minimum AP separation must be positive");
    }

    // True when no blockers are deployed, i.e. every link is always LOS.
    bool never_blocked() const { return lambda_b == 0.0; }
};

// Distance-independent constants of the LOS-probability law
// p_L(x) = zeta * exp(-beta * x), the void probability of the blockage
// zone (a rectangle of width 2 r_b and depth d(x)).  zeta is the x -> 0
// stub contributed by the blocker radius, beta the exposure growth of the
// zone with horizontal distance x.
struct BlockageStats
{
    double zeta; // LOS probability at x -> 0
    double beta; // exponential decay rate over horizontal distance, 1/m

    static BlockageStats from_params(const SystemParams &p)
    {
        p.validate();
        BlockageStats s;
        s.zeta = std::exp(-2.0 * p.lambda_b * p.r_b * p.r_b);
        s.beta = 2.0 * p.lambda_b * p.r_b * (p.h_b - p.h_u) / (p.h_a - p.h_u);
        return s;
    }
};

} // namespace thzmc

#endif
