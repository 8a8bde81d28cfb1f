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

#ifndef THZMC_BLOCKAGE_HPP
#define THZMC_BLOCKAGE_HPP

#include <cmath>
#include <limits>
#include <stdexcept>

#include "thzmc/params.hpp"

namespace thzmc
{

namespace detail
{
inline void check_distance(const SystemParams &p, double x)
{
    if (!(x >= 0.0) || !std::isfinite(x))
        throw std::invalid_argument("blockage: horizontal distance must be finite and >= 0");
    (void)p;
}
} // namespace detail

// Length of the ground-projected zone in which a blocker's center shadows
// the AP-UE ray, for a link of horizontal separation x.  By similar
// triangles the ray at blocker height h_b is at horizontal offset
// (h_b - h_u)/(h_a - h_u) * x from the UE, and the blocker body adds r_b.
inline double blockage_depth(const SystemParams &p, double x)
{
    detail::check_distance(p, x);
    return (p.h_b - p.h_u) / (p.h_a - p.h_u) * x + p.r_b;
}

// Stationary probability that a link of horizontal separation x is LOS,
// i.e. no pedestrian center falls inside its blockage zone (links in the
// self-blockage sector are excluded by construction):
// p_L(x) = zeta * exp(-beta * x).
inline double los_probability(const SystemParams &p, double x)
{
    detail::check_distance(p, x);
    const BlockageStats s = BlockageStats::from_params(p);
    return s.zeta * std::exp(-s.beta * x);
}

// Rate at which moving blockers enter the blockage zone of a link of
// horizontal separation x (blockage events per second):
// mu_B(x) = 2 * r_b * v_b * lambda_b * d(x).
inline double temporal_density(const SystemParams &p, double x)
{
    detail::check_distance(p, x);
    return 2.0 * p.r_b * p.v_b * p.lambda_b * blockage_depth(p, x);
}

// Mean duration of an unblocked (LOS) interval, 1 / mu_B(x).  Infinite when
// no blockers are deployed.
inline double mean_los_duration(const SystemParams &p, double x)
{
    detail::check_distance(p, x);
    if (p.never_blocked())
        return std::numeric_limits<double>::infinity();
    return 1.0 / temporal_density(p, x);
}

// Mean duration of a blocked (NLOS) interval, obtained from the renewal
// balance  p_L = E[t_LOS] / (E[t_LOS] + E[t_NLOS]):
//
//   E[t_NLOS](x) = (1 - zeta * e^(-beta x)) / (2 zeta r_b v_b lambda_b d(x) e^(-beta x))
//
// Undefined (throws std::domain_error) when no blockers are deployed, since
// a blocked interval then never occurs.
inline double mean_nlos_duration(const SystemParams &p, double x)
{
    detail::check_distance(p, x);
    if (p.never_blocked())
        throw std::domain_error("mean_nlos_duration: undefined when the blocker density is zero");
    const BlockageStats s = BlockageStats::from_params(p);
    const double pl = s.zeta * std::exp(-s.beta * x);
    return (1.0 - pl) /
           (2.0 * s.zeta * p.r_b * p.v_b * p.lambda_b * blockage_depth(p, x) * std::exp(-s.beta * x));
}

} // namespace thzmc

#endif
