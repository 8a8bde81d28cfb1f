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

// Blockage-geometry and renewal-statistics checks.  Reference values are
// frozen from independent high-precision evaluation of the defining
// formulas (mpmath, 30 digits) at the default indoor scenario.

#include <cmath>
#include <gtest/gtest.h>

#include "thzmc/blockage.hpp"
#include "thzmc/params.hpp"

using namespace thzmc;

namespace
{
SystemParams defaults() { return SystemParams{}; }
} // namespace

TEST(Blockage, StatsMatchDefaultScenario)
{
    const BlockageStats s = BlockageStats::from_params(defaults());
    // zeta = exp(-2 * 0.2 * 0.3^2), beta = 2 * 0.2 * 0.3 * (0.5 / 1.8)
    EXPECT_NEAR(s.zeta, 0.96464029348312303, 1e-15);
    EXPECT_NEAR(s.beta, 1.0 / 30.0, 1e-17);
}

TEST(Blockage, DepthIsAffineInDistance)
{
    const SystemParams p = defaults();
    // (1.7 - 1.2) / (3.0 - 1.2) * 9 + 0.3 = 2.8
    EXPECT_NEAR(blockage_depth(p, 9.0), 2.8, 1e-12);
    EXPECT_NEAR(blockage_depth(p, 0.0), p.r_b, 1e-15);
    // Slope check at two more points.
    const double slope = (blockage_depth(p, 7.0) - blockage_depth(p, 3.0)) / 4.0;
    EXPECT_NEAR(slope, (p.h_b - p.h_u) / (p.h_a - p.h_u), 1e-12);
}

TEST(Blockage, LosProbabilityFrozenValue)
{
    const SystemParams p = defaults();
    // zeta * exp(-10/30) evaluated independently.
    EXPECT_NEAR(los_probability(p, 10.0), 0.69119497372174685, 1e-15);
    EXPECT_NEAR(los_probability(p, 0.0), 0.96464029348312303, 1e-15);
}

TEST(Blockage, TemporalDensityFrozenValue)
{
    const SystemParams p = defaults();
    // 2 * 0.3 * 1.0 * 0.2 * 2.8 = 0.336 events / s
    EXPECT_NEAR(temporal_density(p, 9.0), 0.336, 1e-15);
}

TEST(Blockage, MeanDurationsFrozenValues)
{
    const SystemParams p = defaults();
    EXPECT_NEAR(mean_los_duration(p, 9.0), 2.9761904761904767, 1e-12);
    EXPECT_NEAR(mean_nlos_duration(p, 9.0), 1.1885090024134835, 1e-12);
}

TEST(Blockage, RenewalBalanceHolds)
{
    // p_L(x) * (E[t_LOS] + E[t_NLOS]) == E[t_LOS] for x = 1..30 m.
    const SystemParams p = defaults();
    for (int x = 1; x <= 30; ++x)
    {
        const double pl = los_probability(p, x);
        const double tl = mean_los_duration(p, x);
        const double tn = mean_nlos_duration(p, x);
        EXPECT_NEAR(pl * (tl + tn), tl, 1e-12 * tl) << "x = " << x;
    }
}

TEST(Blockage, MonotoneCouplings)
{
    SystemParams p = defaults();
    double prev_pl = 2.0, prev_d = -1.0, prev_tn = 0.0;
    for (double x = 0.5; x <= 25.0; x += 0.5)
    {
        const double pl = los_probability(p, x);
        const double d = blockage_depth(p, x);
        const double tn = mean_nlos_duration(p, x);
        EXPECT_LT(pl, prev_pl) << "p_L must decrease with distance";
        EXPECT_GT(d, prev_d) << "zone depth must grow with distance";
        EXPECT_GT(tn, prev_tn) << "blocked spells lengthen with distance";
        prev_pl = pl;
        prev_d = d;
        prev_tn = tn;
    }
    // Denser crowds block more.
    SystemParams dense = defaults();
    dense.lambda_b = 0.5;
    EXPECT_LT(los_probability(dense, 5.0), los_probability(p, 5.0));
    EXPECT_LT(mean_los_duration(dense, 5.0), mean_los_duration(p, 5.0));
}

TEST(Blockage, NoBlockersEdgeCase)
{
    SystemParams p = defaults();
    p.lambda_b = 0.0;
    EXPECT_TRUE(p.never_blocked());
    EXPECT_DOUBLE_EQ(los_probability(p, 12.0), 1.0);
    EXPECT_TRUE(std::isinf(mean_los_duration(p, 12.0)));
    EXPECT_THROW(mean_nlos_duration(p, 12.0), std::domain_error);
}

TEST(Blockage, RejectsBadDistances)
{
    const SystemParams p = defaults();
    EXPECT_THROW(los_probability(p, -1.0), std::invalid_argument);
    EXPECT_THROW(blockage_depth(p, std::nan("")), std::invalid_argument);
}

TEST(Blockage, RejectsBadGeometry)
{
    SystemParams p = defaults();
    p.h_b = 3.5; // blocker taller than the AP ceiling
    EXPECT_THROW(p.validate(), std::invalid_argument);
    p = defaults();
    p.h_u = 2.0; // user above blocker head height
    EXPECT_THROW(p.validate(), std::invalid_argument);
    p = defaults();
    p.r_b = 0.0;
    EXPECT_THROW(p.validate(), std::invalid_argument);
}
