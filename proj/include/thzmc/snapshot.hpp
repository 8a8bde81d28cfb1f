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

#ifndef THZMC_SNAPSHOT_HPP
#define THZMC_SNAPSHOT_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "thzmc/analysis.hpp"
#include "thzmc/blockage.hpp"
#include "thzmc/distances.hpp"
#include "thzmc/montecarlo.hpp"
#include "thzmc/params.hpp"
#include "thzmc/rng.hpp"

namespace thzmc
{

struct Point2
{
    double x;
    double y;
};

// One spatial realization: the UE at the origin, APs scattered as a PPP in
// the non-self-blockage sector beyond r0, blockers as a PPP over a disc
// large enough to reach every link's blockage rectangle.
struct Snapshot
{
    std::vector<Point2> ap_positions;      // sorted by distance, the N used APs
    std::vector<Point2> blocker_positions; // shared across all links
    double ap_region_radius = 0.0;         // sector radius used for AP sampling
    double blocker_region_radius = 0.0;    // disc radius used for blocker sampling
};

// How the snapshot estimator places blockers.
//  shared_field:      one common blocker PPP seen by all links; overlapping
//                     blockage rectangles are correlated exactly as in
//                     reality (the analytic model ignores this correlation).
//  independent_links: each link is blocked by its own independent field; the
//                     per-link blocked indicator is then an exact Bernoulli
//                     draw from the rectangle's void probability.  This mode
//                     reproduces the analytic independence assumption.
enum class BlockerModel
{
    shared_field,
    independent_links
};

struct SnapshotOptions
{
    BlockerModel blocker_model = BlockerModel::shared_field;
    // AP sector radius; 0 = automatic (expected in-sector AP count n + 40,
    // which makes a short draw practically impossible).  The estimator
    // reports an inconclusive error if more than 1% of trials still lack N
    // APs.
    double ap_region_radius = 0.0;
};

struct SnapshotEstimate
{
    double value = 0.0;
    double std_error = 0.0;
    std::size_t trials = 0;
    std::size_t short_trials = 0; // trials whose region held fewer than N APs
};

namespace detail
{
inline double auto_ap_radius(const SystemParams &p, std::size_t n)
{
    const double target = static_cast<double>(n) + 40.0; // expected AP count
    return std::sqrt(p.r0 * p.r0 + 2.0 * target / (p.omega * p.lambda_a));
}

// True when the blocker center lies inside the blockage rectangle of a link
// with azimuth direction (ux, uy), depth d and half-width r_b.
inline bool in_rectangle(const Point2 &b, double ux, double uy, double depth, double half_width)
{
    const double along = b.x * ux + b.y * uy;
    if (along < 0.0 || along > depth)
        return false;
    const double perp = -b.x * uy + b.y * ux;
    return perp >= -half_width && perp <= half_width;
}
} // namespace detail

// Draws one snapshot holding the n closest in-sector APs and (for the
// shared-field model) one blocker field covering every blockage rectangle.
// Returns an empty ap list when the region produced fewer than n APs.
inline Snapshot draw_snapshot(const SystemParams &p, std::size_t n, Rng &rng,
                              const SnapshotOptions &opt = {})
{
    p.validate();
    if (n == 0)
        throw std::invalid_argument("draw_snapshot: need n >= 1");
    Snapshot snap;
    snap.ap_region_radius =
        opt.ap_region_radius > 0.0 ? opt.ap_region_radius : detail::auto_ap_radius(p, n);
    const double r2lo = p.r0 * p.r0;
    const double r2hi = snap.ap_region_radius * snap.ap_region_radius;
    if (!(r2hi > r2lo))
        throw std::invalid_argument("draw_snapshot: AP region radius must exceed r0");

    // AP PPP restricted to the sector: Poisson count, then iid area-uniform
    // radii (density proportional to r) and uniform azimuths.
    const double mean_aps = p.lambda_a * 0.5 * p.omega * (r2hi - r2lo);
    const std::uint64_t k = rng.poisson(mean_aps);
    if (k < n)
        return snap; // short draw; caller counts it
    std::vector<double> radii(k);
    for (auto &r : radii)
        r = std::sqrt(r2lo + rng.uniform() * (r2hi - r2lo));
    std::nth_element(radii.begin(), radii.begin() + static_cast<std::ptrdiff_t>(n - 1),
                     radii.end());
    radii.resize(n);
    std::sort(radii.begin(), radii.end());
    snap.ap_positions.reserve(n);
    for (double r : radii)
    {
        const double phi = rng.uniform(-0.5 * p.omega, 0.5 * p.omega);
        snap.ap_positions.push_back(Point2{r * std::cos(phi), r * std::sin(phi)});
    }

    if (opt.blocker_model == BlockerModel::shared_field && !p.never_blocked())
    {
        // Blockers can influence a link only within d(x_N) + r_b of the UE.
        const double reach = blockage_depth(p, radii.back()) + p.r_b;
        snap.blocker_region_radius = reach;
        const double mean_blockers = p.lambda_b * std::numbers::pi * reach * reach;
        const std::uint64_t m = rng.poisson(mean_blockers);
        snap.blocker_positions.reserve(m);
        for (std::uint64_t i = 0; i < m; ++i)
        {
            const double r = reach * std::sqrt(rng.uniform());
            const double th = rng.uniform(0.0, 2.0 * std::numbers::pi);
            snap.blocker_positions.push_back(Point2{r * std::cos(th), r * std::sin(th)});
        }
    }
    return snap;
}

// Per-link LOS indicators for a drawn snapshot.  For the shared field this
// is an exact geometric test of every blocker against every rectangle; for
// independent links it is a per-link void-probability Bernoulli draw.
inline std::vector<bool> link_los(const Snapshot &snap, const SystemParams &p, Rng &rng,
                                  BlockerModel model)
{
    const std::size_t n = snap.ap_positions.size();
    std::vector<bool> los(n, true);
    if (p.never_blocked())
        return los;
    for (std::size_t i = 0; i < n; ++i)
    {
        const Point2 &ap = snap.ap_positions[i];
        const double x = std::hypot(ap.x, ap.y);
        const double depth = blockage_depth(p, x);
        if (model == BlockerModel::independent_links)
        {
            const double void_prob = std::exp(-p.lambda_b * 2.0 * p.r_b * depth);
            los[i] = rng.uniform() < void_prob;
            continue;
        }
        const double ux = ap.x / x;
        const double uy = ap.y / x;
        for (const Point2 &b : snap.blocker_positions)
        {
            if (detail::in_rectangle(b, ux, uy, depth, p.r_b))
            {
                los[i] = false;
                break;
            }
        }
    }
    return los;
}

// Connection probability by snapshot Monte Carlo: the fraction of spatial
// realizations in which at least one of the N closest in-sector APs is LOS.
// The strategy kind only contributes its degree (SC and MC share the
// connectivity event "some associated AP is LOS").  Throws when more than 1%
// of trials fail to contain N APs — enlarge the region instead of silently
// conditioning on dense draws.
inline SnapshotEstimate snapshot_connection_probability(StrategyKind kind, const SystemParams &p,
                                                        std::size_t trials, Rng &rng,
                                                        const SnapshotOptions &opt = {})
{
    p.validate();
    if (trials == 0)
        throw std::invalid_argument("snapshot_connection_probability: need trials >= 1");
    std::size_t connected = 0;
    std::size_t shorts = 0;
    std::size_t used = 0;
    for (std::size_t t = 0; t < trials; ++t)
    {
        const Snapshot snap = draw_snapshot(p, kind.n, rng, opt);
        if (snap.ap_positions.empty())
        {
            ++shorts;
            continue;
        }
        ++used;
        const std::vector<bool> los = link_los(snap, p, rng, opt.blocker_model);
        for (bool l : los)
            if (l)
            {
                ++connected;
                break;
            }
    }
    if (shorts * 100 > trials)
        throw std::runtime_error("snapshot_connection_probability: region too small — more than 1% "
                                 "of trials held fewer than N APs; increase ap_region_radius");
    const double n_used = static_cast<double>(used);
    const double mean = used > 0 ? static_cast<double>(connected) / n_used : 0.0;
    const double se = used > 1 ? std::sqrt(mean * (1.0 - mean) / n_used) : 0.0;
    return SnapshotEstimate{mean, se, used, shorts};
}

// Ergodic-capacity estimate by snapshot Monte Carlo for the strategies whose
// instantaneous AP choice is a pure function of the current blockage state:
// SC (closest AP if LOS) and C-MC (closest LOS AP).  Outage contributes zero.
// The reactive strategy depends on history and needs the temporal simulator.
inline SnapshotEstimate snapshot_capacity(StrategyKind kind, const SystemParams &p,
                                          const CapacityFn &cap, std::size_t trials, Rng &rng,
                                          const SnapshotOptions &opt = {})
{
    p.validate();
    if (kind.strategy == Strategy::R_MC)
        throw std::invalid_argument(
            "snapshot_capacity: reactive strategy is history-dependent; use the temporal simulator");
    if (trials == 0)
        throw std::invalid_argument("snapshot_capacity: need trials >= 1");
    std::vector<double> vals;
    vals.reserve(trials);
    std::size_t shorts = 0;
    for (std::size_t t = 0; t < trials; ++t)
    {
        const Snapshot snap = draw_snapshot(p, kind.n, rng, opt);
        if (snap.ap_positions.empty())
        {
            ++shorts;
            continue;
        }
        const std::vector<bool> los = link_los(snap, p, rng, opt.blocker_model);
        double c = 0.0;
        const std::size_t limit = kind.strategy == Strategy::SC ? 1 : kind.n;
        for (std::size_t i = 0; i < limit; ++i)
            if (los[i])
            {
                const Point2 &ap = snap.ap_positions[i];
                c = cap(std::hypot(ap.x, ap.y));
                break;
            }
        vals.push_back(c);
    }
    if (shorts * 100 > trials)
        throw std::runtime_error("snapshot_capacity: region too small — more than 1% of trials "
                                 "held fewer than N APs; increase ap_region_radius");
    const Estimate est = mean_with_se(vals);
    return SnapshotEstimate{est.value, est.std_error, vals.size(), shorts};
}

} // namespace thzmc

#endif
