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

#ifndef THZMC_TEMPORAL_HPP
#define THZMC_TEMPORAL_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <cstdio>
#include <numbers>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "thzmc/analysis.hpp"
#include "thzmc/blockage.hpp"
#include "thzmc/channel.hpp"
#include "thzmc/distances.hpp"
#include "thzmc/params.hpp"
#include "thzmc/rng.hpp"
#include "thzmc/snapshot.hpp"

namespace thzmc
{

// Fixed AP layout for a temporal run: horizontal distances (sorted, the
// association order) plus azimuths within the non-self-blockage sector.
struct ApTopology
{
    std::vector<double> xs;
    std::vector<double> azimuths;

    std::size_t degree() const { return xs.size(); }

    void validate(const SystemParams &p) const
    {
        OrderedDistances{xs}.validate(p);
        if (azimuths.size() != xs.size())
            throw std::invalid_argument("ApTopology: one azimuth per AP required");
        for (double a : azimuths)
            if (!(std::abs(a) <= 0.5 * p.omega + 1e-12))
                throw std::invalid_argument("ApTopology: azimuth outside the non-self-blockage sector");
    }

    OrderedDistances distances() const { return OrderedDistances{xs}; }
};

// Draws a random topology: exact ordered distances plus iid uniform azimuths.
inline ApTopology sample_topology(std::size_t n, const SystemParams &p, Rng &rng)
{
    ApTopology t;
    t.xs = sample_ordered(n, p, rng).xs;
    t.azimuths.reserve(n);
    for (std::size_t i = 0; i < n; ++i)
        t.azimuths.push_back(rng.uniform(-0.5 * p.omega, 0.5 * p.omega));
    return t;
}

// One walker of the random directional model: position, heading, remaining
// travel time of the current leg.
struct BlockerState
{
    Point2 position{0.0, 0.0};
    double heading = 0.0;
    double time_to_turn = 0.0;
};

namespace detail
{
// Time until a ray p + s*v leaves the disc |q| = radius (positive root of
// the crossing quadratic; p is inside or on the boundary).
inline double wall_hit_time(const Point2 &p, double vx, double vy, double radius)
{
    const double a = vx * vx + vy * vy;
    const double b = p.x * vx + p.y * vy;
    const double c = p.x * p.x + p.y * p.y - radius * radius;
    const double disc = b * b - a * c;
    const double root = (-b + std::sqrt(std::max(disc, 0.0))) / a;
    return std::max(root, 0.0);
}

// Specular reflection of the heading at the disc boundary.
inline double reflect_heading(const Point2 &p, double vx, double vy)
{
    const double norm = std::hypot(p.x, p.y);
    const double nx = p.x / norm, ny = p.y / norm;
    const double dot = vx * nx + vy * ny;
    return std::atan2(vy - 2.0 * dot * ny, vx - 2.0 * dot * nx);
}
} // namespace detail

// Advances one RDM walker by dt inside a reflecting disc arena, splitting
// the step exactly at wall hits and leg renewals.  Only used for
// stationarity diagnostics; the temporal simulator extracts blockage events
// from whole legs without time-stepping.
inline BlockerState rdm_step(BlockerState s, double dt, double arena_radius, double v_b,
                             double leg_mean, Rng &rng)
{
    if (!(dt > 0.0))
        throw std::invalid_argument("rdm_step: dt must be positive");
    while (dt > 0.0)
    {
        const double vx = v_b * std::cos(s.heading);
        const double vy = v_b * std::sin(s.heading);
        const double to_wall = detail::wall_hit_time(s.position, vx, vy, arena_radius);
        const double step = std::min({dt, s.time_to_turn, to_wall});
        s.position.x += vx * step;
        s.position.y += vy * step;
        dt -= step;
        s.time_to_turn -= step;
        if (s.time_to_turn <= 0.0)
        {
            s.heading = rng.uniform(0.0, 2.0 * std::numbers::pi);
            s.time_to_turn = rng.exponential(1.0 / leg_mean);
        }
        else if (step == to_wall)
        {
            s.heading = detail::reflect_heading(s.position, vx, vy);
            const double rr = std::hypot(s.position.x, s.position.y);
            const double safe = arena_radius * (1.0 - 1e-12);
            if (rr > safe)
            {
                s.position.x *= safe / rr;
                s.position.y *= safe / rr;
            }
        }
    }
    return s;
}

// One per-link state change of the temporal run.
struct TraceEvent
{
    double t = 0.0;
    std::size_t link = 0;    // 0-based AP index
    bool blocked = false;    // new state of that link
    int connected = -1;      // strategy state after the change; -1 = OUTAGE
};

struct Interval
{
    double t0 = 0.0;
    double t1 = 0.0;
    double length() const { return t1 - t0; }
};

// Complete record of one temporal run: per-link LOS intervals, the
// strategy's connected-AP timeline, every per-link state-change event, and
// per-AP connected-time totals.
struct SimTrace
{
    Strategy strategy = Strategy::SC;
    ApTopology topology;
    double t_end = 0.0;
    std::vector<std::vector<Interval>> los_intervals;  // per link, sorted, disjoint
    std::vector<std::pair<double, int>> timeline;      // (start, connected link or -1)
    std::vector<TraceEvent> events;
    std::vector<double> connected_seconds;             // per link
    double outage_seconds = 0.0;

    // Per-AP share of connected (non-outage) time; sums to 1 when any
    // connected time exists.
    std::vector<double> connected_shares() const
    {
        double total = 0.0;
        for (double s : connected_seconds)
            total += s;
        std::vector<double> out(connected_seconds.size(), 0.0);
        if (total > 0.0)
            for (std::size_t i = 0; i < out.size(); ++i)
                out[i] = connected_seconds[i] / total;
        return out;
    }
};

struct TemporalOptions
{
    double arena_radius = 0.0; // 0 = automatic (>= 50 m, always covering the rectangles)
    double leg_mean = 5.0;     // mean RDM leg duration, s

    // Validation mode: draw an i.i.d. blocker field per link, so the
    // per-link blockage processes are exactly independent.  The physical
    // model (default) shares one field across all links, which correlates
    // them wherever blockage rectangles overlap near the UE.
    bool independent_fields = false;
};

namespace detail
{
struct LinkFrame
{
    double ux, uy;   // unit vector UE -> AP
    double depth;    // rectangle length d(x)
    double half_w;   // rectangle half width r_b
    bool contains(const Point2 &p) const
    {
        const double along = p.x * ux + p.y * uy;
        if (along < 0.0 || along > depth)
            return false;
        const double perp = -p.x * uy + p.y * ux;
        return perp >= -half_w && perp <= half_w;
    }
};

struct PendingEvent
{
    double t;
    std::uint32_t link;
    int delta; // +1 blocker entered the rectangle, -1 left it
};

// Crossing interval of a straight segment p + s*v, s in [0, len], with a
// rectangle slab pair; returns false when the intersection is empty.
inline bool segment_rectangle_interval(const LinkFrame &fr, const Point2 &p, double vx, double vy,
                                       double len, double &s0, double &s1)
{
    const double a0 = p.x * fr.ux + p.y * fr.uy;
    const double va = vx * fr.ux + vy * fr.uy;
    const double b0 = -p.x * fr.uy + p.y * fr.ux;
    const double vb = -vx * fr.uy + vy * fr.ux;
    double lo = 0.0, hi = len;
    // Along-axis slab 0 <= a <= depth.
    if (va == 0.0)
    {
        if (a0 < 0.0 || a0 > fr.depth)
            return false;
    }
    else
    {
        double t0 = (0.0 - a0) / va, t1 = (fr.depth - a0) / va;
        if (t0 > t1)
            std::swap(t0, t1);
        lo = std::max(lo, t0);
        hi = std::min(hi, t1);
    }
    // Cross-axis slab |b| <= half width.
    if (vb == 0.0)
    {
        if (b0 < -fr.half_w || b0 > fr.half_w)
            return false;
    }
    else
    {
        double t0 = (-fr.half_w - b0) / vb, t1 = (fr.half_w - b0) / vb;
        if (t0 > t1)
            std::swap(t0, t1);
        lo = std::max(lo, t0);
        hi = std::min(hi, t1);
    }
    if (!(hi > lo))
        return false;
    s0 = lo;
    s1 = hi;
    return true;
}
} // namespace detail

// Event-driven temporal simulation of one strategy on a fixed topology over
// [0, t_end].  Blockers form a stationary PPP in a reflecting disc arena and
// move by the random directional model; every blockage event is the exact
// crossing time of a straight leg segment with a link's blockage rectangle,
// so duration statistics carry no discretization bias.  Simultaneous link
// changes are processed in increasing AP-index order.
inline SimTrace run_temporal(StrategyKind kind, const ApTopology &topology, const SystemParams &p,
                             double t_end, Rng &rng, const TemporalOptions &opt = {})
{
    p.validate();
    topology.validate(p);
    if (!(t_end > 0.0))
        throw std::invalid_argument("run_temporal: t_end must be positive");
    const std::size_t n = topology.degree();
    if (kind.strategy == Strategy::SC && n != 1)
        throw std::invalid_argument("run_temporal: SC runs on a single-AP topology");
    if (kind.strategy != Strategy::SC && kind.n != n)
        throw std::invalid_argument("run_temporal: strategy degree must match the topology");

    // Link frames.
    std::vector<detail::LinkFrame> frames(n);
    double reach = 0.0;
    for (std::size_t i = 0; i < n; ++i)
    {
        const double d = blockage_depth(p, topology.xs[i]);
        frames[i] = detail::LinkFrame{std::cos(topology.azimuths[i]), std::sin(topology.azimuths[i]),
                                      d, p.r_b};
        reach = std::max(reach, d + p.r_b);
    }
    const double arena =
        opt.arena_radius > 0.0 ? opt.arena_radius : std::max(50.0, 1.5 * reach + 10.0);
    if (arena < reach)
        throw std::invalid_argument("run_temporal: arena does not cover the blockage rectangles");

    // Blocker trajectories -> pending enter/leave events.  One population is
    // walked against the link range [lo, hi); the physical model runs a
    // single population against every link, the independent-fields mode one
    // fresh population per link.
    std::vector<detail::PendingEvent> pending;
    std::vector<int> counts(n, 0); // blockers currently inside each rectangle
    std::vector<char> inside(n);
    const auto walk_population = [&](std::size_t lo, std::size_t hi) {
        const std::uint64_t m = rng.poisson(p.lambda_b * std::numbers::pi * arena * arena);
        for (std::uint64_t blk = 0; blk < m; ++blk)
        {
            // Stationary start: uniform position, uniform heading, fresh leg.
            const double r = arena * std::sqrt(rng.uniform());
            const double th = rng.uniform(0.0, 2.0 * std::numbers::pi);
            Point2 pos{r * std::cos(th), r * std::sin(th)};
            double heading = rng.uniform(0.0, 2.0 * std::numbers::pi);
            double leg_left = rng.exponential(1.0 / opt.leg_mean);
            for (std::size_t i = lo; i < hi; ++i)
            {
                inside[i] = frames[i].contains(pos) ? 1 : 0;
                if (inside[i])
                    ++counts[i];
            }
            double t = 0.0;
            while (t < t_end)
            {
                const double vx = p.v_b * std::cos(heading);
                const double vy = p.v_b * std::sin(heading);
                const double to_wall = detail::wall_hit_time(pos, vx, vy, arena);
                const double step = std::min({leg_left, to_wall, t_end - t});
                if (step > 0.0)
                {
                    for (std::size_t i = lo; i < hi; ++i)
                    {
                        double s0 = 0.0, s1 = 0.0;
                        if (!detail::segment_rectangle_interval(frames[i], pos, vx, vy, step, s0,
                                                                s1))
                        {
                            // A blocker marked inside whose segment misses the
                            // rectangle entirely grazed the boundary; close its
                            // stay immediately.
                            if (inside[i])
                            {
                                pending.push_back({t, static_cast<std::uint32_t>(i), -1});
                                inside[i] = 0;
                            }
                            continue;
                        }
                        if (!inside[i])
                        {
                            pending.push_back({t + s0, static_cast<std::uint32_t>(i), +1});
                            if (s1 < step)
                                pending.push_back({t + s1, static_cast<std::uint32_t>(i), -1});
                            else
                                inside[i] = 1;
                        }
                        else if (s1 < step)
                        {
                            pending.push_back({t + s1, static_cast<std::uint32_t>(i), -1});
                            inside[i] = 0;
                        }
                    }
                    pos.x += vx * step;
                    pos.y += vy * step;
                    t += step;
                    leg_left -= step;
                }
                if (t >= t_end)
                    break;
                if (leg_left <= 0.0)
                {
                    heading = rng.uniform(0.0, 2.0 * std::numbers::pi);
                    leg_left = rng.exponential(1.0 / opt.leg_mean);
                }
                else
                {
                    heading = detail::reflect_heading(pos, vx, vy);
                    // Pull strictly inside the wall: guards against round-off
                    // and against a tangent hit repeating with zero advance.
                    const double rr = std::hypot(pos.x, pos.y);
                    const double safe = arena * (1.0 - 1e-12);
                    if (rr > safe)
                    {
                        pos.x *= safe / rr;
                        pos.y *= safe / rr;
                    }
                }
            }
        }
    };
    if (!p.never_blocked())
    {
        if (opt.independent_fields)
            for (std::size_t i = 0; i < n; ++i)
                walk_population(i, i + 1);
        else
            walk_population(0, n);
        std::sort(pending.begin(), pending.end(), [](const auto &a, const auto &b) {
            if (a.t != b.t)
                return a.t < b.t;
            return a.link < b.link;
        });
    }

    // Sweep: maintain per-link blocked state and the strategy machine.
    SimTrace trace;
    trace.strategy = kind.strategy;
    trace.topology = topology;
    trace.t_end = t_end;
    trace.los_intervals.assign(n, {});
    trace.connected_seconds.assign(n, 0.0);

    std::vector<char> blocked(n);
    std::vector<double> los_open(n, -1.0);
    for (std::size_t i = 0; i < n; ++i)
    {
        blocked[i] = counts[i] > 0 ? 1 : 0;
        if (!blocked[i])
            los_open[i] = 0.0;
    }

    auto closest_los = [&]() -> int {
        for (std::size_t i = 0; i < n; ++i)
            if (!blocked[i])
                return static_cast<int>(i);
        return -1;
    };

    int connected = -1;
    switch (kind.strategy)
    {
    case Strategy::SC:
        connected = blocked[0] ? -1 : 0;
        break;
    case Strategy::C_MC:
    case Strategy::R_MC:
        connected = closest_los();
        break;
    }
    double seg_start = 0.0;
    trace.timeline.emplace_back(0.0, connected);

    auto account = [&](double until) {
        const double dt = until - seg_start;
        if (dt > 0.0)
        {
            if (connected >= 0)
                trace.connected_seconds[static_cast<std::size_t>(connected)] += dt;
            else
                trace.outage_seconds += dt;
        }
        seg_start = until;
    };

    std::size_t idx = 0;
    while (idx < pending.size())
    {
        const double t = pending[idx].t;
        if (t >= t_end)
            break;
        // Net count changes of this instant, per link.
        std::size_t j = idx;
        while (j < pending.size() && pending[j].t == t)
            ++j;
        account(t);
        for (std::size_t e = idx; e < j; ++e)
            counts[pending[e].link] += pending[e].delta;
        // Apply per-link state flips in increasing AP-index order; the
        // strategy machine reacts to each flip individually.
        for (std::size_t i = 0; i < n; ++i)
        {
            const bool now_blocked = counts[i] > 0;
            if (now_blocked == static_cast<bool>(blocked[i]))
                continue;
            blocked[i] = now_blocked ? 1 : 0;
            if (now_blocked)
            {
                trace.los_intervals[i].push_back(Interval{los_open[i], t});
                los_open[i] = -1.0;
            }
            else
            {
                los_open[i] = t;
            }
            const int prev = connected;
            switch (kind.strategy)
            {
            case Strategy::SC:
                connected = blocked[0] ? -1 : 0;
                break;
            case Strategy::C_MC:
                connected = closest_los();
                if (connected >= 0 && blocked[static_cast<std::size_t>(connected)])
                    throw std::logic_error("run_temporal: C-MC selected a blocked AP");
                break;
            case Strategy::R_MC:
                if (prev >= 0)
                {
                    // Reactive: move only when the current AP just blocked.
                    if (static_cast<std::size_t>(prev) == i && now_blocked)
                        connected = closest_los();
                    else if (blocked[static_cast<std::size_t>(prev)])
                        throw std::logic_error("run_temporal: R-MC lingered on a blocked AP");
                }
                else if (!now_blocked)
                {
                    // Outage exit: first link(s) to free up; closest wins.
                    connected = closest_los();
                }
                break;
            }
            if (connected != prev)
                trace.timeline.emplace_back(t, connected);
            trace.events.push_back(TraceEvent{t, i, now_blocked, connected});
        }
        idx = j;
    }
    account(t_end);
    for (std::size_t i = 0; i < n; ++i)
        if (los_open[i] >= 0.0)
            trace.los_intervals[i].push_back(Interval{los_open[i], t_end});
    return trace;
}

// Time-average delivered rate of a finished run: connected intervals earn
// the connected AP's wideband capacity, outage earns zero.
inline double temporal_throughput(const SimTrace &trace, const std::vector<double> &capacities)
{
    if (capacities.size() != trace.connected_seconds.size())
        throw std::invalid_argument("temporal_throughput: one capacity per AP required");
    double acc = 0.0;
    for (std::size_t i = 0; i < capacities.size(); ++i)
        acc += trace.connected_seconds[i] * capacities[i];
    return acc / trace.t_end;
}

inline double temporal_throughput(const SimTrace &trace, const SystemParams &p,
                                  const AbsorptionSpectrum &spec, const TransmissionWindow &window,
                                  const LinkBudget &budget)
{
    std::vector<double> caps;
    caps.reserve(trace.topology.degree());
    for (double x : trace.topology.xs)
        caps.push_back(wideband_capacity(LinkGeometry::from_distance(p, x), spec, window, budget));
    return temporal_throughput(trace, caps);
}

// Writes the event log: "t_seconds<TAB>ap_index<TAB>{BLOCKED|UNBLOCKED}<TAB>strategy_state",
// AP indices 1-based, strategy state AP_k or OUTAGE.
inline void write_trace(const SimTrace &trace, std::ostream &out)
{
    char buf[96];
    for (const TraceEvent &e : trace.events)
    {
        std::string state = e.connected >= 0 ? "AP_" + std::to_string(e.connected + 1) : "OUTAGE";
        std::snprintf(buf, sizeof buf, "%.9f\t%zu\t%s\t", e.t, e.link + 1,
                      e.blocked ? "BLOCKED" : "UNBLOCKED");
        out << buf << state << '\n';
    }
}

} // namespace thzmc

#endif
