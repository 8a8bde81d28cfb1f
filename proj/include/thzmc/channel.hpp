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

#ifndef THZMC_CHANNEL_HPP
#define THZMC_CHANNEL_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numbers>
#include <stdexcept>
#include <utility>
#include <vector>

#include "thzmc/params.hpp"
#include "thzmc/spectrum.hpp"

namespace thzmc
{

constexpr double speed_of_light = 299792458.0; // m/s

// Unit conversions: all internal math is linear SI; decibel quantities are
// converted once at the configuration boundary.
inline double dbm_to_watt(double dbm) { return 1e-3 * std::pow(10.0, dbm / 10.0); }
inline double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }
inline double linear_to_db(double lin) { return 10.0 * std::log10(lin); }

// Horizontal (2D) and slant (3D) AP-UE distances of one link.
struct LinkGeometry
{
    double x;     // horizontal separation, m
    double x_bar; // slant distance sqrt((h_a - h_u)^2 + x^2), m

    static LinkGeometry from_distance(const SystemParams &p, double x)
    {
        if (!(x >= 0.0) || !std::isfinite(x))
            throw std::invalid_argument("LinkGeometry: horizontal distance must be finite and >= 0");
        const double dh = p.h_a - p.h_u;
        return LinkGeometry{x, std::sqrt(dh * dh + x * x)};
    }
};

// Transmit-side and noise constants of the link budget, all linear SI.
struct LinkBudget
{
    double p_t_total;  // total transmit power, W
    double g_ap;       // AP antenna gain, linear
    double g_ue;       // UE antenna gain, linear
    double n0_density; // noise power spectral density, W/Hz
    bool water_filling = false; // per-sub-band power: false = uniform split

    void validate() const
    {
        if (!(p_t_total > 0.0) || !(g_ap > 0.0) || !(g_ue > 0.0) || !(n0_density > 0.0))
            throw std::invalid_argument("LinkBudget: power, gains and noise density must be positive");
    }
};

// Free-space spreading plus molecular absorption path loss (linear factor):
//
//   L(f, x) = (4 pi f x_bar / c)^2 * exp(K_abs(f) * x_bar)
//
// K_abs(f) is interpolated from the spectrum; f must lie inside the sampled
// window and the geometry must not be degenerate (x_bar = 0).
inline double path_loss(double f, const LinkGeometry &geom, const AbsorptionSpectrum &spec)
{
    if (!(geom.x_bar > 0.0))
        throw std::invalid_argument("path_loss: degenerate geometry (zero propagation distance)");
    const double k = spec.k_abs(f); // throws std::out_of_range when f is outside the window
    const double spreading = 4.0 * std::numbers::pi * f * geom.x_bar / speed_of_light;
    return spreading * spreading * std::exp(k * geom.x_bar);
}

namespace detail
{
// Index range [first, last] (inclusive) of the sub-bands forming the usable
// band: the maximal contiguous run of sub-band centers around the window's
// loss minimum whose path loss stays within a factor 2 (3 dB) of that
// minimum.
struct SubBandRun
{
    std::size_t first;
    std::size_t last;
    std::size_t count() const { return last - first + 1; }
};

inline SubBandRun usable_run(const LinkGeometry &geom, const AbsorptionSpectrum &spec,
                             const TransmissionWindow &window)
{
    window.validate();
    if (!spec.covers(window))
        throw std::invalid_argument("usable_bandwidth: spectrum does not cover the transmission window");
    // Every sub-band must contain at least one absorption sample; a coarser
    // grid would silently alias narrow absorption lines.
    const auto &fs = spec.frequencies();
    for (std::size_t i = 1; i < fs.size(); ++i)
        if (fs[i] > window.lo && fs[i - 1] < window.hi &&
            fs[i] - fs[i - 1] > window.delta_f * (1.0 + 1e-9))
            throw std::invalid_argument(
                "usable_bandwidth: spectrum sample spacing exceeds the sub-band width");
    const std::size_t m = window.sub_bands();
    std::vector<double> loss(m);
    std::size_t best = 0;
    for (std::size_t k = 0; k < m; ++k)
    {
        loss[k] = path_loss(window.center(k), geom, spec);
        if (loss[k] < loss[best])
            best = k;
    }
    const double threshold = 2.0 * loss[best];
    std::size_t lo = best, hi = best;
    while (lo > 0 && loss[lo - 1] <= threshold)
        --lo;
    while (hi + 1 < m && loss[hi + 1] <= threshold)
        ++hi;
    return SubBandRun{lo, hi};
}
} // namespace detail

// Edges (Hz) of the usable band: the maximal contiguous interval aligned to
// sub-band boundaries, containing the window's minimum-loss frequency, in
// which every sub-band center's path loss is within 3 dB of the minimum.
// At minimum the single best sub-band qualifies, so the band is never empty.
inline std::pair<double, double> usable_bandwidth(const LinkGeometry &geom,
                                                  const AbsorptionSpectrum &spec,
                                                  const TransmissionWindow &window)
{
    const auto run = detail::usable_run(geom, spec, window);
    return {window.lo + static_cast<double>(run.first) * window.delta_f,
            window.lo + static_cast<double>(run.last + 1) * window.delta_f};
}

// Number of sub-bands inside the usable band; always >= 1.
inline std::size_t sub_band_count(const LinkGeometry &geom, const AbsorptionSpectrum &spec,
                                  const TransmissionWindow &window)
{
    return detail::usable_run(geom, spec, window).count();
}

namespace detail
{
// Water-filling power split over per-sub-band noise-to-channel ratios
// q_k = L_k * delta_f * n0 / (g_a * g_u): maximize sum log2(1 + p_k / q_k)
// s.t. sum p_k = P.  Standard iterative deactivation of sub-bands whose
// water level falls below their q_k.
inline std::vector<double> water_fill(const std::vector<double> &q, double total)
{
    const std::size_t n = q.size();
    std::vector<std::size_t> order(n);
    for (std::size_t i = 0; i < n; ++i)
        order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return q[a] < q[b]; });
    // With the m best sub-bands active, level = (total + sum q)/m; keep the
    // largest m for which the level clears the worst active sub-band.
    double qsum = 0.0;
    std::size_t active = 0;
    double level = 0.0;
    for (std::size_t m_try = 1; m_try <= n; ++m_try)
    {
        qsum += q[order[m_try - 1]];
        const double lvl = (total + qsum) / static_cast<double>(m_try);
        if (lvl > q[order[m_try - 1]])
        {
            active = m_try;
            level = lvl;
        }
    }
    std::vector<double> p(n, 0.0);
    for (std::size_t i = 0; i < active; ++i)
        p[order[i]] = level - q[order[i]];
    return p;
}
} // namespace detail

// Wideband link capacity (bit/s): the sum over the usable band's sub-bands
// of delta_f * log2(1 + SNR_k), with the sub-band SNR evaluated at the
// center frequency (flat-within-sub-band assumption).  Transmit power is
// split uniformly over the usable sub-bands unless the budget selects
// water-filling.
inline double wideband_capacity(const LinkGeometry &geom, const AbsorptionSpectrum &spec,
                                const TransmissionWindow &window, const LinkBudget &budget)
{
    budget.validate();
    const auto run = detail::usable_run(geom, spec, window);
    const std::size_t nb = run.count();
    const double gain = budget.g_ap * budget.g_ue;
    const double noise = budget.n0_density * window.delta_f;
    double capacity = 0.0;
    if (!budget.water_filling)
    {
        const double p_sub = budget.p_t_total / static_cast<double>(nb);
        for (std::size_t k = run.first; k <= run.last; ++k)
        {
            const double snr = p_sub * gain / (path_loss(window.center(k), geom, spec) * noise);
            capacity += window.delta_f * std::log2(1.0 + snr);
        }
    }
    else
    {
        std::vector<double> q(nb);
        for (std::size_t k = 0; k < nb; ++k)
            q[k] = path_loss(window.center(run.first + k), geom, spec) * noise / gain;
        const std::vector<double> p = detail::water_fill(q, budget.p_t_total);
        for (std::size_t k = 0; k < nb; ++k)
            if (p[k] > 0.0)
                capacity += window.delta_f * std::log2(1.0 + p[k] / q[k]);
    }
    return capacity;
}

} // namespace thzmc

#endif
