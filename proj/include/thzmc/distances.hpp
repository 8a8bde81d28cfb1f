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

#ifndef THZMC_DISTANCES_HPP
#define THZMC_DISTANCES_HPP

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include "thzmc/params.hpp"
#include "thzmc/rng.hpp"

namespace thzmc
{

// Horizontal distances from the UE to its N closest in-sector APs, sorted
// ascending, all >= the exclusion radius r0.
struct OrderedDistances
{
    std::vector<double> xs;

    std::size_t degree() const { return xs.size(); }

    void validate(const SystemParams &p) const
    {
        if (xs.empty())
            throw std::invalid_argument("OrderedDistances: need at least one distance");
        double prev = p.r0;
        for (double x : xs)
        {
            if (!(x >= prev - 1e-12) || !std::isfinite(x))
                throw std::domain_error("OrderedDistances: distances must be sorted and >= r0");
            prev = x;
        }
    }
};

// PDF of the distance from the UE to the closest AP of a PPP of intensity
// lambda_a restricted to the angular sector omega, conditioned on all APs
// lying beyond r0:
//
//   f(x1) = omega lambda_a x1 * exp((omega/2) lambda_a r0^2) * exp(-(omega/2) lambda_a x1^2)
//
// Zero below r0.
inline double pdf_closest(double x1, const SystemParams &p)
{
    p.validate();
    if (!(x1 >= p.r0))
        return 0.0;
    const double a = 0.5 * p.omega * p.lambda_a;
    return p.omega * p.lambda_a * x1 * std::exp(a * (p.r0 * p.r0 - x1 * x1));
}

// Joint PDF of the sorted distances to the N closest APs:
//
//   f(x1..xN) = (omega lambda_a)^N * exp((omega/2) lambda_a r0^2) * (prod xi) * exp(-(omega/2) lambda_a xN^2)
//
// on the ordered support r0 <= x1 <= ... <= xN, zero outside.  Unsorted
// input is rejected as a domain error; the chain-rule factorization of the
// order statistics requires the ordering.
inline double joint_pdf(const OrderedDistances &xs, const SystemParams &p)
{
    p.validate();
    xs.validate(p);
    const std::size_t n = xs.degree();
    const double a = 0.5 * p.omega * p.lambda_a;
    double prod = 1.0;
    for (double x : xs.xs)
        prod *= p.omega * p.lambda_a * x;
    return prod * std::exp(a * (p.r0 * p.r0 - xs.xs[n - 1] * xs.xs[n - 1]));
}

// Exact sampler of the N closest distances: the sector-area increments
// (omega/2)(x_i^2 - x_{i-1}^2) between consecutive PPP points are iid
// exponentials of rate lambda_a, so a running unit-rate exponential sum s
// mapped through x = sqrt(s / ((omega/2) lambda_a)) reproduces the order
// statistics exactly (no rejection, no truncation).
inline OrderedDistances sample_ordered(std::size_t n, const SystemParams &p, Rng &rng)
{
    p.validate();
    if (n == 0)
        throw std::invalid_argument("sample_ordered: need n >= 1");
    const double a = 0.5 * p.omega * p.lambda_a;
    OrderedDistances out;
    out.xs.resize(n);
    double s = a * p.r0 * p.r0;
    for (std::size_t i = 0; i < n; ++i)
    {
        s += rng.exponential(1.0); // unit-rate increment of a * x^2
        out.xs[i] = std::sqrt(s / a);
    }
    return out;
}

// Safe upper integration limit: beyond x_max the tail mass of pdf_closest
// (and hence of every joint marginal) is below 10^-9.
inline double truncation_radius(const SystemParams &p)
{
    p.validate();
    return p.r0 + std::sqrt(2.0 * std::log(1e9) / (p.omega * p.lambda_a));
}

} // namespace thzmc

#endif
