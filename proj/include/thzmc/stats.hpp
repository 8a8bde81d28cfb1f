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

#ifndef THZMC_STATS_HPP
#define THZMC_STATS_HPP

#include <algorithm>
#include <boost/math/distributions/chi_squared.hpp>
#include <cmath>
#include <cstddef>
#include <functional>
#include <stdexcept>
#include <vector>

namespace thzmc
{

// Kolmogorov-Smirnov statistic of a sample against a fully specified CDF.
inline double ks_statistic(std::vector<double> sample, const std::function<double(double)> &cdf)
{
    if (sample.size() < 2)
        throw std::invalid_argument("ks_statistic: need at least 2 samples");
    std::sort(sample.begin(), sample.end());
    const double n = static_cast<double>(sample.size());
    double d = 0.0;
    for (std::size_t i = 0; i < sample.size(); ++i)
    {
        const double f = cdf(sample[i]);
        d = std::max(d, std::abs(f - static_cast<double>(i) / n));
        d = std::max(d, std::abs(static_cast<double>(i + 1) / n - f));
    }
    return d;
}

// Asymptotic KS critical value at significance alpha = 0.01 for a fully
// specified null distribution.
inline double ks_critical_001(std::size_t n)
{
    return 1.628 / std::sqrt(static_cast<double>(n));
}

// Lilliefors test statistic for exponentiality: the rate is estimated from
// the sample mean, then the KS distance to that fitted exponential is taken.
inline double lilliefors_exponential_statistic(const std::vector<double> &sample)
{
    if (sample.size() < 2)
        throw std::invalid_argument("lilliefors_exponential_statistic: need at least 2 samples");
    double mean = 0.0;
    for (double x : sample)
        mean += x;
    mean /= static_cast<double>(sample.size());
    if (!(mean > 0.0))
        throw std::invalid_argument("lilliefors_exponential_statistic: non-positive sample mean");
    const double rate = 1.0 / mean;
    return ks_statistic(sample, [rate](double x) { return x <= 0.0 ? 0.0 : 1.0 - std::exp(-rate * x); });
}

// Asymptotic Lilliefors critical value (exponential null, estimated rate)
// at significance alpha = 0.01.
inline double lilliefors_critical_001(std::size_t n)
{
    return 1.308 / std::sqrt(static_cast<double>(n));
}

// Pearson chi-square goodness-of-fit p-value for observed counts against
// expected counts (same length, expected > 0).
inline double chi_square_pvalue(const std::vector<double> &observed,
                                const std::vector<double> &expected)
{
    if (observed.size() != expected.size() || observed.size() < 2)
        throw std::invalid_argument("chi_square_pvalue: need matching bins (>= 2)");
    double stat = 0.0;
    for (std::size_t i = 0; i < observed.size(); ++i)
    {
        if (!(expected[i] > 0.0))
            throw std::invalid_argument("chi_square_pvalue: expected counts must be positive");
        const double d = observed[i] - expected[i];
        stat += d * d / expected[i];
    }
    const boost::math::chi_squared dist(static_cast<double>(observed.size() - 1));
    return boost::math::cdf(boost::math::complement(dist, stat));
}

} // namespace thzmc

#endif
