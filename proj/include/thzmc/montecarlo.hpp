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

#ifndef THZMC_MONTECARLO_HPP
#define THZMC_MONTECARLO_HPP

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <future>
#include <stdexcept>
#include <thread>
#include <vector>

#include "thzmc/rng.hpp"

namespace thzmc
{

// Point estimate with its standard error.
struct Estimate
{
    double value = 0.0;
    double std_error = 0.0;
    std::size_t samples = 0;
};

// Mean and standard error of the mean of a sample vector.
inline Estimate mean_with_se(const std::vector<double> &v)
{
    if (v.empty())
        throw std::invalid_argument("mean_with_se: empty sample");
    double mean = 0.0;
    for (double x : v)
        mean += x;
    mean /= static_cast<double>(v.size());
    double ss = 0.0;
    for (double x : v)
        ss += (x - mean) * (x - mean);
    const double n = static_cast<double>(v.size());
    const double se = v.size() > 1 ? std::sqrt(ss / (n * (n - 1.0))) : 0.0;
    return Estimate{mean, se, v.size()};
}

// Block Monte Carlo driver.  The total sample budget is split over a fixed
// number of blocks, each running from its own deterministically derived
// stream; block means are reduced in block order.  The result is therefore
// byte-identical no matter how many workers execute the blocks, and the
// inter-block variance yields the standard error.
//
// per_sample(rng) must return one draw of the integrand.
template <typename F>
Estimate block_monte_carlo(F &&per_sample, std::size_t total_samples, std::uint64_t seed,
                           std::uint64_t stream_tag, unsigned blocks = 64, unsigned workers = 1)
{
    if (total_samples == 0 || blocks == 0)
        throw std::invalid_argument("block_monte_carlo: need samples > 0 and blocks > 0");
    const std::size_t per_block = (total_samples + blocks - 1) / blocks;
    std::vector<double> means(blocks, 0.0);

    auto run_block = [&](unsigned b) {
        Rng rng(derive_seed(seed, {stream_tag, b}));
        double acc = 0.0;
        for (std::size_t i = 0; i < per_block; ++i)
            acc += per_sample(rng);
        means[b] = acc / static_cast<double>(per_block);
    };

    if (workers == 0)
        workers = std::max(1u, std::thread::hardware_concurrency());
    if (workers <= 1 || blocks == 1)
    {
        for (unsigned b = 0; b < blocks; ++b)
            run_block(b);
    }
    else
    {
        std::vector<std::future<void>> futs;
        const unsigned stride = workers;
        for (unsigned w = 0; w < stride; ++w)
            futs.push_back(std::async(std::launch::async, [&, w] {
                for (unsigned b = w; b < blocks; b += stride)
                    run_block(b);
            }));
        for (auto &f : futs)
            f.get();
    }

    Estimate est = mean_with_se(means);
    est.samples = per_block * blocks;
    return est;
}

} // namespace thzmc

#endif
