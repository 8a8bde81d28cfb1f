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

#ifndef THZMC_RNG_HPP
#define THZMC_RNG_HPP

#include <cmath>
#include <cstdint>
#include <initializer_list>
#include <random>
#include <stdexcept>

namespace thzmc
{

// Finalizer of the splitmix64 generator; used to whiten seed material.
inline std::uint64_t splitmix64(std::uint64_t &state)
{
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d4a68c2a2bc38dULL;
    return z ^ (z >> 31);
}

// Deterministically derives an independent stream seed from a master seed
// and a logical path (e.g. {figure id, sweep index, replica index}).  The
// derivation is pure arithmetic, so results are identical across platforms,
// runs, and thread counts.
inline std::uint64_t derive_seed(std::uint64_t master, std::initializer_list<std::uint64_t> path)
{
    std::uint64_t s = master;
    (void)splitmix64(s);
    for (std::uint64_t p : path)
    {
        s ^= p + 0x9e3779b97f4a7c15ULL + (s << 6) + (s >> 2);
        (void)splitmix64(s);
    }
    std::uint64_t t = s;
    return splitmix64(t);
}

// Random stream with explicitly coded variate transforms.  All sampling in
// the project goes through this class so that results depend only on the
// mt19937_64 bit stream (which the C++ standard fixes), not on
// implementation-defined distribution adapters.
class Rng
{
  public:
    explicit Rng(std::uint64_t seed) : m_eng(seed) {}

    std::uint64_t bits() { return m_eng(); }

    // Uniform on [0, 1) with 53-bit resolution.
    double uniform()
    {
        return static_cast<double>(m_eng() >> 11) * 0x1.0p-53;
    }

    double uniform(double lo, double hi)
    {
        return lo + (hi - lo) * uniform();
    }

    // Exponential with the given rate; strictly positive results.
    double exponential(double rate)
    {
        if (!(rate > 0.0))
            throw std::invalid_argument("Rng::exponential: rate must be positive");
        return -std::log1p(-uniform()) / rate;
    }

    // Poisson count by inversion (Knuth's product method).  Large means are
    // split into chunks of mean <= 40 and summed, which keeps the running
    // product far away from underflow for any mean the project uses.
    std::uint64_t poisson(double mean)
    {
        if (!(mean >= 0.0) || !std::isfinite(mean))
            throw std::invalid_argument("Rng::poisson: mean must be finite and >= 0");
        std::uint64_t total = 0;
        while (mean > 0.0)
        {
            const double chunk = mean > 40.0 ? 40.0 : mean;
            mean -= chunk;
            const double limit = std::exp(-chunk);
            double prod = 1.0;
            for (;;)
            {
                prod *= 1.0 - uniform();
                if (prod <= limit)
                    break;
                ++total;
            }
        }
        return total;
    }

  private:
    std::mt19937_64 m_eng;
};

} // namespace thzmc

#endif
