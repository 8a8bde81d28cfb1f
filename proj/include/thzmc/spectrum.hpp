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

#ifndef THZMC_SPECTRUM_HPP
#define THZMC_SPECTRUM_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace thzmc
{

// One contiguous transmission window, subdivided into equal sub-bands of
// width delta_f.  Frequencies in Hz.
struct TransmissionWindow
{
    double lo;
    double hi;
    double delta_f = 1e9;

    void validate() const
    {
        if (!(lo > 0.0) || !(hi > lo))
            throw std::invalid_argument("TransmissionWindow: require 0 < lo < hi");
        if (!(delta_f > 0.0))
            throw std::invalid_argument("TransmissionWindow: sub-band width must be positive");
        const double k = (hi - lo) / delta_f;
        if (std::abs(k - std::round(k)) > 1e-6)
            throw std::invalid_argument("TransmissionWindow: width must be an integer number of sub-bands");
    }

    // Number of sub-bands spanning the window.
    std::size_t sub_bands() const
    {
        validate();
        return static_cast<std::size_t>(std::llround((hi - lo) / delta_f));
    }

    // Center frequency of sub-band k (k = 0 .. sub_bands()-1), grid anchored
    // at the window's lower edge.
    double center(std::size_t k) const { return lo + (static_cast<double>(k) + 0.5) * delta_f; }

    // The two standard windows used throughout: W1 = 0.99-1.09 THz and
    // W2 = 3.34-3.49 THz, both with 1 GHz sub-bands.
    static TransmissionWindow w1() { return TransmissionWindow{0.99e12, 1.09e12, 1e9}; }
    static TransmissionWindow w2() { return TransmissionWindow{3.34e12, 3.49e12, 1e9}; }
};

// Frequency-indexed molecular absorption coefficients K_abs(f) in 1/m over
// one transmission window.  Queries interpolate linearly between samples;
// the sample grid must be at least as fine as the sub-band width so that
// every sub-band center is bracketed meaningfully.
class AbsorptionSpectrum
{
  public:
    AbsorptionSpectrum(std::vector<double> freqs, std::vector<double> k_abs)
        : m_f(std::move(freqs)), m_k(std::move(k_abs))
    {
        if (m_f.size() != m_k.size() || m_f.size() < 2)
            throw std::invalid_argument("AbsorptionSpectrum: need >= 2 (frequency, k_abs) pairs of equal length");
        for (std::size_t i = 0; i < m_f.size(); ++i)
        {
            if (!(m_f[i] > 0.0) || !std::isfinite(m_f[i]))
                throw std::invalid_argument("AbsorptionSpectrum: frequencies must be positive and finite");
            if (i > 0 && !(m_f[i] > m_f[i - 1]))
                throw std::invalid_argument("AbsorptionSpectrum: frequencies must be strictly increasing");
            if (!(m_k[i] >= 0.0) || !std::isfinite(m_k[i]))
                throw std::invalid_argument("AbsorptionSpectrum: absorption coefficients must be >= 0");
        }
    }

    double window_lo() const { return m_f.front(); }
    double window_hi() const { return m_f.back(); }
    std::size_t size() const { return m_f.size(); }
    const std::vector<double> &frequencies() const { return m_f; }
    const std::vector<double> &coefficients() const { return m_k; }

    bool covers(const TransmissionWindow &w) const
    {
        // Sub-band CENTERS are the only query points, so coverage of
        // [lo + delta_f/2, hi - delta_f/2] suffices; require the full window
        // anyway minus a half-spacing head room for file round-off.
        return window_lo() <= w.lo + 1e-3 && window_hi() >= w.hi - 1e-3;
    }

    // K_abs at frequency f by linear interpolation between the bracketing
    // samples.  f outside the sampled range is an error.
    double k_abs(double f) const
    {
        if (!(f >= m_f.front()) || !(f <= m_f.back()))
            throw std::out_of_range("AbsorptionSpectrum: frequency outside the sampled window");
        const auto it = std::lower_bound(m_f.begin(), m_f.end(), f);
        if (it == m_f.begin())
            return m_k.front();
        const std::size_t hi = static_cast<std::size_t>(it - m_f.begin());
        const std::size_t lo = hi - 1;
        if (hi == m_f.size())
            return m_k.back();
        const double t = (f - m_f[lo]) / (m_f[hi] - m_f[lo]);
        return m_k[lo] + t * (m_k[hi] - m_k[lo]);
    }

    // Loads a spectrum from a plain-text file: '#' comment lines, data lines
    // "frequency_hz<TAB>k_abs_per_m" (any whitespace accepted between the
    // two columns), strictly increasing frequency.
    static AbsorptionSpectrum load(const std::string &path)
    {
        std::ifstream in(path);
        if (!in)
            throw std::runtime_error("AbsorptionSpectrum: cannot open '" + path + "'");
        std::vector<double> f, k;
        std::string line;
        std::size_t lineno = 0;
        while (std::getline(in, line))
        {
            ++lineno;
            const auto first = line.find_first_not_of(" \t\r");
            if (first == std::string::npos || line[first] == '#')
                continue;
            std::istringstream ls(line);
            double fi = 0.0, ki = 0.0;
            if (!(ls >> fi >> ki))
                throw std::runtime_error("AbsorptionSpectrum: parse error in '" + path + "' line " +
                                         std::to_string(lineno) +
                                         " (expected: frequency_hz<TAB>k_abs_per_m)");
            f.push_back(fi);
            k.push_back(ki);
        }
        if (f.size() < 2)
            throw std::runtime_error("AbsorptionSpectrum: '" + path + "' holds fewer than 2 samples");
        return AbsorptionSpectrum(std::move(f), std::move(k));
    }

    // Writes the spectrum in the same format load() accepts.
    void save(const std::string &path) const
    {
        std::ofstream out(path);
        if (!out)
            throw std::runtime_error("AbsorptionSpectrum: cannot write '" + path + "'");
        out << "# frequency_hz\tk_abs_per_m\n";
        char buf[64];
        for (std::size_t i = 0; i < m_f.size(); ++i)
        {
            std::snprintf(buf, sizeof buf, "%.10g\t%.10g\n", m_f[i], m_k[i]);
            out << buf;
        }
    }

  private:
    std::vector<double> m_f;
    std::vector<double> m_k;
};

namespace detail
{
inline double lorentzian(double f, double f0, double amplitude, double half_width)
{
    const double d = f - f0;
    return amplitude * half_width * half_width / (d * d + half_width * half_width);
}
} // namespace detail

// Synthetic water-vapor-like absorption over a window: a low valley floor
// with Lorentzian line wings rising toward (and beyond) both edges.  Shipped
// so every experiment runs without external data; measured line-by-line
// coefficients can be substituted via AbsorptionSpectrum::load at any time.
inline AbsorptionSpectrum synthetic_spectrum(const TransmissionWindow &w)
{
    w.validate();
    struct Line
    {
        double f0, amplitude, half_width;
    };
    double floor = 0.0;
    std::vector<Line> lines;
    if (std::abs(w.lo - 0.99e12) < 1e9 && std::abs(w.hi - 1.09e12) < 1e9)
    {
        // Mildly absorptive window around 1 THz.
        floor = 0.05;
        lines = {{0.970e12, 14.0, 6e9}, {1.115e12, 18.0, 8e9}};
    }
    else if (std::abs(w.lo - 3.34e12) < 1e9 && std::abs(w.hi - 3.49e12) < 1e9)
    {
        // Strongly absorptive window around 3.4 THz.
        floor = 0.35;
        lines = {{3.315e12, 60.0, 9e9}, {3.515e12, 70.0, 10e9}};
    }
    else
    {
        // Generic fallback: single line just above the upper edge plus a
        // modest floor; keeps the shrinking-bandwidth behavior.
        floor = 0.1;
        lines = {{w.hi + 0.2 * (w.hi - w.lo), 20.0, 0.05 * (w.hi - w.lo)}};
    }
    // Pad one sub-band beyond each edge so edge sub-band centers always
    // interpolate, and sample 4x finer than the sub-band grid.
    const double pad = w.delta_f;
    const double df = 0.25 * w.delta_f;
    std::vector<double> fs, ks;
    for (double f = w.lo - pad; f <= w.hi + pad + 0.5 * df; f += df)
    {
        double k = floor;
        for (const Line &l : lines)
            k += detail::lorentzian(f, l.f0, l.amplitude, l.half_width);
        fs.push_back(f);
        ks.push_back(k);
    }
    return AbsorptionSpectrum(std::move(fs), std::move(ks));
}

} // namespace thzmc

#endif
