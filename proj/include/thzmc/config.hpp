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

#ifndef THZMC_CONFIG_HPP
#define THZMC_CONFIG_HPP

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "thzmc/channel.hpp"
#include "thzmc/params.hpp"
#include "thzmc/spectrum.hpp"

namespace thzmc
{

// Full experiment description.  Defaults reproduce the reference indoor
// scenario: 3 m ceiling APs, 1.2 m UE, 1.7 m / 0.3 m pedestrians at
// 0.2 /m^2 walking 1 m/s, half-plane sector, 1 m exclusion radius, window
// W1 at 20 dBm (W2 at 30 dBm), 25 dBi antennas, -174 dBm/Hz noise density.
struct ExperimentConfig
{
    SystemParams sys{};

    // Link budget (decibel inputs, converted on demand).
    double p_t_dbm_w1 = 20.0;
    double p_t_dbm_w2 = 30.0;
    double gain_ap_dbi = 25.0;
    double gain_ue_dbi = 25.0;
    double n0_dbm_hz = -174.0;
    bool water_filling = false;

    // Sweep axes.
    std::vector<double> lambda_a_grid;       // default: 10 log-spaced in [1e-3, 2e-2]
    std::vector<std::size_t> degrees{1, 2, 3, 4};
    std::vector<double> fig3_distances{1.0, 5.0, 10.0};

    // Estimator sizes.
    std::size_t trials = 20'000;             // snapshot trials per sweep point
    std::size_t samples = 1'000'000;         // Monte Carlo integration samples
    double temporal_seconds = 200.0;         // per temporal replica
    std::size_t temporal_replicas = 16;      // replicas per sweep point

    std::uint64_t seed = 1;
    unsigned workers = 0;                    // 0 = hardware concurrency

    ExperimentConfig() { lambda_a_grid = default_lambda_grid(); }

    static std::vector<double> default_lambda_grid()
    {
        std::vector<double> g;
        const double lo = 1e-3, hi = 2e-2;
        const int n = 10;
        for (int i = 0; i < n; ++i)
            g.push_back(lo * std::pow(hi / lo, static_cast<double>(i) / (n - 1)));
        return g;
    }

    LinkBudget budget_for(const TransmissionWindow &w) const
    {
        const bool is_w2 = std::abs(w.lo - TransmissionWindow::w2().lo) < 1e9;
        LinkBudget b;
        b.p_t_total = dbm_to_watt(is_w2 ? p_t_dbm_w2 : p_t_dbm_w1);
        b.g_ap = db_to_linear(gain_ap_dbi);
        b.g_ue = db_to_linear(gain_ue_dbi);
        b.n0_density = dbm_to_watt(n0_dbm_hz);
        b.water_filling = water_filling;
        b.validate();
        return b;
    }

    void validate() const
    {
        sys.validate();
        if (lambda_a_grid.empty() || degrees.empty() || fig3_distances.empty())
            throw std::invalid_argument("ExperimentConfig: sweep grids must be non-empty");
        if (trials == 0 || samples == 0 || temporal_replicas == 0 || !(temporal_seconds > 0.0))
            throw std::invalid_argument("ExperimentConfig: estimator sizes must be positive");
    }
};

namespace detail
{
inline std::string trim(const std::string &s)
{
    const auto a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos)
        return "";
    const auto b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

inline std::vector<double> parse_list(const std::string &v, const std::string &key)
{
    std::vector<double> out;
    std::string item;
    std::stringstream ss(v);
    while (std::getline(ss, item, ','))
    {
        item = trim(item);
        if (item.empty())
            continue;
        try
        {
            std::size_t pos = 0;
            out.push_back(std::stod(item, &pos));
            if (pos != item.size())
                throw std::invalid_argument(item);
        }
        catch (const std::exception &)
        {
            throw std::runtime_error("config: cannot parse number '" + item + "' for key '" + key +
                                     "'");
        }
    }
    if (out.empty())
        throw std::runtime_error("config: empty list for key '" + key + "'");
    return out;
}

inline double parse_num(const std::string &v, const std::string &key)
{
    try
    {
        std::size_t pos = 0;
        const double d = std::stod(v, &pos);
        if (pos != v.size())
            throw std::invalid_argument(v);
        return d;
    }
    catch (const std::exception &)
    {
        throw std::runtime_error("config: cannot parse number '" + v + "' for key '" + key + "'");
    }
}

inline bool parse_bool(const std::string &v, const std::string &key)
{
    if (v == "true" || v == "1" || v == "yes" || v == "on")
        return true;
    if (v == "false" || v == "0" || v == "no" || v == "off")
        return false;
    throw std::runtime_error("config: cannot parse boolean '" + v + "' for key '" + key + "'");
}
} // namespace detail

// Applies a "[section] / key = value" plain-text file on top of the given
// defaults.  '#' and ';' start comments.  Unknown keys are rejected so that
// typos cannot silently fall back to defaults.
inline ExperimentConfig load_config(const std::string &path, ExperimentConfig cfg = {})
{
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("config: cannot open '" + path + "'");
    std::string line, section;
    std::size_t lineno = 0;
    while (std::getline(in, line))
    {
        ++lineno;
        const auto hash = line.find_first_of("#;");
        if (hash != std::string::npos)
            line = line.substr(0, hash);
        line = detail::trim(line);
        if (line.empty())
            continue;
        if (line.front() == '[')
        {
            if (line.back() != ']')
                throw std::runtime_error("config: malformed section at line " +
                                         std::to_string(lineno));
            section = detail::trim(line.substr(1, line.size() - 2));
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw std::runtime_error("config: expected 'key = value' at line " +
                                     std::to_string(lineno));
        const std::string key = detail::trim(line.substr(0, eq));
        const std::string val = detail::trim(line.substr(eq + 1));
        const std::string full = section.empty() ? key : section + "." + key;

        if (full == "system.h_a")
            cfg.sys.h_a = detail::parse_num(val, full);
        else if (full == "system.h_u")
            cfg.sys.h_u = detail::parse_num(val, full);
        else if (full == "system.h_b")
            cfg.sys.h_b = detail::parse_num(val, full);
        else if (full == "system.r_b")
            cfg.sys.r_b = detail::parse_num(val, full);
        else if (full == "system.lambda_b")
            cfg.sys.lambda_b = detail::parse_num(val, full);
        else if (full == "system.lambda_a")
            cfg.sys.lambda_a = detail::parse_num(val, full);
        else if (full == "system.v_b")
            cfg.sys.v_b = detail::parse_num(val, full);
        else if (full == "system.omega")
            cfg.sys.omega = detail::parse_num(val, full);
        else if (full == "system.r0")
            cfg.sys.r0 = detail::parse_num(val, full);
        else if (full == "channel.p_t_dbm_w1")
            cfg.p_t_dbm_w1 = detail::parse_num(val, full);
        else if (full == "channel.p_t_dbm_w2")
            cfg.p_t_dbm_w2 = detail::parse_num(val, full);
        else if (full == "channel.gain_ap_dbi")
            cfg.gain_ap_dbi = detail::parse_num(val, full);
        else if (full == "channel.gain_ue_dbi")
            cfg.gain_ue_dbi = detail::parse_num(val, full);
        else if (full == "channel.n0_dbm_hz")
            cfg.n0_dbm_hz = detail::parse_num(val, full);
        else if (full == "channel.water_filling")
            cfg.water_filling = detail::parse_bool(val, full);
        else if (full == "sweep.lambda_a")
            cfg.lambda_a_grid = detail::parse_list(val, full);
        else if (full == "sweep.degrees")
        {
            cfg.degrees.clear();
            for (double d : detail::parse_list(val, full))
            {
                if (d < 1.0 || d != std::floor(d))
                    throw std::runtime_error("config: degrees must be positive integers");
                cfg.degrees.push_back(static_cast<std::size_t>(d));
            }
        }
        else if (full == "sweep.fig3_distances")
            cfg.fig3_distances = detail::parse_list(val, full);
        else if (full == "simulation.trials")
            cfg.trials = static_cast<std::size_t>(detail::parse_num(val, full));
        else if (full == "simulation.samples")
            cfg.samples = static_cast<std::size_t>(detail::parse_num(val, full));
        else if (full == "simulation.temporal_seconds")
            cfg.temporal_seconds = detail::parse_num(val, full);
        else if (full == "simulation.temporal_replicas")
            cfg.temporal_replicas = static_cast<std::size_t>(detail::parse_num(val, full));
        else if (full == "simulation.workers")
            cfg.workers = static_cast<unsigned>(detail::parse_num(val, full));
        else if (full == "simulation.seed")
            cfg.seed = static_cast<std::uint64_t>(detail::parse_num(val, full));
        else
            throw std::runtime_error("config: unknown key '" + full + "' at line " +
                                     std::to_string(lineno));
    }
    cfg.validate();
    return cfg;
}

// Writes the fully resolved configuration (useful as a reproducibility
// record next to the result tables).
inline void save_config(const ExperimentConfig &cfg, const std::string &path)
{
    std::ofstream out(path);
    if (!out)
        throw std::runtime_error("config: cannot write '" + path + "'");
    char buf[64];
    auto num = [&](double v) {
        std::snprintf(buf, sizeof buf, "%.12g", v);
        return std::string(buf);
    };
    out << "[system]\n";
    out << "h_a = " << num(cfg.sys.h_a) << "\nh_u = " << num(cfg.sys.h_u)
        << "\nh_b = " << num(cfg.sys.h_b) << "\nr_b = " << num(cfg.sys.r_b)
        << "\nlambda_b = " << num(cfg.sys.lambda_b) << "\nlambda_a = " << num(cfg.sys.lambda_a)
        << "\nv_b = " << num(cfg.sys.v_b) << "\nomega = " << num(cfg.sys.omega)
        << "\nr0 = " << num(cfg.sys.r0) << "\n\n[channel]\n";
    out << "p_t_dbm_w1 = " << num(cfg.p_t_dbm_w1) << "\np_t_dbm_w2 = " << num(cfg.p_t_dbm_w2)
        << "\ngain_ap_dbi = " << num(cfg.gain_ap_dbi) << "\ngain_ue_dbi = " << num(cfg.gain_ue_dbi)
        << "\nn0_dbm_hz = " << num(cfg.n0_dbm_hz)
        << "\nwater_filling = " << (cfg.water_filling ? "true" : "false") << "\n\n[sweep]\n";
    out << "lambda_a = ";
    for (std::size_t i = 0; i < cfg.lambda_a_grid.size(); ++i)
        out << (i ? ", " : "") << num(cfg.lambda_a_grid[i]);
    out << "\ndegrees = ";
    for (std::size_t i = 0; i < cfg.degrees.size(); ++i)
        out << (i ? ", " : "") << cfg.degrees[i];
    out << "\nfig3_distances = ";
    for (std::size_t i = 0; i < cfg.fig3_distances.size(); ++i)
        out << (i ? ", " : "") << num(cfg.fig3_distances[i]);
    out << "\n\n[simulation]\n";
    out << "trials = " << cfg.trials << "\nsamples = " << cfg.samples
        << "\ntemporal_seconds = " << num(cfg.temporal_seconds)
        << "\ntemporal_replicas = " << cfg.temporal_replicas << "\nworkers = " << cfg.workers
        << "\nseed = " << cfg.seed << "\n";
}

} // namespace thzmc

#endif
