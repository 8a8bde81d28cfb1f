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

#ifndef THZMC_EXPERIMENTS_HPP
#define THZMC_EXPERIMENTS_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <future>
#include <limits>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "thzmc/analysis.hpp"
#include "thzmc/config.hpp"
#include "thzmc/snapshot.hpp"
#include "thzmc/spectrum.hpp"
#include "thzmc/temporal.hpp"

namespace thzmc
{

// One output record: the sweep coordinates that apply, the metric, its
// value with provenance, and the master seed.  Coordinates that do not
// apply stay NaN and serialize as empty CSV fields.
struct ResultRow
{
    std::string figure;
    std::string window;
    double lambda_a = std::numeric_limits<double>::quiet_NaN();
    double n = std::numeric_limits<double>::quiet_NaN();
    std::string strategy;
    double x_m = std::numeric_limits<double>::quiet_NaN();
    double f_hz = std::numeric_limits<double>::quiet_NaN();
    std::string metric;
    double value = 0.0;
    double std_error = 0.0;
    std::string estimator;
    double samples = std::numeric_limits<double>::quiet_NaN();
    std::uint64_t seed = 0;
};

namespace detail
{
inline std::string csv_num(double v)
{
    if (std::isnan(v))
        return "";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}
} // namespace detail

inline void write_csv(const std::vector<ResultRow> &rows, const std::string &path)
{
    std::ofstream out(path, std::ios::binary); // binary: byte-identical across platforms
    if (!out)
        throw std::runtime_error("write_csv: cannot write '" + path + "'");
    out << "figure,window,lambda_a,n,strategy,x_m,f_hz,metric,value,std_error,estimator,samples,"
           "seed\n";
    for (const ResultRow &r : rows)
    {
        out << r.figure << ',' << r.window << ',' << detail::csv_num(r.lambda_a) << ','
            << detail::csv_num(r.n) << ',' << r.strategy << ',' << detail::csv_num(r.x_m) << ','
            << detail::csv_num(r.f_hz) << ',' << r.metric << ',' << detail::csv_num(r.value) << ','
            << detail::csv_num(r.std_error) << ',' << r.estimator << ','
            << detail::csv_num(r.samples) << ',' << r.seed << '\n';
    }
}

namespace detail
{
// Runs fn(0..count-1), possibly on several workers; every index writes only
// its own pre-allocated slot, so the assembled output is identical for any
// worker count.
template <typename F>
inline void parallel_for_indexed(std::size_t count, unsigned workers, F &&fn)
{
    if (workers == 0)
        workers = std::max(1u, std::thread::hardware_concurrency());
    if (workers <= 1 || count <= 1)
    {
        for (std::size_t i = 0; i < count; ++i)
            fn(i);
        return;
    }
    std::vector<std::future<void>> futs;
    for (unsigned w = 0; w < workers; ++w)
        futs.push_back(std::async(std::launch::async, [&fn, w, workers, count] {
            for (std::size_t i = w; i < count; i += workers)
                fn(i);
        }));
    for (auto &f : futs)
        f.get();
}
} // namespace detail

// ---------------------------------------------------------------------------
// fig3: path loss across the window and the 3 dB usable band per distance
// ---------------------------------------------------------------------------

inline std::vector<ResultRow> run_fig3(const ExperimentConfig &cfg, const AbsorptionSpectrum &spec,
                                       const TransmissionWindow &window, const std::string &window_name)
{
    cfg.validate();
    std::vector<ResultRow> rows;
    for (double x : cfg.fig3_distances)
    {
        const LinkGeometry geom = LinkGeometry::from_distance(cfg.sys, x);
        const auto band = usable_bandwidth(geom, spec, window);
        const std::size_t nb = sub_band_count(geom, spec, window);
        auto push = [&](const std::string &metric, double value, double f_hz) {
            ResultRow r;
            r.figure = "fig3";
            r.window = window_name;
            r.x_m = x;
            r.f_hz = f_hz;
            r.metric = metric;
            r.value = value;
            r.estimator = estimator_name(EstimatorKind::closed_form);
            r.seed = cfg.seed;
            rows.push_back(r);
        };
        for (std::size_t k = 0; k < window.sub_bands(); ++k)
        {
            const double f = window.center(k);
            push("path_loss_db", linear_to_db(path_loss(f, geom, spec)), f);
        }
        push("band_lo_hz", band.first, std::numeric_limits<double>::quiet_NaN());
        push("band_hi_hz", band.second, std::numeric_limits<double>::quiet_NaN());
        push("usable_bandwidth_hz", band.second - band.first,
             std::numeric_limits<double>::quiet_NaN());
        push("sub_band_count", static_cast<double>(nb), std::numeric_limits<double>::quiet_NaN());
    }
    return rows;
}

// ---------------------------------------------------------------------------
// fig4: connection probability vs AP density, analytic + snapshot
// ---------------------------------------------------------------------------

inline std::vector<ResultRow> run_fig4(const ExperimentConfig &cfg)
{
    cfg.validate();
    struct Point
    {
        double lambda_a;
        std::size_t n;
    };
    std::vector<Point> pts;
    for (double la : cfg.lambda_a_grid)
        for (std::size_t n : cfg.degrees)
            pts.push_back({la, n});

    std::vector<std::vector<ResultRow>> slots(pts.size());
    detail::parallel_for_indexed(pts.size(), cfg.workers, [&](std::size_t i) {
        const Point &pt = pts[i];
        SystemParams p = cfg.sys;
        p.lambda_a = pt.lambda_a;
        StrategyKind kind{pt.n == 1 ? Strategy::SC : Strategy::C_MC, pt.n};

        McIntegrationOptions mco;
        mco.samples = cfg.samples;
        mco.seed = derive_seed(cfg.seed, {4, i, 0});
        const MetricResult analytic = conn_prob_mc(pt.n, p, mco);

        Rng rng(derive_seed(cfg.seed, {4, i, 1}));
        const SnapshotEstimate sim =
            snapshot_connection_probability(kind, p, cfg.trials, rng, SnapshotOptions{});

        auto &out = slots[i];
        ResultRow r;
        r.figure = "fig4";
        r.lambda_a = pt.lambda_a;
        r.n = static_cast<double>(pt.n);
        r.strategy = pt.n == 1 ? strategy_name(Strategy::SC) : "MC";
        r.metric = "conn_prob";
        r.seed = cfg.seed;

        r.value = analytic.value;
        r.std_error = analytic.std_error;
        r.estimator = estimator_name(analytic.estimator);
        r.samples = analytic.estimator == EstimatorKind::monte_carlo_integration
                        ? static_cast<double>(cfg.samples)
                        : std::numeric_limits<double>::quiet_NaN();
        out.push_back(r);

        r.value = sim.value;
        r.std_error = sim.std_error;
        r.estimator = estimator_name(EstimatorKind::simulation);
        r.samples = static_cast<double>(sim.trials);
        out.push_back(r);
    });

    std::vector<ResultRow> rows;
    for (auto &s : slots)
        rows.insert(rows.end(), s.begin(), s.end());
    return rows;
}

// ---------------------------------------------------------------------------
// fig5/6/7: ergodic capacity and capacity gain vs AP density
// ---------------------------------------------------------------------------

// Shared worker for the capacity figures.  fig5 reports C-MC (plus the SC
// baseline) absolute capacity; fig6 and fig7 report the relative gains of
// both MC strategies for window W1 and W2 respectively.
inline std::vector<ResultRow> run_fig5_6_7(const ExperimentConfig &cfg, int figure,
                                           const AbsorptionSpectrum &spec,
                                           const TransmissionWindow &window,
                                           const std::string &window_name)
{
    cfg.validate();
    if (figure < 5 || figure > 7)
        throw std::invalid_argument("run_fig5_6_7: figure must be 5, 6 or 7");
    const LinkBudget budget = cfg.budget_for(window);
    const std::string fig = "fig" + std::to_string(figure);

    // One capacity table reused across the whole sweep: capacity does not
    // depend on lambda_a, only the needed x-range does, so build it for the
    // widest (sparsest) case.
    SystemParams widest = cfg.sys;
    widest.lambda_a = *std::min_element(cfg.lambda_a_grid.begin(), cfg.lambda_a_grid.end());
    const CapacityTable table(widest, spec, window, budget);
    const CapacityFn cap = std::cref(table);

    std::vector<std::size_t> mc_degrees;
    for (std::size_t n : cfg.degrees)
        if (n >= 2)
            mc_degrees.push_back(n);
    if (mc_degrees.empty())
        throw std::invalid_argument("run_fig5_6_7: need at least one degree >= 2");
    const std::vector<Strategy> strategies =
        figure == 5 ? std::vector<Strategy>{Strategy::C_MC}
                    : std::vector<Strategy>{Strategy::C_MC, Strategy::R_MC};

    struct Cell
    {
        double sc_analytic = 0.0, sc_sim = 0.0, sc_sim_se = 0.0;
        std::vector<std::vector<MetricResult>> analytic; // [strategy][degree]
        std::vector<std::vector<Estimate>> simulated;    // [strategy][degree]
    };
    std::vector<Cell> cells(cfg.lambda_a_grid.size());

    detail::parallel_for_indexed(cfg.lambda_a_grid.size(), cfg.workers, [&](std::size_t li) {
        SystemParams p = cfg.sys;
        p.lambda_a = cfg.lambda_a_grid[li];
        Cell &cell = cells[li];

        cell.sc_analytic = ergodic_capacity_sc(p, cap).value;
        {
            Rng rng(derive_seed(cfg.seed, {static_cast<std::uint64_t>(figure), li, 100}));
            const SnapshotEstimate e = snapshot_capacity(StrategyKind{Strategy::SC, 1}, p, cap,
                                                         cfg.trials, rng, SnapshotOptions{});
            cell.sc_sim = e.value;
            cell.sc_sim_se = e.std_error;
        }

        cell.analytic.resize(strategies.size());
        cell.simulated.resize(strategies.size());
        for (std::size_t si = 0; si < strategies.size(); ++si)
        {
            const Strategy strat = strategies[si];
            for (std::size_t di = 0; di < mc_degrees.size(); ++di)
            {
                const std::size_t n = mc_degrees[di];
                const StrategyKind kind{strat, n};
                McIntegrationOptions mco;
                mco.samples = cfg.samples;
                mco.seed = derive_seed(cfg.seed, {static_cast<std::uint64_t>(figure), li,
                                                  200 + 10 * si + di});
                cell.analytic[si].push_back(ergodic_capacity_mc(kind, p, cap, mco));

                Estimate sim;
                if (strat == Strategy::C_MC)
                {
                    Rng rng(derive_seed(cfg.seed, {static_cast<std::uint64_t>(figure), li,
                                                   300 + 10 * si + di}));
                    const SnapshotEstimate e =
                        snapshot_capacity(kind, p, cap, cfg.trials, rng, SnapshotOptions{});
                    sim = Estimate{e.value, e.std_error, e.trials};
                }
                else
                {
                    // Reactive selection depends on history: estimate by
                    // temporal replicas on sampled topologies.
                    std::vector<double> vals;
                    vals.reserve(cfg.temporal_replicas);
                    for (std::size_t rep = 0; rep < cfg.temporal_replicas; ++rep)
                    {
                        Rng rng(derive_seed(cfg.seed, {static_cast<std::uint64_t>(figure), li,
                                                       400 + 10 * si + di, rep}));
                        const ApTopology topo = sample_topology(n, p, rng);
                        const SimTrace trace =
                            run_temporal(kind, topo, p, cfg.temporal_seconds, rng);
                        std::vector<double> caps;
                        for (double x : topo.xs)
                            caps.push_back(cap(x));
                        vals.push_back(temporal_throughput(trace, caps));
                    }
                    sim = mean_with_se(vals);
                }
                cell.simulated[si].push_back(sim);
            }
        }
    });

    // Assemble rows in a fixed order.
    std::vector<ResultRow> rows;
    auto base_row = [&](double la, double n, const std::string &strat) {
        ResultRow r;
        r.figure = fig;
        r.window = window_name;
        r.lambda_a = la;
        r.n = n;
        r.strategy = strat;
        r.seed = cfg.seed;
        return r;
    };
    for (std::size_t li = 0; li < cfg.lambda_a_grid.size(); ++li)
    {
        const double la = cfg.lambda_a_grid[li];
        const Cell &cell = cells[li];

        ResultRow r = base_row(la, 1, strategy_name(Strategy::SC));
        r.metric = "ergodic_capacity_bps";
        r.value = cell.sc_analytic;
        r.estimator = estimator_name(EstimatorKind::quadrature);
        rows.push_back(r);
        r.value = cell.sc_sim;
        r.std_error = cell.sc_sim_se;
        r.estimator = estimator_name(EstimatorKind::simulation);
        r.samples = static_cast<double>(cfg.trials);
        rows.push_back(r);

        for (std::size_t si = 0; si < strategies.size(); ++si)
            for (std::size_t di = 0; di < mc_degrees.size(); ++di)
            {
                const MetricResult &an = cell.analytic[si][di];
                const Estimate &sim = cell.simulated[si][di];
                ResultRow m = base_row(la, static_cast<double>(mc_degrees[di]),
                                       strategy_name(strategies[si]));
                m.metric = "ergodic_capacity_bps";
                m.value = an.value;
                m.std_error = an.std_error;
                m.estimator = estimator_name(an.estimator);
                rows.push_back(m);
                m.value = sim.value;
                m.std_error = sim.std_error;
                m.estimator = estimator_name(EstimatorKind::simulation);
                m.samples = static_cast<double>(sim.samples);
                rows.push_back(m);
                if (figure != 5)
                {
                    m.metric = "capacity_gain";
                    m.value = (an.value - cell.sc_analytic) / cell.sc_analytic;
                    m.std_error = an.std_error / cell.sc_analytic;
                    m.estimator = estimator_name(an.estimator);
                    m.samples = std::numeric_limits<double>::quiet_NaN();
                    rows.push_back(m);
                    m.value = (sim.value - cell.sc_sim) / cell.sc_sim;
                    m.std_error = sim.std_error / cell.sc_sim;
                    m.estimator = estimator_name(EstimatorKind::simulation);
                    rows.push_back(m);
                }
            }
    }

    // Per-curve interior-maximum report rows (analytic gains).
    if (figure != 5)
        for (std::size_t si = 0; si < strategies.size(); ++si)
            for (std::size_t di = 0; di < mc_degrees.size(); ++di)
            {
                std::size_t best = 0;
                double best_gain = -std::numeric_limits<double>::infinity();
                for (std::size_t li = 0; li < cfg.lambda_a_grid.size(); ++li)
                {
                    const double g = (cells[li].analytic[si][di].value - cells[li].sc_analytic) /
                                     cells[li].sc_analytic;
                    if (g > best_gain)
                    {
                        best_gain = g;
                        best = li;
                    }
                }
                ResultRow m = base_row(cfg.lambda_a_grid[best], static_cast<double>(mc_degrees[di]),
                                       strategy_name(strategies[si]));
                m.metric = "gain_argmax_lambda_a";
                m.value = cfg.lambda_a_grid[best];
                m.estimator = estimator_name(EstimatorKind::quadrature);
                rows.push_back(m);
                m.metric = "gain_max";
                m.value = best_gain;
                rows.push_back(m);
            }
    return rows;
}

// ---------------------------------------------------------------------------
// Plot scripts
// ---------------------------------------------------------------------------

// Emits one gnuplot script per figure CSV, referencing the CSV by relative
// path.  The tool never renders anything itself.
inline void emit_plots(const std::string &out_dir, const std::vector<std::string> &figures)
{
    namespace fs = std::filesystem;
    for (const std::string &fig : figures)
    {
        const fs::path csv = fs::path(out_dir) / (fig + ".csv");
        if (!fs::exists(csv))
            throw std::runtime_error("emit_plots: missing CSV '" + csv.string() + "'");
        const fs::path script = fs::path(out_dir) / (fig + ".gnuplot");
        std::ofstream out(script);
        if (!out)
            throw std::runtime_error("emit_plots: cannot write '" + script.string() + "'");
        out << "# gnuplot script for " << fig << " (run from this directory)\n";
        out << "set datafile separator ','\n";
        out << "set key outside\nset grid\n";
        const std::string f = fig + ".csv";
        if (fig == "fig3")
        {
            out << "set xlabel 'sub-band center frequency [Hz]'\n"
                << "set ylabel 'path loss [dB]'\n"
                << "plot for [x in '1 5 10'] '" << f
                << "' using (strcol(8) eq 'path_loss_db' && column(6) == real(x) ? $7 : NaN):9 "
                   "with lines title sprintf('x = %s m', x)\n";
        }
        else if (fig == "fig4")
        {
            out << "set xlabel 'AP density [1/m^2]'\nset ylabel 'connection probability'\n"
                << "set logscale x\n"
                << "plot for [n=1:4] '" << f
                << "' using (strcol(8) eq 'conn_prob' && strcol(11) ne 'simulation' && column(4) "
                   "== n ? $3 : NaN):9 with lines title sprintf('analytic N=%d', n), \\\n"
                << "     for [n=1:4] '" << f
                << "' using (strcol(8) eq 'conn_prob' && strcol(11) eq 'simulation' && column(4) "
                   "== n ? $3 : NaN):9:10 with yerrorbars title sprintf('simulated N=%d', n)\n";
        }
        else if (fig == "fig5")
        {
            out << "set xlabel 'AP density [1/m^2]'\nset ylabel 'average ergodic capacity [bit/s]'\n"
                << "set logscale x\n"
                << "plot for [n=1:4] '" << f
                << "' using (strcol(8) eq 'ergodic_capacity_bps' && strcol(11) ne 'simulation' && "
                   "column(4) == n ? $3 : NaN):9 with lines title sprintf('analytic N=%d', n), \\\n"
                << "     for [n=1:4] '" << f
                << "' using (strcol(8) eq 'ergodic_capacity_bps' && strcol(11) eq 'simulation' && "
                   "column(4) == n ? $3 : NaN):9:10 with yerrorbars title sprintf('simulated N=%d', n)\n";
        }
        else
        {
            out << "set xlabel 'AP density [1/m^2]'\nset ylabel 'capacity gain'\n"
                << "set logscale x\n"
                << "plot for [n=2:4] '" << f
                << "' using (strcol(8) eq 'capacity_gain' && strcol(5) eq 'C-MC' && strcol(11) ne "
                   "'simulation' && column(4) == n ? $3 : NaN):9 with lines title "
                   "sprintf('C-MC N=%d', n), \\\n"
                << "     for [n=2:4] '" << f
                << "' using (strcol(8) eq 'capacity_gain' && strcol(5) eq 'R-MC' && strcol(11) ne "
                   "'simulation' && column(4) == n ? $3 : NaN):9 with lines dt 2 title "
                   "sprintf('R-MC N=%d', n)\n";
        }
    }
}

} // namespace thzmc

#endif
