/*!
SPDX-License-Identifier: Apache-2.0

thzmc - Multi-connectivity performance analysis for indoor THz networks
with self-blockage and mobile human blockers

Command line driver. Verbs:
  fig3      path loss and usable bandwidth vs. frequency at fixed distances
  fig4      connection probability vs. AP density (analytic + snapshot sim)
  fig5      ergodic capacity vs. AP density, window W1
  fig6      capacity gain over single connectivity vs. AP density, window W1
  fig7      capacity gain over single connectivity vs. AP density, window W2
  validate  analytic-vs-simulator cross-check suite (nonzero exit on failure)
*/

#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "thzmc/config.hpp"
#include "thzmc/experiments.hpp"
#include "thzmc/spectrum.hpp"
#include "thzmc/validation.hpp"

namespace
{

constexpr const char *spectrum_format_hint =
    "expected format: one sample per line, \"freq_hz<TAB>k_abs_per_m\" "
    "(absorption coefficient in 1/m), '#' starts a comment, frequencies "
    "strictly increasing";

// Resolve the absorption spectrum for a capacity figure: a user supplied file
// must cover the window; otherwise fall back to the bundled synthetic model.
// The spectrum actually used is always written next to the CSV so it can be
// fed back to `fig3` or inspected.
thzmc::AbsorptionSpectrum resolve_spectrum(const std::string &path,
                                           const thzmc::TransmissionWindow &window,
                                           const std::string &window_name,
                                           const std::string &out_dir)
{
    thzmc::AbsorptionSpectrum spec =
        path.empty() ? thzmc::synthetic_spectrum(window) : thzmc::AbsorptionSpectrum::load(path);
    if (!spec.covers(window))
        throw std::runtime_error("spectrum file '" + path + "' does not cover window " +
                                 window_name + " (" + std::to_string(window.lo) + " - " +
                                 std::to_string(window.hi) + " Hz)");
    spec.save(out_dir + "/spectrum_" + window_name + ".tsv");
    return spec;
}

void report_outputs(const std::string &verb, const std::string &out_dir, std::size_t rows)
{
    std::cout << verb << ": wrote " << rows << " rows to " << out_dir << "/" << verb
              << ".csv (plot script: " << verb << ".gnuplot)\n";
}

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"thzmc - THz multi-connectivity performance toolkit"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string config_path;
    std::string spectrum_path;
    std::string out_dir = "out";
    std::uint64_t seed = 0;
    std::size_t trials = 0;
    std::size_t samples = 0;
    unsigned workers = 0;

    app.add_option("--config", config_path, "INI configuration file (defaults used if omitted)")
        ->check(CLI::ExistingFile);
    app.add_option("--spectrum", spectrum_path,
                   "absorption spectrum file, freq_hz<TAB>k_abs_per_m per line")
        ->check(CLI::ExistingFile);
    auto *seed_opt = app.add_option("--seed", seed, "master RNG seed (overrides config)");
    app.add_option("--out", out_dir, "output directory")->capture_default_str();
    auto *trials_opt =
        app.add_option("--trials", trials, "snapshot simulator trials per point (overrides config)");
    auto *samples_opt = app.add_option("--samples", samples,
                                       "Monte Carlo integration samples (overrides config)");
    auto *workers_opt =
        app.add_option("--workers", workers, "worker threads, 0 = hardware (overrides config)");

    CLI::App *verb_fig3 = app.add_subcommand(
        "fig3", "Path loss and usable bandwidth vs. frequency at fixed link distances");
    CLI::App *verb_fig4 =
        app.add_subcommand("fig4", "Connection probability vs. AP density and degree");
    CLI::App *verb_fig5 =
        app.add_subcommand("fig5", "Average ergodic capacity vs. AP density (window W1)");
    CLI::App *verb_fig6 =
        app.add_subcommand("fig6", "Capacity gain over single connectivity (window W1)");
    CLI::App *verb_fig7 =
        app.add_subcommand("fig7", "Capacity gain over single connectivity (window W2)");
    CLI::App *verb_validate =
        app.add_subcommand("validate", "Analytic-vs-simulator cross-check suite");

    CLI11_PARSE(app, argc, argv);

    try
    {
        thzmc::ExperimentConfig cfg;
        if (!config_path.empty())
            cfg = thzmc::load_config(config_path);
        if (seed_opt->count() > 0)
            cfg.seed = seed;
        if (trials_opt->count() > 0)
            cfg.trials = trials;
        if (samples_opt->count() > 0)
            cfg.samples = samples;
        if (workers_opt->count() > 0)
            cfg.workers = workers;
        cfg.validate();

        std::filesystem::create_directories(out_dir);
        thzmc::save_config(cfg, out_dir + "/config_resolved.ini");

        if (verb_fig3->parsed())
        {
            if (spectrum_path.empty())
            {
                std::cerr << "error: fig3 needs a measured absorption spectrum; pass "
                             "--spectrum <file>\n       "
                          << spectrum_format_hint << "\n";
                return 1;
            }
            const thzmc::AbsorptionSpectrum spec = thzmc::AbsorptionSpectrum::load(spectrum_path);
            std::vector<thzmc::ResultRow> rows;
            bool any = false;
            for (const auto &[window, name] :
                 {std::pair{thzmc::TransmissionWindow::w1(), std::string("w1")},
                  std::pair{thzmc::TransmissionWindow::w2(), std::string("w2")}})
            {
                if (!spec.covers(window))
                    continue;
                any = true;
                auto part = thzmc::run_fig3(cfg, spec, window, name);
                rows.insert(rows.end(), part.begin(), part.end());
            }
            if (!any)
                throw std::runtime_error(
                    "spectrum file '" + spectrum_path +
                    "' covers neither transmission window (W1 0.99-1.09 THz, W2 3.34-3.49 THz)");
            thzmc::write_csv(rows, out_dir + "/fig3.csv");
            thzmc::emit_plots(out_dir, {"fig3"});
            report_outputs("fig3", out_dir, rows.size());
        }
        else if (verb_fig4->parsed())
        {
            auto rows = thzmc::run_fig4(cfg);
            thzmc::write_csv(rows, out_dir + "/fig4.csv");
            thzmc::emit_plots(out_dir, {"fig4"});
            report_outputs("fig4", out_dir, rows.size());
        }
        else if (verb_fig5->parsed() || verb_fig6->parsed() || verb_fig7->parsed())
        {
            const int figure = verb_fig5->parsed() ? 5 : verb_fig6->parsed() ? 6 : 7;
            const bool is_w2 = figure == 7;
            const thzmc::TransmissionWindow window =
                is_w2 ? thzmc::TransmissionWindow::w2() : thzmc::TransmissionWindow::w1();
            const std::string window_name = is_w2 ? "w2" : "w1";
            const thzmc::AbsorptionSpectrum spec =
                resolve_spectrum(spectrum_path, window, window_name, out_dir);
            const std::string verb = "fig" + std::to_string(figure);
            auto rows = thzmc::run_fig5_6_7(cfg, figure, spec, window, window_name);
            thzmc::write_csv(rows, out_dir + "/" + verb + ".csv");
            thzmc::emit_plots(out_dir, {verb});
            report_outputs(verb, out_dir, rows.size());
        }
        else if (verb_validate->parsed())
        {
            const thzmc::ValidationReport report = thzmc::run_validation(cfg);
            report.print(std::cout);
            std::ofstream txt(out_dir + "/validation.txt");
            report.print(txt);
            if (report.failures() > 0)
            {
                std::cout << "validate: " << report.failures()
                          << " check(s) outside tolerance (see annotations above)\n";
                return 1;
            }
            std::cout << "validate: all checks within tolerance\n";
        }
    }
    catch (const std::exception &e)
    {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
