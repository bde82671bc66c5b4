// nmzeno: entanglement dynamics of n qubits in a common Lorentzian bath, with
// and without repeated non-selective measurements.
//
//   nmzeno --preset fig3d > fig3d.csv
//   nmzeno --n 4 --coupling-ratio 10 --measure-interval 0.001 --measure-interval 0.005
//   nmzeno --preset fig3b --oracle-check full
//   nmzeno --config run.cfg --tau-max 10
//
// Exit codes: 0 success, 1 usage error, 2 oracle-check failure.

#include "nmzeno/output.hpp"
#include "nmzeno/presets.hpp"
#include "nmzeno/scenario.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace {

constexpr int kExitUsage = 1;
constexpr int kExitOracleFailure = 2;

struct Flags {
    std::string preset;
    int n = 4;
    double coupling_ratio = 0.1;
    double detuning = 0.0;
    double tau_max = 50.0;
    double tau_step = 0.01;
    std::vector<double> intervals;
    std::vector<double> detunings;
    std::vector<std::string> series;
    std::string mode = "envelope";
    std::string output;
    std::string format = "csv";
    std::string oracle;
    int bath_modes = 4000;
    double bath_window = 200.0;
    bool list_presets = false;
};

void print_presets(std::ostream& out) {
    for (const nmzeno::Preset& p : nmzeno::presets()) {
        out << p.name << ": n=" << p.n << " R=" << nmzeno::format_label(p.coupling_ratio)
            << " Delta/kappa=" << nmzeno::format_label(p.detuning);
        if (!p.detunings.empty()) {
            out << " dC detunings={";
            for (std::size_t i = 0; i < p.detunings.size(); ++i) {
                out << (i ? "," : "") << nmzeno::format_label(p.detunings[i]);
            }
            out << "}";
        }
        if (!p.intervals.empty()) {
            out << " kappaT={";
            for (std::size_t i = 0; i < p.intervals.size(); ++i) {
                out << (i ? "," : "") << nmzeno::format_label(p.intervals[i]);
            }
            out << "}";
        }
        out << " tau_max=" << nmzeno::format_label(p.tau_max)
            << " tau_step=" << nmzeno::format_label(p.tau_step) << "  (" << p.description << ")\n";
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact pairwise entanglement of n qubits in a common non-Markovian bath under "
                 "repeated non-selective measurements"};
    app.set_version_flag("--version", std::string(NMZENO_VERSION));
    app.set_config("--config", "", "Read 'key = value' settings from a file; flags override it");

    Flags f;
    app.add_flag("--list-presets", f.list_presets, "Print the built-in presets and exit");
    auto* preset_opt = app.add_option("--preset", f.preset, "Start from a built-in preset");
    auto* n_opt = app.add_option("--n", f.n, "Number of qubits")->check(CLI::PositiveNumber);
    auto* r_opt = app.add_option("--coupling-ratio", f.coupling_ratio, "R = g/kappa")
                      ->check(CLI::NonNegativeNumber);
    auto* d_opt = app.add_option("--detuning-over-kappa", f.detuning, "Delta/kappa");
    auto* tmax_opt = app.add_option("--tau-max", f.tau_max, "Last kappa t of the grid");
    auto* tstep_opt = app.add_option("--tau-step", f.tau_step, "Grid spacing in kappa t");
    auto* t_opt = app.add_option("--measure-interval", f.intervals,
                                 "kappa T of a measured curve (repeatable)")
                      ->delimiter(',');
    auto* dd_opt = app.add_option("--delta-detuning", f.detunings,
                                  "Delta/kappa for a delta_concurrence column (repeatable)")
                       ->delimiter(',');
    auto* series_opt =
        app.add_option("--series", f.series,
                       "survival, concurrence, measured_concurrence, delta_concurrence, gamma_z")
            ->delimiter(',');
    auto* mode_opt = app.add_option("--measurement-mode", f.mode, "envelope or stepwise")
                         ->check(CLI::IsMember({"envelope", "stepwise"}));
    app.add_option("--output", f.output, "Output file (default: stdout)");
    app.add_option("--format", f.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    app.add_option("--oracle-check", f.oracle, "Cross-check the amplitude: fast or full")
        ->check(CLI::IsMember({"fast", "full"}));
    app.add_option("--bath-modes", f.bath_modes, "Discretized-bath mode count for --oracle-check full")
        ->check(CLI::PositiveNumber);
    app.add_option("--bath-window", f.bath_window, "Discretized-bath half-width W/kappa")
        ->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    if (f.list_presets) {
        print_presets(std::cout);
        return 0;
    }

    std::optional<nmzeno::Scenario> scenario;
    try {
        if (preset_opt->count() > 0) {
            scenario = nmzeno::find_preset(f.preset).scenario();
        } else {
            scenario = nmzeno::Scenario{nmzeno::SystemParams::dimensionless(f.n, f.coupling_ratio, f.detuning)};
            scenario->tau_max = f.tau_max;
            scenario->tau_step = f.tau_step;
        }
        nmzeno::Scenario& s = *scenario;
        const nmzeno::SystemParams& base = s.params;
        const int n = n_opt->count() ? f.n : base.n();
        const double r = r_opt->count() ? f.coupling_ratio : base.coupling_ratio();
        const double d = d_opt->count() ? f.detuning : base.detuning();
        s.params = nmzeno::SystemParams::dimensionless(n, r, d);
        if (tmax_opt->count()) {
            s.tau_max = f.tau_max;
        }
        if (tstep_opt->count()) {
            s.tau_step = f.tau_step;
        }
        if (t_opt->count()) {
            s.intervals = f.intervals;
        }
        if (dd_opt->count()) {
            s.detunings = f.detunings;
        }
        if (mode_opt->count()) {
            s.mode = f.mode == "stepwise" ? nmzeno::MeasurementMode::Stepwise
                                          : nmzeno::MeasurementMode::Envelope;
        }
        if (series_opt->count()) {
            s.outputs.clear();
            for (const std::string& name : f.series) {
                s.outputs.push_back(nmzeno::parse_series(name));
            }
        } else if (preset_opt->count() == 0) {
            if (!s.intervals.empty()) {
                s.outputs.push_back(nmzeno::Series::MeasuredConcurrence);
            }
            if (!s.detunings.empty()) {
                s.outputs.push_back(nmzeno::Series::DeltaConcurrence);
            }
        }
        s.validate();
    } catch (const std::exception& e) {
        std::cerr << "nmzeno: " << e.what() << '\n';
        return kExitUsage;
    }

    nmzeno::SweepResult result;
    try {
        result = nmzeno::run_scenario(*scenario);
    } catch (const std::exception& e) {
        std::cerr << "nmzeno: " << e.what() << '\n';
        return kExitUsage;
    }

    bool oracle_failed = false;
    if (!f.oracle.empty()) {
        const auto level = f.oracle == "full" ? nmzeno::OracleLevel::Full : nmzeno::OracleLevel::Fast;
        const nmzeno::OracleReport report =
            nmzeno::run_oracle_check(*scenario, level, {f.bath_modes, f.bath_window});
        std::cerr << report.summary();
        oracle_failed = !report.passed();
        result.set_meta("oracle_check", f.oracle + (oracle_failed ? ": fail" : ": pass"));
    }

    const nmzeno::OutputFormat format = nmzeno::parse_format(f.format);
    if (f.output.empty() || f.output == "-") {
        nmzeno::write(std::cout, result, format);
    } else {
        std::ofstream file(f.output);
        if (!file) {
            std::cerr << "nmzeno: cannot open " << f.output << " for writing\n";
            return kExitUsage;
        }
        nmzeno::write(file, result, format);
    }
    return oracle_failed ? kExitOracleFailure : 0;
}
