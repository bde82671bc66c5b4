#include "nmzeno/scenario.hpp"

#include "nmzeno/entanglement.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>

namespace nmzeno {

namespace {

std::vector<double> sorted_unique(std::vector<double> values) {
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    return values;
}

std::string join_labels(const std::vector<double>& values) {
    std::string out;
    for (double v : values) {
        out += (out.empty() ? "" : ",") + format_label(v);
    }
    return out;
}

struct Column {
    std::string name;
    std::function<double(double)> eval;
    std::string context;  // names the T or Delta in error messages
};

}  // namespace

std::string format_number(double value) {
    return fmt::format("{:.16e}", value);
}

std::string format_label(double value) {
    return fmt::format("{}", value);
}

std::string_view to_string(Series series) {
    switch (series) {
        case Series::Survival:
            return "survival";
        case Series::Concurrence:
            return "concurrence";
        case Series::MeasuredConcurrence:
            return "measured_concurrence";
        case Series::DeltaConcurrence:
            return "delta_concurrence";
        case Series::GammaZ:
            return "gamma_z";
    }
    return "unknown";
}

Series parse_series(std::string_view name) {
    for (Series s : {Series::Survival, Series::Concurrence, Series::MeasuredConcurrence,
                     Series::DeltaConcurrence, Series::GammaZ}) {
        if (to_string(s) == name) {
            return s;
        }
    }
    if (name == "gamma_z_curve") {
        return Series::GammaZ;
    }
    throw std::invalid_argument("unknown series '" + std::string(name) +
                                "' (expected survival, concurrence, measured_concurrence, "
                                "delta_concurrence or gamma_z)");
}

void Scenario::validate() const {
    if (!(tau_step > 0.0) || !std::isfinite(tau_step)) {
        throw std::invalid_argument("scenario: tau_step must be > 0");
    }
    if (!(tau_max >= tau_step) || !std::isfinite(tau_max)) {
        throw std::invalid_argument("scenario: tau_max must be >= tau_step");
    }
    if (outputs.empty()) {
        throw std::invalid_argument("scenario: no output series requested");
    }
    for (double t : intervals) {
        if (!(t > 0.0) || !std::isfinite(t)) {
            throw std::invalid_argument("scenario: measurement interval " + format_label(t) +
                                        " must be > 0");
        }
    }
    for (double d : detunings) {
        if (!std::isfinite(d)) {
            throw std::invalid_argument("scenario: detunings must be finite");
        }
    }
    const auto wants = [&](Series s) {
        return std::find(outputs.begin(), outputs.end(), s) != outputs.end();
    };
    if (wants(Series::MeasuredConcurrence) && intervals.empty()) {
        throw std::invalid_argument("scenario: measured_concurrence needs at least one interval");
    }
    if (wants(Series::DeltaConcurrence) && detunings.empty()) {
        throw std::invalid_argument("scenario: delta_concurrence needs at least one detuning");
    }
    if ((wants(Series::Concurrence) || wants(Series::MeasuredConcurrence) ||
         wants(Series::DeltaConcurrence)) &&
        params.n() < 2) {
        throw std::invalid_argument("scenario: concurrence series need n >= 2");
    }
}

std::vector<double> Scenario::tau_grid() const {
    const auto steps = static_cast<std::size_t>(std::floor(tau_max / tau_step + 1e-9));
    std::vector<double> grid(steps + 1);
    for (std::size_t i = 0; i <= steps; ++i) {
        grid[i] = static_cast<double>(i) * tau_step;
    }
    return grid;
}

std::vector<SystemParams> Scenario::parameter_sets() const {
    std::vector<SystemParams> sets{params};
    for (double d : sorted_unique(detunings)) {
        sets.push_back(params.with_detuning(d));
    }
    return sets;
}

void SweepResult::set_meta(const std::string& key, const std::string& value) {
    for (auto& [k, v] : metadata) {
        if (k == key) {
            v = value;
            return;
        }
    }
    metadata.emplace_back(key, value);
}

SweepResult run_scenario(const Scenario& scenario) {
    scenario.validate();
    const SystemParams& params = scenario.params;
    const MeasurementMode mode = scenario.mode;

    std::vector<Series> requested = scenario.outputs;
    std::sort(requested.begin(), requested.end());
    requested.erase(std::unique(requested.begin(), requested.end()), requested.end());

    std::vector<Column> columns;
    for (Series s : requested) {
        switch (s) {
            case Series::Survival:
                columns.push_back({"survival",
                                   [&](double tau) { return survival_probability(params, tau); },
                                   ""});
                break;
            case Series::Concurrence:
                columns.push_back({"concurrence",
                                   [&](double tau) { return pair_concurrence_closed(params, tau); },
                                   ""});
                break;
            case Series::MeasuredConcurrence:
                for (double interval : sorted_unique(scenario.intervals)) {
                    columns.push_back({"concurrence_measured_T" + format_label(interval),
                                       [&params, interval, mode](double tau) {
                                           return measured_concurrence(params, interval, tau, mode);
                                       },
                                       "T=" + format_label(interval)});
                }
                break;
            case Series::DeltaConcurrence:
                for (double d : sorted_unique(scenario.detunings)) {
                    columns.push_back({"delta_concurrence_D" + format_label(d),
                                       [&params, d](double tau) {
                                           return delta_concurrence(params, d, tau);
                                       },
                                       "Delta=" + format_label(d)});
                }
                break;
            case Series::GammaZ:
                // Gamma_z as a function of the interval, read off the tau column.
                columns.push_back({"gamma_z",
                                   [&](double tau) {
                                       return tau == 0.0 ? 0.0 : effective_decay_rate(params, tau);
                                   },
                                   ""});
                break;
        }
    }

    SweepResult result;
    result.columns.push_back("tau");
    for (const Column& c : columns) {
        result.columns.push_back(c.name);
    }

    const std::vector<double> grid = scenario.tau_grid();
    result.rows.reserve(grid.size());
    for (double tau : grid) {
        std::vector<double> row;
        row.reserve(result.columns.size());
        row.push_back(tau);
        for (const Column& c : columns) {
            try {
                row.push_back(c.eval(tau));
            } catch (const std::exception& e) {
                throw ScenarioError("series " + c.name + " failed at tau=" + format_label(tau) +
                                    (c.context.empty() ? "" : " (" + c.context + ")") + ": " +
                                    e.what());
            }
        }
        result.rows.push_back(std::move(row));
    }

    result.set_meta("artifact", "nmzeno");
    result.set_meta("version", NMZENO_VERSION);
    result.set_meta("preset", scenario.name.empty() ? "none" : scenario.name);
    result.set_meta("n", std::to_string(params.n()));
    result.set_meta("coupling_ratio", format_number(params.coupling_ratio()));
    result.set_meta("detuning_over_kappa", format_number(params.detuning()));
    result.set_meta("tau_max", format_number(scenario.tau_max));
    result.set_meta("tau_step", format_number(scenario.tau_step));
    result.set_meta("measure_intervals", join_labels(sorted_unique(scenario.intervals)));
    result.set_meta("detunings", join_labels(sorted_unique(scenario.detunings)));
    result.set_meta("measurement_mode", mode == MeasurementMode::Envelope ? "envelope" : "stepwise");
    if (params.coupling_ratio() > 0.0) {
        result.set_meta("free_decay_rate", format_number(free_decay_rate(params)));
    }
    result.set_meta("oracle_check", "not_run");
    return result;
}

bool OracleReport::passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const OracleCheck& c) { return c.passed; });
}

std::string OracleReport::summary() const {
    std::string out;
    for (const OracleCheck& c : checks) {
        out += fmt::format("[{}] {}: max deviation {:.3e} (tolerance {:.1e}){}\n",
                           c.passed ? "PASS" : "FAIL", c.name, c.max_deviation, c.tolerance,
                           c.note.empty() ? "" : "  " + c.note);
    }
    out += fmt::format("oracle check ({}): {}\n", level == OracleLevel::Fast ? "fast" : "full",
                       passed() ? "pass" : "fail");
    return out;
}

OracleReport run_oracle_check(const Scenario& scenario, OracleLevel level,
                              const BathDiscretization& bath) {
    OracleReport report;
    report.level = level;

    std::vector<double> grid;
    try {
        scenario.validate();
        grid = scenario.tau_grid();
    } catch (const std::exception& e) {
        report.checks.push_back({"scenario", 0.0, 0.0, false, e.what()});
        return report;
    }

    auto deviation = [](const std::vector<Amplitude>& route, const SystemParams& p) {
        double worst = 0.0;
        for (const Amplitude& a : route) {
            worst = std::max(worst, std::abs(a.value - amplitude_analytic(p, a.tau)));
        }
        return worst;
    };

    for (const SystemParams& p : scenario.parameter_sets()) {
        const std::string tag = fmt::format("n={} R={} Delta={}", p.n(), format_label(p.coupling_ratio()),
                                            format_label(p.detuning()));
        try {
            const double dev = deviation(amplitude_kernel_ode(p, grid), p);
            report.checks.push_back(
                {"analytic vs kernel-ODE [" + tag + "]", dev, kKernelOdeTolerance,
                 dev <= kKernelOdeTolerance, ""});
        } catch (const std::exception& e) {
            report.checks.push_back({"analytic vs kernel-ODE [" + tag + "]", 0.0,
                                     kKernelOdeTolerance, false, e.what()});
        }

        if (level != OracleLevel::Full) {
            continue;
        }
        try {
            const auto coarse = amplitude_discrete_bath(p, bath, grid);
            const auto fine = amplitude_discrete_bath(p, bath.doubled(), grid);
            const double dev = deviation(coarse, p);
            double change = 0.0;
            for (std::size_t i = 0; i < coarse.size(); ++i) {
                change = std::max(change, std::abs(fine[i].value - coarse[i].value));
            }
            report.checks.push_back(
                {fmt::format("analytic vs discretized bath M={} W={} [{}]", bath.mode_count,
                             format_label(bath.window_halfwidth), tag),
                 dev, kBathTolerance, dev <= kBathTolerance,
                 fmt::format("error at M={} is {:.3e}", 2 * bath.mode_count, deviation(fine, p))});
            report.checks.push_back(
                {fmt::format("bath M-doubling change [{}]", tag), change, kBathTolerance,
                 change <= kBathTolerance, ""});
        } catch (const std::exception& e) {
            report.checks.push_back({"discretized bath [" + tag + "]", 0.0, kBathTolerance, false,
                                     e.what()});
        }
    }
    return report;
}

}  // namespace nmzeno
