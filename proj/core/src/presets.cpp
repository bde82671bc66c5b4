#include "nmzeno/presets.hpp"

#include <array>
#include <stdexcept>

namespace nmzeno {

namespace {

// Bad-cavity curves run to tau = 50 on a 0.01 grid; good-cavity curves
// oscillate at ~sqrt(n) 2g and run to tau = 2 on a 0.001 grid.
Preset bad_cavity(std::string name, std::string description, int n, double delta,
                  std::vector<double> detunings, std::vector<double> intervals) {
    return {std::move(name), std::move(description), n, 0.1, delta, std::move(detunings),
            std::move(intervals), 50.0, 0.01};
}

Preset good_cavity(std::string name, std::string description, int n, double delta,
                   std::vector<double> detunings, std::vector<double> intervals) {
    return {std::move(name), std::move(description), n, 10.0, delta, std::move(detunings),
            std::move(intervals), 2.0, 0.001};
}

const std::vector<Preset>& table() {
    static const std::vector<Preset> kPresets = {
        bad_cavity("fig2a", "detuning gain dC, bad cavity", 4, 0.0, {2.0, 4.0}, {}),
        good_cavity("fig2b", "detuning gain dC, good cavity", 4, 0.0, {20.0, 35.0}, {}),
        bad_cavity("fig3a", "measured concurrence, resonant, bad cavity", 2, 0.0, {}, {0.5, 2.0, 5.0}),
        good_cavity("fig3b", "measured concurrence, resonant, good cavity", 2, 0.0, {},
                    {0.001, 0.003, 0.005}),
        bad_cavity("fig3c", "measured concurrence, resonant, bad cavity", 4, 0.0, {}, {0.5, 2.0, 5.0}),
        good_cavity("fig3d", "measured concurrence, resonant, good cavity", 4, 0.0, {},
                    {0.001, 0.003, 0.005}),
        bad_cavity("fig4a", "measured concurrence, detuned, bad cavity", 4, 0.5, {},
                   {0.1, 0.5, 2.0, 5.0}),
        bad_cavity("fig4b", "measured concurrence, detuned, bad cavity", 4, 2.0, {},
                   {0.1, 0.5, 2.0, 5.0}),
        good_cavity("fig5a", "measured concurrence, detuned, good cavity", 4, 5.0, {},
                    {0.0005, 0.001, 0.003, 0.005}),
        good_cavity("fig5b", "measured concurrence, detuned, good cavity", 4, 20.0, {},
                    {0.0005, 0.001, 0.003, 0.005}),
    };
    return kPresets;
}

}  // namespace

SystemParams Preset::params() const {
    return SystemParams::dimensionless(n, coupling_ratio, detuning);
}

std::vector<SystemParams> Preset::parameter_sets() const {
    std::vector<SystemParams> sets{params()};
    for (double d : detunings) {
        sets.push_back(params().with_detuning(d));
    }
    return sets;
}

Scenario Preset::scenario() const {
    Scenario s{params()};
    s.name = name;
    s.tau_max = tau_max;
    s.tau_step = tau_step;
    s.intervals = intervals;
    s.detunings = detunings;
    s.outputs = {Series::Concurrence};
    if (!intervals.empty()) {
        s.outputs.push_back(Series::MeasuredConcurrence);
    }
    if (!detunings.empty()) {
        s.outputs.push_back(Series::DeltaConcurrence);
    }
    return s;
}

std::span<const Preset> presets() {
    return table();
}

const Preset& find_preset(std::string_view name) {
    for (const Preset& p : table()) {
        if (p.name == name) {
            return p;
        }
    }
    std::string known;
    for (const Preset& p : table()) {
        known += (known.empty() ? "" : ", ") + p.name;
    }
    throw std::invalid_argument("unknown preset '" + std::string(name) + "' (known: " + known + ")");
}

}  // namespace nmzeno
