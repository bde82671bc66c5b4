// presets.hpp: built-in parameter sets for the figure-data reproductions.

#pragma once

#include "nmzeno/scenario.hpp"

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace nmzeno {

struct Preset {
    std::string name;
    std::string description;
    int n = 4;
    double coupling_ratio = 0.1;
    double detuning = 0.0;                // Delta/kappa of the base parameter set
    std::vector<double> detunings;        // compared against Delta = 0 (delta_concurrence)
    std::vector<double> intervals;        // kappa T of the measured curves
    double tau_max = 50.0;
    double tau_step = 0.01;

    SystemParams params() const;
    // Base parameters plus one set per entry of detunings.
    std::vector<SystemParams> parameter_sets() const;
    Scenario scenario() const;
};

std::span<const Preset> presets();

// Throws std::invalid_argument listing the known names when name is unknown.
const Preset& find_preset(std::string_view name);

}  // namespace nmzeno
