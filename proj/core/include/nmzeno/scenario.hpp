// scenario.hpp: parameter sweeps over a tau grid and oracle cross-checks.

#pragma once

#include "nmzeno/model.hpp"
#include "nmzeno/survival.hpp"
#include "nmzeno/zeno.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace nmzeno {

// Column order in a SweepResult follows this declaration order.
enum class Series { Survival, Concurrence, MeasuredConcurrence, DeltaConcurrence, GammaZ };

std::string_view to_string(Series series);
// Accepts survival, concurrence, measured_concurrence, delta_concurrence,
// gamma_z (and gamma_z_curve); throws std::invalid_argument otherwise.
Series parse_series(std::string_view name);

struct Scenario {
    explicit Scenario(SystemParams p) : params(p) {}

    SystemParams params;
    double tau_max = 50.0;
    double tau_step = 0.01;
    std::vector<double> intervals;   // kappa T for measured_concurrence
    std::vector<double> detunings;   // Delta/kappa for delta_concurrence
    std::vector<Series> outputs{Series::Survival, Series::Concurrence};
    MeasurementMode mode = MeasurementMode::Envelope;
    std::string name;                // preset name, empty for ad-hoc runs

    // Throws std::invalid_argument on a malformed scenario.
    void validate() const;
    // tau_i = i * tau_step, i = 0..floor(tau_max/tau_step).
    std::vector<double> tau_grid() const;
    // params plus one variant per requested detuning.
    std::vector<SystemParams> parameter_sets() const;
};

using Metadata = std::vector<std::pair<std::string, std::string>>;

struct SweepResult {
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;
    Metadata metadata;

    void set_meta(const std::string& key, const std::string& value);
};

// Raised by run_scenario; the message names the series and tau/T at fault.
class ScenarioError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Evaluates every requested series on the tau grid. Deterministic.
SweepResult run_scenario(const Scenario& scenario);

enum class OracleLevel { Fast, Full };

struct OracleCheck {
    std::string name;
    double max_deviation = 0.0;
    double tolerance = 0.0;
    bool passed = false;
    std::string note;
};

struct OracleReport {
    OracleLevel level = OracleLevel::Fast;
    std::vector<OracleCheck> checks;
    bool passed() const;
    std::string summary() const;
};

inline constexpr double kKernelOdeTolerance = 1e-8;
inline constexpr double kBathTolerance = 1e-3;

// Fast: analytic vs kernel-ODE amplitude on every parameter set of the
// scenario. Full: additionally the discretized bath at `bath` and at twice its
// mode count. Failures are report content, never exceptions.
OracleReport run_oracle_check(const Scenario& scenario, OracleLevel level,
                              const BathDiscretization& bath = {4000, 200.0});

std::string format_number(double value);   // 17 significant digits, scientific
std::string format_label(double value);    // shortest round-trip form, for names

}  // namespace nmzeno
