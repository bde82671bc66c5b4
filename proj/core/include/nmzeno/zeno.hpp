// zeno.hpp: repeated non-selective measurements at interval T.
//
// Each measurement projects back onto the W state with probability |E(T)|^2,
// giving the effective rate Gamma_z(T) = -log|E(T)|^2 / T. Zeno vs anti-Zeno is
// decided against a reference rate of the unmeasured decay.

#pragma once

#include "nmzeno/model.hpp"

#include <optional>
#include <string_view>
#include <vector>

namespace nmzeno {

enum class Regime { Zeno, AntiZeno, Neutral };
enum class MeasurementMode { Envelope, Stepwise };

// ExactPole: free_decay_rate, the asymptotic rate of the unmeasured |E|^2.
// GoldenRule: 2 n g^2 kappa / (Delta^2 + kappa^2), for sensitivity studies.
enum class ReferenceRate { ExactPole, GoldenRule };

std::string_view to_string(Regime regime);

struct MeasurementSchedule {
    double interval = 0.0;       // kappa T
    std::optional<int> count;    // N, if a finite sequence is meant
    double gamma_z = 0.0;        // Gamma_z(T) / kappa

    // Throws like effective_decay_rate, and std::invalid_argument for count < 1.
    static MeasurementSchedule make(const SystemParams& params, double interval,
                                    std::optional<int> count = std::nullopt);
    // |E(T)|^{2N} = exp(-Gamma_z N T); requires count.
    double survival_after_sequence() const;
};

struct RegimeReport {
    Regime regime = Regime::Neutral;
    double gamma_z = 0.0;
    double gamma_ref = 0.0;
    double ratio = 1.0;
};

// Gamma_z(T) = -log(|E(T)|^2)/T. Throws std::invalid_argument for T <= 0 and
// SurvivalZeroError when |E(T)|^2 < 1e-300.
double effective_decay_rate(const SystemParams& params, double interval);

// Envelope: exp(-Gamma_z tau). Stepwise: |E(T)|^{2N} |E(tau - N T)|^2 with
// N = floor(tau/T) completed measurements. The two coincide at tau = N T.
double measured_survival(const SystemParams& params, double interval, double tau,
                         MeasurementMode mode = MeasurementMode::Envelope);

// (2/n) measured_survival. Throws std::invalid_argument for n < 2.
double measured_concurrence(const SystemParams& params, double interval, double tau,
                            MeasurementMode mode = MeasurementMode::Envelope);

double reference_rate(const SystemParams& params, ReferenceRate reference);

// Zeno iff ratio < 1 - 1e-9, AntiZeno iff ratio > 1 + 1e-9.
RegimeReport classify_regime(const SystemParams& params, double interval,
                             ReferenceRate reference = ReferenceRate::ExactPole);

struct ThresholdSearch {
    double t_max = 20.0;      // upper end of the scanned intervals, kappa T
    double t_min = 1e-6;      // lower end of the log-spaced scan
    int scan_points = 256;
    double rel_tol = 1e-10;
    ReferenceRate reference = ReferenceRate::ExactPole;
};

struct ThresholdResult {
    std::optional<double> t_star;   // absent when Gamma_z never crosses the reference
    std::vector<double> skipped;    // scan intervals discarded at survival zeros
};

// Smallest kappa T in the scanned window with Gamma_z(T) = Gamma_ref: log-spaced
// scan followed by bisection. Scan points with |E(T)|^2 < 1e-12 are skipped and
// reported.
ThresholdResult threshold_time(const SystemParams& params, const ThresholdSearch& search = {});

}  // namespace nmzeno
