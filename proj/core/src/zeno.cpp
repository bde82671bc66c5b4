#include "nmzeno/zeno.hpp"

#include "nmzeno/errors.hpp"
#include "nmzeno/survival.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace nmzeno {

namespace {

constexpr double kLogFloor = 1e-300;
constexpr double kScanZeroFloor = 1e-12;
constexpr double kRegimeTolerance = 1e-9;

void require_interval(double interval, const char* where) {
    if (!(interval > 0.0) || !std::isfinite(interval)) {
        throw std::invalid_argument(std::string(where) + ": measurement interval must be > 0");
    }
}

// log|E(T)|^2, accurate both when the loss is tiny and when |E|^2 is tiny.
double log_survival(const SystemParams& params, double interval) {
    const double loss = survival_loss(params, interval);
    return loss < 0.5 ? std::log1p(-loss) : std::log(survival_probability(params, interval));
}

// Gamma_z without the zero check; +inf exactly at a survival zero.
double raw_rate(const SystemParams& params, double interval) {
    return -log_survival(params, interval) / interval;
}

}  // namespace

std::string_view to_string(Regime regime) {
    switch (regime) {
        case Regime::Zeno:
            return "zeno";
        case Regime::AntiZeno:
            return "anti-zeno";
        case Regime::Neutral:
            return "neutral";
    }
    return "unknown";
}

MeasurementSchedule MeasurementSchedule::make(const SystemParams& params, double interval,
                                              std::optional<int> count) {
    if (count && *count < 1) {
        throw std::invalid_argument("MeasurementSchedule: count must be >= 1");
    }
    return {interval, count, effective_decay_rate(params, interval)};
}

double MeasurementSchedule::survival_after_sequence() const {
    if (!count) {
        throw std::logic_error("MeasurementSchedule: no measurement count set");
    }
    return std::exp(-gamma_z * interval * *count);
}

double effective_decay_rate(const SystemParams& params, double interval) {
    require_interval(interval, "effective_decay_rate");
    if (survival_probability(params, interval) < kLogFloor) {
        throw SurvivalZeroError("effective_decay_rate: survival probability vanishes at kappa T = " +
                                    std::to_string(interval),
                                interval);
    }
    return raw_rate(params, interval);
}

double measured_survival(const SystemParams& params, double interval, double tau,
                         MeasurementMode mode) {
    if (!(tau >= 0.0) || !std::isfinite(tau)) {
        throw std::invalid_argument("measured_survival: tau must be finite and >= 0");
    }
    const double gamma_z = effective_decay_rate(params, interval);
    if (mode == MeasurementMode::Envelope) {
        return std::exp(-gamma_z * tau);
    }
    // Guard against t/T landing a hair below an integer.
    double completed = std::floor(tau / interval + 1e-9);
    double remainder = tau - completed * interval;
    if (remainder < 0.0) {
        remainder = 0.0;
    }
    return std::exp(-gamma_z * completed * interval) * survival_probability(params, remainder);
}

double measured_concurrence(const SystemParams& params, double interval, double tau,
                            MeasurementMode mode) {
    if (params.n() < 2) {
        throw std::invalid_argument("measured_concurrence: a pair needs n >= 2");
    }
    return 2.0 * measured_survival(params, interval, tau, mode) / params.n();
}

double reference_rate(const SystemParams& params, ReferenceRate reference) {
    if (params.coupling_ratio() <= 0.0) {
        throw std::invalid_argument("reference_rate: requires g > 0");
    }
    return reference == ReferenceRate::ExactPole ? free_decay_rate(params)
                                                 : golden_rule_rate(params);
}

RegimeReport classify_regime(const SystemParams& params, double interval,
                             ReferenceRate reference) {
    RegimeReport report;
    report.gamma_ref = reference_rate(params, reference);
    report.gamma_z = effective_decay_rate(params, interval);
    report.ratio = report.gamma_z / report.gamma_ref;
    if (report.ratio < 1.0 - kRegimeTolerance) {
        report.regime = Regime::Zeno;
    } else if (report.ratio > 1.0 + kRegimeTolerance) {
        report.regime = Regime::AntiZeno;
    } else {
        report.regime = Regime::Neutral;
    }
    return report;
}

ThresholdResult threshold_time(const SystemParams& params, const ThresholdSearch& search) {
    if (!(search.t_min > 0.0) || !(search.t_max > search.t_min)) {
        throw std::invalid_argument("threshold_time: need 0 < t_min < t_max");
    }
    if (search.scan_points < 2) {
        throw std::invalid_argument("threshold_time: need at least two scan points");
    }
    const double gamma_ref = reference_rate(params, search.reference);
    auto excess = [&](double interval) { return raw_rate(params, interval) - gamma_ref; };

    ThresholdResult result;
    const double log_lo = std::log(search.t_min);
    const double log_hi = std::log(search.t_max);
    const int points = search.scan_points;

    std::optional<double> prev_t;
    double prev_excess = 0.0;
    for (int i = 0; i < points; ++i) {
        const double t = i == points - 1
                             ? search.t_max
                             : std::exp(log_lo + (log_hi - log_lo) * i / (points - 1));
        if (survival_probability(params, t) < kScanZeroFloor) {
            result.skipped.push_back(t);
            continue;
        }
        const double e = excess(t);
        if (e == 0.0) {
            result.t_star = t;
            return result;
        }
        if (prev_t && (prev_excess < 0.0) != (e < 0.0)) {
            double lo = *prev_t;
            double hi = t;
            double f_lo = prev_excess;
            while (hi - lo > search.rel_tol * hi) {
                const double mid = 0.5 * (lo + hi);
                const double f_mid = excess(mid);
                if (f_mid == 0.0) {
                    lo = hi = mid;
                    break;
                }
                if ((f_mid < 0.0) == (f_lo < 0.0)) {
                    lo = mid;
                    f_lo = f_mid;
                } else {
                    hi = mid;
                }
            }
            result.t_star = 0.5 * (lo + hi);
            return result;
        }
        prev_t = t;
        prev_excess = e;
    }
    return result;
}

}  // namespace nmzeno
