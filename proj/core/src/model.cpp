#include "nmzeno/model.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace nmzeno {

namespace {

void require_finite(double value, const char* name) {
    if (!std::isfinite(value)) {
        throw std::invalid_argument(std::string("SystemParams: ") + name + " must be finite");
    }
}

}  // namespace

SystemParams::SystemParams(int n, double g, double kappa, double delta, double omega_qb) {
    require_finite(g, "g");
    require_finite(kappa, "kappa");
    require_finite(delta, "delta");
    require_finite(omega_qb, "omega_qb");
    if (n < 1) {
        throw std::invalid_argument("SystemParams: n must be >= 1");
    }
    if (g < 0.0) {
        throw std::invalid_argument("SystemParams: g must be >= 0");
    }
    if (kappa <= 0.0) {
        throw std::invalid_argument("SystemParams: kappa must be > 0");
    }
    if (omega_qb < 0.0) {
        throw std::invalid_argument("SystemParams: omega_qb must be >= 0");
    }
    n_ = n;
    kappa_ = kappa;
    coupling_ratio_ = g / kappa;
    detuning_ = delta / kappa;
    omega_qb_ = omega_qb / kappa;
}

SystemParams SystemParams::dimensionless(int n, double coupling_ratio,
                                         double detuning_over_kappa,
                                         double omega_qb_over_kappa) {
    return SystemParams(n, coupling_ratio, 1.0, detuning_over_kappa, omega_qb_over_kappa);
}

SystemParams SystemParams::with_detuning(double detuning_over_kappa) const {
    SystemParams copy = *this;
    require_finite(detuning_over_kappa, "delta");
    copy.detuning_ = detuning_over_kappa;
    return copy;
}

SystemParams SystemParams::with_qubits(int n) const {
    if (n < 1) {
        throw std::invalid_argument("SystemParams: n must be >= 1");
    }
    SystemParams copy = *this;
    copy.n_ = n;
    return copy;
}

DerivedFrequencies derived_frequencies(const SystemParams& params) {
    const double delta = params.detuning();
    const double four_ng2 = 4.0 * params.collective_coupling_sq();

    DerivedFrequencies out;
    out.omega_R = std::sqrt(delta * delta + four_ng2);
    // Build the radicand from the inputs rather than from omega_R^2.
    const cdouble radicand(1.0 - delta * delta - four_ng2, 2.0 * delta);
    out.omega_big = std::sqrt(radicand);
    out.degenerate = out.omega_big == cdouble(0.0, 0.0);
    if (four_ng2 > 1.0) {
        out.omega_prime = std::sqrt(four_ng2 - 1.0);
    }
    return out;
}

double spectral_density(const SystemParams& params, double omega) {
    const double offset = omega - params.cavity_frequency();
    return params.collective_coupling_sq() / (std::numbers::pi * (offset * offset + 1.0));
}

cdouble correlation_kernel(const SystemParams& params, double dt) {
    if (dt < 0.0) {
        throw std::invalid_argument("correlation_kernel: delay must be >= 0");
    }
    return params.collective_coupling_sq() * std::exp(-dt) *
           std::polar(1.0, -params.detuning() * dt);
}

double golden_rule_rate(const SystemParams& params) {
    const double delta = params.detuning();
    return 2.0 * params.collective_coupling_sq() / (1.0 + delta * delta);
}

}  // namespace nmzeno
