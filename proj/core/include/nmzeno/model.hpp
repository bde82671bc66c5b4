// model.hpp: physical parameters of n qubits in a common Lorentzian bath,
// derived frequencies, spectral density and memory kernel.
//
// Units: everything is stored with the cavity decay rate kappa set to 1.
// Rates are expressed in units of kappa, times as tau = kappa * t. The
// original kappa is kept only to convert absolute times on request.

#pragma once

#include <complex>
#include <optional>

namespace nmzeno {

using cdouble = std::complex<double>;

class SystemParams {
public:
    // Absolute-unit constructor. All rates share one (arbitrary) unit.
    // Throws std::invalid_argument if n < 1, g < 0, kappa <= 0 or any value
    // is not finite.
    SystemParams(int n, double g, double kappa, double delta, double omega_qb = 0.0);

    // n qubits, R = g/kappa, detuning Delta/kappa; kappa = 1.
    static SystemParams dimensionless(int n, double coupling_ratio,
                                      double detuning_over_kappa,
                                      double omega_qb_over_kappa = 0.0);

    int n() const noexcept { return n_; }
    double coupling_ratio() const noexcept { return coupling_ratio_; }  // R = g/kappa
    double detuning() const noexcept { return detuning_; }              // Delta/kappa
    double omega_qb() const noexcept { return omega_qb_; }              // omega_qb/kappa
    double cavity_frequency() const noexcept { return omega_qb_ + detuning_; }  // omega_0/kappa
    double kappa() const noexcept { return kappa_; }                    // in input units

    // n g^2 / kappa^2, the weight of the memory kernel at zero delay.
    double collective_coupling_sq() const noexcept {
        return n_ * coupling_ratio_ * coupling_ratio_;
    }

    double tau_of(double t) const noexcept { return kappa_ * t; }
    double time_of(double tau) const noexcept { return tau / kappa_; }

    SystemParams with_detuning(double detuning_over_kappa) const;
    SystemParams with_qubits(int n) const;

private:
    SystemParams() = default;

    int n_ = 1;
    double coupling_ratio_ = 0.0;
    double detuning_ = 0.0;
    double omega_qb_ = 0.0;
    double kappa_ = 1.0;
};

struct DerivedFrequencies {
    double omega_R = 0.0;                 // sqrt(Delta^2 + 4 g^2 n)
    cdouble omega_big;                    // sqrt(kappa^2 - omega_R^2 + 2i Delta kappa), principal branch
    std::optional<double> omega_prime;    // sqrt(4 n g^2 - kappa^2), only when positive
    bool degenerate = false;              // omega_big == 0 (critical damping)
};

DerivedFrequencies derived_frequencies(const SystemParams& params);

// Lorentzian J(omega) in units of kappa, for omega given in units of kappa
// (absolute frequency, cavity line centred at omega_qb + Delta).
double spectral_density(const SystemParams& params, double omega);

// Memory kernel f(dt) = n g^2 exp(-(kappa + i Delta) dt) in units of kappa^2,
// dt given as a dimensionless delay kappa*dt >= 0.
cdouble correlation_kernel(const SystemParams& params, double dt);

// Markovian golden-rule rate 2*pi*J(omega_qb) = 2 n g^2 kappa / (Delta^2 + kappa^2).
double golden_rule_rate(const SystemParams& params);

}  // namespace nmzeno
