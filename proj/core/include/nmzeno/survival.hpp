// survival.hpp: survival amplitude E(tau) of the n-qubit W state.
//
// Three independent routes are provided:
//   amplitude_analytic       closed form from the Laplace-domain solution,
//   amplitude_kernel_ode     the memory equation rewritten as a 2-component ODE,
//   amplitude_discrete_bath  Schrodinger evolution against a discretized bath.
// All times are dimensionless, tau = kappa * t.

#pragma once

#include "nmzeno/model.hpp"
#include "nmzeno/ode.hpp"

#include <span>
#include <vector>

namespace nmzeno {

struct Amplitude {
    double tau = 0.0;
    cdouble value{1.0, 0.0};
};

// Closed form E(tau) = e^{-(i Delta + kappa) tau/2} [cosh(Omega tau/2) +
// (i Delta + kappa)/Omega sinh(Omega tau/2)]. Evaluated without overflow for
// arbitrarily large tau and without 0/0 at Omega = 0.
cdouble amplitude_analytic(const SystemParams& params, double tau);

// dE/dtau from the same closed form.
cdouble amplitude_derivative_analytic(const SystemParams& params, double tau);

// |E(tau)|^2.
double survival_probability(const SystemParams& params, double tau);

// 1 - |E(tau)|^2 without the cancellation of the direct difference: for short
// times E - 1 is summed from its Taylor series, whose coefficients follow from
// E'' = -n g^2 E - (1 + i Delta) E'.
double survival_loss(const SystemParams& params, double tau);

// Memory-kernel route. Since the kernel is one complex exponential, the memory
// integral z = int_0^tau f(tau - s) E(s) ds obeys dz/dtau = n g^2 E - (1 + i Delta) z,
// so {E, z} is integrated exactly as a linear ODE. The grid must start at 0 and
// be strictly increasing.
std::vector<Amplitude> amplitude_kernel_ode(const SystemParams& params,
                                            std::span<const double> tau_grid,
                                            const ode::Options& options = {});

// Uniform discretization of the Lorentzian on omega_0 +- W. Mode k sits at the
// cell midpoint omega_0 - W + (k + 1/2) dw with dw = 2W/M and coupling
// G_k = sqrt(J(omega_k) dw). Frequencies and couplings are in units of kappa.
struct BathDiscretization {
    int mode_count = 2000;
    double window_halfwidth = 100.0;

    void validate() const;
    double mode_spacing() const { return 2.0 * window_halfwidth / mode_count; }
    std::vector<double> frequencies(const SystemParams& params) const;
    std::vector<double> couplings(const SystemParams& params) const;
    // sum_k G_k^2; tends to n g^2 (2/pi) arctan(W/kappa) as M grows.
    double captured_mass(const SystemParams& params) const;
    BathDiscretization doubled() const { return {2 * mode_count, window_halfwidth}; }
};

// Tolerances used by the bath oracle unless the caller overrides them.
ode::Options bath_ode_options();

// Integrates the single-excitation sector in the interaction picture:
//   dc/dtau        = -i sum_k G_k e^{-i (omega_k - omega_qb) tau} lambda_k
//   dlambda_k/dtau = -i G_k e^{+i (omega_k - omega_qb) tau} c
// with c(0) = 1, lambda_k(0) = 0, and returns c(tau) as the amplitude. The
// step is additionally capped at pi/(10 W) so the fastest coupling phase is
// resolved.
std::vector<Amplitude> amplitude_discrete_bath(const SystemParams& params,
                                               const BathDiscretization& bath,
                                               std::span<const double> tau_grid,
                                               const ode::Options& options = bath_ode_options());

struct ConvergedBath {
    std::vector<Amplitude> amplitudes;   // at the refined mode count 2M
    std::vector<Amplitude> coarse;       // at M
    double refinement_change = 0.0;      // max_tau |c_2M - c_M|
};

// Runs the bath oracle at M and 2M. Throws NonConvergenceError when the two
// results differ by more than tolerance anywhere on the grid.
ConvergedBath amplitude_discrete_bath_converged(const SystemParams& params,
                                                const BathDiscretization& bath,
                                                std::span<const double> tau_grid,
                                                double tolerance);

struct ResonantZero {
    int m = 0;
    double raw = 0.0;       // 2 [m pi - arctan(Omega'/kappa)] / Omega'
    double polished = 0.0;  // after one Newton step on E(tau)
};

// m-th zero of the survival probability at resonance. Requires Delta == 0 and
// 4 n g^2 > kappa^2; throws std::domain_error otherwise, std::invalid_argument
// for m < 1.
ResonantZero zeros_resonant(const SystemParams& params, int m);

// Asymptotic decay rate of |E|^2: -2 max Re s_+-, s_+- = [-(i Delta + kappa) +- Omega]/2.
// Throws std::invalid_argument when g == 0.
double free_decay_rate(const SystemParams& params);

}  // namespace nmzeno
