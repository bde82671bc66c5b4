#include "nmzeno/survival.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace nmzeno {

namespace {

// Below this |Omega tau| the hyperbolic terms are replaced by their Taylor
// series; four terms leave a truncation error of order |Omega tau|^8 / 10^5.
constexpr double kSeriesThreshold = 1e-4;
// Above this Re(Omega tau / 2) cosh/sinh are assembled from the two decaying
// exponentials instead, which never overflow.
constexpr double kExponentialThreshold = 20.0;

// The closed form written as E = C + (a/2) S and dE/dtau = -n g^2 S with
//   C = e^{-a tau/2} cosh(Omega tau/2),  S = e^{-a tau/2} 2 sinh(Omega tau/2)/Omega,
// a = 1 + i Delta.
struct HyperbolicParts {
    cdouble c;
    cdouble s;
    cdouble a;
};

HyperbolicParts hyperbolic_parts(const SystemParams& params, double tau) {
    if (tau < 0.0 || !std::isfinite(tau)) {
        throw std::invalid_argument("amplitude_analytic: tau must be finite and >= 0, got " +
                                    std::to_string(tau));
    }
    const cdouble a(1.0, params.detuning());
    const cdouble omega = derived_frequencies(params).omega_big;
    const cdouble x = 0.5 * omega * tau;

    HyperbolicParts out{{}, {}, a};
    if (std::abs(omega * tau) < kSeriesThreshold) {
        const cdouble x2 = x * x;
        const cdouble envelope = std::exp(-0.5 * a * tau);
        const cdouble cosh_series = 1.0 + x2 / 2.0 + x2 * x2 / 24.0 + x2 * x2 * x2 / 720.0;
        const cdouble sinhc_series = 1.0 + x2 / 6.0 + x2 * x2 / 120.0 + x2 * x2 * x2 / 5040.0;
        out.c = envelope * cosh_series;
        out.s = envelope * tau * sinhc_series;
    } else if (std::abs(x.real()) <= kExponentialThreshold) {
        const cdouble envelope = std::exp(-0.5 * a * tau);
        out.c = envelope * std::cosh(x);
        out.s = envelope * 2.0 * std::sinh(x) / omega;
    } else {
        // Principal branch: Re(Omega) >= 0, so s_minus is the faster decay.
        const cdouble plus = std::exp(0.5 * (omega - a) * tau);
        const cdouble minus = std::exp(-0.5 * (omega + a) * tau);
        out.c = 0.5 * (plus + minus);
        out.s = (plus - minus) / omega;
    }
    return out;
}

}  // namespace

cdouble amplitude_analytic(const SystemParams& params, double tau) {
    const HyperbolicParts p = hyperbolic_parts(params, tau);
    return p.c + 0.5 * p.a * p.s;
}

cdouble amplitude_derivative_analytic(const SystemParams& params, double tau) {
    const HyperbolicParts p = hyperbolic_parts(params, tau);
    return -params.collective_coupling_sq() * p.s;
}

double survival_probability(const SystemParams& params, double tau) {
    return std::norm(amplitude_analytic(params, tau));
}

double survival_loss(const SystemParams& params, double tau) {
    const double ng2 = params.collective_coupling_sq();
    const cdouble a(1.0, params.detuning());
    if (tau * (std::abs(a) + std::sqrt(ng2)) > 0.5) {
        return 1.0 - survival_probability(params, tau);
    }
    if (tau < 0.0 || !std::isfinite(tau)) {
        throw std::invalid_argument("survival_loss: tau must be finite and >= 0, got " +
                                    std::to_string(tau));
    }
    // b_k = c_k tau^k with c_0 = 1, c_1 = 0.
    cdouble prev2(1.0, 0.0);
    cdouble prev1(0.0, 0.0);
    cdouble d(0.0, 0.0);
    for (int k = 0; k < 80; ++k) {
        const cdouble next =
            (-ng2 * tau * tau * prev2 - a * tau * static_cast<double>(k + 1) * prev1) /
            static_cast<double>((k + 2) * (k + 1));
        d += next;
        if (std::abs(next) <= 1e-18 * std::abs(d) && std::abs(prev1) <= 1e-18 * std::abs(d)) {
            break;
        }
        prev2 = prev1;
        prev1 = next;
    }
    return -2.0 * d.real() - std::norm(d);
}

std::vector<Amplitude> amplitude_kernel_ode(const SystemParams& params,
                                            std::span<const double> tau_grid,
                                            const ode::Options& options) {
    ode::check_grid(tau_grid);
    if (tau_grid.front() != 0.0) {
        throw std::invalid_argument("amplitude_kernel_ode: tau grid must start at 0");
    }

    const double ng2 = params.collective_coupling_sq();
    const cdouble a(1.0, params.detuning());
    auto rhs = [ng2, a](double, const ode::State& y, ode::State& dydt) {
        dydt[0] = -y[1];
        dydt[1] = ng2 * y[0] - a * y[1];
    };

    ode::State y(2);
    y << cdouble(1.0, 0.0), cdouble(0.0, 0.0);

    std::vector<Amplitude> out(tau_grid.size());
    ode::integrate(rhs, y, tau_grid, options,
                   [&out](std::size_t i, double tau, const ode::State& state) {
                       out[i] = {tau, state[0]};
                   });
    return out;
}

ResonantZero zeros_resonant(const SystemParams& params, int m) {
    if (m < 1) {
        throw std::invalid_argument("zeros_resonant: m must be >= 1");
    }
    if (params.detuning() != 0.0) {
        throw std::domain_error("zeros_resonant: zeros formula requires Delta = 0");
    }
    const auto freqs = derived_frequencies(params);
    if (!freqs.omega_prime) {
        throw std::domain_error("zeros_resonant: requires 4 n g^2 > kappa^2");
    }
    const double wp = *freqs.omega_prime;

    ResonantZero out;
    out.m = m;
    out.raw = 2.0 * (m * std::numbers::pi - std::atan(wp)) / wp;
    // At resonance E(tau) is real, so Newton acts on Re E directly.
    const double value = amplitude_analytic(params, out.raw).real();
    const double slope = amplitude_derivative_analytic(params, out.raw).real();
    out.polished = slope != 0.0 ? out.raw - value / slope : out.raw;
    return out;
}

double free_decay_rate(const SystemParams& params) {
    if (params.coupling_ratio() <= 0.0) {
        throw std::invalid_argument("free_decay_rate: requires g > 0");
    }
    // s_+- = (-(1 + i Delta) +- Omega)/2, so -2 max Re s = 1 - |Re Omega|.
    // With r = Omega^2 = (1 - Delta^2 - 4ng^2) + 2i Delta one has
    // 1 - (Re Omega)^2 = 8 ng^2 / (1 + Delta^2 + 4 ng^2 + |r|), which avoids the
    // cancellation in 1 - Re Omega when the rate is small.
    const double ng2 = params.collective_coupling_sq();
    const double delta = params.detuning();
    const cdouble radicand(1.0 - delta * delta - 4.0 * ng2, 2.0 * delta);
    const double re_omega = std::abs(derived_frequencies(params).omega_big.real());
    const double one_minus_sq = 8.0 * ng2 / (1.0 + delta * delta + 4.0 * ng2 + std::abs(radicand));
    return one_minus_sq / (1.0 + re_omega);
}

}  // namespace nmzeno
