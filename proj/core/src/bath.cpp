#include "nmzeno/errors.hpp"
#include "nmzeno/survival.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>
#include <utility>

namespace nmzeno {

namespace {

// Phases e^{-i delta_k tau} on the uniform grid are generated by recurrence and
// re-anchored with an exact polar() every kAnchorStride modes.
constexpr std::size_t kAnchorStride = 64;

class BathRhs {
public:
    BathRhs(double first_detuning, double spacing, std::vector<double> couplings)
        : first_(first_detuning),
          spacing_(spacing),
          couplings_(std::move(couplings)),
          phases_(couplings_.size()) {}

    // Complex products are spelled out in real arithmetic: std::complex
    // multiplication carries inf/nan recovery that dominates this loop.
    void operator()(double tau, const ode::State& y, ode::State& dydt) {
        const std::size_t modes = couplings_.size();
        const double step_re = std::cos(spacing_ * tau);
        const double step_im = -std::sin(spacing_ * tau);
        double p_re = 1.0;
        double p_im = 0.0;
        for (std::size_t k = 0; k < modes; ++k) {
            if (k % kAnchorStride == 0) {
                const double angle = -(first_ + spacing_ * static_cast<double>(k)) * tau;
                p_re = std::cos(angle);
                p_im = std::sin(angle);
            } else {
                const double re = p_re * step_re - p_im * step_im;
                p_im = p_re * step_im + p_im * step_re;
                p_re = re;
            }
            phases_[k] = {p_re, p_im};
        }

        const double c_re = y[0].real();
        const double c_im = y[0].imag();
        double fb_re = 0.0;
        double fb_im = 0.0;
        for (std::size_t k = 0; k < modes; ++k) {
            const double gk = couplings_[k];
            const double ph_re = phases_[k].real();
            const double ph_im = phases_[k].imag();
            const auto idx = static_cast<Eigen::Index>(k + 1);
            const double l_re = y[idx].real();
            const double l_im = y[idx].imag();
            // feedback += G_k p_k lambda_k
            fb_re += gk * (ph_re * l_re - ph_im * l_im);
            fb_im += gk * (ph_re * l_im + ph_im * l_re);
            // dlambda_k = -i G_k conj(p_k) c
            const double w_re = ph_re * c_re + ph_im * c_im;
            const double w_im = ph_re * c_im - ph_im * c_re;
            dydt[idx] = cdouble(gk * w_im, -gk * w_re);
        }
        // dc = -i feedback
        dydt[0] = cdouble(fb_im, -fb_re);
    }

private:
    double first_;
    double spacing_;
    std::vector<double> couplings_;
    std::vector<cdouble> phases_;
};

}  // namespace

void BathDiscretization::validate() const {
    if (mode_count < 1) {
        throw std::invalid_argument("BathDiscretization: mode_count must be >= 1");
    }
    if (!(window_halfwidth > 0.0) || !std::isfinite(window_halfwidth)) {
        throw std::invalid_argument("BathDiscretization: window_halfwidth must be > 0");
    }
}

std::vector<double> BathDiscretization::frequencies(const SystemParams& params) const {
    validate();
    const double dw = mode_spacing();
    const double lowest = params.cavity_frequency() - window_halfwidth;
    std::vector<double> out(static_cast<std::size_t>(mode_count));
    for (std::size_t k = 0; k < out.size(); ++k) {
        out[k] = lowest + (static_cast<double>(k) + 0.5) * dw;
    }
    return out;
}

std::vector<double> BathDiscretization::couplings(const SystemParams& params) const {
    const double dw = mode_spacing();
    std::vector<double> out = frequencies(params);
    std::transform(out.begin(), out.end(), out.begin(), [&](double omega) {
        return std::sqrt(spectral_density(params, omega) * dw);
    });
    return out;
}

double BathDiscretization::captured_mass(const SystemParams& params) const {
    double mass = 0.0;
    for (double gk : couplings(params)) {
        mass += gk * gk;
    }
    return mass;
}

ode::Options bath_ode_options() {
    ode::Options opt;
    opt.rtol = 1e-10;
    opt.atol = 1e-12;
    return opt;
}

std::vector<Amplitude> amplitude_discrete_bath(const SystemParams& params,
                                               const BathDiscretization& bath,
                                               std::span<const double> tau_grid,
                                               const ode::Options& options) {
    bath.validate();
    ode::check_grid(tau_grid);
    if (tau_grid.front() != 0.0) {
        throw std::invalid_argument("amplitude_discrete_bath: tau grid must start at 0");
    }

    const double dw = bath.mode_spacing();
    // Detuning of mode 0 from the qubit: omega_0 - omega_qb - W + dw/2.
    const double first = params.detuning() - bath.window_halfwidth + 0.5 * dw;
    BathRhs rhs(first, dw, bath.couplings(params));

    ode::Options opt = options;
    opt.max_step = std::min(opt.max_step, std::numbers::pi / (10.0 * bath.window_halfwidth));

    ode::State y = ode::State::Zero(bath.mode_count + 1);
    y[0] = cdouble(1.0, 0.0);

    std::vector<Amplitude> out(tau_grid.size());
    ode::integrate(rhs, y, tau_grid, opt,
                   [&out](std::size_t i, double tau, const ode::State& state) {
                       out[i] = {tau, state[0]};
                   });
    return out;
}

ConvergedBath amplitude_discrete_bath_converged(const SystemParams& params,
                                                const BathDiscretization& bath,
                                                std::span<const double> tau_grid,
                                                double tolerance) {
    ConvergedBath out;
    out.coarse = amplitude_discrete_bath(params, bath, tau_grid);
    out.amplitudes = amplitude_discrete_bath(params, bath.doubled(), tau_grid);
    for (std::size_t i = 0; i < out.coarse.size(); ++i) {
        out.refinement_change = std::max(
            out.refinement_change, std::abs(out.amplitudes[i].value - out.coarse[i].value));
    }
    if (out.refinement_change > tolerance) {
        throw NonConvergenceError("amplitude_discrete_bath: doubling the mode count from " +
                                      std::to_string(bath.mode_count) + " changed the amplitude by " +
                                      std::to_string(out.refinement_change),
                                  out.refinement_change);
    }
    return out;
}

}  // namespace nmzeno
