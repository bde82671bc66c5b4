#include "nmzeno/entanglement.hpp"

#include "nmzeno/survival.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>
#include <string>

namespace nmzeno {

namespace {

constexpr double kEigenTolerance = 1e-8;

void require_pair(int n, const char* where) {
    if (n < 2) {
        throw std::invalid_argument(std::string(where) + ": a pair needs n >= 2, got " +
                                    std::to_string(n));
    }
}

// sigma_y (x) sigma_y. It is anti-diagonal with entries (-1, 1, 1, -1), which
// is invariant under reversing the basis order.
Eigen::Matrix4cd spin_flip() {
    Eigen::Matrix4cd yy = Eigen::Matrix4cd::Zero();
    yy(0, 3) = -1.0;
    yy(1, 2) = 1.0;
    yy(2, 1) = 1.0;
    yy(3, 0) = -1.0;
    return yy;
}

}  // namespace

PairState pair_density_matrix(double e_abs2, int n, double source_tau) {
    require_pair(n, "pair_density_matrix");
    if (!(e_abs2 >= 0.0 && e_abs2 <= 1.0)) {
        throw std::invalid_argument("pair_density_matrix: |E|^2 must lie in [0, 1], got " +
                                    std::to_string(e_abs2));
    }
    PairState state;
    state.source_tau = source_tau;
    state.source_n = n;
    const double share = e_abs2 / n;
    state.rho(1, 1) = share;
    state.rho(1, 2) = share;
    state.rho(2, 1) = share;
    state.rho(2, 2) = share;
    state.rho(3, 3) = 1.0 - 2.0 * share;
    return state;
}

ConcurrenceValue wootters_concurrence(const PairState& state) {
    const Eigen::Matrix4cd yy = spin_flip();
    const Eigen::Matrix4cd tilde = yy * state.rho.conjugate() * yy;
    const Eigen::Matrix4cd product = state.rho * tilde;

    Eigen::ComplexEigenSolver<Eigen::Matrix4cd> solver(product, false);
    if (solver.info() != Eigen::Success) {
        throw std::domain_error("wootters_concurrence: eigenvalue computation failed");
    }

    ConcurrenceValue out;
    for (int j = 0; j < 4; ++j) {
        const cdouble ell = solver.eigenvalues()[j];
        if (ell.real() < -kEigenTolerance || std::abs(ell.imag()) > kEigenTolerance) {
            throw std::domain_error("wootters_concurrence: spin-flip eigenvalue " +
                                    std::to_string(ell.real()) + (ell.imag() < 0 ? "" : "+") +
                                    std::to_string(ell.imag()) +
                                    "i is not a nonnegative real; input is not a density matrix");
        }
        out.lambdas[static_cast<std::size_t>(j)] = std::sqrt(std::max(ell.real(), 0.0));
    }
    std::sort(out.lambdas.begin(), out.lambdas.end(), std::greater<>());
    out.value = std::max(0.0, out.lambdas[0] - out.lambdas[1] - out.lambdas[2] - out.lambdas[3]);
    return out;
}

double pair_concurrence_closed(const SystemParams& params, double tau) {
    require_pair(params.n(), "pair_concurrence_closed");
    return 2.0 * survival_probability(params, tau) / params.n();
}

double delta_concurrence(const SystemParams& params_base, double detuning_over_kappa, double tau) {
    return pair_concurrence_closed(params_base.with_detuning(detuning_over_kappa), tau) -
           pair_concurrence_closed(params_base.with_detuning(0.0), tau);
}

}  // namespace nmzeno
