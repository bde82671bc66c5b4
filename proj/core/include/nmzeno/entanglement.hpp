// entanglement.hpp: two-qubit reduced state of any pair and its concurrence.
//
// Basis ordering is {|11>, |10>, |01>, |00>} throughout (index 0 = both
// excited, index 3 = both ground).

#pragma once

#include "nmzeno/model.hpp"

#include <Eigen/Dense>

#include <array>

namespace nmzeno {

struct PairState {
    Eigen::Matrix4cd rho = Eigen::Matrix4cd::Zero();
    double source_tau = 0.0;
    int source_n = 2;
};

struct ConcurrenceValue {
    double value = 0.0;
    std::array<double, 4> lambdas{};  // square roots of the spin-flip eigenvalues, descending
};

// Pair state of the n-qubit W state with survival probability e_abs2:
// rho[1..2][1..2] = e_abs2/n, rho[3][3] = 1 - 2 e_abs2/n, all else zero.
// Throws std::invalid_argument for n < 2 or e_abs2 outside [0, 1].
PairState pair_density_matrix(double e_abs2, int n, double source_tau = 0.0);

// General Wootters concurrence max(0, l1 - l2 - l3 - l4) from the eigenvalues
// of rho (sy x sy) rho* (sy x sy). Throws std::domain_error when an eigenvalue
// has real part below -1e-8 or imaginary part above 1e-8 in magnitude.
ConcurrenceValue wootters_concurrence(const PairState& state);

// Closed form 2 |E(tau)|^2 / n. Throws std::invalid_argument for n < 2.
double pair_concurrence_closed(const SystemParams& params, double tau);

// C_pair(tau; Delta) - C_pair(tau; Delta = 0), every other parameter unchanged.
double delta_concurrence(const SystemParams& params_base, double detuning_over_kappa, double tau);

}  // namespace nmzeno
