// ode.hpp: adaptive Dormand-Prince 5(4) integrator for complex linear and
// nonlinear systems, stepping exactly onto a caller-supplied output grid.

#pragma once

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <span>
#include <stdexcept>
#include <string>

namespace nmzeno::ode {

using State = Eigen::VectorXcd;

struct Options {
    double rtol = 1e-12;
    double atol = 1e-12;
    double max_step = std::numeric_limits<double>::infinity();
    double initial_step = 0.0;  // 0 selects a starting step automatically
    std::size_t max_steps = 100'000'000;
};

struct Stats {
    std::size_t accepted = 0;
    std::size_t rejected = 0;
    std::size_t rhs_evals = 0;
};

// Throws std::invalid_argument unless the grid is non-empty and strictly
// increasing.
inline void check_grid(std::span<const double> grid) {
    if (grid.empty()) {
        throw std::invalid_argument("ode: output grid is empty");
    }
    for (std::size_t i = 0; i < grid.size(); ++i) {
        if (!std::isfinite(grid[i])) {
            throw std::invalid_argument("ode: output grid contains a non-finite time");
        }
        if (i > 0 && !(grid[i] > grid[i - 1])) {
            throw std::invalid_argument("ode: output grid must be strictly increasing (index " +
                                        std::to_string(i) + ")");
        }
    }
}

namespace detail {

// Dormand-Prince tableau.
inline constexpr double c2 = 1.0 / 5.0, c3 = 3.0 / 10.0, c4 = 4.0 / 5.0, c5 = 8.0 / 9.0;
inline constexpr double a21 = 1.0 / 5.0;
inline constexpr double a31 = 3.0 / 40.0, a32 = 9.0 / 40.0;
inline constexpr double a41 = 44.0 / 45.0, a42 = -56.0 / 15.0, a43 = 32.0 / 9.0;
inline constexpr double a51 = 19372.0 / 6561.0, a52 = -25360.0 / 2187.0,
                        a53 = 64448.0 / 6561.0, a54 = -212.0 / 729.0;
inline constexpr double a61 = 9017.0 / 3168.0, a62 = -355.0 / 33.0, a63 = 46732.0 / 5247.0,
                        a64 = 49.0 / 176.0, a65 = -5103.0 / 18656.0;
inline constexpr double b1 = 35.0 / 384.0, b3 = 500.0 / 1113.0, b4 = 125.0 / 192.0,
                        b5 = -2187.0 / 6784.0, b6 = 11.0 / 84.0;
// Difference between the 5th- and embedded 4th-order weights.
inline constexpr double e1 = 71.0 / 57600.0, e3 = -71.0 / 16695.0, e4 = 71.0 / 1920.0,
                        e5 = -17253.0 / 339200.0, e6 = 22.0 / 525.0, e7 = -1.0 / 40.0;

}  // namespace detail

// Integrates dy/dt = rhs(t, y) from grid[0] with initial state y, calling
// observer(index, t, y) at every grid point (including grid[0]). The rhs has
// signature void(double t, const State& y, State& dydt). On return y holds the
// state at grid.back().
template <class Rhs, class Observer>
Stats integrate(Rhs&& rhs, State& y, std::span<const double> grid, const Options& opt,
                Observer&& observer) {
    namespace dp = detail;
    check_grid(grid);
    if (!(opt.rtol > 0.0) || !(opt.atol > 0.0) || !(opt.max_step > 0.0)) {
        throw std::invalid_argument("ode: tolerances and max_step must be positive");
    }

    Stats stats;
    const Eigen::Index dim = y.size();
    State k1(dim), k2(dim), k3(dim), k4(dim), k5(dim), k6(dim), k7(dim);
    State stage(dim), y_new(dim), err(dim);

    double t = grid.front();
    observer(std::size_t{0}, t, static_cast<const State&>(y));
    if (grid.size() == 1) {
        return stats;
    }

    rhs(t, y, k1);
    ++stats.rhs_evals;

    double h = opt.initial_step;
    if (!(h > 0.0)) {
        const double scale = opt.atol + opt.rtol * y.cwiseAbs().maxCoeff();
        const double d0 = y.cwiseAbs().maxCoeff() / scale;
        const double d1 = k1.cwiseAbs().maxCoeff() / scale;
        h = (d0 < 1e-5 || d1 < 1e-5) ? 1e-6 : 0.01 * d0 / d1;
    }
    h = std::min(h, opt.max_step);

    constexpr double safety = 0.9;
    constexpr double fac_min = 0.2;
    constexpr double fac_max = 5.0;

    std::size_t next = 1;
    while (next < grid.size()) {
        if (stats.accepted + stats.rejected >= opt.max_steps) {
            throw std::runtime_error("ode: step budget exhausted");
        }
        const double target = grid[next];
        const double remaining = target - t;
        bool lands = false;
        double step = std::min(h, opt.max_step);
        if (step >= remaining * (1.0 - 1e-12)) {
            step = remaining;
            lands = true;
        }
        if (!(step > 0.0) || t + step == t) {
            throw std::runtime_error("ode: step size underflow");
        }

        stage = y + step * dp::a21 * k1;
        rhs(t + dp::c2 * step, stage, k2);
        stage = y + step * (dp::a31 * k1 + dp::a32 * k2);
        rhs(t + dp::c3 * step, stage, k3);
        stage = y + step * (dp::a41 * k1 + dp::a42 * k2 + dp::a43 * k3);
        rhs(t + dp::c4 * step, stage, k4);
        stage = y + step * (dp::a51 * k1 + dp::a52 * k2 + dp::a53 * k3 + dp::a54 * k4);
        rhs(t + dp::c5 * step, stage, k5);
        stage = y + step * (dp::a61 * k1 + dp::a62 * k2 + dp::a63 * k3 + dp::a64 * k4 +
                            dp::a65 * k5);
        rhs(t + step, stage, k6);
        y_new = y + step * (dp::b1 * k1 + dp::b3 * k3 + dp::b4 * k4 + dp::b5 * k5 + dp::b6 * k6);
        rhs(t + step, y_new, k7);
        stats.rhs_evals += 6;

        err = step * (dp::e1 * k1 + dp::e3 * k3 + dp::e4 * k4 + dp::e5 * k5 + dp::e6 * k6 +
                      dp::e7 * k7);
        // Max norm of |err_i| / (atol + rtol max(|y_i|, |y_new_i|)), done on
        // squared magnitudes to stay clear of hypot().
        double err_sq = 0.0;
        for (Eigen::Index i = 0; i < dim; ++i) {
            const double scale =
                opt.atol + opt.rtol * std::sqrt(std::max(std::norm(y[i]), std::norm(y_new[i])));
            err_sq = std::max(err_sq, std::norm(err[i]) / (scale * scale));
        }
        const double err_norm = std::sqrt(err_sq);

        if (err_norm <= 1.0) {
            ++stats.accepted;
            t = lands ? target : t + step;
            y.swap(y_new);
            k1.swap(k7);
            if (lands) {
                observer(next, t, static_cast<const State&>(y));
                ++next;
            }
            const double fac = err_norm == 0.0
                                   ? fac_max
                                   : std::clamp(safety * std::pow(err_norm, -0.2), fac_min, fac_max);
            // A step shortened to land on the grid says nothing about the
            // admissible step; do not let it shrink the next one.
            h = lands ? std::max(h, step * fac) : step * fac;
        } else {
            ++stats.rejected;
            h = step * std::max(fac_min, safety * std::pow(err_norm, -0.2));
        }
    }
    return stats;
}

}  // namespace nmzeno::ode
