// Independent reference computations used only by the tests. None of these
// call into the closed-form amplitude except where a comparison is the point.

#pragma once

#include "nmzeno/model.hpp"

#include <cmath>
#include <complex>
#include <functional>
#include <numbers>
#include <optional>
#include <random>
#include <vector>

namespace nmzeno::testing {

// Composite Simpson rule on [a, b] with an even number of panels.
template <class F>
auto simpson(F&& f, double a, double b, int panels) {
    if (panels % 2) {
        ++panels;
    }
    const double h = (b - a) / panels;
    auto sum = f(a) + f(b);
    for (int i = 1; i < panels; ++i) {
        sum += (i % 2 ? 4.0 : 2.0) * f(a + i * h);
    }
    return sum * (h / 3.0);
}

// f(dt) = int J(omega) exp(-i (omega - omega_qb) dt) d omega by brute-force
// quadrature over omega_0 +- half_width. The tail beyond the window is added
// from the leading asymptotic of the Lorentzian, int_L^inf cos(a x)/(pi x^2):
// exact mass for dt = 0, -sin(aL)/(pi a L^2) per side otherwise.
inline std::complex<double> fourier_kernel(const SystemParams& p, double dt,
                                           double half_width = 4000.0, int panels = 4'000'000) {
    const double w0 = p.cavity_frequency();
    auto integrand = [&](double x) {
        const double omega = w0 + x;
        return spectral_density(p, omega) * std::polar(1.0, -(omega - p.omega_qb()) * dt);
    };
    std::complex<double> inside = simpson(integrand, -half_width, half_width, panels);
    const double ng2 = p.collective_coupling_sq();
    double tail = 0.0;
    if (dt == 0.0) {
        tail = ng2 * (1.0 - 2.0 / std::numbers::pi * std::atan(half_width));
    } else {
        tail = -2.0 * ng2 * std::sin(dt * half_width) / (std::numbers::pi * dt * half_width * half_width);
    }
    return inside + tail * std::polar(1.0, -p.detuning() * dt);
}

// Bisection on a sign change of f in [a, b].
inline double bisect(const std::function<double(double)>& f, double a, double b,
                     double tol = 1e-14) {
    double fa = f(a);
    for (int it = 0; it < 200 && b - a > tol; ++it) {
        const double m = 0.5 * (a + b);
        const double fm = f(m);
        if ((fm < 0.0) == (fa < 0.0)) {
            a = m;
            fa = fm;
        } else {
            b = m;
        }
    }
    return 0.5 * (a + b);
}

// First sign change of f on a uniform scan of [a, b], refined by bisection.
inline std::optional<double> first_root(const std::function<double(double)>& f, double a,
                                        double b, int scan = 4000) {
    double prev = f(a);
    for (int i = 1; i <= scan; ++i) {
        const double x0 = a + (b - a) * (i - 1) / scan;
        const double x1 = a + (b - a) * i / scan;
        const double cur = f(x1);
        if ((prev < 0.0) != (cur < 0.0)) {
            return bisect(f, x0, x1);
        }
        prev = cur;
    }
    return std::nullopt;
}

// Least-squares slope of y against x.
inline double fitted_slope(const std::vector<double>& x, const std::vector<double>& y) {
    const double n = static_cast<double>(x.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sx += x[i];
        sy += y[i];
        sxx += x[i] * x[i];
        sxy += x[i] * y[i];
    }
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

// Random dimensionless parameter sets for property tests.
struct ParamGenerator {
    std::mt19937_64 rng;
    explicit ParamGenerator(std::uint64_t seed) : rng(seed) {}

    double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng); }
    double log_uniform(double lo, double hi) { return std::exp(uniform(std::log(lo), std::log(hi))); }
    int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

    SystemParams params(int n_max = 16) {
        return SystemParams::dimensionless(integer(1, n_max), log_uniform(0.02, 20.0),
                                           uniform(-40.0, 40.0));
    }
};

}  // namespace nmzeno::testing
