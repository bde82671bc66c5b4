#include "nmzeno/model.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

using nmzeno::SystemParams;
using nmzeno::cdouble;
namespace oracle = nmzeno::testing;

TEST(SystemParams, NormalizesByKappa) {
    const SystemParams p(4, 0.3, 3.0, 6.0, 9.0);
    EXPECT_EQ(p.n(), 4);
    EXPECT_DOUBLE_EQ(p.coupling_ratio(), 0.1);
    EXPECT_DOUBLE_EQ(p.detuning(), 2.0);
    EXPECT_DOUBLE_EQ(p.omega_qb(), 3.0);
    EXPECT_DOUBLE_EQ(p.cavity_frequency(), 5.0);
    EXPECT_DOUBLE_EQ(p.collective_coupling_sq(), 0.04);
    EXPECT_DOUBLE_EQ(p.tau_of(2.0), 6.0);
    EXPECT_DOUBLE_EQ(p.time_of(6.0), 2.0);
}

TEST(SystemParams, RejectsInvalidInput) {
    EXPECT_THROW(SystemParams(0, 1.0, 1.0, 0.0), std::invalid_argument);
    EXPECT_THROW(SystemParams(2, -1.0, 1.0, 0.0), std::invalid_argument);
    EXPECT_THROW(SystemParams(2, 1.0, 0.0, 0.0), std::invalid_argument);
    EXPECT_THROW(SystemParams(2, 1.0, -1.0, 0.0), std::invalid_argument);
    EXPECT_THROW(SystemParams(2, 1.0, 1.0, std::nan("")), std::invalid_argument);
    EXPECT_THROW(SystemParams(2, std::numeric_limits<double>::infinity(), 1.0, 0.0),
                 std::invalid_argument);
    EXPECT_THROW(SystemParams::dimensionless(2, 1.0, 0.0, -1.0), std::invalid_argument);
}

TEST(SystemParams, VariantsKeepOtherFields) {
    const auto p = SystemParams::dimensionless(4, 0.1, 0.0);
    const auto d = p.with_detuning(2.0);
    EXPECT_EQ(d.n(), 4);
    EXPECT_DOUBLE_EQ(d.coupling_ratio(), 0.1);
    EXPECT_DOUBLE_EQ(d.detuning(), 2.0);
    const auto q = p.with_qubits(8);
    EXPECT_EQ(q.n(), 8);
    EXPECT_DOUBLE_EQ(q.detuning(), 0.0);
}

TEST(SpectralDensity, PeakAndTails) {
    const auto p = SystemParams::dimensionless(3, 0.7, 1.5, 2.0);
    const double peak = nmzeno::spectral_density(p, p.cavity_frequency());
    EXPECT_NEAR(peak, 3 * 0.49 / std::numbers::pi, 1e-15);
    EXPECT_LT(nmzeno::spectral_density(p, 1e9), 1e-17);
    EXPECT_LT(nmzeno::spectral_density(p, -1e9), 1e-17);
    EXPECT_GT(peak, nmzeno::spectral_density(p, p.cavity_frequency() + 0.01));
    EXPECT_GT(peak, nmzeno::spectral_density(p, p.cavity_frequency() - 0.01));
}

TEST(SpectralDensity, OneLinewidthOffResonance) {
    const auto p = SystemParams::dimensionless(4, 0.1, 0.0);
    // 4 * 0.01 / (pi * 2), evaluated by hand.
    EXPECT_NEAR(nmzeno::spectral_density(p, p.omega_qb() + 1.0), 0.02 / std::numbers::pi, 1e-16);
    EXPECT_NEAR(nmzeno::spectral_density(p, p.omega_qb() + 1.0), 0.006366, 1e-6);
}

TEST(SpectralDensity, IntegratesToCollectiveCoupling) {
    for (const auto& p : {SystemParams::dimensionless(4, 0.1, 2.0),
                          SystemParams::dimensionless(2, 10.0, -5.0, 3.0),
                          SystemParams::dimensionless(7, 1.3, 0.0)}) {
        const double mass = oracle::fourier_kernel(p, 0.0).real();
        EXPECT_NEAR(mass / p.collective_coupling_sq(), 1.0, 1e-6);
    }
}

TEST(CorrelationKernel, Examples) {
    const auto p = SystemParams::dimensionless(4, 0.1, 0.0);
    EXPECT_LT(std::abs(nmzeno::correlation_kernel(p, 0.0) - cdouble(0.04, 0.0)), 1e-17);
    EXPECT_EQ(nmzeno::correlation_kernel(p, 0.0).imag(), 0.0);
    EXPECT_NEAR(std::abs(nmzeno::correlation_kernel(p, 1.0) - 0.04 * std::exp(-1.0)), 0.0, 1e-17);
    EXPECT_THROW(nmzeno::correlation_kernel(p, -0.1), std::invalid_argument);

    const auto d = SystemParams::dimensionless(4, 0.1, 2.0);
    const cdouble expected = 0.04 * std::exp(-0.5) * cdouble(std::cos(1.0), -std::sin(1.0));
    EXPECT_LT(std::abs(nmzeno::correlation_kernel(d, 0.5) - expected), 1e-16);
}

TEST(CorrelationKernel, MatchesFourierTransformOfSpectralDensity) {
    const auto d = SystemParams::dimensionless(4, 0.1, 2.0);
    const cdouble kernel = nmzeno::correlation_kernel(d, 0.5);
    const cdouble quadrature = oracle::fourier_kernel(d, 0.5);
    EXPECT_LT(std::abs(quadrature - kernel) / std::abs(kernel), 1e-4);

    oracle::ParamGenerator gen(11);
    for (int i = 0; i < 6; ++i) {
        const SystemParams p = SystemParams::dimensionless(
            gen.integer(1, 8), gen.log_uniform(0.05, 5.0), gen.uniform(-10, 10), gen.uniform(0, 5));
        const double dt = gen.uniform(0.05, 3.0);
        const cdouble k = nmzeno::correlation_kernel(p, dt);
        EXPECT_LT(std::abs(oracle::fourier_kernel(p, dt) - k) / std::abs(k), 1e-4) << "dt=" << dt;
    }
}

TEST(CorrelationKernel, ModulusDecaysMonotonically) {
    oracle::ParamGenerator gen(5);
    for (int i = 0; i < 100; ++i) {
        const SystemParams p = gen.params();
        double prev = std::abs(nmzeno::correlation_kernel(p, 0.0));
        for (double dt = 0.05; dt < 20.0; dt += 0.05) {
            const double cur = std::abs(nmzeno::correlation_kernel(p, dt));
            EXPECT_NEAR(cur, p.collective_coupling_sq() * std::exp(-dt), 1e-13 * prev);
            EXPECT_LT(cur, prev);
            prev = cur;
        }
    }
}

TEST(DerivedFrequencies, CriticalDampingIsDegenerate) {
    const auto f = nmzeno::derived_frequencies(SystemParams::dimensionless(1, 0.5, 0.0));
    EXPECT_DOUBLE_EQ(f.omega_R, 1.0);
    EXPECT_EQ(f.omega_big, cdouble(0.0, 0.0));
    EXPECT_TRUE(f.degenerate);
    EXPECT_FALSE(f.omega_prime.has_value());
}

TEST(DerivedFrequencies, GoodCavityExample) {
    const auto f = nmzeno::derived_frequencies(SystemParams::dimensionless(4, 10.0, 0.0));
    EXPECT_DOUBLE_EQ(f.omega_R, 40.0);
    EXPECT_NEAR(f.omega_big.real(), 0.0, 1e-14);
    EXPECT_NEAR(f.omega_big.imag(), std::sqrt(1599.0), 1e-12);
    ASSERT_TRUE(f.omega_prime.has_value());
    EXPECT_NEAR(*f.omega_prime, std::sqrt(1599.0), 1e-12);
    EXPECT_LT(std::abs(f.omega_big * f.omega_big - cdouble(-1599.0, 0.0)), 1e-10);
}

TEST(DerivedFrequencies, DetunedExample) {
    const auto f = nmzeno::derived_frequencies(SystemParams::dimensionless(4, 0.1, 2.0));
    EXPECT_NEAR(f.omega_R, std::sqrt(4.16), 1e-15);
    EXPECT_LT(std::abs(f.omega_big * f.omega_big - cdouble(-3.16, 4.0)), 1e-14);
    EXPECT_GE(f.omega_big.real(), 0.0);
    EXPECT_FALSE(f.omega_prime.has_value());
}

TEST(DerivedFrequencies, SquareMatchesDefinitionAndPrimeExistence) {
    oracle::ParamGenerator gen(7);
    for (int i = 0; i < 1000; ++i) {
        const SystemParams p = gen.params(64);
        const auto f = nmzeno::derived_frequencies(p);
        const double ng2 = p.collective_coupling_sq();
        const double delta = p.detuning();
        const cdouble radicand(1.0 - f.omega_R * f.omega_R, 2.0 * delta);
        EXPECT_NEAR(f.omega_R * f.omega_R, delta * delta + 4.0 * ng2, 1e-12 * (1 + f.omega_R * f.omega_R));
        EXPECT_LT(std::abs(f.omega_big * f.omega_big - radicand), 1e-12 * (1 + std::abs(radicand)));
        EXPECT_GE(f.omega_big.real(), 0.0);
        EXPECT_EQ(f.omega_prime.has_value(), 4.0 * ng2 > 1.0);
        if (f.omega_prime) {
            EXPECT_NEAR(*f.omega_prime * *f.omega_prime, 4.0 * ng2 - 1.0, 1e-12 * 4.0 * ng2);
        }
    }
}

TEST(GoldenRule, EqualsTwoPiSpectralDensityAtQubitFrequency) {
    oracle::ParamGenerator gen(3);
    for (int i = 0; i < 200; ++i) {
        const SystemParams p = gen.params();
        EXPECT_NEAR(nmzeno::golden_rule_rate(p),
                    2.0 * std::numbers::pi * nmzeno::spectral_density(p, p.omega_qb()),
                    1e-13 * nmzeno::golden_rule_rate(p));
    }
}
