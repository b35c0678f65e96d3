#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "hypermass/ads.hpp"
#include "hypermass/errors.hpp"
#include "hypermass/graph_geometry.hpp"
#include "hypermass/mass.hpp"
#include "oracles.hpp"

using namespace hypermass;

TEST(BoundaryMass, ConstantIsZero) {
    for (int n = 3; n <= 7; ++n) {
        EXPECT_EQ(mass_boundary_limit(constant_profile(Dimension(n), 1.5), Kappa::unit()), 0.0);
    }
}

TEST(BoundaryMass, AdsFamily) {
    for (int n = 3; n <= 7; ++n) {
        for (double m : {0.1, 1.0, 10.0}) {
            const double got = mass_boundary_limit(ads_profile(Dimension(n), m), Kappa::unit());
            EXPECT_NEAR(got, m, 1e-6 * m) << n << " " << m;
        }
    }
}

TEST(BoundaryMass, MatchesFourTermIntegrand) {
    // c exp(-r (n + 2) / 2) has a finite nonzero mass; the reduced density must
    // equal the full surface integrand, evaluated term by term.
    const Dimension n(3);
    const double cn = mass_normalization(n);
    const RadialProfile f = exponential_profile(n, 0.3, 2.5);
    const double brute = hypermass::testing::brute_force_mass_integrand_n3(f, Kappa::unit(), 20.0, 0) *
                         sphere_area(20.0, Kappa::unit(), n) / cn;
    EXPECT_NEAR(mass_boundary_limit(f, Kappa::unit()), brute, 1e-8 * brute);
    for (double r : {0.5, 2.0, 8.0}) {
        const double u = hypermass::testing::brute_force_mass_integrand_n3(f, Kappa::unit(), r, 0) *
                         sphere_area(r, Kappa::unit(), n) / cn;
        EXPECT_NEAR(mass_density(f, Kappa::unit(), r), u, 1e-8 * u) << r;
    }
    const RadialProfile ads = ads_profile(n, 1.0);
    for (double k : {0.5, 2.0}) {
        const RadialProfile g = rescale(ads, 0.0, Kappa(k));
        const double r = 3.0 / k;
        const double u = hypermass::testing::brute_force_mass_integrand_n3(g, Kappa(k), r, 0) *
                         sphere_area(r, Kappa(k), n) / cn;
        EXPECT_NEAR(mass_density(g, Kappa(k), r), u, 1e-8 * u) << k;
    }
}

TEST(BoundaryMass, CoordinateLapsesAreOdd) {
    const Dimension n(3);
    const RadialProfile f = ads_profile(n, 1.0);
    const double* d = hypermass::testing::oracle_direction();
    for (int i = 1; i <= 3; ++i) {
        for (double r : {2.0, 6.0}) {
            // pointwise the integrand is 2 coth r V^2 f'^2 times the lapse
            const double u = hypermass::testing::brute_force_mass_integrand_n3(f, Kappa::unit(), r, i);
            const double v = std::cosh(r) * f.derivative(r);
            const double expected = 2.0 / std::tanh(r) * v * v * d[i - 1] * std::sinh(r);
            EXPECT_NEAR(u, expected, 1e-8 * std::abs(expected));
        }
        EXPECT_NEAR(mass_functional_lapse(f, LapseBasis(i, n)), 0.0, 1e-10);
    }
}

TEST(MassFunctional, TimeLapse) {
    const Dimension n(3);
    EXPECT_NEAR(mass_normalization(n), 16.0 * std::numbers::pi, 1e-13);
    EXPECT_NEAR(mass_functional_lapse(ads_profile(n, 1.0), LapseBasis(0, n)), 16.0 * std::numbers::pi,
                1e-6 * 50.0);
    EXPECT_EQ(mass_functional_lapse(constant_profile(n, 0.0), LapseBasis(0, n)), 0.0);
}

TEST(CoordinateMoments, Values) {
    for (int n = 3; n <= 6; ++n) {
        EXPECT_NEAR(sphere_coordinate_moment(0, Dimension(n)), unit_sphere_volume(n), 1e-12);
        for (int i = 1; i <= n; ++i) EXPECT_NEAR(sphere_coordinate_moment(i, Dimension(n)), 0.0, 1e-12);
    }
}

TEST(LevelSetMass, AdsBulkVanishes) {
    const RadialProfile f = ads_profile(Dimension(3), 1.0);
    for (double dr : {0.05, 0.5, 2.0, 4.0}) {
        const MassReport rep = mass_level_set(f, Kappa::unit(), f.value(f.domain_start() + dr));
        EXPECT_NEAR(rep.m_levelset_bulk, 0.0, 1e-8);
        EXPECT_NEAR(rep.m_levelset_boundary, 1.0, 1e-6);
        EXPECT_LT(rep.residual_identity, 1e-6);
    }
}

TEST(LevelSetMass, GenericProfile) {
    const RadialProfile f = exponential_profile(Dimension(3), 0.01, 3.0);
    const MassReport rep = mass_level_set(f, Kappa::unit(), f.value(2.0));
    EXPECT_NEAR(rep.m_levelset_total, rep.m_boundary, 1e-7);
    const RadialProfile g = sech_profile(Dimension(3), {0.1, 0.01, 3.0, 1.5, 0.0});
    for (double r : {0.3, 1.0, 3.0}) {
        const MassReport s = mass_level_set(g, Kappa::unit(), g.value(r));
        EXPECT_NEAR(s.m_levelset_total, s.m_boundary, 1e-7) << r;
        EXPECT_NE(s.m_levelset_bulk, 0.0);
    }
}

TEST(LevelSetMass, RegularityGate) {
    EXPECT_THROW(mass_level_set(constant_profile(Dimension(3), 0.0), Kappa::unit(), 0.0),
                 RegularityError);
    const RadialProfile f = ads_profile(Dimension(7), 1.0);
    EXPECT_THROW(mass_level_set(f, Kappa::unit(), f.value(f.domain_start() + 8.0)), RegularityError);
}

TEST(PositiveMass, AdsAndRigidity) {
    const RadialProfile f = ads_profile(Dimension(3), 1.0);
    const PmtReport p = pmt_check(f, Kappa::unit(), f.value(2.0));
    EXPECT_TRUE(p.holds);
    EXPECT_NEAR(p.mass - p.boundary_term, 0.0, 1e-6);
    const PmtReport c = pmt_check(constant_profile(Dimension(3), 0.0), Kappa::unit(), 0.0);
    EXPECT_TRUE(c.holds);
    EXPECT_EQ(c.mass, 0.0);
}

TEST(PositiveMass, NegativeCurvatureIsReported) {
    const RadialProfile f = exponential_profile(Dimension(3), 0.5, 2.5);
    const CurvatureMinimum low = scalar_curvature_minimum(f, Kappa::unit());
    ASSERT_LT(low.value, -0.1);
    try {
        pmt_check(f, Kappa::unit(), f.value(1.0));
        FAIL() << "expected a hypothesis violation";
    } catch (const HypothesisError& e) {
        EXPECT_LT(e.value(), 0.0);
        EXPECT_NEAR(e.where(), low.r, 1e-12);
    }
}

TEST(Penrose, AdsValues) {
    const PenroseReport p = penrose_bound(ads_profile(Dimension(3), 1.0));
    EXPECT_NEAR(p.bound, std::sqrt(2.0) / 2.0, 1e-10);
    EXPECT_NEAR(p.ratio, std::sqrt(2.0), 1e-8);
    const PenroseReport big = penrose_bound(ads_profile(Dimension(3), 1e4));
    EXPECT_GT(big.ratio, 1.0);
    EXPECT_LT(big.ratio, 1.001);
    EXPECT_THROW(penrose_bound(sech_profile(Dimension(3), {})), DomainError);
}

TEST(Scaling, MassLaw) {
    const RadialProfile f = ads_profile(Dimension(3), 1.0);
    const MassScaling one = mass_scaling_check(f, 0.0, Kappa::unit());
    EXPECT_NEAR(one.m_rescaled, 1.0, 1e-6);
    EXPECT_NEAR(one.predicted, 1.0, 1e-6);
    const MassScaling two = mass_scaling_check(f, 0.0, Kappa(2.0));
    EXPECT_NEAR(two.m_rescaled, 0.5, 1e-6);
    EXPECT_NEAR(two.predicted, 0.5, 1e-6);
    const MassScaling four = mass_scaling_check(ads_profile(Dimension(4), 1.0), 0.0, Kappa::unit());
    EXPECT_NEAR(four.m_rescaled, 1.0, 1e-6);
}
