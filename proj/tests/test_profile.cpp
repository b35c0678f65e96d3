#include <gtest/gtest.h>

#include <cmath>
#include <vector>

#include "generators.hpp"
#include "hypermass/ads.hpp"
#include "hypermass/errors.hpp"
#include "hypermass/profile.hpp"

using namespace hypermass;

TEST(Horizon, KnownRoots) {
    EXPECT_NEAR(ads_horizon_radius(Dimension(3), 1.0), 1.0, 1e-14);
    EXPECT_NEAR(ads_horizon_radius(Dimension(4), 2.0), std::sqrt((-1.0 + std::sqrt(17.0)) / 2.0),
                1e-13);
    const double rho = ads_horizon_radius(Dimension(3), 0.1);
    EXPECT_NEAR(rho * rho * rho + rho - 0.2, 0.0, 1e-14);
    for (int n = 3; n <= 7; ++n) {
        for (double m : {1e-3, 0.1, 1.0, 10.0, 1e3}) {
            EXPECT_LT(std::abs(ads_schwarzschild(Dimension(n), m).residual()), 1e-12) << n << " " << m;
        }
    }
    EXPECT_THROW(ads_horizon_radius(Dimension(3), 0.0), DomainError);
}

TEST(AdsProfile, VanishesOnHorizonAndBlowsUp) {
    for (int n = 3; n <= 7; ++n) {
        for (double m : {0.1, 1.0, 10.0}) {
            const RadialProfile f = ads_profile(Dimension(n), m);
            EXPECT_EQ(f.boundary_kind(), BoundaryKind::MinimalBoundary);
            EXPECT_NEAR(f.value(f.domain_start()), 0.0, 1e-14);
            EXPECT_TRUE(profile_invariant_violations(f).empty()) << f.label();
        }
    }
    const RadialProfile f = ads_profile(Dimension(3), 1.0);
    double previous = 0.0;
    for (double d : {1e-2, 1e-4, 1e-6, 1e-8, 1e-10, 1e-12, 1e-14}) {
        const double fp = f.derivative(f.domain_start() + d);
        EXPECT_GT(fp, previous);
        previous = fp;
    }
    EXPECT_GT(previous, 1e6);
}

TEST(AdsProfile, AsymptoticDecayOrder) {
    // V^2 f'^2 behaves like 2 m / rho^n with rho = sinh r.
    for (int n : {3, 5}) {
        const double m = 1.0;
        const RadialProfile f = ads_profile(Dimension(n), m);
        for (double r : {10.0, 14.0}) {
            const double rho = std::sinh(r);
            const double v = std::cosh(r) * f.derivative(r);
            EXPECT_NEAR(v * v * std::pow(rho, n) / (2.0 * m), 1.0, 1e-6) << n << " " << r;
        }
    }
}

TEST(AdsProfile, MonotoneWithFiniteLimit) {
    const RadialProfile f = ads_profile(Dimension(4), 0.5);
    double prev = f.value(f.domain_start());
    for (double r : hypermass::testing::log_grid(f.domain_start(), 1e-6, 60.0, 200)) {
        const double v = f.value(r);
        EXPECT_GE(v, prev);
        prev = v;
    }
    EXPECT_NEAR(f.value(f.domain_start() + 80.0), f.limit(), 1e-12);
}

TEST(Rescale, IdentityAndChainRule) {
    const RadialProfile f = ads_profile(Dimension(3), 1.0);
    const RadialProfile same = rescale(f, 0.0, Kappa::unit());
    const RadialProfile twice = rescale(f, 0.3, Kappa(2.0));
    for (double r : {1.0, 2.0, 5.0}) {
        EXPECT_EQ(same.value(r), f.value(r));
        EXPECT_EQ(same.derivative(r), f.derivative(r));
        EXPECT_EQ(twice.derivative(r / 2.0), f.derivative(r));
    }
    EXPECT_DOUBLE_EQ(twice.domain_start(), f.domain_start() / 2.0);
    EXPECT_NEAR(twice.value(twice.domain_start()), -0.15, 1e-14);
}

TEST(LevelRadius, InvertsMonotoneProfiles) {
    const RadialProfile f = ads_profile(Dimension(3), 1.0);
    for (double r : {1.0, 2.0, 4.0, 9.0}) {
        EXPECT_NEAR(level_radius(f, f.value(r)), r, 1e-8 * r);
    }
    EXPECT_THROW(level_radius(f, f.limit() + 1.0), DomainError);
    EXPECT_THROW(level_radius(f, -1.0), DomainError);
}

TEST(ExponentialProfile, DecayGate) {
    EXPECT_THROW(exponential_profile(Dimension(3), 0.1, 1.0), DomainError);
    const RadialProfile f = exponential_profile(Dimension(3), 0.01, 3.0);
    EXPECT_FALSE(profile_invariant_violations(f).empty());  // kink at the pole
    EXPECT_TRUE(profile_invariant_violations(sech_profile(Dimension(3), {})).empty());
}

TEST(SampledProfile, ReproducesSmoothProfile) {
    const SechParams p{0.2, 0.02, 4.0, 1.3, 0.1};
    const RadialProfile f = sech_profile(Dimension(3), p);
    std::vector<double> radii;
    for (int j = 0; j <= 600; ++j) radii.push_back(0.05 * j);
    const RadialProfile g = sampled_profile(Dimension(3), sample_profile(f, radii), BoundaryKind::Entire);
    for (double r : {0.025, 0.4321, 3.3333, 12.17, 29.9}) {
        EXPECT_NEAR(g.value(r), f.value(r), 1e-9) << r;
        EXPECT_NEAR(g.derivative(r), f.derivative(r), 1e-7) << r;
        EXPECT_NEAR(g.second_derivative(r), f.second_derivative(r), 1e-5) << r;
    }
    for (double r : {0.0, 0.05, 7.5}) EXPECT_NEAR(g.value(r), f.value(r), 1e-15);
}

TEST(SampledProfile, RejectsBadInput) {
    EXPECT_THROW(sampled_profile(Dimension(3), {{0.0, 0.0, 0.0, 0.0}}, BoundaryKind::Entire),
                 DomainError);
    EXPECT_THROW(sampled_profile(Dimension(3), {{0.0, 0.0, 0.0, 0.0}, {0.0, 1.0, 0.0, 0.0}},
                                 BoundaryKind::Entire),
                 DomainError);
    EXPECT_THROW(sampled_profile(Dimension(3), {{0.0, 0.0, 0.0, 0.0}, {1.0, 1.0, 0.1, 0.05}},
                                 BoundaryKind::Entire),
                 DomainError);
}

TEST(ConstantProfile, Flags) {
    const RadialProfile c = constant_profile(Dimension(5), 0.7);
    EXPECT_TRUE(c.is_constant());
    EXPECT_EQ(c.value(3.0), 0.7);
    EXPECT_EQ(c.derivative(3.0), 0.0);
    EXPECT_EQ(shift(c, 0.2).limit(), 0.7 - 0.2);
}
