#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "hypermass/errors.hpp"
#include "hypermass/hyperbolic_core.hpp"
#include "hypermass/quadrature.hpp"

using namespace hypermass;

TEST(Lapse, Values) {
    EXPECT_EQ(lapse(0.0, Kappa::unit()), 1.0);
    EXPECT_NEAR(lapse(1.0, Kappa::unit()), 1.5430806348152437, 1e-15);
    EXPECT_DOUBLE_EQ(lapse(2.0, Kappa(0.5)), lapse(1.0, Kappa::unit()));
}

TEST(SphereArea, Values) {
    const Dimension n(3);
    EXPECT_NEAR(sphere_area(std::asinh(1.0), Kappa::unit(), n), 4.0 * std::numbers::pi, 1e-13);
    EXPECT_LT(sphere_area(1e-6, Kappa::unit(), n), 1e-10);
    // matched kappa r: sinh(kr)/k squared picks up 1/k^2
    const double ratio = sphere_area(0.35, Kappa(2.0), n) / sphere_area(0.7, Kappa::unit(), n);
    EXPECT_NEAR(ratio, 0.25, 1e-14);
}

TEST(UnitSphere, Values) {
    EXPECT_NEAR(unit_sphere_volume(3), 4.0 * std::numbers::pi, 1e-14);
    EXPECT_NEAR(unit_sphere_volume(4), 2.0 * std::numbers::pi * std::numbers::pi, 1e-13);
    EXPECT_NEAR(unit_sphere_volume(2), 2.0 * std::numbers::pi, 1e-14);
}

TEST(RadialCalculus, Values) {
    const RadialCalculus flat = radial_calculus(0.0, 0.0, 1.3, Kappa::unit(), Dimension(3));
    EXPECT_EQ(flat.grad_norm, 0.0);
    EXPECT_EQ(flat.laplacian, 0.0);
    EXPECT_EQ(flat.hess_rr, 0.0);
    EXPECT_EQ(flat.hess_tan, 0.0);

    const RadialCalculus lin = radial_calculus(1.0, 0.0, 1.0, Kappa::unit(), Dimension(3));
    EXPECT_NEAR(lin.laplacian, 2.0 / std::tanh(1.0), 1e-14);
    EXPECT_NEAR(lin.laplacian, 2.6264, 1e-3);

    for (double r : {0.2, 1.0, 7.0}) {
        EXPECT_EQ(radial_calculus(2.0 * r, 2.0, r, Kappa::unit(), Dimension(4)).hess_rr, 2.0);
    }
}

TEST(SphereMeanCurvature, Values) {
    EXPECT_NEAR(coordinate_sphere_mean_curvature(std::asinh(1.0), Kappa::unit(), Dimension(3)),
                2.0 * std::sqrt(2.0), 1e-14);
    // small kappa tends to the Euclidean (n - 1) / r
    EXPECT_NEAR(coordinate_sphere_mean_curvature(1.5, Kappa(1e-5), Dimension(4)), 2.0, 1e-9);
}

TEST(Dimension, RejectsBelowThree) {
    EXPECT_THROW(Dimension(2), DomainError);
    EXPECT_THROW(Kappa(0.0), DomainError);
    EXPECT_THROW(Kappa(-1.0), DomainError);
    EXPECT_THROW(LapseBasis(4, Dimension(3)), DomainError);
}

TEST(Quadrature, ImproperClosedForms) {
    auto e = [](double r) { return std::exp(-r); };
    EXPECT_NEAR(quad_improper(e, 0.0, 1.0).value, 1.0, 1e-10);
    auto es = [](double r) { return std::exp(-2.0 * r) * std::sinh(r); };
    EXPECT_NEAR(quad_improper(es, 0.0, 1.0).value, 1.0 / 3.0, 1e-10);
    auto re = [](double r) { return r * std::exp(-r); };
    EXPECT_NEAR(quad_improper(re, 0.0, 0.5).value, 1.0, 1e-10);
}

TEST(Quadrature, FiniteAndReversed) {
    auto s = [](double t) { return std::sin(t); };
    EXPECT_NEAR(quad(s, 0.0, std::numbers::pi).value, 2.0, 1e-13);
    EXPECT_NEAR(quad(s, std::numbers::pi, 0.0).value, -2.0, 1e-13);
    EXPECT_EQ(quad(s, 1.0, 1.0).value, 0.0);
}

TEST(Quadrature, FailuresAreReported) {
    auto bad = [](double) { return std::nan(""); };
    EXPECT_THROW(quad(bad, 0.0, 1.0), ConvergenceError);
    auto flat = [](double) { return 1.0; };
    EXPECT_THROW(quad_improper(flat, 0.0, 1.0), ConvergenceError);
    EXPECT_THROW(quad_improper(flat, 0.0, 0.0), DomainError);
}
