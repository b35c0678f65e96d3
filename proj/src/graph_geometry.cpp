#include "hypermass/graph_geometry.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <sstream>

#include "hypermass/errors.hpp"
#include "hypermass/quadrature.hpp"

namespace hypermass {

ScalarCurvature scalar_curvature(const RadialProfile& f, Kappa kappa, double r,
                                 CurvatureVariant variant) {
    const RadialCalculus rc = radial_calculus(f, r, kappa);
    const int n = f.dimension();
    const double k = kappa.value();
    const double V = lapse(r, kappa);
    const double dV = k * std::sinh(k * r);
    const double fp = f.derivative(r);
    const double fpp = rc.hess_rr;
    const double lap = rc.laplacian;
    const double hess_sq = fpp * fpp + (n - 1) * rc.hess_tan * rc.hess_tan;
    const double fp2 = fp * fp;
    const double W = 1.0 + V * V * fp2;
    // <df, dV> / V
    const double a = fp * dV / V;
    const double coupling = variant == CurvatureVariant::Exact ? 2.0 * a * lap : -2.0 * a * lap;

    const double bracket = lap * lap - hess_sq +
                           (2.0 * V * V / W) * (fpp * fpp * fp2 - lap * fpp * fp2) +
                           (2.0 * a / W) * (lap - V * V * fpp * fp2 + a) + coupling -
                           (2.0 / W) * a * a - (4.0 / W) * fpp * a;
    const double magnitude =
        lap * lap + hess_sq + (2.0 * V * V / W) * (fpp * fpp * fp2 + std::abs(lap * fpp) * fp2) +
        (2.0 * std::abs(a) / W) * (std::abs(lap) + V * V * std::abs(fpp) * fp2 + std::abs(a)) +
        2.0 * std::abs(a * lap) + (2.0 / W) * a * a + (4.0 / W) * std::abs(fpp * a);
    ScalarCurvature out;
    out.curly_R = V * V / W * bracket;
    out.roundoff = 32.0 * std::numeric_limits<double>::epsilon() * V * V / W * magnitude;
    out.R = out.curly_R - k * k * n * (n - 1);
    return out;
}

namespace {

// Five-point central first and second derivatives.
struct Diff {
    double d1;
    double d2;
};

template <class G>
Diff five_point(const G& g, double x, double h) {
    const double m2 = g(x - 2.0 * h);
    const double m1 = g(x - h);
    const double c = g(x);
    const double p1 = g(x + h);
    const double p2 = g(x + 2.0 * h);
    return {(m2 - 8.0 * m1 + 8.0 * p1 - p2) / (12.0 * h),
            (-m2 + 16.0 * m1 - 30.0 * c + 16.0 * p1 - p2) / (12.0 * h * h)};
}

}  // namespace

double warped_scalar_oracle(const RadialProfile& f, Kappa kappa, double r) {
    f.require_interior(r);
    const int n = f.dimension();
    const double k = kappa.value();
    const double h = std::min({2e-3 / k, 2e-3 * r, (r - f.domain_start()) / 3.0});
    // B = 1 / A stays smooth where f' blows up at a minimal boundary.
    auto B = [&](double x) {
        const double vf = std::cosh(k * x) * f.derivative(x);
        return 1.0 / (1.0 + vf * vf);
    };
    auto psi = [&](double x) { return std::sinh(k * x) / k; };
    const Diff dB = five_point(B, r, h);
    const Diff dpsi = five_point(psi, r, h);
    const double b = B(r);
    const double p = psi(r);
    return -2.0 * (n - 1) * (b * dpsi.d2 + 0.5 * dpsi.d1 * dB.d1) / p +
           (n - 1) * (n - 2) * (1.0 - b * dpsi.d1 * dpsi.d1) / (p * p);
}

namespace {

double mean_curvature_bracket(const RadialProfile& f, Kappa kappa, double r, double& W) {
    const RadialCalculus rc = radial_calculus(f, r, kappa);
    const int n = f.dimension();
    const double k = kappa.value();
    const double V = lapse(r, kappa);
    const double dV = k * std::sinh(k * r);
    const double fp = f.derivative(r);
    W = 1.0 + V * V * fp * fp;
    return (rc.hess_rr + 2.0 * fp * dV / V + V * dV * fp * fp * fp) / W + (n - 1) * rc.hess_tan;
}

}  // namespace

double graph_mean_curvature(const RadialProfile& f, Kappa kappa, double r) {
    double W = 1.0;
    const double bracket = mean_curvature_bracket(f, kappa, r, W);
    return lapse(r, kappa) / std::sqrt(W) * bracket;
}

double graph_mean_curvature_weighted(const RadialProfile& f, Kappa kappa, double r) {
    double W = 1.0;
    const double bracket = mean_curvature_bracket(f, kappa, r, W);
    const double V = lapse(r, kappa);
    return V * V / W * bracket;
}

UpwardReport upward_check(const RadialProfile& f, Kappa kappa, std::span<const double> grid,
                          double tol) {
    UpwardReport report;
    for (double r : grid) {
        const double H = graph_mean_curvature(f, kappa, r);
        if (!(H >= -tol)) {
            report.upward = false;
            report.first_violation = r;
            report.value_at_violation = H;
            return report;
        }
    }
    return report;
}

double mean_curvature_comparison_check(const RadialProfile& f, Kappa kappa, double r,
                                       double eps_reg) {
    f.require_interior(r);
    const double fp = f.derivative(r);
    if (!(std::abs(fp) > eps_reg)) {
        std::ostringstream os;
        os << "f(" << r << ") is not a regular value: |f'| = " << std::abs(fp);
        throw RegularityError(os.str());
    }
    const int n = f.dimension();
    const double V = lapse(r, kappa);
    const double vf = V * fp;
    const double cos_angle = vf / std::sqrt(1.0 + vf * vf);
    const double Hs = level_set_mean_curvature(r, kappa, f.dimension());
    const double Hbar = graph_mean_curvature(f, kappa, r);
    const double curly_R = scalar_curvature(f, kappa, r).curly_R;
    return cos_angle * Hbar * Hs -
           (0.5 * curly_R + n / (2.0 * (n - 1)) * cos_angle * cos_angle * Hs * Hs);
}

double level_set_mean_curvature(double r, Kappa kappa, Dimension n) {
    return coordinate_sphere_mean_curvature(r, kappa, n);
}

StarSurface coordinate_sphere(double r, Dimension n) {
    if (!(r > 0.0)) throw DomainError("coordinate sphere radius must be positive");
    return StarSurface{[r](double) { return r; }, n, [](double) { return 0.0; }};
}

std::vector<StarSurface> seeded_star_surfaces(Dimension n, std::uint64_t seed, int count,
                                              double eps_max) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::vector<StarSurface> out;
    for (int i = 0; i < count; ++i) {
        const double r = 0.5 + 2.5 * unit(rng);
        const double eps = eps_max * (0.2 + 0.8 * unit(rng));
        std::array<double, 3> c{};
        for (double& ck : c) ck = (2.0 * unit(rng) - 1.0) / 3.0;
        auto a = [c](double t) {
            return c[0] * std::cos(t) + c[1] * std::cos(2.0 * t) + c[2] * std::cos(3.0 * t);
        };
        auto da = [c](double t) {
            return -c[0] * std::sin(t) - 2.0 * c[1] * std::sin(2.0 * t) -
                   3.0 * c[2] * std::sin(3.0 * t);
        };
        out.push_back(StarSurface{[=](double t) { return r * (1.0 + eps * a(t)); }, n,
                                  [=](double t) { return r * eps * da(t); }});
    }
    return out;
}

namespace {

constexpr double kThetaStep = 1e-4;

void require_positive(double theta, double phi) {
    if (!(phi > 0.0) || !std::isfinite(phi)) {
        std::ostringstream os;
        os << "star surface support function must be positive, phi(" << theta << ") = " << phi;
        throw DomainError(os.str());
    }
}

double star_dphi(const StarSurface& s, double theta) {
    if (s.dphi) return s.dphi(theta);
    return (s.phi(theta + kThetaStep) - s.phi(theta - kThetaStep)) / (2.0 * kThetaStep);
}

// Area density L(phi, phi', theta) without the omega_{n-2} factor.
double area_density(double phi, double dphi, double theta, Kappa kappa, int n) {
    const double psi = warp(phi, kappa);
    return std::sqrt(dphi * dphi + psi * psi) * std::pow(psi, n - 2) *
           std::pow(std::sin(theta), n - 2);
}

// dL/dphi' = phi' psi^(n-2) sin^(n-2) / sqrt(phi'^2 + psi^2).
double momentum(const StarSurface& s, Kappa kappa, double theta) {
    const int n = s.n;
    const double phi = s.phi(theta);
    const double dphi = star_dphi(s, theta);
    const double psi = warp(phi, kappa);
    return dphi * std::pow(psi, n - 2) * std::pow(std::sin(theta), n - 2) /
           std::sqrt(dphi * dphi + psi * psi);
}

}  // namespace

double star_mean_curvature(const StarSurface& s, Kappa kappa, double theta) {
    if (!(theta > 0.0 && theta < std::numbers::pi)) {
        throw DomainError("star surface mean curvature needs a polar angle in (0, pi)");
    }
    const int n = s.n;
    const double phi = s.phi(theta);
    require_positive(theta, phi);
    const double dphi = star_dphi(s, theta);
    // Radial variation of the area density, central step 1e-4 phi.
    const double step = 1e-4 * phi;
    const double dL_dphi = (area_density(phi + step, dphi, theta, kappa, n) -
                            area_density(phi - step, dphi, theta, kappa, n)) /
                           (2.0 * step);
    const double h = std::min(kThetaStep, 0.5 * std::min(theta, std::numbers::pi - theta));
    const double dP =
        (momentum(s, kappa, theta + h) - momentum(s, kappa, theta - h)) / (2.0 * h);
    const double euler_lagrange = dL_dphi - dP;
    // A radial variation eta moves the surface normally by eta psi / sqrt(phi'^2 + psi^2).
    const double psi = warp(phi, kappa);
    return euler_lagrange / (std::pow(psi, n - 1) * std::pow(std::sin(theta), n - 2));
}

double star_surface_area(const StarSurface& s, Kappa kappa) {
    const int n = s.n;
    QuadOptions opts;
    opts.abs_tol = 0.0;
    opts.rel_tol = 1e-11;
    auto density = [&](double theta) {
        const double phi = s.phi(theta);
        require_positive(theta, phi);
        return area_density(phi, star_dphi(s, theta), theta, kappa, n);
    };
    return unit_sphere_volume(n - 1) * quad(density, 0.0, std::numbers::pi, opts).value;
}

double star_lapse_weighted_mean_curvature(const StarSurface& s, Kappa kappa) {
    const int n = s.n;
    QuadOptions opts;
    opts.abs_tol = 1e-12;
    opts.rel_tol = 1e-8;
    auto integrand = [&](double theta) {
        const double phi = s.phi(theta);
        require_positive(theta, phi);
        const double H = star_mean_curvature(s, kappa, theta);
        return H * lapse(phi, kappa) * area_density(phi, star_dphi(s, theta), theta, kappa, n);
    };
    return unit_sphere_volume(n - 1) * quad(integrand, 0.0, std::numbers::pi, opts).value;
}

StarGeometry star_surface_geometry(const StarSurface& s, Kappa kappa, int samples) {
    if (samples < 1) throw DomainError("star surface geometry needs at least one sample");
    StarGeometry out;
    out.area = star_surface_area(s, kappa);
    out.theta.reserve(samples);
    out.mean_curvature.reserve(samples);
    for (int j = 0; j < samples; ++j) {
        const double theta = std::numbers::pi * (j + 0.5) / samples;
        out.theta.push_back(theta);
        out.mean_curvature.push_back(star_mean_curvature(s, kappa, theta));
    }
    return out;
}

}  // namespace hypermass
