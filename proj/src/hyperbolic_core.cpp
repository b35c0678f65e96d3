#include "hypermass/hyperbolic_core.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "hypermass/errors.hpp"
#include "hypermass/quadrature.hpp"

namespace hypermass {

Dimension::Dimension(int n) : n_(n) {
    if (n < 3) throw DomainError("dimension n must be >= 3, got " + std::to_string(n));
}

Kappa::Kappa(double kappa) : kappa_(kappa) {
    if (!(kappa > 0.0) || !std::isfinite(kappa)) {
        throw DomainError("kappa must be a positive finite real");
    }
}

LapseBasis::LapseBasis(int index, Dimension n) : index_(index) {
    if (index < 0 || index > n.value()) {
        throw DomainError("lapse basis index must lie in [0, n]");
    }
}

double coth(double x) {
    if (std::abs(x) < 1e-4) return 1.0 / x + x / 3.0;
    return 1.0 / std::tanh(x);
}

double lapse(double r, Kappa kappa) { return std::cosh(kappa.value() * r); }

double unit_sphere_volume(int n) {
    if (n < 2) throw DomainError("unit_sphere_volume needs n >= 2");
    const double half = 0.5 * n;
    return 2.0 * std::pow(std::numbers::pi, half) / std::tgamma(half);
}

double warp(double r, Kappa kappa) {
    const double k = kappa.value();
    return std::sinh(k * r) / k;
}

double sphere_area(double r, Kappa kappa, Dimension n) {
    return unit_sphere_volume(n) * std::pow(warp(r, kappa), n.value() - 1);
}

double ball_volume(double r, Kappa kappa, Dimension n) {
    if (r <= 0.0) return 0.0;
    const int power = n.value() - 1;
    QuadOptions opts;
    opts.abs_tol = 0.0;
    opts.rel_tol = 1e-13;
    const double radial =
        quad([&](double t) { return std::pow(warp(t, kappa), power); }, 0.0, r, opts).value;
    return unit_sphere_volume(n) * radial;
}

double coordinate_sphere_mean_curvature(double r, Kappa kappa, Dimension n) {
    const double k = kappa.value();
    return (n.value() - 1) * k * coth(k * r);
}

RadialCalculus radial_calculus(double f_prime, double f_double_prime, double r, Kappa kappa,
                               Dimension n) {
    const double k = kappa.value();
    RadialCalculus out;
    out.grad_norm = std::abs(f_prime);
    out.hess_rr = f_double_prime;
    out.hess_tan = k * coth(k * r) * f_prime;
    out.laplacian = out.hess_rr + (n.value() - 1) * out.hess_tan;
    return out;
}

}  // namespace hypermass
