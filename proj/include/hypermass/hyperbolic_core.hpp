#pragma once

#include <compare>

namespace hypermass {

/// Dimension n of the base hyperbolic space; the ambient space is n + 1.
class Dimension {
public:
    explicit Dimension(int n);
    int value() const noexcept { return n_; }
    operator int() const noexcept { return n_; }

private:
    int n_;
};

/// Inverse radius of the model space H^n_kappa = (R^n, dr^2 + sinh^2(kappa r)/kappa^2 sigma).
class Kappa {
public:
    explicit Kappa(double kappa);
    static Kappa unit() { return Kappa(1.0); }
    double value() const noexcept { return kappa_; }
    auto operator<=>(const Kappa&) const = default;

private:
    double kappa_;
};

/// Basis of the static potentials: V_(0) = cosh r and V_(i) = x^i sinh r.
class LapseBasis {
public:
    LapseBasis(int index, Dimension n);
    int index() const noexcept { return index_; }
    /// Lorentzian norm eta(V, V): +1 for V_(0), -1 for the spatial ones.
    int signature() const noexcept { return index_ == 0 ? 1 : -1; }

private:
    int index_;
};

/// Per-point radial calculus of f(r) in H^n_kappa.
struct RadialCalculus {
    double grad_norm = 0.0;
    double laplacian = 0.0;
    double hess_rr = 0.0;
    /// Eigenvalue of the Hessian on the n - 1 directions tangent to S_r.
    double hess_tan = 0.0;
};

/// coth(x), switching to the Laurent series for |x| < 1e-4.
double coth(double x);

/// V_kappa(r) = cosh(kappa r).
double lapse(double r, Kappa kappa);

/// omega_{n-1}: volume of the unit round sphere S^{n-1} in R^n, for n >= 2.
double unit_sphere_volume(int n);

/// Area of the coordinate sphere S_r in H^n_kappa.
double sphere_area(double r, Kappa kappa, Dimension n);

/// sinh(kappa r) / kappa.
double warp(double r, Kappa kappa);

/// Volume of the geodesic ball B_r in H^n_kappa.
double ball_volume(double r, Kappa kappa, Dimension n);

/// Mean curvature (n - 1) kappa coth(kappa r) of S_r, outward normal.
double coordinate_sphere_mean_curvature(double r, Kappa kappa, Dimension n);

/// Evaluate the radial calculus from the derivatives f'(r), f''(r).
RadialCalculus radial_calculus(double f_prime, double f_double_prime, double r, Kappa kappa,
                               Dimension n);

}  // namespace hypermass
