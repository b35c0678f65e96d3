#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "hypermass/hyperbolic_core.hpp"
#include "hypermass/profile.hpp"

namespace hypermass {

/// Term set used by scalar_curvature. `FlippedLapseTerm` negates one lapse
/// coupling term and exists only to prove that the verification suites catch a
/// wrong formula.
enum class CurvatureVariant { Exact, FlippedLapseTerm };

struct ScalarCurvature {
    /// Scalar curvature R_kappa(f) of the induced graph metric.
    double R = 0.0;
    /// R + kappa^2 n (n - 1); vanishes for the model space.
    double curly_R = 0.0;
    /// Rounding floor of curly_R: values with |curly_R| below it are noise.
    double roundoff = 0.0;
};

/// Scalar curvature of the graph {s = f(r)} in (R x H^n_kappa, V^2 ds^2 + b_kappa),
/// evaluated term by term from the radial calculus of f.
ScalarCurvature scalar_curvature(const RadialProfile& f, Kappa kappa, double r,
                                 CurvatureVariant variant = CurvatureVariant::Exact);

/// Independent oracle: scalar curvature of A dr^2 + psi^2 sigma with
/// A = 1 + V^2 f'^2, derivatives by five-point central differences.
double warped_scalar_oracle(const RadialProfile& f, Kappa kappa, double r);

/// Mean curvature of the graph with respect to the upward unit normal,
/// (1 / (V psi^(n-1))) d/dr (V^2 psi^(n-1) f' / sqrt(1 + V^2 f'^2)).
double graph_mean_curvature(const RadialProfile& f, Kappa kappa, double r);

/// The same bracket with prefactor V^2 / (1 + V^2 f'^2) in place of
/// V / sqrt(1 + V^2 f'^2). Same sign as graph_mean_curvature, scaled by
/// V / sqrt(1 + V^2 f'^2).
double graph_mean_curvature_weighted(const RadialProfile& f, Kappa kappa, double r);

struct UpwardReport {
    bool upward = true;
    std::optional<double> first_violation;
    double value_at_violation = 0.0;
};

/// True iff the graph mean curvature is >= -tol on every grid radius.
UpwardReport upward_check(const RadialProfile& f, Kappa kappa, std::span<const double> grid,
                          double tol = 1e-10);

/// cos H-bar H_s0 - [curly_R / 2 + n / (2 (n - 1)) cos^2 H_s0^2] at r, where
/// cos = V f' / sqrt(1 + V^2 f'^2) and H_s0 is the level-set mean curvature.
/// Throws RegularityError when |f'(r)| <= eps_reg.
double mean_curvature_comparison_check(const RadialProfile& f, Kappa kappa, double r,
                                       double eps_reg = 1e-8);

/// Mean curvature (n - 1) kappa coth(kappa r) of the level set {f = h} = S_r.
double level_set_mean_curvature(double r, Kappa kappa, Dimension n);

/// Axisymmetric star-shaped hypersurface r = phi(theta) over S^(n-1), theta the
/// polar angle in [0, pi].
struct StarSurface {
    std::function<double(double)> phi;
    Dimension n;
    /// Optional analytic phi'; central differences are used when empty.
    std::function<double(double)> dphi = {};
};

StarSurface coordinate_sphere(double r, Dimension n);

/// Seeded axisymmetric perturbations phi = r (1 + eps a(theta)) of coordinate
/// spheres, a a cosine polynomial of degree <= 3 with |a| <= 1, r in
/// [0.5, 3] and eps <= eps_max.
std::vector<StarSurface> seeded_star_surfaces(Dimension n, std::uint64_t seed, int count,
                                              double eps_max = 0.05);

struct StarGeometry {
    double area = 0.0;
    std::vector<double> theta;
    std::vector<double> mean_curvature;
};

/// Area by quadrature and the outward mean curvature sampled on `samples`
/// interior polar angles.
StarGeometry star_surface_geometry(const StarSurface& s, Kappa kappa, int samples = 64);

double star_surface_area(const StarSurface& s, Kappa kappa);

/// Outward mean curvature at one polar angle in (0, pi), from the first
/// variation of the area.
double star_mean_curvature(const StarSurface& s, Kappa kappa, double theta);

/// Integral of H V_kappa over the surface.
double star_lapse_weighted_mean_curvature(const StarSurface& s, Kappa kappa);

}  // namespace hypermass
