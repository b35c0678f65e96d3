#pragma once

#include <optional>
#include <span>
#include <vector>

#include "hypermass/graph_geometry.hpp"
#include "hypermass/hyperbolic_core.hpp"
#include "hypermass/mass.hpp"
#include "hypermass/profile.hpp"

namespace hypermass {

/// Area of the level set {f = h} in H^n_kappa. Below the boundary value this
/// is |dOmega| for a minimal boundary and 0 for an entire profile.
double volume_function(const RadialProfile& f, Kappa kappa, double h);

/// d/dh of volume_function at a regular height, by inverse-function
/// differentiation.
double volume_derivative(const RadialProfile& f, Kappa kappa, double h);

struct H0Result {
    double h0 = 0.0;
    double mass = 0.0;
    double threshold = 0.0;
    /// The threshold lies below the smallest level-set area, so h0 falls back
    /// to the boundary value of f.
    bool degenerate = false;
};

/// Normalization height: sup{h : V_1(h) <= max(2 beta m^((n-1)/(n-2)) omega,
/// 2 beta omega m)} with m the mass of f.
H0Result compute_h0(const RadialProfile& f, double beta, const LadderOptions& opts = {});

struct MinkowskiReport {
    double lhs = 0.0;
    double rhs = 0.0;
    double margin = 0.0;
};

/// (1/c_n) integral of H V over the surface against area / (2 omega_{n-1}).
/// Throws HypothesisError when H < -tol at a sampled angle.
MinkowskiReport minkowski_check(const StarSurface& s, Kappa kappa, int samples = 64,
                                double tol = 1e-10);

/// Closed form of minkowski_check for the coordinate sphere S_r.
MinkowskiReport minkowski_sphere(double r, Kappa kappa, Dimension n);

struct GrowthReport {
    double lhs = 0.0;
    double rhs = 0.0;
    double residual = 0.0;
};

/// dV/dh against (1/alpha) [integral of H V over Sigma_h - (1 + alpha^-2) c_n m_kappa].
GrowthReport volume_growth_check(const RadialProfile& f, Kappa kappa, double h, double alpha,
                                 const LadderOptions& opts = {});

/// dV/dh against c_n (2 m / (3 sqrt 3)) (V / (2 omega m) - 1)^(3/2), under the
/// hypothesis V > c_n m / (n - 1).
GrowthReport sharpened_growth_check(const RadialProfile& f, Kappa kappa, double h,
                                    const LadderOptions& opts = {});

/// The alpha that maximizes the right-hand side of volume_growth_check:
/// sqrt(3) (V / (2 omega m) - 1)^(-1/2).
double optimal_alpha(const RadialProfile& f, Kappa kappa, double h,
                     const LadderOptions& opts = {});

struct OdeSample {
    double h = 0.0;
    double Y = 0.0;
};

struct OdeSolution {
    double beta = 2.0;
    int n = 3;
    double cap = 0.0;
    std::vector<OdeSample> samples;
    /// Height where Y first exceeds the cap, plus the estimated remaining
    /// distance to blow-up.
    double blowup_height = 0.0;
    double closed_form_blowup = 0.0;
};

/// Blow-up height 3 sqrt(3) / ((n - 1) sqrt(beta - 1)) of the comparison ODE.
double comparison_blowup_height(Dimension n, double beta);

/// Closed-form solution of the comparison ODE at h below the blow-up height.
double comparison_closed_form(Dimension n, double beta, double h);

/// Integrate Y' = c_n (2 / (3 sqrt 3)) (Y / (2 omega) - 1)^(3/2), Y(0) = 2 beta omega,
/// until Y exceeds cap (default 1e9 omega).
OdeSolution ode_comparison(Dimension n, double beta, std::optional<double> cap = std::nullopt);

/// Y at each height of an increasing grid inside [0, blow-up).
std::vector<double> ode_values(Dimension n, double beta, std::span<const double> heights);

struct ComparisonReport {
    bool holds = true;
    double kappa = 1.0;
    double h0 = 0.0;
    double h_end = 0.0;
    std::vector<double> heights;
    std::vector<double> Y;
    std::vector<double> V;
    std::optional<double> first_violation;
};

/// Rescale f with kappa = m^(1/(n-2)) and h0 from compute_h0, then compare Y
/// with the rescaled level-set area on `points` heights in [0, min(blow-up, sup)).
/// Y <= V (1 + rel_tol) must hold at every height.
ComparisonReport comparison_property(const RadialProfile& f, double beta, int points = 200,
                                     double rel_tol = 1e-6, const LadderOptions& opts = {});

struct HeightBoundReport {
    int n = 3;
    double beta = 2.0;
    double m = 0.0;
    double h0 = 0.0;
    double sup_f = 0.0;
    double sup_minus_h0 = 0.0;
    double C = 0.0;
    double bound = 0.0;
    /// (sup f - h0) / m^(1/(n-2)).
    double ratio = 0.0;
    bool verdict = false;
    /// Zero mass: the left inequality 0 < sup f - h0 cannot hold.
    bool degenerate = false;
    double blowup_numeric = 0.0;
    double blowup_closed = 0.0;
};

/// 0 < sup f - h0 < C m^(1/(n-2)) with C the blow-up height for beta.
HeightBoundReport height_bound_check(const RadialProfile& f, double beta,
                                     const LadderOptions& opts = {});

}  // namespace hypermass
