#pragma once

#include <functional>
#include <span>
#include <vector>

#include "hypermass/hyperbolic_core.hpp"
#include "hypermass/mass.hpp"
#include "hypermass/profile.hpp"

namespace hypermass {

/// Metric ball of radius rho about (s, x) = (0, 0) in H^(n+1).
class HBall {
public:
    explicit HBall(double rho);
    double rho() const noexcept { return rho_; }
    /// Largest r reached by the ball, asinh(rho).
    double radial_extent() const;
    /// Half-height sqrt(rho^2 - sinh^2 r) / cosh r of the ball over r (0 outside).
    double half_height(double r) const;

private:
    double rho_;
};

/// cosh^2(r) s^2 + sinh^2(r) <= rho^2, up to a few ulps of rho^2.
bool hball_contains(double s, double r, const HBall& ball);

struct CurrentMassReport {
    double mass_A = 0.0;
    double mass_B_plus = 0.0;
    double mass_B_minus = 0.0;
    double flat_upper = 0.0;
    /// (rho + 1) m and rho^n m^(1/(n-2)).
    double shape_linear = 0.0;
    double shape_power = 0.0;
};

/// Masses of the explicit decomposition graph[f] - {s = h0} = A + dB inside the
/// ball, with f extended by its boundary value over the inner ball. `m` only
/// feeds the shape columns.
CurrentMassReport current_masses(const RadialProfile& f, double h0, const HBall& ball,
                                 double m = 0.0);

/// Volume, in V^2 ds^2 + b, of {(s, x) in U : lower(|x|) < s < upper(|x|)}.
double region_volume(const std::function<double(double)>& lower,
                     const std::function<double(double)>& upper, const HBall& ball, Dimension n,
                     std::vector<double> breakpoints = {});

/// Volume of the slab {lower < s < upper} inside the ball.
double slab_volume(double lower, double upper, const HBall& ball, Dimension n);

/// Volume of B_minus at the height h: the part of {s = h} in the ball lying
/// above the extended graph.
double b_minus_slice_volume(const RadialProfile& f, const HBall& ball, double h);

/// vol(B_r) / |S_r| in H^n_kappa; increasing in r with limit 1 / ((n - 1) kappa).
double isoperimetric_ratio(double r, Kappa kappa, Dimension n);

/// c_tilde [(rho + 1) m + rho^n m^(1/(n-2))].
double flat_bound_shape(double m, double rho, Dimension n, double c_tilde = 1.0);

struct SweepRow {
    double m = 0.0;
    double h0 = 0.0;
    double mass_A = 0.0;
    double mass_B_plus = 0.0;
    double mass_B_minus = 0.0;
    double flat_upper = 0.0;
    /// flat_upper / ((rho + 1) m + rho^n m^(1/(n-2))).
    double ratio = 0.0;
    /// flat_upper / m^(1/(n-2)).
    double power_ratio = 0.0;
};

struct SweepTable {
    int n = 3;
    double rho = 0.0;
    double beta = 2.0;
    std::vector<SweepRow> rows;
    bool strictly_decreasing = true;
    /// Largest shape ratio along the sweep.
    double empirical_c_tilde = 0.0;
    /// Least-squares slope of log(ratio) against log(m).
    double ratio_slope = 0.0;
};

/// One sweep row: normalize f so that h0 = 0 and compare with {s = 0}.
SweepRow sweep_row(const RadialProfile& f, double m, double h0, const HBall& ball);

/// AdS sweep over strictly decreasing masses; rows are computed on up to
/// `threads` threads and assembled in input order.
SweepTable convergence_sweep(std::span<const double> masses, double rho, Dimension n, double beta,
                             int threads = 1, const LadderOptions& opts = {});

/// Least-squares slope of log y against log x.
double log_log_slope(std::span<const double> x, std::span<const double> y);

}  // namespace hypermass
