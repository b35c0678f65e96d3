#pragma once

#include "hypermass/hyperbolic_core.hpp"
#include "hypermass/profile.hpp"

namespace hypermass {

/// The AdS-Schwarzschild graph of mass m over H^n. rho0 is the horizon in the
/// coordinate rho = sinh r.
struct AdsSchwarzschild {
    Dimension n;
    double m;
    double rho0;

    double r0() const;
    /// Horizon residual 1 + rho0^2 - 2 m rho0^(2-n).
    double residual() const;
};

/// Largest positive root of 1 + rho^2 - 2 m rho^(2-n) = 0.
double ads_horizon_radius(Dimension n, double m);

AdsSchwarzschild ads_schwarzschild(Dimension n, double m);

/// The graphing function f_m with f_m(r0) = 0, minimal boundary at the horizon
/// and closed-form derivatives.
RadialProfile ads_profile(Dimension n, double m);

}  // namespace hypermass
