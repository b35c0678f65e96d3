#pragma once

#include "hypermass/hyperbolic_core.hpp"
#include "hypermass/profile.hpp"

namespace hypermass::testing {

/// Scalar curvature of the graph metric b_kappa + V^2 df (x) df over H^3_kappa,
/// computed in Cartesian coordinates from finite-difference Christoffel
/// symbols and Riemann tensor at the point r * d for a fixed generic unit
/// direction d.
double brute_force_scalar_curvature_n3(const RadialProfile& f, Kappa kappa, double r);

/// Four-term surface integrand
///   V div e(nu) - V d(tr e)(nu) + (tr e) dV(nu) - e(grad V, nu),  e = V_kappa^2 df (x) df,
/// on S_r in H^3_kappa at r * d, all derivatives by finite differences in
/// geodesic polar coordinates. lapse_index 0 uses cosh(kappa r), 1..3 use
/// d^i sinh(kappa r).
double brute_force_mass_integrand_n3(const RadialProfile& f, Kappa kappa, double r,
                                     int lapse_index);

/// The fixed unit direction d used by both oracles.
const double* oracle_direction();

}  // namespace hypermass::testing
