#pragma once

#include <vector>

#include "hypermass/hyperbolic_core.hpp"
#include "hypermass/profile.hpp"
#include "hypermass/tolerances.hpp"

namespace hypermass {

/// Radius ladder kappa r_k = r_min 2^k for the boundary limit.
struct LadderOptions {
    double r_min = 5.0;
    int rungs = 6;
    Tolerances tol = {};
};

struct LadderRung {
    double r = 0.0;
    double value = 0.0;
};

struct MassLimit {
    double value = 0.0;
    /// Difference between the last two accepted rungs.
    double error = 0.0;
    std::vector<LadderRung> rungs;
};

/// (1/2) V^4 psi^(n-2) f'^2 at r: the radial reduction of the kappa-mass
/// surface integrand divided by c_n. Evaluated in log space.
double mass_density(const RadialProfile& f, Kappa kappa, double r);

/// kappa-mass as the limit of mass_density along the ladder. Rungs where f'
/// underflows are dropped; ConvergenceError if the last two kept rungs differ
/// by more than max(abs, rel |value|).
MassLimit mass_boundary_limit_detailed(const RadialProfile& f, Kappa kappa,
                                       const LadderOptions& opts = {});

double mass_boundary_limit(const RadialProfile& f, Kappa kappa, const LadderOptions& opts = {});

/// Mass functional H(V) for a lapse from the basis, at kappa = 1. The angular
/// factor is integrated with a product Gauss-Legendre rule in hyperspherical
/// coordinates.
double mass_functional_lapse(const RadialProfile& f, LapseBasis basis,
                             const LadderOptions& opts = {});

/// Integral of the i-th coordinate function x^i over the unit sphere S^(n-1)
/// (i = 0 integrates the constant 1).
double sphere_coordinate_moment(int index, Dimension n);

struct MassReport {
    double kappa = 1.0;
    double m_boundary = 0.0;
    double m_boundary_error = 0.0;
    double m_levelset_bulk = 0.0;
    double m_levelset_boundary = 0.0;
    double m_levelset_total = 0.0;
    double h_used = 0.0;
    double r_h = 0.0;
    double residual_identity = 0.0;
    Tolerances tol = {};
};

/// Level-set decomposition of the mass: bulk integral of curly_R V over
/// {r > r_h} plus the boundary flux through S_{r_h}, both divided by c_n.
MassReport mass_level_set(const RadialProfile& f, Kappa kappa, double h,
                          const LadderOptions& opts = {});

/// Pointwise quantities of the level-set identity at r: the bulk density
/// curly_R V |S_r| and the flux (n - 1) kappa coth V^3 f'^2 |S_r| / W.
double bulk_density(const RadialProfile& f, Kappa kappa, double r);
double boundary_flux(const RadialProfile& f, Kappa kappa, double r);

struct PmtReport {
    bool holds = false;
    double mass = 0.0;
    double boundary_term = 0.0;
    double bulk = 0.0;
};

/// Non-negativity of the mass and the level-set lower bound at h. Throws
/// HypothesisError at the first grid radius where curly_R < -tol.
PmtReport pmt_check(const RadialProfile& f, Kappa kappa, double h, const LadderOptions& opts = {});

/// Smallest curly_R on the standard check grid of f, with its radius.
struct CurvatureMinimum {
    double r = 0.0;
    double value = 0.0;
};
CurvatureMinimum scalar_curvature_minimum(const RadialProfile& f, Kappa kappa, int points = 200);

struct PenroseReport {
    double mass = 0.0;
    double bound = 0.0;
    double ratio = 0.0;
};

/// mass against V(r0) |S_r0| / (2 omega_{n-1}) for a profile with a minimal
/// boundary at r0 (kappa = 1).
PenroseReport penrose_bound(const RadialProfile& f, const LadderOptions& opts = {});

struct MassScaling {
    double m_rescaled = 0.0;
    double predicted = 0.0;
};

/// kappa-mass of rescale(f, h0, kappa) against m_1(f) / kappa^(n-2).
MassScaling mass_scaling_check(const RadialProfile& f, double h0, Kappa kappa,
                               const LadderOptions& opts = {});

/// c_n = 2 (n - 1) omega_{n-1}.
double mass_normalization(Dimension n);

/// Decay rate used for the tail of the bulk integral of f in H^n_kappa.
double bulk_decay_hint(const RadialProfile& f, Kappa kappa);

}  // namespace hypermass
