#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hypermass/hyperbolic_core.hpp"
#include "hypermass/quadrature.hpp"

namespace hypermass {

enum class BoundaryKind { Entire, MinimalBoundary };

/// A rotationally symmetric graphing function s = f(r) over H^n with
/// derivative access.
///
/// `decay_rate` is the exponential rate d of V^2 f'^2 ~ exp(-d r) at infinity,
/// in the profile's own radial units. Profiles carrying a finite non-zero mass
/// in H^n_kappa have d = n kappa. `limit` is lim_{r->inf} f(r).
class RadialProfile {
public:
    struct Derivatives {
        ScalarFn f;
        ScalarFn f1;
        ScalarFn f2;
    };

    RadialProfile(Dimension n, Derivatives fns, double domain_start, BoundaryKind kind,
                  double decay_rate, double limit, std::string label);

    double value(double r) const { return fns_.f(r); }
    double derivative(double r) const { return fns_.f1(r); }
    double second_derivative(double r) const { return fns_.f2(r); }
    double operator()(double r) const { return fns_.f(r); }

    /// Extension f-bar: constant equal to the boundary value on the inner ball.
    double extended(double r) const;

    Dimension dimension() const noexcept { return n_; }
    double domain_start() const noexcept { return domain_start_; }
    BoundaryKind boundary_kind() const noexcept { return kind_; }
    double decay_rate() const noexcept { return decay_rate_; }
    double limit() const noexcept { return limit_; }
    double boundary_value() const;
    const std::string& label() const noexcept { return label_; }
    bool is_constant() const noexcept { return constant_; }

    /// Throws DomainError unless r lies strictly inside (domain_start, inf).
    void require_interior(double r) const;

    RadialProfile with_label(std::string label) const;

private:
    friend RadialProfile constant_profile(Dimension n, double value);

    Dimension n_;
    Derivatives fns_;
    double domain_start_;
    BoundaryKind kind_;
    double decay_rate_;
    double limit_;
    std::string label_;
    bool constant_ = false;
};

/// Radial calculus of the profile at an interior radius.
RadialCalculus radial_calculus(const RadialProfile& f, double r, Kappa kappa);

RadialProfile constant_profile(Dimension n, double value);

/// f(r) = offset + amplitude * exp(-rate r) on [domain_start, inf).
RadialProfile exponential_profile(Dimension n, double amplitude, double rate, double offset = 0.0,
                                  double domain_start = 0.0);

/// Parameters of the smooth entire family
///   f(r) = offset - a sech(r)^p0 + b sech(r)^p cos(omega r),  p0 = (n + 2) / 2,
/// which is even in r (smooth at the pole) and has mass a^2 p0^2 / 2.
struct SechParams {
    double a = 0.1;
    double b = 0.0;
    double p = 0.0;  // 0 selects p0 + 1
    double omega = 1.0;
    double offset = 0.0;
};

RadialProfile sech_profile(Dimension n, const SechParams& params);

/// Closed-form mass a^2 p0^2 / 2 of a sech profile.
double sech_profile_mass(Dimension n, const SechParams& params);

/// Seeded draw of `count` monotone increasing sech profiles.
std::vector<RadialProfile> seeded_smooth_profiles(Dimension n, std::uint64_t seed, int count);

/// f-tilde(r) = (f(kappa r) - h0) / kappa, to be read in H^n_kappa.
RadialProfile rescale(const RadialProfile& f, double h0, Kappa kappa);

/// Shift the height: f(r) - shift.
RadialProfile shift(const RadialProfile& f, double shift);

struct ProfileSample {
    double r = 0.0;
    double f = 0.0;
    double f1 = 0.0;
    double f2 = 0.0;
};

/// Profile interpolating (r, f, f', f'') samples with C^2 quintic Hermite
/// pieces and an exponential tail f' ~ exp(-lambda r) past the last sample,
/// lambda = -f''/f' there (which keeps the join C^2).
RadialProfile sampled_profile(Dimension n, std::vector<ProfileSample> samples, BoundaryKind kind);

std::vector<ProfileSample> sample_profile(const RadialProfile& f, std::span<const double> radii);

/// Radius r_h > domain_start with f(r_h) = h, for f strictly monotone.
/// DomainError when h is not strictly between the boundary value and the
/// limit, or when f is found not to be monotone.
double level_radius(const RadialProfile& f, double h);

/// Invariant violations of a profile (empty when all hold), checked
/// numerically: smooth pole for entire profiles, blow-up of f' at a minimal
/// boundary, V^2 f'^2 -> 0 and a finite limit at infinity.
std::vector<std::string> profile_invariant_violations(const RadialProfile& f);

}  // namespace hypermass
