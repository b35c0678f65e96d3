#include "hypermass/ads.hpp"

#include <boost/math/tools/roots.hpp>

#include <algorithm>
#include <cmath>
#include <memory>
#include <sstream>
#include <vector>

#include "hypermass/errors.hpp"
#include "hypermass/quadrature.hpp"

namespace hypermass {

double AdsSchwarzschild::r0() const { return std::asinh(rho0); }

double AdsSchwarzschild::residual() const {
    return 1.0 + rho0 * rho0 - 2.0 * m * std::pow(rho0, 2 - n.value());
}

double ads_horizon_radius(Dimension n, double m) {
    if (!(m > 0.0) || !std::isfinite(m)) throw DomainError("AdS mass must be positive");
    const int k = n.value() - 2;
    // p(rho) is increasing on (0, inf), so the root is unique.
    auto p = [&](double rho) { return 1.0 + rho * rho - 2.0 * m * std::pow(rho, -k); };
    const double hi = std::pow(2.0 * m, 1.0 / k);
    const double lo = std::pow(2.0 * m / (1.0 + hi * hi), 1.0 / k);
    if (p(lo) >= 0.0) return lo;
    boost::uintmax_t iterations = 200;
    auto bracket = boost::math::tools::toms748_solve(
        p, lo, hi, boost::math::tools::eps_tolerance<double>(53), iterations);
    double rho = 0.5 * (bracket.first + bracket.second);
    for (int i = 0; i < 3; ++i) {
        const double slope = 2.0 * rho + 2.0 * m * k * std::pow(rho, -k - 1);
        const double next = rho - p(rho) / slope;
        if (!(next > 0.0)) break;
        rho = next;
    }
    return rho;
}

AdsSchwarzschild ads_schwarzschild(Dimension n, double m) {
    return AdsSchwarzschild{n, m, ads_horizon_radius(n, m)};
}

namespace {

// Closed-form f', f'' with F = 1 + rho^2 - q evaluated from the horizon offset
// to keep full relative accuracy near r0.
class AdsDerivatives {
public:
    AdsDerivatives(int n, double rho0) : n_(n), rho0_(rho0), r0_(std::asinh(rho0)) {}

    double r0() const { return r0_; }

    double f1(double r) const { return terms(r - r0_).f1; }

    /// f' at r0 + delta, accurate for offsets below the spacing of doubles at r0.
    double f1_offset(double delta) const { return terms(delta).f1; }

    double f2(double r) const {
        const Terms t = terms(r - r0_);
        if (t.f1 == 0.0 || !std::isfinite(t.f1)) return 0.0;
        const double c = std::cosh(r);
        const double dF = 2.0 * t.rho * c + (n_ - 2) * t.q * c / t.rho;
        return t.f1 * (-(n_ - 2) * c / (2.0 * t.rho) - dF / (2.0 * t.F) - std::tanh(r));
    }

private:
    struct Terms {
        double rho, q, F, f1;
    };

    Terms terms(double delta) const {
        const double r = r0_ + delta;
        const double drho = 2.0 * std::cosh(r0_ + 0.5 * delta) * std::sinh(0.5 * delta);
        const double rho = rho0_ + drho;
        const double c0 = 1.0 + rho0_ * rho0_;
        const double q = c0 * std::pow(rho0_ / rho, n_ - 2);
        const double F =
            drho * (rho + rho0_) + c0 * (-std::expm1(-(n_ - 2) * std::log1p(drho / rho0_)));
        const double f1 = std::sqrt(q / F) / std::cosh(r);
        return {rho, q, F, f1};
    }

    int n_;
    double rho0_;
    double r0_;
};

// Cumulative integral of f' in t = sqrt(r - r0), which removes the square-root
// singularity at the horizon.
class AdsHeight {
public:
    static constexpr double kSpan = 40.0;
    static constexpr double kPanel = 0.05;

    AdsHeight(AdsDerivatives d, int n) : d_(d), tail_rate_(0.5 * n + 1.0) {
        const double t_end = std::sqrt(kSpan);
        const int panels = static_cast<int>(std::ceil(t_end / kPanel));
        knots_.resize(panels + 1);
        cumulative_.resize(panels + 1, 0.0);
        for (int i = 0; i <= panels; ++i) knots_[i] = t_end * i / panels;
        for (int i = 0; i < panels; ++i) {
            cumulative_[i + 1] = cumulative_[i] + panel(knots_[i], knots_[i + 1]);
        }
        QuadOptions opts;
        opts.abs_tol = 1e-16;
        opts.rel_tol = 1e-13;
        const double tail = quad_improper([this](double r) { return d_.f1(r); },
                                          d_.r0() + kSpan, tail_rate_, opts)
                                .value;
        limit_ = cumulative_.back() + tail;
    }

    double value(double r) const {
        const double delta = r - d_.r0();
        if (delta <= 0.0) return 0.0;
        if (delta >= kSpan) {
            QuadOptions opts;
            opts.abs_tol = 1e-16;
            opts.rel_tol = 1e-13;
            return limit_ -
                   quad_improper([this](double x) { return d_.f1(x); }, r, tail_rate_, opts).value;
        }
        const double t = std::sqrt(delta);
        auto it = std::upper_bound(knots_.begin(), knots_.end(), t);
        const std::size_t i = static_cast<std::size_t>(std::max<std::ptrdiff_t>(it - knots_.begin() - 1, 0));
        return cumulative_[i] + panel(knots_[i], t);
    }

    double limit() const { return limit_; }

private:
    double panel(double a, double b) const {
        if (b <= a) return 0.0;
        QuadOptions opts;
        opts.abs_tol = 1e-17;
        opts.rel_tol = 1e-14;
        // Kronrod nodes are interior, so t = 0 is never sampled.
        return quad([&](double t) { return 2.0 * t * d_.f1_offset(t * t); }, a, b, opts).value;
    }

    AdsDerivatives d_;
    double tail_rate_;
    std::vector<double> knots_;
    std::vector<double> cumulative_;
    double limit_ = 0.0;
};

}  // namespace

RadialProfile ads_profile(Dimension n, double m) {
    const double rho0 = ads_horizon_radius(n, m);
    const AdsDerivatives d(n.value(), rho0);
    auto height = std::make_shared<const AdsHeight>(d, n.value());
    std::ostringstream label;
    label << "ads(n=" << n.value() << ",m=" << m << ")";
    return RadialProfile(n,
                         {[height](double r) { return height->value(r); },
                          [d](double r) { return d.f1(r); }, [d](double r) { return d.f2(r); }},
                         d.r0(), BoundaryKind::MinimalBoundary, n.value(), height->limit(),
                         label.str());
}

}  // namespace hypermass
