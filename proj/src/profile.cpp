#include "hypermass/profile.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <memory>
#include <random>
#include <sstream>
#include <utility>

#include <boost/math/tools/roots.hpp>

#include "hypermass/errors.hpp"

namespace hypermass {

namespace {

// Stand-in rate for profiles whose V^2 f'^2 vanishes identically.
constexpr double kFlatDecay = 64.0;

std::string format_double(double x) {
    std::ostringstream os;
    os.precision(6);
    os << x;
    return os.str();
}

}  // namespace

RadialProfile::RadialProfile(Dimension n, Derivatives fns, double domain_start, BoundaryKind kind,
                             double decay_rate, double limit, std::string label)
    : n_(n),
      fns_(std::move(fns)),
      domain_start_(domain_start),
      kind_(kind),
      decay_rate_(decay_rate),
      limit_(limit),
      label_(std::move(label)) {
    if (!fns_.f || !fns_.f1 || !fns_.f2) throw DomainError("profile needs f, f' and f''");
    if (!(domain_start >= 0.0) || !std::isfinite(domain_start)) {
        throw DomainError("profile domain_start must be a finite r >= 0");
    }
    if (kind == BoundaryKind::Entire && domain_start != 0.0) {
        throw DomainError("entire profiles start at the pole r = 0");
    }
    if (!(decay_rate > 0.0)) throw DomainError("profile decay_rate must be positive");
}

double RadialProfile::extended(double r) const {
    if (r <= domain_start_) return boundary_value();
    return value(r);
}

double RadialProfile::boundary_value() const { return value(domain_start_); }

void RadialProfile::require_interior(double r) const {
    if (!(r > domain_start_) || !std::isfinite(r)) {
        std::ostringstream os;
        os << "radius " << r << " is not inside the profile domain (" << domain_start_
           << ", inf)";
        throw DomainError(os.str());
    }
}

RadialProfile RadialProfile::with_label(std::string label) const {
    RadialProfile copy = *this;
    copy.label_ = std::move(label);
    return copy;
}

RadialCalculus radial_calculus(const RadialProfile& f, double r, Kappa kappa) {
    f.require_interior(r);
    return radial_calculus(f.derivative(r), f.second_derivative(r), r, kappa, f.dimension());
}

RadialProfile constant_profile(Dimension n, double value) {
    RadialProfile p(
        n,
        {[value](double) { return value; }, [](double) { return 0.0; },
         [](double) { return 0.0; }},
        0.0, BoundaryKind::Entire, kFlatDecay, value, "constant(" + format_double(value) + ")");
    p.constant_ = true;
    return p;
}

RadialProfile exponential_profile(Dimension n, double amplitude, double rate, double offset,
                                  double domain_start) {
    if (!(rate > 1.0)) throw DomainError("exponential profile needs rate > 1 for V f' -> 0");
    const BoundaryKind kind =
        domain_start == 0.0 ? BoundaryKind::Entire : BoundaryKind::MinimalBoundary;
    return RadialProfile(
        n,
        {[=](double r) { return offset + amplitude * std::exp(-rate * r); },
         [=](double r) { return -rate * amplitude * std::exp(-rate * r); },
         [=](double r) { return rate * rate * amplitude * std::exp(-rate * r); }},
        domain_start, kind, 2.0 * rate - 2.0, offset,
        "exp(" + format_double(amplitude) + "," + format_double(rate) + ")");
}

namespace {

double sech_power(double r, double p) { return std::pow(1.0 / std::cosh(r), p); }

struct SechTerms {
    double p0;
    SechParams q;

    double f(double r) const {
        return q.offset - q.a * sech_power(r, p0) + q.b * sech_power(r, q.p) * std::cos(q.omega * r);
    }
    double f1(double r) const {
        const double t = std::tanh(r);
        const double s0 = sech_power(r, p0);
        const double g = sech_power(r, q.p);
        const double w = q.omega;
        return q.a * p0 * s0 * t + q.b * (-q.p * g * t * std::cos(w * r) - w * g * std::sin(w * r));
    }
    double f2(double r) const {
        const double t = std::tanh(r);
        const double sech2 = 1.0 - t * t;
        const double s0 = sech_power(r, p0);
        const double g = sech_power(r, q.p);
        const double w = q.omega;
        const double s0pp = p0 * s0 * (p0 * t * t - sech2);
        const double gp = -q.p * g * t;
        const double gpp = q.p * g * (q.p * t * t - sech2);
        const double tpp =
            gpp * std::cos(w * r) - 2.0 * gp * w * std::sin(w * r) - g * w * w * std::cos(w * r);
        return -q.a * s0pp + q.b * tpp;
    }
};

}  // namespace

RadialProfile sech_profile(Dimension n, const SechParams& params) {
    SechTerms terms{0.5 * (n.value() + 2), params};
    if (terms.q.p == 0.0) terms.q.p = terms.p0 + 1.0;
    if (terms.q.p <= terms.p0 && terms.q.b != 0.0) {
        throw DomainError("sech profile needs p > (n + 2) / 2 for the oscillating term");
    }
    // V^2 f'^2 decays like exp(-n r) when a != 0.
    const double decay = params.a != 0.0 ? n.value() : 2.0 * terms.q.p - 2.0;
    std::ostringstream label;
    label << "sech(a=" << params.a << ",b=" << params.b << ",p=" << terms.q.p
          << ",omega=" << params.omega << ")";
    return RadialProfile(n,
                         {[terms](double r) { return terms.f(r); },
                          [terms](double r) { return terms.f1(r); },
                          [terms](double r) { return terms.f2(r); }},
                         0.0, BoundaryKind::Entire, decay, params.offset, label.str());
}

double sech_profile_mass(Dimension n, const SechParams& params) {
    const double p0 = 0.5 * (n.value() + 2);
    return 0.5 * params.a * params.a * p0 * p0;
}

std::vector<RadialProfile> seeded_smooth_profiles(Dimension n, std::uint64_t seed, int count) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    const double p0 = 0.5 * (n.value() + 2);
    std::vector<RadialProfile> out;
    out.reserve(static_cast<std::size_t>(std::max(count, 0)));
    for (int i = 0; i < count; ++i) {
        SechParams q;
        q.a = 0.02 + 0.28 * unit(rng);
        q.p = p0 + 1.0 + 2.0 * unit(rng);
        q.omega = 0.5 + 2.5 * unit(rng);
        // |b| below this keeps f' > 0 on (0, inf); tanh r >= 0.76 min(r, 1).
        const double b_max = q.a * p0 / (q.p + std::max(q.omega, q.omega * q.omega) / 0.76);
        q.b = (2.0 * unit(rng) - 1.0) * 0.5 * b_max;
        q.offset = unit(rng) - 0.5;
        out.push_back(sech_profile(n, q));
    }
    return out;
}

RadialProfile rescale(const RadialProfile& f, double h0, Kappa kappa) {
    const double k = kappa.value();
    RadialProfile base = f;
    RadialProfile out(
        f.dimension(),
        {[base, h0, k](double r) { return (base.value(k * r) - h0) / k; },
         [base, k](double r) { return base.derivative(k * r); },
         [base, k](double r) { return k * base.second_derivative(k * r); }},
        f.domain_start() / k, f.boundary_kind(), f.decay_rate() * k, (f.limit() - h0) / k,
        "rescaled(" + f.label() + ")");
    if (f.is_constant()) return constant_profile(f.dimension(), (f.limit() - h0) / k);
    return out;
}

RadialProfile shift(const RadialProfile& f, double amount) {
    if (f.is_constant()) return constant_profile(f.dimension(), f.limit() - amount);
    RadialProfile base = f;
    return RadialProfile(f.dimension(),
                         {[base, amount](double r) { return base.value(r) - amount; },
                          [base](double r) { return base.derivative(r); },
                          [base](double r) { return base.second_derivative(r); }},
                         f.domain_start(), f.boundary_kind(), f.decay_rate(),
                         f.limit() - amount, f.label());
}

namespace {

struct QuinticSpline {
    std::vector<ProfileSample> knots;
    double tail_rate = 0.0;  // 0: constant tail

    struct Eval {
        double f, f1, f2;
    };

    Eval eval(double r) const {
        const ProfileSample& last = knots.back();
        if (r >= last.r) {
            if (tail_rate == 0.0) return {last.f, 0.0, 0.0};
            const double e = std::exp(-tail_rate * (r - last.r));
            const double d = last.f1 * e;
            return {last.f + last.f1 / tail_rate * (1.0 - e), d, -tail_rate * d};
        }
        auto it = std::upper_bound(knots.begin(), knots.end(), r,
                                   [](double x, const ProfileSample& s) { return x < s.r; });
        if (it == knots.begin()) throw DomainError("radius below the first profile sample");
        const ProfileSample& a = *(it - 1);
        const ProfileSample& b = *it;
        const double h = b.r - a.r;
        const double t = (r - a.r) / h;
        const double c0 = a.f;
        const double c1 = h * a.f1;
        const double c2 = 0.5 * h * h * a.f2;
        const double y = b.f - (c0 + c1 + c2);
        const double d = h * b.f1 - (c1 + 2.0 * c2);
        const double s = h * h * b.f2 - 2.0 * c2;
        const double c3 = 10.0 * y - 4.0 * d + 0.5 * s;
        const double c4 = -15.0 * y + 7.0 * d - s;
        const double c5 = 6.0 * y - 3.0 * d + 0.5 * s;
        const double p = c0 + t * (c1 + t * (c2 + t * (c3 + t * (c4 + t * c5))));
        const double dp = c1 + t * (2.0 * c2 + t * (3.0 * c3 + t * (4.0 * c4 + t * 5.0 * c5)));
        const double ddp = 2.0 * c2 + t * (6.0 * c3 + t * (12.0 * c4 + t * 20.0 * c5));
        return {p, dp / h, ddp / (h * h)};
    }
};

}  // namespace

RadialProfile sampled_profile(Dimension n, std::vector<ProfileSample> samples, BoundaryKind kind) {
    if (samples.size() < 2) throw DomainError("sampled profile needs at least two samples");
    for (std::size_t i = 0; i < samples.size(); ++i) {
        const auto& s = samples[i];
        if (!std::isfinite(s.r) || !std::isfinite(s.f) || !std::isfinite(s.f1) ||
            !std::isfinite(s.f2)) {
            throw DomainError("sampled profile has a non-finite entry");
        }
        if (i > 0 && !(s.r > samples[i - 1].r)) {
            throw DomainError("sampled profile radii must be strictly increasing");
        }
    }
    auto spline = std::make_shared<QuinticSpline>();
    spline->knots = std::move(samples);
    const ProfileSample& last = spline->knots.back();
    double decay = kFlatDecay;
    double limit = last.f;
    if (last.f1 != 0.0) {
        spline->tail_rate = -last.f2 / last.f1;
        if (!(spline->tail_rate > 1.0)) {
            throw DomainError("sampled profile tail must decay: need -f''/f' > 1 at the last sample");
        }
        decay = 2.0 * spline->tail_rate - 2.0;
        limit = last.f + last.f1 / spline->tail_rate;
    }
    const double start = spline->knots.front().r;
    if (kind == BoundaryKind::Entire && start != 0.0) {
        throw DomainError("entire sampled profile must start at r = 0");
    }
    return RadialProfile(n,
                         {[spline](double r) { return spline->eval(r).f; },
                          [spline](double r) { return spline->eval(r).f1; },
                          [spline](double r) { return spline->eval(r).f2; }},
                         start, kind, decay, limit, "sampled");
}

std::vector<ProfileSample> sample_profile(const RadialProfile& f, std::span<const double> radii) {
    std::vector<ProfileSample> out;
    out.reserve(radii.size());
    for (double r : radii) {
        out.push_back({r, f.value(r), f.derivative(r), f.second_derivative(r)});
    }
    return out;
}

double level_radius(const RadialProfile& f, double h) {
    const double start = f.domain_start();
    const double lo_value = f.boundary_value();
    const double sign = f.limit() > lo_value ? 1.0 : -1.0;
    if (!(sign * (h - lo_value) > 0.0) || !(sign * (f.limit() - h) > 0.0)) {
        std::ostringstream os;
        os << "height " << h << " is not attained: f ranges over (" << lo_value << ", "
           << f.limit() << ")";
        throw DomainError(os.str());
    }
    auto g = [&](double r) { return sign * (f.value(r) - h); };
    double hi = start + 1.0;
    while (g(hi) < 0.0) {
        hi = start + 2.0 * (hi - start);
        if (hi > 700.0) throw DomainError("height not reached before r = 700");
    }
    constexpr int kChecks = 64;
    double previous = sign * f.value(start);
    for (int j = 1; j <= kChecks; ++j) {
        const double current = sign * f.value(start + (hi - start) * j / kChecks);
        if (current < previous - 1e-13 * (1.0 + std::abs(previous))) {
            throw DomainError("profile is not monotone above its domain start");
        }
        previous = current;
    }
    double lo = start;
    if (g(lo) >= 0.0) return lo;
    boost::uintmax_t iterations = 200;
    const auto bracket = boost::math::tools::toms748_solve(
        g, lo, hi, boost::math::tools::eps_tolerance<double>(52), iterations);
    return 0.5 * (bracket.first + bracket.second);
}

std::vector<std::string> profile_invariant_violations(const RadialProfile& f) {
    std::vector<std::string> issues;
    const double r0 = f.domain_start();
    if (f.boundary_kind() == BoundaryKind::Entire) {
        const double d0 = f.derivative(0.0);
        if (!std::isfinite(f.value(0.0)) || !std::isfinite(d0) || std::abs(d0) > 1e-8) {
            issues.emplace_back("entire profile is not smooth at the pole: f'(0) != 0");
        }
    } else {
        double previous = 0.0;
        bool diverges = false;
        for (int k = 1; k <= 15; ++k) {
            const double r = r0 + std::max(r0, 1.0) * std::pow(10.0, -k);
            if (r <= r0) break;
            const double d = std::abs(f.derivative(r));
            if (!(d >= previous)) break;
            previous = d;
            if (d > 1e6) {
                diverges = true;
                break;
            }
        }
        if (!diverges) issues.emplace_back("f' does not blow up at the minimal boundary");
    }
    auto vf = [&](double r) {
        const double v = std::cosh(r) * f.derivative(r);
        return v * v;
    };
    const double far = r0 + 30.0;
    if (!(vf(far) < 1e-6)) issues.emplace_back("V^2 f'^2 does not decay at infinity");
    if (!std::isfinite(f.limit())) issues.emplace_back("f has no finite limit at infinity");
    return issues;
}

}  // namespace hypermass
