#include "hypermass/flat_norm.hpp"

#include <boost/math/tools/roots.hpp>

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <limits>
#include <thread>

#include "hypermass/ads.hpp"
#include "hypermass/errors.hpp"
#include "hypermass/quadrature.hpp"
#include "hypermass/stability.hpp"

namespace hypermass {

HBall::HBall(double rho) : rho_(rho) {
    if (!(rho > 0.0) || !std::isfinite(rho)) throw DomainError("H-ball radius must be positive");
}

double HBall::radial_extent() const { return std::asinh(rho_); }

double HBall::half_height(double r) const {
    const double sh = std::sinh(r);
    const double gap = rho_ * rho_ - sh * sh;
    if (!(gap > 0.0)) return 0.0;
    return std::sqrt(gap) / std::cosh(r);
}

bool hball_contains(double s, double r, const HBall& ball) {
    const double c = std::cosh(r);
    const double sh = std::sinh(r);
    const double rho2 = ball.rho() * ball.rho();
    return c * c * s * s + sh * sh <= rho2 * (1.0 + 4.0 * std::numeric_limits<double>::epsilon());
}

namespace {

// Radius where the slice {s = c} leaves the ball.
double slice_extent(double c, const HBall& ball) {
    const double rho2 = ball.rho() * ball.rho();
    if (!(rho2 > c * c)) return 0.0;
    return std::asinh(std::sqrt((rho2 - c * c) / (1.0 + c * c)));
}

// Sign changes of g on a uniform scan of [a, b], refined to full precision.
void add_roots(const std::function<double(double)>& g, double a, double b,
               std::vector<double>& out) {
    constexpr int kScan = 512;
    double x0 = a;
    double g0 = g(a);
    for (int j = 1; j <= kScan; ++j) {
        const double x1 = a + (b - a) * j / kScan;
        const double g1 = g(x1);
        if (g0 == 0.0) {
            out.push_back(x0);
        } else if (g0 * g1 < 0.0) {
            boost::uintmax_t iterations = 100;
            const auto bracket = boost::math::tools::toms748_solve(
                g, x0, x1, g0, g1, boost::math::tools::eps_tolerance<double>(50), iterations);
            out.push_back(0.5 * (bracket.first + bracket.second));
        }
        x0 = x1;
        g0 = g1;
    }
}

}  // namespace

double region_volume(const std::function<double(double)>& lower,
                     const std::function<double(double)>& upper, const HBall& ball, Dimension n,
                     std::vector<double> breakpoints) {
    const double r_end = ball.radial_extent();
    const Kappa unit = Kappa::unit();
    auto height = [&](double r) {
        const double hh = ball.half_height(r);
        return std::max(0.0, std::min(upper(r), hh) - std::max(lower(r), -hh));
    };
    auto integrand = [&](double r) {
        const double dh = height(r);
        if (dh == 0.0) return 0.0;
        return dh * lapse(r, unit) * sphere_area(r, unit, n);
    };
    // Kinks of the integrand: where either bound meets the ball or the other bound.
    add_roots([&](double r) { return upper(r) - ball.half_height(r); }, 0.0, r_end, breakpoints);
    add_roots([&](double r) { return upper(r) + ball.half_height(r); }, 0.0, r_end, breakpoints);
    add_roots([&](double r) { return lower(r) - ball.half_height(r); }, 0.0, r_end, breakpoints);
    add_roots([&](double r) { return lower(r) + ball.half_height(r); }, 0.0, r_end, breakpoints);
    add_roots([&](double r) { return upper(r) - lower(r); }, 0.0, r_end, breakpoints);
    breakpoints.push_back(0.0);
    breakpoints.push_back(r_end);
    std::sort(breakpoints.begin(), breakpoints.end());
    QuadOptions opts;
    opts.abs_tol = 1e-14;
    opts.rel_tol = 1e-11;
    double total = 0.0;
    for (std::size_t i = 0; i + 1 < breakpoints.size(); ++i) {
        const double a = std::clamp(breakpoints[i], 0.0, r_end);
        const double b = std::clamp(breakpoints[i + 1], 0.0, r_end);
        if (b > a) total += quad(integrand, a, b, opts).value;
    }
    return total;
}

double slab_volume(double lower, double upper, const HBall& ball, Dimension n) {
    return region_volume([lower](double) { return lower; }, [upper](double) { return upper; },
                         ball, n);
}

CurrentMassReport current_masses(const RadialProfile& f, double h0, const HBall& ball, double m) {
    const Dimension n = f.dimension();
    CurrentMassReport out;
    if (f.boundary_kind() == BoundaryKind::MinimalBoundary) {
        const double c = f.boundary_value();
        const double reach = std::min(f.domain_start(), slice_extent(c, ball));
        out.mass_A = ball_volume(reach, Kappa::unit(), n);
    }
    std::vector<double> breaks;
    if (f.domain_start() > 0.0) breaks.push_back(f.domain_start());
    auto fbar = [&f](double r) { return f.extended(r); };
    auto plane = [h0](double) { return h0; };
    if (!f.is_constant()) {
        out.mass_B_plus = region_volume(plane, fbar, ball, n, breaks);
        out.mass_B_minus = region_volume(fbar, plane, ball, n, breaks);
    } else if (f.limit() != h0) {
        const double lo = std::min(f.limit(), h0);
        const double hi = std::max(f.limit(), h0);
        (f.limit() > h0 ? out.mass_B_plus : out.mass_B_minus) = slab_volume(lo, hi, ball, n);
    }
    out.flat_upper = out.mass_A + out.mass_B_plus + out.mass_B_minus;
    if (m > 0.0) {
        out.shape_linear = (ball.rho() + 1.0) * m;
        out.shape_power = std::pow(ball.rho(), n.value()) * std::pow(m, 1.0 / (n - 2));
    }
    return out;
}

double b_minus_slice_volume(const RadialProfile& f, const HBall& ball, double h) {
    const Dimension n = f.dimension();
    if (h <= f.boundary_value()) return 0.0;
    const double below = h >= f.limit() ? std::numeric_limits<double>::infinity()
                                        : level_radius(f, h);
    return ball_volume(std::min(below, slice_extent(h, ball)), Kappa::unit(), n);
}

double isoperimetric_ratio(double r, Kappa kappa, Dimension n) {
    if (!(r > 0.0)) throw DomainError("isoperimetric ratio needs r > 0");
    return ball_volume(r, kappa, n) / sphere_area(r, kappa, n);
}

double flat_bound_shape(double m, double rho, Dimension n, double c_tilde) {
    if (m == 0.0) return 0.0;
    return c_tilde * ((rho + 1.0) * m + std::pow(rho, n.value()) * std::pow(m, 1.0 / (n - 2)));
}

SweepRow sweep_row(const RadialProfile& f, double m, double h0, const HBall& ball) {
    const Dimension n = f.dimension();
    const CurrentMassReport c = current_masses(shift(f, h0), 0.0, ball, m);
    SweepRow row;
    row.m = m;
    row.h0 = h0;
    row.mass_A = c.mass_A;
    row.mass_B_plus = c.mass_B_plus;
    row.mass_B_minus = c.mass_B_minus;
    row.flat_upper = c.flat_upper;
    const double shape = flat_bound_shape(m, ball.rho(), n);
    row.ratio = shape > 0.0 ? row.flat_upper / shape : 0.0;
    row.power_ratio = m > 0.0 ? row.flat_upper / std::pow(m, 1.0 / (n - 2)) : 0.0;
    return row;
}

double log_log_slope(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size() || x.size() < 2) {
        throw DomainError("log-log slope needs two or more paired samples");
    }
    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    const double k = static_cast<double>(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double lx = std::log(x[i]);
        const double ly = std::log(y[i]);
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
    }
    return (k * sxy - sx * sy) / (k * sxx - sx * sx);
}

SweepTable convergence_sweep(std::span<const double> masses, double rho, Dimension n, double beta,
                             int threads, const LadderOptions& opts) {
    if (masses.empty()) throw DomainError("sweep needs at least one mass");
    for (std::size_t i = 0; i < masses.size(); ++i) {
        if (!(masses[i] > 0.0)) throw DomainError("sweep masses must be positive");
        if (i > 0 && !(masses[i] < masses[i - 1])) {
            throw DomainError("sweep masses must be strictly decreasing");
        }
    }
    const HBall ball(rho);
    SweepTable table;
    table.n = n;
    table.rho = rho;
    table.beta = beta;
    table.rows.resize(masses.size());
    std::vector<std::exception_ptr> errors(masses.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
        for (std::size_t i = next++; i < masses.size(); i = next++) {
            try {
                const RadialProfile f = ads_profile(n, masses[i]);
                const H0Result h0 = compute_h0(f, beta, opts);
                table.rows[i] = sweep_row(f, masses[i], h0.h0, ball);
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    const int count = std::clamp(threads, 1, static_cast<int>(masses.size()));
    std::vector<std::thread> pool;
    for (int t = 1; t < count; ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();
    for (const auto& e : errors) {
        if (e) std::rethrow_exception(e);
    }
    std::vector<double> ms;
    std::vector<double> ratios;
    for (std::size_t i = 0; i < table.rows.size(); ++i) {
        const SweepRow& row = table.rows[i];
        if (i > 0 && !(row.flat_upper < table.rows[i - 1].flat_upper)) {
            table.strictly_decreasing = false;
        }
        table.empirical_c_tilde = std::max(table.empirical_c_tilde, row.ratio);
        ms.push_back(row.m);
        ratios.push_back(row.ratio);
    }
    if (ms.size() >= 2) table.ratio_slope = log_log_slope(ms, ratios);
    return table;
}

}  // namespace hypermass
