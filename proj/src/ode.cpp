#include <boost/numeric/odeint.hpp>

#include <array>
#include <cmath>

#include "hypermass/errors.hpp"
#include "hypermass/mass.hpp"
#include "hypermass/stability.hpp"

namespace hypermass {

namespace odeint = boost::numeric::odeint;

namespace {

using State = std::array<double, 1>;

struct ComparisonField {
    double cn;
    double omega;

    double rate(double Y) const {
        const double u = std::max(Y / (2.0 * omega) - 1.0, 0.0);
        return cn * (2.0 / (3.0 * std::sqrt(3.0))) * u * std::sqrt(u);
    }
    void operator()(const State& y, State& dy, double) const { dy[0] = rate(y[0]); }
};

ComparisonField field_for(Dimension n) {
    return {mass_normalization(n), unit_sphere_volume(n)};
}

void require_beta(double beta) {
    if (!(beta > 1.0) || !std::isfinite(beta)) {
        throw DomainError("beta must exceed 1 for the comparison ODE to blow up");
    }
}

constexpr double kOdeTol = 1e-13;

}  // namespace

double comparison_blowup_height(Dimension n, double beta) {
    require_beta(beta);
    return 3.0 * std::sqrt(3.0) / ((n.value() - 1) * std::sqrt(beta - 1.0));
}

double comparison_closed_form(Dimension n, double beta, double h) {
    require_beta(beta);
    // u = Y / (2 omega) - 1 solves u' = k u^(3/2) with k = 2 (n - 1) / (3 sqrt 3).
    const double k = 2.0 * (n.value() - 1) / (3.0 * std::sqrt(3.0));
    const double s = 1.0 / std::sqrt(beta - 1.0) - 0.5 * k * h;
    if (!(s > 0.0)) throw DomainError("height lies beyond the blow-up of the comparison ODE");
    return 2.0 * unit_sphere_volume(n) * (1.0 + 1.0 / (s * s));
}

OdeSolution ode_comparison(Dimension n, double beta, std::optional<double> cap) {
    require_beta(beta);
    const ComparisonField field = field_for(n);
    OdeSolution sol;
    sol.beta = beta;
    sol.n = n.value();
    sol.cap = cap.value_or(1e9 * field.omega);
    sol.closed_form_blowup = comparison_blowup_height(n, beta);
    if (!(sol.cap > 2.0 * beta * field.omega)) throw DomainError("ODE cap must exceed Y(0)");

    auto stepper = odeint::make_controlled(kOdeTol, kOdeTol, odeint::runge_kutta_dopri5<State>());
    State y{2.0 * beta * field.omega};
    double h = 0.0;
    double dh = 1e-3;
    sol.samples.push_back({h, y[0]});
    constexpr int kMaxSteps = 1000000;
    int steps = 0;
    while (y[0] <= sol.cap) {
        if (++steps > kMaxSteps) throw ConvergenceError("comparison ODE exceeded its step budget");
        if (stepper.try_step(field, y, h, dh) == odeint::success) {
            sol.samples.push_back({h, y[0]});
        }
        if (!std::isfinite(y[0])) throw ConvergenceError("comparison ODE produced a non-finite Y");
    }
    // Past the cap Y' ~ a Y^p with p from the local log-slope of the field, so
    // the remaining height is Y / ((p - 1) Y').
    const double Yc = y[0];
    constexpr double eps = 1e-4;
    const double p = (std::log(field.rate(Yc * (1.0 + eps))) -
                      std::log(field.rate(Yc * (1.0 - eps)))) /
                     (std::log1p(eps) - std::log1p(-eps));
    if (!(p > 1.0)) throw ConvergenceError("comparison ODE field does not grow superlinearly");
    sol.blowup_height = h + Yc / ((p - 1.0) * field.rate(Yc));
    return sol;
}

std::vector<double> ode_values(Dimension n, double beta, std::span<const double> heights) {
    require_beta(beta);
    const ComparisonField field = field_for(n);
    const double blowup = comparison_blowup_height(n, beta);
    std::vector<double> out;
    out.reserve(heights.size());
    State y{2.0 * beta * field.omega};
    double h = 0.0;
    auto stepper = odeint::make_controlled(kOdeTol, kOdeTol, odeint::runge_kutta_dopri5<State>());
    for (double target : heights) {
        if (target < h) throw DomainError("ODE sample heights must be increasing and >= 0");
        if (!(target < blowup)) throw DomainError("ODE sample height lies beyond blow-up");
        if (target > h) {
            odeint::integrate_adaptive(stepper, field, y, h, target, std::min(1e-3, target - h));
            h = target;
        }
        out.push_back(y[0]);
    }
    return out;
}

}  // namespace hypermass
