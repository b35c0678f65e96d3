#pragma once

#include <functional>

namespace hypermass {

using ScalarFn = std::function<double(double)>;

struct QuadResult {
    double value = 0.0;
    double error = 0.0;
    int evaluations = 0;
};

struct QuadOptions {
    double abs_tol = 1e-10;
    double rel_tol = 1e-10;
    int max_intervals = 4000;
};

/// Globally adaptive Gauss-Kronrod (G10/K21) quadrature on a finite interval.
/// Bisects the interval with the largest error estimate until
/// error <= max(abs_tol, rel_tol * |value|). Throws ConvergenceError when the
/// interval budget is exhausted.
QuadResult quad(const ScalarFn& g, double a, double b, const QuadOptions& opts = {});

/// Integral of g over [a, inf) for integrands decaying at least like
/// exp(-decay_hint * r). The finite part [a, R] is integrated adaptively and R
/// doubles (measured from a) until the exponential tail bound drops below the
/// tolerance.
QuadResult quad_improper(const ScalarFn& g, double a, double decay_hint,
                         const QuadOptions& opts = {});

}  // namespace hypermass
