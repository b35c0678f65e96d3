#include "hypermass/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <queue>
#include <sstream>
#include <vector>

#include "hypermass/errors.hpp"

namespace hypermass {

namespace {

// QUADPACK qk21 abscissae and weights.
constexpr std::array<double, 11> kXgk = {
    0.995657163025808080735527280689003, 0.973906528517171720077964012084452,
    0.930157491355708226001207180059508, 0.865063366688984510732096688423493,
    0.780817726586416897063717578345042, 0.679409568299024406234327365114874,
    0.562757134668604683339000099272694, 0.433395394129247190799265943165784,
    0.294392862701460198131126603103866, 0.148874338981631210884826001129720,
    0.000000000000000000000000000000000};
constexpr std::array<double, 11> kWgk = {
    0.011694638867371874278064396062192, 0.032558162307964727478818972459390,
    0.054755896574351996031381300244580, 0.075039674810919952767043140916190,
    0.093125454583697605535065465083366, 0.109387158802297641899210590325805,
    0.123491976262065851077208814791250, 0.134709217311473325928054001771707,
    0.142775938577060080797094273138717, 0.147739104901338491374841515972068,
    0.149445554002916905664936468389821};
// Gauss weights for the odd-indexed Kronrod abscissae kXgk[1], kXgk[3], ...
constexpr std::array<double, 5> kWg = {
    0.066671344308688137593568809893332, 0.149451349150580593145776339657697,
    0.219086362515982043995534934228163, 0.269266719309996355091226921569469,
    0.295524224714752870173892994651338};

struct Panel {
    double a;
    double b;
    double value;
    double error;
    bool operator<(const Panel& other) const { return error < other.error; }
};

Panel gauss_kronrod21(const ScalarFn& g, double a, double b) {
    const double center = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    const double fc = g(center);
    double kronrod = fc * kWgk[10];
    double gauss = 0.0;
    for (int j = 0; j < 10; ++j) {
        const double dx = half * kXgk[j];
        const double sum = g(center - dx) + g(center + dx);
        kronrod += kWgk[j] * sum;
        if (j % 2 == 1) gauss += kWg[j / 2] * sum;
    }
    const double value = kronrod * half;
    double error = std::abs((kronrod - gauss) * half);
    // QUADPACK-style error scaling: pessimistic for rough panels, sharper for
    // smooth ones.
    if (error > 0.0) {
        const double scaled = 200.0 * error;
        error = std::min(error, scaled * std::sqrt(scaled));
        error = std::max(error, 50.0 * 2.2e-16 * std::abs(value));
    }
    if (!std::isfinite(value)) {
        std::ostringstream msg;
        msg << "quadrature: non-finite integrand on [" << a << ", " << b << "]";
        throw ConvergenceError(msg.str());
    }
    return {a, b, value, error};
}

}  // namespace

QuadResult quad(const ScalarFn& g, double a, double b, const QuadOptions& opts) {
    if (a == b) return {};
    if (b < a) {
        QuadResult r = quad(g, b, a, opts);
        r.value = -r.value;
        return r;
    }
    std::priority_queue<Panel> heap;
    Panel first = gauss_kronrod21(g, a, b);
    heap.push(first);
    double value = first.value;
    double error = first.error;
    int panels = 1;
    while (error > std::max(opts.abs_tol, opts.rel_tol * std::abs(value))) {
        if (panels >= opts.max_intervals) {
            std::ostringstream msg;
            msg << "quadrature on [" << a << ", " << b << "] did not converge: error "
                << error << " after " << panels << " panels";
            throw ConvergenceError(msg.str());
        }
        Panel worst = heap.top();
        heap.pop();
        const double mid = 0.5 * (worst.a + worst.b);
        if (!(mid > worst.a && mid < worst.b)) {
            throw ConvergenceError("quadrature: interval collapsed to machine resolution");
        }
        Panel left = gauss_kronrod21(g, worst.a, mid);
        Panel right = gauss_kronrod21(g, mid, worst.b);
        value += left.value + right.value - worst.value;
        error += left.error + right.error - worst.error;
        heap.push(left);
        heap.push(right);
        ++panels;
    }
    // Re-sum from the panels to avoid drift from the running updates.
    std::vector<Panel> all;
    all.reserve(heap.size());
    while (!heap.empty()) {
        all.push_back(heap.top());
        heap.pop();
    }
    std::sort(all.begin(), all.end(), [](const Panel& x, const Panel& y) { return x.a < y.a; });
    QuadResult result;
    for (const Panel& p : all) {
        result.value += p.value;
        result.error += p.error;
    }
    result.evaluations = 21 * (2 * panels - 1);
    return result;
}

QuadResult quad_improper(const ScalarFn& g, double a, double decay_hint,
                         const QuadOptions& opts) {
    if (!(decay_hint > 0.0)) throw DomainError("quad_improper: decay_hint must be positive");

    // Envelope amplitude at R, sampled at a few points so that an isolated
    // zero of an oscillating integrand does not fake a small tail.
    auto tail_bound = [&](double r) {
        const double step = 0.25 / decay_hint;
        double amp = 0.0;
        for (int j = 0; j < 4; ++j) {
            const double x = r + j * step;
            amp = std::max(amp, std::abs(g(x)) * std::exp(decay_hint * j * step));
        }
        return amp / decay_hint;
    };

    QuadOptions inner = opts;
    inner.abs_tol = 0.5 * opts.abs_tol;
    double span = std::max(1.0, 4.0 / decay_hint);
    double lo = a;
    double hi = a + span;
    QuadResult total;
    double previous_tail = std::numeric_limits<double>::infinity();
    for (int doubling = 0; doubling < 48; ++doubling) {
        const QuadResult piece = quad(g, lo, hi, inner);
        total.value += piece.value;
        total.error += piece.error;
        total.evaluations += piece.evaluations;
        const double tail = tail_bound(hi);
        if (!std::isfinite(tail)) break;
        const double target = 0.5 * std::max(opts.abs_tol, opts.rel_tol * std::abs(total.value));
        // A tail bound that is not shrinking is no evidence of decay.
        if (tail < target && (tail == 0.0 || tail < previous_tail)) {
            total.error += tail;
            return total;
        }
        previous_tail = tail;
        lo = hi;
        span *= 2.0;
        hi = a + span;
    }
    std::ostringstream msg;
    msg << "quad_improper from " << a << ": exponential tail bound not met (decay hint "
        << decay_hint << ")";
    throw ConvergenceError(msg.str());
}

}  // namespace hypermass
