#pragma once

#include <functional>
#include <stdexcept>
#include <vector>

// Adaptive one-dimensional quadrature on finite intervals, the half line and
// the real line.  Every integral in the library reduces to one of these.
//
// Scheme: global adaptive bisection with a Gauss-Kronrod 7-15 rule per panel.
// Infinite ranges are mapped to a finite interval by h = tan(theta).  The
// algorithm is deterministic: identical inputs produce identical results.

namespace betapoly::quad {

struct QuadResult {
    double value = 0.0;
    double abs_error_estimate = 0.0;
    long evaluations = 0;
};

struct QuadOptions {
    double abs_tol = 1e-12;
    double rel_tol = 1e-12;
    // The adaptive loop gives up once this many panels are in play.
    int max_panels = 10000;
    // Pre-split the interval geometrically towards both endpoints with this
    // many halving levels.  Integrands of the form F(h)^m with large m hide
    // all their mass within ~1/m of an endpoint, where a single coarse panel
    // would sample only zeros; the ladder guarantees the peak is seen.
    int endpoint_ladder = 0;
    // Additional interior split points (e.g. a kink at h = 0).
    std::vector<double> breakpoints;
};

class QuadratureError : public std::runtime_error {
public:
    explicit QuadratureError(const std::string& what) : std::runtime_error(what) {}
};

using Integrand = std::function<double(double)>;

/// Integral of f over [a, b], a < b.  Endpoint singularities must be at most
/// integrable power laws; the rule never evaluates f at a or b.
/// Throws QuadratureError if the error estimate stalls above tolerance.
QuadResult integrate_finite(const Integrand& f, double a, double b, const QuadOptions& opts = {});

/// Integral of f over (-inf, inf); f must be absolutely integrable with
/// polynomial (or faster) decay.
QuadResult integrate_real_line(const Integrand& f, const QuadOptions& opts = {});

/// Integral of f over [0, inf).
QuadResult integrate_half_line(const Integrand& f, const QuadOptions& opts = {});

}  // namespace betapoly::quad
