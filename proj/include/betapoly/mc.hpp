#pragma once

#include <cstdint>

#include "betapoly/betadist.hpp"
#include "betapoly/expectations.hpp"

// Monte Carlo estimation of every expected functional: the independent
// oracle against which the closed formulas are cross-validated.
//
// Sample i always consumes RngStream(seed, i), so the result is bitwise
// identical no matter how many OpenMP workers fill the sample buffer;
// estimate_serial is the plain-loop reference implementation kept for
// testing and benchmarking against the parallel kernel.

namespace betapoly::mc {

struct Estimate {
    double mean = 0.0;
    double std_error = 0.0;  // sample standard deviation / sqrt(samples)
    long samples = 0;
    std::uint64_t seed = 0;
    long degenerate_resamples = 0;
};

struct McOptions {
    // Fresh random directions (mean width) or orthonormal k-frames
    // (intrinsic volumes) averaged per sample.
    int directions = 8;
    // Degenerate hulls (a probability-zero event for continuous models) are
    // redrawn from the same stream at most this many times.
    int max_retries = 64;
    // 0 = all available threads; the BETAPOLY_THREADS environment variable
    // caps the count either way.
    int threads = 0;
};

/// OpenMP-parallel estimator.
Estimate estimate(const FunctionalSpec& functional, const Model& model, PolytopeKind kind, int n,
                  long samples, std::uint64_t seed, const McOptions& opts = {});

/// Serial reference implementation; produces bitwise-identical Estimates.
Estimate estimate_serial(const FunctionalSpec& functional, const Model& model, PolytopeKind kind,
                         int n, long samples, std::uint64_t seed, const McOptions& opts = {});

/// (est.mean - exact) / est.std_error.  Throws std::domain_error when the
/// standard error is zero (a deterministic functional: compare exactly).
double zscore(double exact, const Estimate& est);

}  // namespace betapoly::mc
