#include "betapoly/mc.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <stdexcept>
#include <vector>

#include "betapoly/hull.hpp"
#include "betapoly/specfun.hpp"

#if defined(BETAPOLY_HAVE_OPENMP)
#include <omp.h>
#endif

namespace betapoly::mc {

namespace {

using hull::HullMesh;
using hull::PointCloud;

PointCloud expand_cloud(const std::vector<double>& pts, int n, int d, PolytopeKind kind) {
    PointCloud cloud(d);
    cloud.coords = pts;
    switch (kind) {
        case PolytopeKind::Plain:
            break;
        case PolytopeKind::Symmetric:
            cloud.coords.reserve(2 * pts.size());
            for (double c : pts) cloud.coords.push_back(-c);
            break;
        case PolytopeKind::WithOrigin:
            cloud.coords.insert(cloud.coords.end(), d, 0.0);
            break;
    }
    (void)n;
    return cloud;
}

void random_unit_vector(RngStream& rng, std::span<double> out) {
    double norm2 = 0.0;
    do {
        norm2 = 0.0;
        for (double& c : out) {
            c = rng.normal();
            norm2 += c * c;
        }
    } while (norm2 == 0.0);
    const double inv = 1.0 / std::sqrt(norm2);
    for (double& c : out) c *= inv;
}

// Uniform random orthonormal k-frame in R^d: Gaussian columns orthonormalized
// by modified Gram-Schmidt with one re-orthogonalization pass.
std::vector<double> random_frame(RngStream& rng, int d, int k) {
    std::vector<double> frame(static_cast<size_t>(d) * k);
    for (int c = 0; c < k; ++c) {
        double* col = frame.data() + static_cast<size_t>(c) * d;
        for (;;) {
            for (int r = 0; r < d; ++r) col[r] = rng.normal();
            for (int pass = 0; pass < 2; ++pass) {
                for (int p = 0; p < c; ++p) {
                    const double* prev = frame.data() + static_cast<size_t>(p) * d;
                    double dot = 0.0;
                    for (int r = 0; r < d; ++r) dot += col[r] * prev[r];
                    for (int r = 0; r < d; ++r) col[r] -= dot * prev[r];
                }
            }
            double norm2 = 0.0;
            for (int r = 0; r < d; ++r) norm2 += col[r] * col[r];
            if (norm2 > 1e-12) {
                const double inv = 1.0 / std::sqrt(norm2);
                for (int r = 0; r < d; ++r) col[r] *= inv;
                break;
            }
        }
    }
    return frame;
}

struct SampleContext {
    FunctionalSpec functional;
    Model model;
    PolytopeKind kind;
    int n;
    McOptions opts;
    double kubota_prefactor = 1.0;  // precomputed for intrinsic volumes
};

double evaluate_sample(const SampleContext& ctx, const PointCloud& cloud, const HullMesh& mesh,
                       RngStream& rng, bool& degenerate) {
    const int d = ctx.model.dim;
    switch (ctx.functional.kind) {
        case FunctionalSpec::Kind::Volume:
            return hull::volume(mesh);
        case FunctionalSpec::Kind::SurfaceArea:
            return hull::surface_area(mesh);
        case FunctionalSpec::Kind::FacetCount:
            return hull::facet_count(mesh);
        case FunctionalSpec::Kind::VertexCount:
            return hull::vertex_count(mesh);
        case FunctionalSpec::Kind::TFunctional:
            return hull::t_functional_of(mesh, ctx.functional.a, ctx.functional.b);
        case FunctionalSpec::Kind::MeanWidth: {
            std::vector<double> dir(d);
            double acc = 0.0;
            for (int j = 0; j < ctx.opts.directions; ++j) {
                random_unit_vector(rng, dir);
                acc += hull::width_along(cloud, dir);
            }
            return acc / ctx.opts.directions;
        }
        case FunctionalSpec::Kind::IntrinsicVolume: {
            const int k = ctx.functional.k;
            if (k == d) return hull::volume(mesh);
            double acc = 0.0;
            for (int j = 0; j < ctx.opts.directions; ++j) {
                const auto frame = random_frame(rng, d, k);
                const PointCloud proj = hull::project_cloud(cloud, k, frame);
                const HullMesh pm = hull::convex_hull(proj);
                if (!pm.full_dimensional) {
                    degenerate = true;
                    return 0.0;
                }
                acc += hull::volume(pm);
            }
            return ctx.kubota_prefactor * acc / ctx.opts.directions;
        }
    }
    throw std::logic_error("evaluate_sample: unhandled functional");
}

double sample_value(const SampleContext& ctx, std::uint64_t seed, long index, long& retries) {
    RngStream rng(seed, static_cast<std::uint64_t>(index));
    for (int attempt = 0; attempt <= ctx.opts.max_retries; ++attempt) {
        const auto pts = sample_points(ctx.model, rng, ctx.n);
        const PointCloud cloud = expand_cloud(pts, ctx.n, ctx.model.dim, ctx.kind);
        bool degenerate = false;
        double value = 0.0;
        try {
            const HullMesh mesh = hull::convex_hull(cloud);
            if (!mesh.full_dimensional) {
                degenerate = true;
            } else {
                value = evaluate_sample(ctx, cloud, mesh, rng, degenerate);
            }
        } catch (const std::runtime_error&) {
            degenerate = true;  // near-ties the predicate ladder could not settle
        }
        if (!degenerate) return value;
        retries += 1;
    }
    throw std::runtime_error("mc::estimate: degenerate hulls exceeded the retry budget");
}

SampleContext make_context(const FunctionalSpec& functional, const Model& model,
                           PolytopeKind kind, int n, const McOptions& opts) {
    model.validate();
    if (model.dim > 6) throw std::domain_error("mc::estimate: supported for d <= 6");
    if (n < model.dim + 1) throw std::domain_error("mc::estimate: need n >= d+1");
    if (opts.directions < 1) throw std::invalid_argument("mc: directions must be >= 1");
    SampleContext ctx{functional, model, kind, n, opts, 1.0};
    if (functional.kind == FunctionalSpec::Kind::IntrinsicVolume) {
        const int k = functional.k;
        const int d = model.dim;
        if (k < 1 || k > d) throw std::domain_error("mc: intrinsic volume needs 1 <= k <= d");
        if (k < d) {
            ctx.kubota_prefactor =
                std::exp(specfun::log_binomial(d, k) + specfun::log_ball_volume(d) -
                         specfun::log_ball_volume(k) - specfun::log_ball_volume(d - k));
        }
    }
    return ctx;
}

Estimate reduce(const std::vector<double>& values, std::uint64_t seed, long retries) {
    // Welford over the sample buffer in index order, so the reduction is
    // independent of how the buffer was filled.
    double mean = 0.0, m2 = 0.0;
    long count = 0;
    for (double v : values) {
        count += 1;
        const double delta = v - mean;
        mean += delta / count;
        m2 += delta * (v - mean);
    }
    Estimate est;
    est.mean = mean;
    est.std_error = count > 1 ? std::sqrt(m2 / (count - 1) / count) : 0.0;
    est.samples = count;
    est.seed = seed;
    est.degenerate_resamples = retries;
    return est;
}

int resolve_threads(int requested) {
    int threads = requested;
#if defined(BETAPOLY_HAVE_OPENMP)
    if (threads <= 0) threads = omp_get_max_threads();
#else
    if (threads <= 0) threads = 1;
#endif
    if (const char* cap = std::getenv("BETAPOLY_THREADS")) {
        const int c = std::atoi(cap);
        if (c > 0) threads = std::min(threads, c);
    }
    return std::max(threads, 1);
}

}  // namespace

Estimate estimate_serial(const FunctionalSpec& functional, const Model& model, PolytopeKind kind,
                         int n, long samples, std::uint64_t seed, const McOptions& opts) {
    if (samples < 2) throw std::invalid_argument("mc::estimate: need at least 2 samples");
    const SampleContext ctx = make_context(functional, model, kind, n, opts);
    std::vector<double> values(static_cast<size_t>(samples));
    long retries = 0;
    for (long i = 0; i < samples; ++i) {
        values[static_cast<size_t>(i)] = sample_value(ctx, seed, i, retries);
    }
    return reduce(values, seed, retries);
}

Estimate estimate(const FunctionalSpec& functional, const Model& model, PolytopeKind kind, int n,
                  long samples, std::uint64_t seed, const McOptions& opts) {
    if (samples < 2) throw std::invalid_argument("mc::estimate: need at least 2 samples");
    const SampleContext ctx = make_context(functional, model, kind, n, opts);
    std::vector<double> values(static_cast<size_t>(samples));
    long retries = 0;

#if defined(BETAPOLY_HAVE_OPENMP)
    const int threads = resolve_threads(opts.threads);
    std::exception_ptr failure = nullptr;
#pragma omp parallel for schedule(dynamic, 256) num_threads(threads) reduction(+ : retries)
    for (long i = 0; i < samples; ++i) {
        try {
            long local_retries = 0;
            values[static_cast<size_t>(i)] = sample_value(ctx, seed, i, local_retries);
            retries += local_retries;
        } catch (...) {
#pragma omp critical
            {
                if (!failure) failure = std::current_exception();
            }
        }
    }
    if (failure) std::rethrow_exception(failure);
#else
    (void)resolve_threads(opts.threads);
    for (long i = 0; i < samples; ++i) {
        values[static_cast<size_t>(i)] = sample_value(ctx, seed, i, retries);
    }
#endif
    return reduce(values, seed, retries);
}

double zscore(double exact, const Estimate& est) {
    if (!(est.std_error > 0.0)) {
        throw std::domain_error(
            "zscore: estimate has zero standard error (deterministic functional; compare "
            "exactly instead)");
    }
    return (est.mean - exact) / est.std_error;
}

}  // namespace betapoly::mc
