#include "betapoly/expectations.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "betapoly/moments.hpp"
#include "betapoly/specfun.hpp"

namespace betapoly {

using quad::QuadOptions;
using quad::QuadResult;
using specfun::log_ball_volume;
using specfun::log_binomial;
using specfun::log_factorial;
using specfun::log_gamma;
using specfun::pi;

namespace {

constexpr double ln2 = 0.693147180559945309417232121458176568;
const double ln_pi = std::log(pi);

struct ValErr {
    double v = 0.0;
    double e = 0.0;
};

int ladder_levels(int power) {
    if (power <= 1) return 6;
    const int lv = 12 + static_cast<int>(std::ceil(2.2 * std::log2(power + 1.0)));
    return std::min(lv, 52);
}

QuadOptions quad_options(const ExactOptions& opts, int power) {
    QuadOptions q;
    q.abs_tol = opts.abs_tol;
    q.rel_tol = opts.rel_tol;
    q.max_panels = opts.max_panels;
    q.endpoint_ladder = ladder_levels(power);
    return q;
}

double one_minus_h2(double h) { return (1.0 - h) * (1.0 + h); }

void require_points(int n, int d) {
    if (n < d + 1) {
        throw std::domain_error("need n >= d+1 points (got n=" + std::to_string(n) +
                                ", d=" + std::to_string(d) + ")");
    }
}

// ---------------------------------------------------------------------------
// T-functional (Theorem-1 style integrals)
// ---------------------------------------------------------------------------

// log C_{n,d}^{beta,b}; `beta_limit` admits beta = -1 for the sphere limit.
double log_C(Family family, int n, int d, double beta, double b) {
    return log_binomial(n, d) + log_factorial(d) + log_ball_volume(d) +
           moments::log_simplex_moment(family, d - 1, beta, b + 1.0) +
           d * log_norm_const_ratio(family, d, beta);
}

// log D_{n,d}^{beta,a,b} for a = 0 (the only case it is nonzero).
double log_D_T(Family family, int n, int d, double beta, double b) {
    return log_binomial(n, d - 1) + std::log(static_cast<double>(d)) + log_ball_volume(d) +
           moments::log_parallelotope_moment(family, d - 1, beta, b + 1.0) -
           (n - d + 1) * ln2 - b * log_factorial(d - 1) +
           (d - 1) * log_norm_const_ratio(family, d, beta);
}

// Generic Theorem-1/2 integral for the Beta family (also used at beta1 built
// from beta = -1 for the sphere limit):
//   P: int_{-1}^{1} |h|^a (1-h^2)^p F(h)^m dh
//   S: int_0^1      h^a  (1-h^2)^p slab(h)^m dh
//   Q: int_0^1      h^a  (1-h^2)^p F(h)^m dh
QuadResult beta_integral(PolytopeKind kind, double a, double p, double beta1, int m,
                         const ExactOptions& opts) {
    QuadOptions q = quad_options(opts, m);
    auto base = [p, beta1, m](double h, double radial) {
        return radial * std::pow(one_minus_h2(h), p) *
               std::pow(cdf1(Family::Beta, beta1, h), static_cast<double>(m));
    };
    switch (kind) {
        case PolytopeKind::Plain: {
            if (a > 0.0) q.breakpoints.push_back(0.0);
            auto f = [a, &base](double h) {
                const double w = (a == 0.0) ? 1.0 : std::pow(std::fabs(h), a);
                return base(h, w);
            };
            return quad::integrate_finite(f, -1.0, 1.0, q);
        }
        case PolytopeKind::Symmetric: {
            auto f = [a, p, beta1, m](double h) {
                const double w = (a == 0.0) ? 1.0 : std::pow(h, a);
                return w * std::pow(one_minus_h2(h), p) *
                       std::pow(slab1(Family::Beta, beta1, h), static_cast<double>(m));
            };
            return quad::integrate_finite(f, 0.0, 1.0, q);
        }
        default: {
            auto f = [a, &base](double h) {
                const double w = (a == 0.0) ? 1.0 : std::pow(h, a);
                return base(h, w);
            };
            return quad::integrate_finite(f, 0.0, 1.0, q);
        }
    }
}

// BetaPrime analogue over the real / half line; the integrand carries
// (1+h^2)^{-p} instead of (1-h^2)^{p}.
QuadResult beta_prime_integral(PolytopeKind kind, double a, double p, double beta1, int m,
                               const ExactOptions& opts) {
    QuadOptions q = quad_options(opts, m);
    switch (kind) {
        case PolytopeKind::Plain: {
            if (a > 0.0) q.breakpoints.push_back(0.0);
            auto f = [a, p, beta1, m](double h) {
                const double w = (a == 0.0) ? 1.0 : std::pow(std::fabs(h), a);
                return w * std::pow(1.0 + h * h, -p) *
                       std::pow(cdf1(Family::BetaPrime, beta1, h), static_cast<double>(m));
            };
            return quad::integrate_real_line(f, q);
        }
        case PolytopeKind::Symmetric: {
            auto f = [a, p, beta1, m](double h) {
                const double w = (a == 0.0) ? 1.0 : std::pow(h, a);
                return w * std::pow(1.0 + h * h, -p) *
                       std::pow(slab1(Family::BetaPrime, beta1, h), static_cast<double>(m));
            };
            return quad::integrate_half_line(f, q);
        }
        default: {
            auto f = [a, p, beta1, m](double h) {
                const double w = (a == 0.0) ? 1.0 : std::pow(h, a);
                return w * std::pow(1.0 + h * h, -p) *
                       std::pow(cdf1(Family::BetaPrime, beta1, h), static_cast<double>(m));
            };
            return quad::integrate_half_line(f, q);
        }
    }
}

ValErr t_functional_impl(const Model& model, PolytopeKind kind, int n, double a, double b,
                         const ExactOptions& opts) {
    model.validate();
    const int d = model.dim;
    if (d < 2) throw std::domain_error("t_functional: requires d >= 2");
    require_points(n, d);
    if (!(a >= 0.0) || !(b >= 0.0)) throw std::domain_error("t_functional: need a, b >= 0");
    const int m = n - d;

    switch (model.family) {
        case Family::Beta: {
            const double beta = model.beta;
            const double C = std::exp(log_C(Family::Beta, n, d, beta, b));
            const double p = d * beta + 0.5 * (d - 1) * (d + b + 1.0);
            const double beta1 = beta + 0.5 * (d - 1);
            QuadResult I = beta_integral(kind, a, p, beta1, m, opts);
            switch (kind) {
                case PolytopeKind::Plain:
                    return {C * I.value, C * I.abs_error_estimate};
                case PolytopeKind::Symmetric: {
                    const double s = std::ldexp(C, d);  // 2^d C
                    return {s * I.value, s * I.abs_error_estimate};
                }
                default: {
                    const double D = (a == 0.0) ? std::exp(log_D_T(Family::Beta, n, d, beta, b)) : 0.0;
                    return {D + C * I.value, C * I.abs_error_estimate};
                }
            }
        }
        case Family::BetaPrime: {
            const double beta = model.beta;
            if (!(2.0 * d * beta > (d - 1) * (d + b + 1.0) + a + 1.0)) {
                throw std::domain_error(
                    "t_functional: beta' parameter too small (needs 2 d beta > "
                    "(d-1)(d+b+1) + a + 1)");
            }
            const double C = std::exp(log_C(Family::BetaPrime, n, d, beta, b));
            const double p = d * beta - 0.5 * (d - 1) * (d + b + 1.0);
            const double beta1 = beta - 0.5 * (d - 1);
            QuadResult I = beta_prime_integral(kind, a, p, beta1, m, opts);
            switch (kind) {
                case PolytopeKind::Plain:
                    return {C * I.value, C * I.abs_error_estimate};
                case PolytopeKind::Symmetric: {
                    const double s = std::ldexp(C, d);
                    return {s * I.value, s * I.abs_error_estimate};
                }
                default: {
                    const double D =
                        (a == 0.0) ? std::exp(log_D_T(Family::BetaPrime, n, d, beta, b)) : 0.0;
                    return {D + C * I.value, C * I.abs_error_estimate};
                }
            }
        }
        default: {
            // Continuous beta -> -1 extension; only the facet-count case is
            // backed by independent formulas, so only a = b = 0 is exposed.
            if (a != 0.0 || b != 0.0) {
                throw std::domain_error(
                    "t_functional: SphereLimit supports a = b = 0 (facet counts) only");
            }
            if (kind == PolytopeKind::WithOrigin) {
                throw std::domain_error("t_functional: SphereLimit supports kinds P and S only");
            }
            const double C = std::exp(log_C(Family::Beta, n, d, -1.0, 0.0));
            const double p = -d + 0.5 * (d - 1) * (d + 1.0);
            const double beta1 = 0.5 * (d - 3);
            QuadResult I = beta_integral(kind, 0.0, p, beta1, m, opts);
            const double s = kind == PolytopeKind::Symmetric ? std::ldexp(C, d) : C;
            return {s * I.value, s * I.abs_error_estimate};
        }
    }
}

// ---------------------------------------------------------------------------
// Expected volume (Theorem-2 style integrals)
// ---------------------------------------------------------------------------

double log_A_beta(int n, int d, double beta) {
    return std::log(d + 1.0) + log_ball_volume(d) - d * ln2 - 0.5 * (d + 1) * ln_pi +
           log_binomial(n, d + 1) + std::log(beta + 0.5 * (d + 1)) +
           (d + 1) * (log_gamma(0.5 * (d + 2) + beta) - log_gamma(0.5 * (d + 3) + beta));
}

double log_D_beta(int n, int d, double beta) {
    return log_ball_volume(d) - n * ln2 - 0.5 * d * ln_pi + log_binomial(n, d) +
           d * (log_gamma(0.5 * (d + 2) + beta) - log_gamma(0.5 * (d + 3) + beta));
}

double log_A_beta_prime(int n, int d, double beta) {
    return std::log(d + 1.0) + log_ball_volume(d) - d * ln2 - 0.5 * (d + 1) * ln_pi +
           log_binomial(n, d + 1) + std::log(beta - 0.5 * (d + 1)) +
           (d + 1) * (log_gamma(beta - 0.5 * (d + 1)) - log_gamma(beta - 0.5 * d));
}

// Offset constant of the Q formula in the beta' model.  The source prints the
// Gamma-ratio power as d+1, inconsistently with the beta case; re-deriving
// the constant through the T_{0,1} reduction in dimension d+1 gives power d,
// and the Monte Carlo cross-validation in the acceptance suite confirms the
// power-d version, so that is what ships.  gamma_ratio_power selects the
// variant so the adjudicating test can evaluate both.
double log_D_beta_prime(int n, int d, double beta, int gamma_ratio_power) {
    return log_ball_volume(d) - n * ln2 - 0.5 * d * ln_pi + log_binomial(n, d) +
           gamma_ratio_power * (log_gamma(beta - 0.5 * (d + 1)) - log_gamma(beta - 0.5 * d));
}

double log_A_sphere(int n, int d) {
    return std::log(static_cast<double>(d) * d - 1.0) + log_ball_volume(d) - (d + 1) * ln2 -
           0.5 * (d + 1) * ln_pi + log_binomial(n, d + 1) +
           (d + 1) * (log_gamma(0.5 * d) - log_gamma(0.5 * (d + 1)));
}

ValErr expected_volume_impl(const Model& model, PolytopeKind kind, int n,
                            const ExactOptions& opts, int q_offset_power) {
    model.validate();
    const int d = model.dim;
    require_points(n, d);
    const int m = n - d - 1;

    switch (model.family) {
        case Family::Beta: {
            const double beta = model.beta;
            const double A = std::exp(log_A_beta(n, d, beta));
            const double p = (d + 1) * (beta - 0.5) + 0.5 * d * (d + 3);
            const double beta1 = beta + 0.5 * (d - 1);
            QuadResult I = beta_integral(kind, 0.0, p, beta1, m, opts);
            switch (kind) {
                case PolytopeKind::Plain:
                    return {A * I.value, A * I.abs_error_estimate};
                case PolytopeKind::Symmetric: {
                    const double s = std::ldexp(A, d + 1);
                    return {s * I.value, s * I.abs_error_estimate};
                }
                default: {
                    const double D = std::exp(log_D_beta(n, d, beta));
                    return {D + A * I.value, A * I.abs_error_estimate};
                }
            }
        }
        case Family::BetaPrime: {
            const double beta = model.beta;
            if (!(beta > 0.5 * (d + 1))) {
                throw std::domain_error("expected_volume: beta' model requires beta > (d+1)/2");
            }
            const double A = std::exp(log_A_beta_prime(n, d, beta));
            const double p = (d + 1) * (beta + 0.5) - 0.5 * d * (d + 3);
            const double beta1 = beta - 0.5 * (d - 1);
            QuadResult I = beta_prime_integral(kind, 0.0, p, beta1, m, opts);
            switch (kind) {
                case PolytopeKind::Plain:
                    return {A * I.value, A * I.abs_error_estimate};
                case PolytopeKind::Symmetric: {
                    const double s = std::ldexp(A, d + 1);
                    return {s * I.value, s * I.abs_error_estimate};
                }
                default: {
                    const double D = std::exp(log_D_beta_prime(n, d, beta, q_offset_power));
                    return {D + A * I.value, A * I.abs_error_estimate};
                }
            }
        }
        default: {
            if (d < 2) throw std::domain_error("expected_volume: SphereLimit requires d >= 2");
            if (kind == PolytopeKind::WithOrigin) {
                throw std::domain_error("expected_volume: SphereLimit supports kinds P and S only");
            }
            const double A = std::exp(log_A_sphere(n, d));
            const double p = 0.5 * (static_cast<double>(d) * d - 3.0);
            const double beta1 = 0.5 * (d - 3);
            QuadResult I = beta_integral(kind, 0.0, p, beta1, m, opts);
            const double s = kind == PolytopeKind::Symmetric ? std::ldexp(A, d + 1) : A;
            return {s * I.value, s * I.abs_error_estimate};
        }
    }
}

double kubota_prefactor(int d, int k) {
    return std::exp(log_binomial(d, k) + log_ball_volume(d) - log_ball_volume(k) -
                    log_ball_volume(d - k));
}

ValErr expected_intrinsic_impl(const Model& model, PolytopeKind kind, int n, int k,
                               const ExactOptions& opts) {
    model.validate();
    const int d = model.dim;
    if (k < 1 || k > d) throw std::domain_error("expected_intrinsic_volume: need 1 <= k <= d");
    if (k == d) return expected_volume_impl(model, kind, n, opts, /*q_offset_power=*/d);
    const Model proj = projected_model(model, k);
    const double pf = kubota_prefactor(d, k);
    ValErr inner = expected_volume_impl(proj, kind, n, opts, k);
    return {pf * inner.v, pf * inner.e};
}

ValErr expected_surface_impl(const Model& model, PolytopeKind kind, int n,
                             const ExactOptions& opts) {
    if (model.dim < 2) throw std::domain_error("expected_surface_area: requires d >= 2");
    ValErr v = expected_intrinsic_impl(model, kind, n, model.dim - 1, opts);
    return {2.0 * v.v, 2.0 * v.e};
}

ValErr expected_mean_width_impl(const Model& model, PolytopeKind kind, int n,
                                const ExactOptions& opts) {
    const int d = model.dim;
    const double c = 2.0 * specfun::ball_volume(d - 1) / (d * specfun::ball_volume(d));
    ValErr v = expected_intrinsic_impl(model, kind, n, 1, opts);
    return {c * v.v, c * v.e};
}

ValErr expected_facets_impl(const Model& model, PolytopeKind kind, int n,
                            const ExactOptions& opts) {
    model.validate();
    if (model.family == Family::SphereLimit) {
        if (kind == PolytopeKind::WithOrigin) {
            throw std::domain_error("expected_facet_count: SphereLimit supports kinds P and S only");
        }
        // Almost-sure counts in dimensions 2 and 3 (the hull is simplicial
        // with all points as vertices, so Euler's relation pins the counts).
        if (model.dim == 2) {
            return {kind == PolytopeKind::Plain ? static_cast<double>(n) : 2.0 * n, 0.0};
        }
        if (model.dim == 3) {
            require_points(n, 3);
            return {kind == PolytopeKind::Plain ? 2.0 * (n - 2) : 4.0 * (n - 1), 0.0};
        }
    }
    return t_functional_impl(model, kind, n, 0.0, 0.0, opts);
}

ValErr vertex_count_ball_impl(PolytopeKind kind, int n, int d, const ExactOptions& opts) {
    if (kind == PolytopeKind::WithOrigin) {
        throw std::domain_error("expected_vertex_count_ball: kinds P and S only");
    }
    if (n < d + 2) throw std::domain_error("expected_vertex_count_ball: requires n >= d+2");
    const Model ball = Model::beta_ball(d, 0.0);
    const double kd = specfun::ball_volume(d);
    ValErr inner = expected_volume_impl(ball, kind, n - 1, opts, d);
    const double factor = kind == PolytopeKind::Plain ? n : 2.0 * n;
    return {factor * (1.0 - inner.v / kd), factor * inner.e / kd};
}

ValErr vertex_count_impl(const Model& model, PolytopeKind kind, int n, const ExactOptions& opts) {
    model.validate();
    switch (model.family) {
        case Family::Beta:
            if (model.beta == 0.0) return vertex_count_ball_impl(kind, n, model.dim, opts);
            throw std::domain_error(
                "vertex count: exact formula available for beta = 0 (Efron) and SphereLimit only");
        case Family::SphereLimit:
            // Every sample point is almost surely a vertex.
            if (kind == PolytopeKind::Plain) return {static_cast<double>(n), 0.0};
            if (kind == PolytopeKind::Symmetric) return {2.0 * n, 0.0};
            throw std::domain_error("vertex count: SphereLimit supports kinds P and S only");
        default:
            throw std::domain_error(
                "vertex count: exact formula available for beta = 0 (Efron) and SphereLimit only");
    }
}

}  // namespace

double t_functional(const Model& model, PolytopeKind kind, int n, double a, double b,
                    const ExactOptions& opts) {
    return t_functional_impl(model, kind, n, a, b, opts).v;
}

double expected_volume(const Model& model, PolytopeKind kind, int n, const ExactOptions& opts) {
    return expected_volume_impl(model, kind, n, opts, model.dim).v;
}

double expected_intrinsic_volume(const Model& model, PolytopeKind kind, int n, int k,
                                 const ExactOptions& opts) {
    return expected_intrinsic_impl(model, kind, n, k, opts).v;
}

double expected_surface_area(const Model& model, PolytopeKind kind, int n,
                             const ExactOptions& opts) {
    return expected_surface_impl(model, kind, n, opts).v;
}

double expected_mean_width(const Model& model, PolytopeKind kind, int n,
                           const ExactOptions& opts) {
    return expected_mean_width_impl(model, kind, n, opts).v;
}

double expected_facet_count(const Model& model, PolytopeKind kind, int n,
                            const ExactOptions& opts) {
    return expected_facets_impl(model, kind, n, opts).v;
}

double expected_vertex_count_ball(PolytopeKind kind, int n, int d, const ExactOptions& opts) {
    return vertex_count_ball_impl(kind, n, d, opts).v;
}

double halfsphere_expected_facets(int n, int d, double alpha, const ExactOptions& opts) {
    if (!(alpha > -1.0)) throw std::domain_error("halfsphere_expected_facets: alpha > -1 required");
    const Model m = Model::beta_prime(d, 0.5 * (alpha + d + 1.0));
    return expected_facets_impl(m, PolytopeKind::Plain, n, opts).v;
}

double volume_via_T(const Model& model, PolytopeKind kind, int n, const ExactOptions& opts) {
    if (kind == PolytopeKind::Plain) {
        throw std::invalid_argument("volume_via_T: kinds S and Q only (P need not contain 0)");
    }
    return t_functional_impl(model, kind, n, 1.0, 1.0, opts).v / model.dim;
}

double gaussian_limit_volume(int n, int d, double beta, const ExactOptions& opts) {
    const Model m = Model::beta_ball(d, beta);
    return std::pow(2.0 * beta, 0.5 * d) *
           expected_volume_impl(m, PolytopeKind::Plain, n, opts, d).v;
}

FormulaConstants formula_constants(const Model& model, int n, double a, double b) {
    model.validate();
    const int d = model.dim;
    FormulaConstants fc;
    switch (model.family) {
        case Family::Beta:
            fc.A = std::exp(log_A_beta(n, d, model.beta));
            fc.D_vol = std::exp(log_D_beta(n, d, model.beta));
            fc.C = std::exp(log_C(Family::Beta, n, d, model.beta, b));
            fc.D_T = (a == 0.0) ? std::exp(log_D_T(Family::Beta, n, d, model.beta, b)) : 0.0;
            fc.q_exponent = (d + 1) * (model.beta - 0.5) + 0.5 * d * (d + 3);
            break;
        case Family::BetaPrime:
            fc.A = std::exp(log_A_beta_prime(n, d, model.beta));
            fc.D_vol = std::exp(log_D_beta_prime(n, d, model.beta, d));
            fc.C = std::exp(log_C(Family::BetaPrime, n, d, model.beta, b));
            fc.D_T = (a == 0.0) ? std::exp(log_D_T(Family::BetaPrime, n, d, model.beta, b)) : 0.0;
            fc.q_exponent = (d + 1) * (model.beta + 0.5) - 0.5 * d * (d + 3);
            break;
        default:
            fc.A = std::exp(log_A_sphere(n, d));
            fc.D_vol = 0.0;
            fc.C = std::exp(log_C(Family::Beta, n, d, -1.0, b));
            fc.D_T = (a == 0.0) ? std::exp(log_D_T(Family::Beta, n, d, -1.0, b)) : 0.0;
            fc.q_exponent = 0.5 * (static_cast<double>(d) * d - 3.0);
            break;
    }
    return fc;
}

ExactResult evaluate(const FunctionalSpec& functional, const Model& model, PolytopeKind kind,
                     int n, const ExactOptions& opts) {
    ValErr r;
    switch (functional.kind) {
        case FunctionalSpec::Kind::Volume:
            r = expected_volume_impl(model, kind, n, opts, model.dim);
            break;
        case FunctionalSpec::Kind::IntrinsicVolume:
            r = expected_intrinsic_impl(model, kind, n, functional.k, opts);
            break;
        case FunctionalSpec::Kind::SurfaceArea:
            r = expected_surface_impl(model, kind, n, opts);
            break;
        case FunctionalSpec::Kind::MeanWidth:
            r = expected_mean_width_impl(model, kind, n, opts);
            break;
        case FunctionalSpec::Kind::TFunctional:
            r = t_functional_impl(model, kind, n, functional.a, functional.b, opts);
            break;
        case FunctionalSpec::Kind::FacetCount:
            r = expected_facets_impl(model, kind, n, opts);
            break;
        case FunctionalSpec::Kind::VertexCount:
            r = vertex_count_impl(model, kind, n, opts);
            break;
    }
    return {r.v, r.e};
}

const char* kind_name(PolytopeKind kind) {
    switch (kind) {
        case PolytopeKind::Plain: return "P";
        case PolytopeKind::Symmetric: return "S";
        default: return "Q";
    }
}

namespace detail {

// Exposed for the acceptance suite: the Q-kind beta' volume with the offset
// constant exactly as printed in the source (Gamma-ratio power d+1) instead
// of the corrected power d.
double expected_volume_beta_prime_q_printed(const Model& model, int n, const ExactOptions& opts) {
    return expected_volume_impl(model, PolytopeKind::WithOrigin, n, opts, model.dim + 1).v;
}

}  // namespace detail

}  // namespace betapoly
