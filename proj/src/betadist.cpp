#include "betapoly/betadist.hpp"

#include <cmath>
#include <stdexcept>

#include "betapoly/specfun.hpp"

namespace betapoly {

using specfun::log_gamma;
using specfun::pi;
using specfun::reg_inc_beta;

Model Model::beta_ball(int d, double beta) {
    Model m{Family::Beta, d, beta};
    m.validate();
    return m;
}

Model Model::beta_prime(int d, double beta) {
    Model m{Family::BetaPrime, d, beta};
    m.validate();
    return m;
}

Model Model::sphere(int d) {
    Model m{Family::SphereLimit, d, 0.0};
    m.validate();
    return m;
}

void Model::validate() const {
    if (dim < 1) throw std::domain_error("Model: dimension must be >= 1");
    switch (family) {
        case Family::Beta:
            if (!(beta > -1.0)) {
                throw std::domain_error("Model: Beta family requires beta > -1");
            }
            break;
        case Family::BetaPrime:
            if (!(beta > 0.5 * dim)) {
                throw std::domain_error("Model: BetaPrime family requires beta > d/2");
            }
            break;
        case Family::SphereLimit:
            break;
    }
}

std::string Model::describe() const {
    switch (family) {
        case Family::Beta:
            return "beta(d=" + std::to_string(dim) + ", beta=" + std::to_string(beta) + ")";
        case Family::BetaPrime:
            return "betaprime(d=" + std::to_string(dim) + ", beta=" + std::to_string(beta) + ")";
        default:
            return "sphere(d=" + std::to_string(dim) + ")";
    }
}

double log_norm_const(const Model& model) {
    model.validate();
    const double d = model.dim;
    const double b = model.beta;
    switch (model.family) {
        case Family::Beta:
            return log_gamma(0.5 * d + b + 1.0) - 0.5 * d * std::log(pi) - log_gamma(b + 1.0);
        case Family::BetaPrime:
            return log_gamma(b) - 0.5 * d * std::log(pi) - log_gamma(b - 0.5 * d);
        default:
            throw std::domain_error("norm_const: SphereLimit has no density on R^d");
    }
}

double norm_const(const Model& model) { return std::exp(log_norm_const(model)); }

double log_norm_const_ratio(Family family, int dim, double beta) {
    switch (family) {
        case Family::Beta:
            if (!(beta >= -1.0)) throw std::domain_error("log_norm_const_ratio: beta >= -1 required");
            if (beta == -1.0 && dim < 2) {
                throw std::domain_error("log_norm_const_ratio: beta = -1 requires dim >= 2");
            }
            return log_gamma(0.5 * dim + beta + 1.0) - log_gamma(0.5 * (dim - 1) + beta + 1.0) -
                   0.5 * std::log(pi);
        case Family::BetaPrime:
            if (!(beta > 0.5 * dim)) throw std::domain_error("log_norm_const_ratio: beta > d/2 required");
            return log_gamma(beta - 0.5 * (dim - 1)) - log_gamma(beta - 0.5 * dim) -
                   0.5 * std::log(pi);
        default:
            throw std::domain_error("log_norm_const_ratio: not defined for SphereLimit");
    }
}

double density(const Model& model, std::span<const double> x) {
    model.validate();
    if (static_cast<int>(x.size()) != model.dim) {
        throw std::invalid_argument("density: point dimension mismatch");
    }
    double r2 = 0.0;
    for (double c : x) r2 += c * c;
    switch (model.family) {
        case Family::Beta:
            if (r2 >= 1.0) return 0.0;
            return norm_const(model) * std::pow(1.0 - r2, model.beta);
        case Family::BetaPrime:
            return norm_const(model) * std::pow(1.0 + r2, -model.beta);
        default:
            throw std::domain_error("density: SphereLimit has no density on R^d");
    }
}

double cdf1(Family family, double beta, double h) {
    switch (family) {
        case Family::Beta: {
            if (!(beta > -1.0)) throw std::domain_error("cdf1: Beta requires beta > -1");
            if (h <= -1.0) return 0.0;
            if (h >= 1.0) return 1.0;
            return reg_inc_beta(beta + 1.0, beta + 1.0, 0.5 * (1.0 + h));
        }
        case Family::BetaPrime: {
            if (!(beta > 0.5)) throw std::domain_error("cdf1: BetaPrime requires beta > 1/2");
            if (h == 0.0) return 0.5;
            const double u = h * h / (1.0 + h * h);
            const double tail = reg_inc_beta(0.5, beta - 0.5, u);
            return h > 0.0 ? 0.5 + 0.5 * tail : 0.5 - 0.5 * tail;
        }
        default:
            throw std::domain_error("cdf1: no one-dimensional CDF for SphereLimit");
    }
}

double slab1(Family family, double beta, double h) {
    if (!(h >= 0.0)) throw std::domain_error("slab1: h must be >= 0");
    switch (family) {
        case Family::Beta:
            if (!(beta > -1.0)) throw std::domain_error("slab1: Beta requires beta > -1");
            if (h >= 1.0) return 1.0;
            if (h == 0.0) return 0.0;
            return reg_inc_beta(0.5, beta + 1.0, h * h);
        case Family::BetaPrime:
            if (!(beta > 0.5)) throw std::domain_error("slab1: BetaPrime requires beta > 1/2");
            if (h == 0.0) return 0.0;
            return reg_inc_beta(0.5, beta - 0.5, h * h / (1.0 + h * h));
        default:
            throw std::domain_error("slab1: not defined for SphereLimit");
    }
}

namespace {

double projected_beta1(const Model& model) {
    switch (model.family) {
        case Family::Beta:
            return model.beta + 0.5 * (model.dim - 1);
        case Family::BetaPrime:
            return model.beta - 0.5 * (model.dim - 1);
        default:
            throw std::domain_error("halfspace/slab content: family must be Beta or BetaPrime");
    }
}

Family base_family(const Model& model) { return model.family; }

}  // namespace

double halfspace_content(const Model& model, double h, Side side) {
    model.validate();
    const double b1 = projected_beta1(model);
    // Above = Below evaluated at -h; exact by the density's symmetry.
    return cdf1(base_family(model), b1, side == Side::Below ? h : -h);
}

double slab_content(const Model& model, double h) {
    model.validate();
    return slab1(base_family(model), projected_beta1(model), h);
}

Model projected_model(const Model& model, int k) {
    model.validate();
    if (k < 1 || k >= model.dim) {
        throw std::domain_error("projected_model: need 1 <= k < d");
    }
    const double shift = 0.5 * (model.dim - k);
    switch (model.family) {
        case Family::Beta:
            return Model::beta_ball(k, model.beta + shift);
        case Family::BetaPrime: {
            const double nb = model.beta - shift;
            if (!(nb > 0.5 * k)) {
                throw std::domain_error(
                    "projected_model: projected beta' parameter <= k/2 (not a density)");
            }
            return Model::beta_prime(k, nb);
        }
        default:
            return Model::beta_ball(k, shift - 1.0);
    }
}

namespace {

std::uint64_t splitmix64(std::uint64_t z) {
    z += 0x9E3779B97F4A7C15ull;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

}  // namespace

RngStream::RngStream(std::uint64_t master_seed, std::uint64_t stream_index)
    : engine_(splitmix64(master_seed + (stream_index + 1) * 0x9E3779B97F4A7C15ull)) {}

double RngStream::uniform() {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    return u(engine_);
}

double RngStream::normal() {
    std::normal_distribution<double> n(0.0, 1.0);
    return n(engine_);
}

double RngStream::gamma(double shape) {
    std::gamma_distribution<double> g(shape, 1.0);
    return g(engine_);
}

double RngStream::beta_variate(double a, double b) {
    for (;;) {
        const double x = gamma(a);
        const double y = gamma(b);
        const double s = x + y;
        if (s > 0.0) return x / s;
    }
}

void sample_point(const Model& model, RngStream& rng, std::span<double> out) {
    model.validate();
    const int d = model.dim;
    if (static_cast<int>(out.size()) != d) {
        throw std::invalid_argument("sample_point: output span has wrong dimension");
    }
    double norm2 = 0.0;
    do {
        norm2 = 0.0;
        for (int i = 0; i < d; ++i) {
            out[i] = rng.normal();
            norm2 += out[i] * out[i];
        }
    } while (norm2 == 0.0);
    const double inv = 1.0 / std::sqrt(norm2);

    double r = 1.0;
    switch (model.family) {
        case Family::Beta:
            r = std::sqrt(rng.beta_variate(0.5 * d, model.beta + 1.0));
            break;
        case Family::BetaPrime: {
            double v;
            do {
                v = rng.beta_variate(0.5 * d, model.beta - 0.5 * d);
            } while (v >= 1.0);
            r = std::sqrt(v / (1.0 - v));
            break;
        }
        case Family::SphereLimit:
            r = 1.0;
            break;
    }
    for (int i = 0; i < d; ++i) out[i] *= inv * r;
}

std::vector<double> sample_points(const Model& model, RngStream& rng, int n) {
    std::vector<double> pts(static_cast<size_t>(n) * model.dim);
    for (int i = 0; i < n; ++i) {
        sample_point(model, rng, std::span<double>(pts.data() + static_cast<size_t>(i) * model.dim,
                                                   model.dim));
    }
    return pts;
}

}  // namespace betapoly
