#include "betapoly/moments.hpp"

#include <cmath>
#include <stdexcept>

#include "betapoly/specfun.hpp"

namespace betapoly::moments {

using specfun::log_factorial;
using specfun::log_gamma;

namespace {

double checked_log_gamma(double x, const char* what) {
    if (!(x > 0.0)) {
        throw std::domain_error(std::string(what) + ": Gamma argument " + std::to_string(x) +
                                " is not positive (parameters outside validity range)");
    }
    return log_gamma(x);
}

// Product over i = 1..d of Gamma((i+kappa)/2) / Gamma(i/2), in log space.
double log_half_integer_product(int d, double kappa) {
    double s = 0.0;
    for (int i = 1; i <= d; ++i) {
        s += log_gamma(0.5 * (i + kappa)) - log_gamma(0.5 * i);
    }
    return s;
}

void check_common(Family family, int dim, double order) {
    if (dim < 0) throw std::domain_error("moments: dimension must be >= 0");
    if (!(order >= 0.0)) throw std::domain_error("moments: order kappa must be >= 0");
    if (family == Family::SphereLimit) {
        throw std::domain_error("moments: family must be Beta or BetaPrime");
    }
}

}  // namespace

double log_simplex_moment(Family family, int d, double beta, double kappa) {
    check_common(family, d, kappa);
    const double lp = log_half_integer_product(d, kappa);
    if (family == Family::Beta) {
        if (!(beta >= -1.0)) throw std::domain_error("simplex_moment: Beta needs beta >= -1");
        const double a1 = 0.5 * (d + 1) * (2.0 * beta + d + kappa) + 1.0;
        const double a2 = 0.5 * (d + 1) * (2.0 * beta + d) + 0.5 * d * kappa + 1.0;
        const double a3 = 0.5 * d + beta + 1.0;
        const double a4 = 0.5 * (d + kappa) + beta + 1.0;
        return -kappa * log_factorial(d) + checked_log_gamma(a1, "simplex_moment") -
               checked_log_gamma(a2, "simplex_moment") +
               (d + 1) * (checked_log_gamma(a3, "simplex_moment") -
                          checked_log_gamma(a4, "simplex_moment")) +
               lp;
    }
    // BetaPrime, valid for kappa < 2 beta - d.
    if (!(kappa < 2.0 * beta - d)) {
        throw std::domain_error("simplex_moment: BetaPrime needs kappa < 2 beta - d");
    }
    const double b1 = (beta - 0.5 * d) * (d + 1) - 0.5 * d * kappa;
    const double b2 = (beta - 0.5 * (d + kappa)) * (d + 1);
    const double b3 = beta - 0.5 * (d + kappa);
    const double b4 = beta - 0.5 * d;
    return -kappa * log_factorial(d) + checked_log_gamma(b1, "simplex_moment") -
           checked_log_gamma(b2, "simplex_moment") +
           (d + 1) * (checked_log_gamma(b3, "simplex_moment") -
                      checked_log_gamma(b4, "simplex_moment")) +
           lp;
}

double log_parallelotope_moment(Family family, int d, double beta, double kappa) {
    check_common(family, d, kappa);
    // Product over i of Gamma((d+kappa-i+1)/2)/Gamma((d-i+1)/2); reindexing
    // j = d-i+1 shows it equals the simplex product.
    const double lp = log_half_integer_product(d, kappa);
    if (family == Family::Beta) {
        if (!(beta >= -1.0)) throw std::domain_error("parallelotope_moment: Beta needs beta >= -1");
        const double a3 = beta + 0.5 * d + 1.0;
        const double a4 = beta + 0.5 * (d + kappa) + 1.0;
        return d * (checked_log_gamma(a3, "parallelotope_moment") -
                    checked_log_gamma(a4, "parallelotope_moment")) +
               lp;
    }
    if (!(kappa < 2.0 * beta - d)) {
        throw std::domain_error("parallelotope_moment: BetaPrime needs kappa < 2 beta - d");
    }
    const double b3 = beta - 0.5 * (d + kappa);
    const double b4 = beta - 0.5 * d;
    return d * (checked_log_gamma(b3, "parallelotope_moment") -
                checked_log_gamma(b4, "parallelotope_moment")) +
           lp;
}

namespace {

void check_public(const MomentQuery& q) {
    if (q.dim < 1) throw std::domain_error("moments: dimension must be >= 1");
    if (q.family == Family::Beta && !(q.beta > -1.0)) {
        throw std::domain_error("moments: Beta family requires beta > -1");
    }
    if (q.family == Family::BetaPrime && !(q.beta > 0.5 * q.dim)) {
        throw std::domain_error("moments: BetaPrime family requires beta > d/2");
    }
}

}  // namespace

double simplex_moment(const MomentQuery& q) {
    check_public(q);
    return std::exp(log_simplex_moment(q.family, q.dim, q.beta, q.order));
}

double parallelotope_moment(const MomentQuery& q) {
    check_public(q);
    return std::exp(log_parallelotope_moment(q.family, q.dim, q.beta, q.order));
}

}  // namespace betapoly::moments
