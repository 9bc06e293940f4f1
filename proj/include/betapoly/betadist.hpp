#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <vector>

// The two rotationally invariant point distributions the library is built
// around, plus the uniform distribution on the sphere as their boundary case:
//
//   Beta:        density c_{d,beta} (1 - |x|^2)^beta on the open unit ball,
//                beta > -1
//   BetaPrime:   density c~_{d,beta} (1 + |x|^2)^{-beta} on R^d, beta > d/2
//   SphereLimit: uniform on the unit sphere S^{d-1}, the weak limit of the
//                Beta family as beta -> -1.  Kept as a first-class family so
//                formula dispatch never has to evaluate constants at the
//                Gamma pole beta = -1.

namespace betapoly {

enum class Family { Beta, BetaPrime, SphereLimit };

struct Model {
    Family family = Family::Beta;
    int dim = 0;
    double beta = 0.0;  // unused for SphereLimit

    static Model beta_ball(int d, double beta);
    static Model beta_prime(int d, double beta);
    static Model sphere(int d);

    /// Throws std::domain_error if the parameters violate the family's
    /// validity range (Beta: beta > -1; BetaPrime: beta > d/2; dim >= 1).
    void validate() const;

    std::string describe() const;
};

/// Normalizing constant of the density (Beta and BetaPrime families).
double norm_const(const Model& model);
double log_norm_const(const Model& model);

/// log(c_{d,beta} / c_{d-1,beta}) for the model's family, needed by the
/// T-functional constants.  For the Beta family this ratio stays finite down
/// to beta = -1 (the Gamma(beta+1) factors cancel), which is what makes the
/// sphere-limit constants evaluable; dim >= 2 is required in that case.
double log_norm_const_ratio(Family family, int dim, double beta);

/// Density at a point (zero outside the support for the Beta family).
double density(const Model& model, std::span<const double> x);

enum class Side { Below, Above };

/// One-dimensional CDF F_{1,beta}(h) (Beta, valid for beta > -1) or
/// F~_{1,beta}(h) (BetaPrime, valid for beta > 1/2), in closed form through
/// the regularized incomplete beta function:
///   F_{1,beta}(h)  = I_{(1+h)/2}(beta+1, beta+1)
///   F~_{1,beta}(h) = 1/2 + sign(h)/2 * I_{h^2/(1+h^2)}(1/2, beta-1/2)
/// Both identities are validated against direct quadrature of the defining
/// integrals in the test suite.
double cdf1(Family family, double beta, double h);

/// F(h) - F(-h) for h >= 0, evaluated directly as a single incomplete beta
/// (the law of |X|) so no cancellation occurs near h = 0:
///   Beta:      I_{h^2}(1/2, beta+1)
///   BetaPrime: I_{h^2/(1+h^2)}(1/2, beta-1/2)
double slab1(Family family, double beta, double h);

/// Probability content of the half-space {x_d <= h} (Below) or {x_d >= h}
/// (Above): the projected one-dimensional CDF with the index shifted by
/// (d-1)/2 (Beta) or -(d-1)/2 (BetaPrime).
double halfspace_content(const Model& model, double h, Side side);

/// Probability content of the slab {-h <= x_d <= h}, h >= 0.
double slab_content(const Model& model, double h);

/// Law of the orthogonal projection onto a k-dimensional subspace, 1 <= k < d:
///   Beta(d, b)      -> Beta(k, b + (d-k)/2)
///   BetaPrime(d, b) -> BetaPrime(k, b - (d-k)/2)   (requires result > k/2)
///   SphereLimit(d)  -> Beta(k, (d-k)/2 - 1)        (limit of the Beta rule)
Model projected_model(const Model& model, int k);

/// One independent random stream out of a master seed.  Stream k is a
/// std::mt19937_64 seeded with splitmix64(master + (k+1) * 0x9E3779B97F4A7C15);
/// this is the splitting rule every Monte Carlo worker relies on, so two
/// streams with distinct indices never share state.
class RngStream {
public:
    RngStream(std::uint64_t master_seed, std::uint64_t stream_index);

    double uniform();               // U(0,1)
    double normal();                // N(0,1)
    double gamma(double shape);     // Gamma(shape, 1)
    double beta_variate(double a, double b);

    std::mt19937_64& engine() { return engine_; }

private:
    std::mt19937_64 engine_;
};

/// Draws one point from the model into `out` (size dim).  Radial laws:
///   Beta:      r^2 ~ BetaLaw(d/2, beta+1), direction uniform on S^{d-1}
///   BetaPrime: r^2/(1+r^2) ~ BetaLaw(d/2, beta-d/2)
///   SphereLimit: uniform direction, r = 1
void sample_point(const Model& model, RngStream& rng, std::span<double> out);

/// n points, flattened row-major (n * dim doubles).
std::vector<double> sample_points(const Model& model, RngStream& rng, int n);

}  // namespace betapoly
