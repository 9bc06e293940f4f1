#pragma once

#include "betapoly/betadist.hpp"

// Closed-form moments of random simplex and parallelotope volumes for points
// drawn from the beta and beta' families.  These feed the constants of every
// T-functional formula.  The moment order is a real parameter kappa >= 0; the
// formulas extend by analytic continuation to kappa > -1, but only
// non-negative orders are exposed here.

namespace betapoly::moments {

struct MomentQuery {
    Family family = Family::Beta;   // Beta or BetaPrime
    int dim = 1;                    // d
    double beta = 0.0;
    double order = 0.0;             // kappa
};

/// E[ Delta_d^kappa ]: moment of the volume of the simplex on d+1 i.i.d.
/// points in R^d.  Beta family: valid for beta > -1, kappa >= 0.  BetaPrime:
/// beta > d/2 and kappa < 2 beta - d; the first Gamma factor carries
/// -(d/2) kappa (the sign misprinted in the original source and corrected
/// in later literature).
double simplex_moment(const MomentQuery& q);

/// E[ Nabla_d^kappa ]: moment of the volume of the parallelotope spanned by
/// d i.i.d. points in R^d.  Same validity ranges as simplex_moment.
double parallelotope_moment(const MomentQuery& q);

// Log-space kernels.  These admit the boundary value beta = -1 for the Beta
// family whenever every Gamma argument stays positive, which is how the
// sphere-limit T-functional constants are assembled; the public operations
// above enforce the strict open ranges.
double log_simplex_moment(Family family, int dim, double beta, double order);
double log_parallelotope_moment(Family family, int dim, double beta, double order);

}  // namespace betapoly::moments
