#pragma once

#include <string>
#include <vector>

#include "betapoly/expectations.hpp"

// The appendix tables of particular values (d = 2, 3 ball / sphere models and
// the half-sphere facet counts), stored symbolically as polynomials in 1/pi
// with rational coefficients so comparisons against the integral formulas run
// at full double precision.

namespace betapoly::tables {

struct PiTerm {
    long long num = 0;
    long long den = 1;
    int pi_pow = 0;  // term = (num/den) * pi^pi_pow
};

double pi_poly_value(const std::vector<PiTerm>& terms);
std::string pi_poly_text(const std::vector<PiTerm>& terms);

struct TableCell {
    std::string table;     // "table1" .. "table6"
    std::string quantity;  // e.g. "E Vol2(P)"
    int n = 0;
    Model model;
    PolytopeKind kind = PolytopeKind::Plain;
    FunctionalSpec functional;
    std::vector<PiTerm> expected;
};

/// Every cell of the six appendix tables.
std::vector<TableCell> appendix_cells();

struct CellCheck {
    TableCell cell;
    double expected = 0.0;
    double computed = 0.0;
    double rel_err = 0.0;
    bool pass = false;
};

/// Evaluates every appendix cell through the integral formulas and compares
/// with the symbolic value at the given relative tolerance.
std::vector<CellCheck> verify_cells(double rel_tol = 1e-9, const ExactOptions& opts = {});

/// The closed-form laws for the d = 3 sphere model
/// (E Vol3, E S2, E mw3 of P and S as rational functions of n),
/// checked for n = 4 .. n_max.
std::vector<CellCheck> verify_sphere3_laws(int n_max = 50, double rel_tol = 1e-9,
                                           const ExactOptions& opts = {});

}  // namespace betapoly::tables
