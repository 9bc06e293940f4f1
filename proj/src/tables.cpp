#include "betapoly/tables.hpp"

#include <cmath>

#include "betapoly/specfun.hpp"

namespace betapoly::tables {

using specfun::pi;

double pi_poly_value(const std::vector<PiTerm>& terms) {
    double v = 0.0;
    for (const auto& t : terms) {
        v += static_cast<double>(t.num) / static_cast<double>(t.den) * std::pow(pi, t.pi_pow);
    }
    return v;
}

std::string pi_poly_text(const std::vector<PiTerm>& terms) {
    std::string s;
    for (size_t i = 0; i < terms.size(); ++i) {
        const auto& t = terms[i];
        if (i > 0) s += t.num < 0 ? " - " : " + ";
        const long long a = i > 0 ? std::llabs(t.num) : t.num;
        s += std::to_string(a);
        if (t.den != 1) s += "/" + std::to_string(t.den);
        if (t.pi_pow != 0) {
            s += t.pi_pow > 0 ? " * pi" : " / pi";
            const int p = std::abs(t.pi_pow);
            if (p != 1) s += "^" + std::to_string(p);
        }
    }
    return s;
}

namespace {

using Terms = std::vector<PiTerm>;

void add_cell(std::vector<TableCell>& out, const std::string& table, const std::string& quantity,
              int n, const Model& model, PolytopeKind kind, const FunctionalSpec& f,
              Terms expected) {
    out.push_back(TableCell{table, quantity, n, model, kind, f, std::move(expected)});
}

}  // namespace

std::vector<TableCell> appendix_cells() {
    std::vector<TableCell> cells;
    const Model ball2 = Model::beta_ball(2, 0.0);
    const Model ball3 = Model::beta_ball(3, 0.0);
    const Model circle = Model::sphere(2);
    const Model sphere3 = Model::sphere(3);
    const auto P = PolytopeKind::Plain;
    const auto S = PolytopeKind::Symmetric;
    const auto vol = FunctionalSpec::volume();
    const auto surf = FunctionalSpec::surface();
    const auto mw = FunctionalSpec::mean_width();
    const auto fct = FunctionalSpec::facets();

    // Table 1: mean area and perimeter, uniform points in the unit disc.
    add_cell(cells, "table1", "E Vol2(P)", 3, ball2, P, vol, {{35, 48, -1}});
    add_cell(cells, "table1", "E Vol2(P)", 4, ball2, P, vol, {{35, 24, -1}});
    add_cell(cells, "table1", "E Vol2(P)", 5, ball2, P, vol, {{175, 72, -1}, {-23023, 6912, -3}});
    add_cell(cells, "table1", "E Vol2(S)", 3, ball2, S, vol, {{35, 12, -1}});
    add_cell(cells, "table1", "E Vol2(S)", 4, ball2, S, vol, {{35, 6, -1}, {-2816, 135, -3}});
    add_cell(cells, "table1", "E Vol2(S)", 5, ball2, S, vol, {{175, 18, -1}, {-23023, 432, -3}});
    add_cell(cells, "table1", "E S1(P)", 3, ball2, P, surf, {{128, 15, -1}});
    add_cell(cells, "table1", "E S1(P)", 4, ball2, P, surf,
             {{256, 15, -1}, {-11075584, 165375, -3}});
    add_cell(cells, "table1", "E S1(P)", 5, ball2, P, surf,
             {{256, 9, -1}, {-5537792, 33075, -3}});
    add_cell(cells, "table1", "E S1(S)", 3, ball2, S, surf,
             {{512, 15, -1}, {-104704, 1575, -2}});
    add_cell(cells, "table1", "E S1(S)", 4, ball2, S, surf,
             {{1024, 15, -1}, {-88604672, 165375, -3}});
    add_cell(cells, "table1", "E S1(S)", 5, ball2, S, surf,
             {{1024, 9, -1}, {-88604672, 33075, -3}, {204130238464, 38201625, -4}});

    // Table 2: same quantities for uniform points on the unit circle.
    add_cell(cells, "table2", "E Vol2(P)", 3, circle, P, vol, {{3, 2, -1}});
    add_cell(cells, "table2", "E Vol2(P)", 4, circle, P, vol, {{3, 1, -1}});
    add_cell(cells, "table2", "E Vol2(P)", 5, circle, P, vol, {{5, 1, -1}, {-15, 2, -3}});
    add_cell(cells, "table2", "E Vol2(S)", 3, circle, S, vol, {{6, 1, -1}});
    add_cell(cells, "table2", "E Vol2(S)", 4, circle, S, vol, {{12, 1, -1}, {-48, 1, -3}});
    add_cell(cells, "table2", "E Vol2(S)", 5, circle, S, vol, {{20, 1, -1}, {-120, 1, -3}});
    add_cell(cells, "table2", "E S1(P)", 3, circle, P, surf, {{12, 1, -1}});
    add_cell(cells, "table2", "E S1(P)", 4, circle, P, surf, {{24, 1, -1}, {-96, 1, -3}});
    add_cell(cells, "table2", "E S1(P)", 5, circle, P, surf, {{40, 1, -1}, {-240, 1, -3}});
    add_cell(cells, "table2", "E S1(S)", 3, circle, S, surf, {{48, 1, -1}, {-96, 1, -2}});
    add_cell(cells, "table2", "E S1(S)", 4, circle, S, surf, {{96, 1, -1}, {-768, 1, -3}});
    add_cell(cells, "table2", "E S1(S)", 5, circle, S, surf,
             {{160, 1, -1}, {-3840, 1, -3}, {7680, 1, -4}});

    // Table 3: volume, surface area and mean width, uniform points in the
    // 3-dimensional unit ball.
    add_cell(cells, "table3", "E V3(P)", 4, ball3, P, vol, {{12, 715, 1}});
    add_cell(cells, "table3", "E V3(P)", 5, ball3, P, vol, {{6, 143, 1}});
    add_cell(cells, "table3", "E V3(P)", 6, ball3, P, vol, {{2070, 29393, 1}});
    add_cell(cells, "table3", "E V3(S)", 4, ball3, S, vol, {{96, 715, 1}});
    add_cell(cells, "table3", "E V3(S)", 5, ball3, S, vol, {{195, 1024, 1}});
    add_cell(cells, "table3", "E V3(S)", 6, ball3, S, vol, {{77472, 323323, 1}});
    add_cell(cells, "table3", "E S2(P)", 4, ball3, P, surf, {{36, 77, 1}});
    add_cell(cells, "table3", "E S2(P)", 5, ball3, P, surf, {{11448, 17017, 1}});
    add_cell(cells, "table3", "E S2(P)", 6, ball3, P, surf, {{1314, 1547, 1}});
    add_cell(cells, "table3", "E S2(S)", 4, ball3, S, surf, {{135, 112, 1}});
    add_cell(cells, "table3", "E S2(S)", 5, ball3, S, surf, {{24048, 17017, 1}});
    add_cell(cells, "table3", "E S2(S)", 6, ball3, S, surf, {{5661, 3584, 1}});
    add_cell(cells, "table3", "E mw3(P)", 4, ball3, P, mw, {{666, 715, 0}});
    add_cell(cells, "table3", "E mw3(P)", 5, ball3, P, mw, {{1044, 1001, 0}});
    add_cell(cells, "table3", "E mw3(P)", 6, ball3, P, mw, {{33102, 29393, 0}});
    add_cell(cells, "table3", "E mw3(S)", 4, ball3, S, mw, {{6408, 5005, 0}});
    add_cell(cells, "table3", "E mw3(S)", 5, ball3, S, mw, {{2421, 1792, 0}});
    add_cell(cells, "table3", "E mw3(S)", 6, ball3, S, mw, {{454140, 323323, 0}});

    // Table 4: same quantities for uniform points on the unit sphere in R^3.
    add_cell(cells, "table4", "E V3(P)", 4, sphere3, P, vol, {{4, 105, 1}});
    add_cell(cells, "table4", "E V3(P)", 5, sphere3, P, vol, {{2, 21, 1}});
    add_cell(cells, "table4", "E V3(P)", 6, sphere3, P, vol, {{10, 63, 1}});
    add_cell(cells, "table4", "E V3(S)", 4, sphere3, S, vol, {{32, 105, 1}});
    add_cell(cells, "table4", "E V3(S)", 5, sphere3, S, vol, {{5, 12, 1}});
    add_cell(cells, "table4", "E V3(S)", 6, sphere3, S, vol, {{32, 63, 1}});
    add_cell(cells, "table4", "E S2(P)", 4, sphere3, P, surf, {{4, 5, 1}});
    add_cell(cells, "table4", "E S2(P)", 5, sphere3, P, surf, {{8, 7, 1}});
    add_cell(cells, "table4", "E S2(P)", 6, sphere3, P, surf, {{10, 7, 1}});
    add_cell(cells, "table4", "E S2(S)", 4, sphere3, S, surf, {{2, 1, 1}});
    add_cell(cells, "table4", "E S2(S)", 5, sphere3, S, surf, {{16, 7, 1}});
    add_cell(cells, "table4", "E S2(S)", 6, sphere3, S, surf, {{5, 2, 1}});
    add_cell(cells, "table4", "E mw3(P)", 4, sphere3, P, mw, {{6, 5, 0}});
    add_cell(cells, "table4", "E mw3(P)", 5, sphere3, P, mw, {{4, 3, 0}});
    add_cell(cells, "table4", "E mw3(P)", 6, sphere3, P, mw, {{10, 7, 0}});
    add_cell(cells, "table4", "E mw3(S)", 4, sphere3, S, mw, {{8, 5, 0}});
    add_cell(cells, "table4", "E mw3(S)", 5, sphere3, S, mw, {{5, 3, 0}});
    add_cell(cells, "table4", "E mw3(S)", 6, sphere3, S, mw, {{12, 7, 0}});

    // Table 5: mean number of edges (d = 2) and facets (d = 3), plus the
    // almost-sure facet counts of the sphere models.
    add_cell(cells, "table5", "E f1(P,ball2)", 3, ball2, P, fct, {{3, 1, 0}});
    add_cell(cells, "table5", "E f1(P,ball2)", 4, ball2, P, fct, {{4, 1, 0}, {-35, 12, -2}});
    add_cell(cells, "table5", "E f1(P,ball2)", 5, ball2, P, fct, {{5, 1, 0}, {-175, 24, -2}});
    add_cell(cells, "table5", "E f1(P,ball2)", 6, ball2, P, fct,
             {{6, 1, 0}, {-175, 12, -2}, {23023, 1152, -4}});
    add_cell(cells, "table5", "E f1(S,ball2)", 3, ball2, S, fct, {{6, 1, 0}, {-32, 3, -2}});
    add_cell(cells, "table5", "E f1(S,ball2)", 4, ball2, S, fct, {{8, 1, 0}, {-70, 3, -2}});
    add_cell(cells, "table5", "E f1(S,ball2)", 5, ball2, S, fct,
             {{10, 1, 0}, {-175, 3, -2}, {5632, 27, -4}});
    add_cell(cells, "table5", "E f1(S,ball2)", 6, ball2, S, fct,
             {{12, 1, 0}, {-350, 3, -2}, {23023, 36, -4}});
    add_cell(cells, "table5", "E f2(P,ball3)", 4, ball3, P, fct, {{4, 1, 0}});
    add_cell(cells, "table5", "E f2(P,ball3)", 5, ball3, P, fct, {{840, 143, 0}});
    add_cell(cells, "table5", "E f2(P,ball3)", 6, ball3, P, fct, {{1090, 143, 0}});
    add_cell(cells, "table5", "E f2(S,ball3)", 3, ball3, S, fct, {{8, 1, 0}});
    add_cell(cells, "table5", "E f2(S,ball3)", 4, ball3, S, fct, {{357, 32, 0}});
    add_cell(cells, "table5", "E f2(S,ball3)", 5, ball3, S, fct, {{2000, 143, 0}});
    add_cell(cells, "table5", "E f2(S,ball3)", 6, ball3, S, fct, {{8485, 512, 0}});
    for (int n = 4; n <= 6; ++n) {
        add_cell(cells, "table5", "f2(P,sphere3)", n, sphere3, P, fct, {{2 * (n - 2), 1, 0}});
    }
    for (int n = 3; n <= 6; ++n) {
        add_cell(cells, "table5", "f2(S,sphere3)", n, sphere3, S, fct, {{4 * (n - 1), 1, 0}});
    }

    // Table 6: mean number of spherical facets of the half-sphere model with
    // alpha = 0, through the beta' equivalence beta = (d+1)/2.
    const auto half_cell = [&cells, &fct](int d, int n, Terms expected) {
        const Model m = Model::beta_prime(d, 0.5 * (d + 1.0));
        add_cell(cells, "table6", "E f" + std::to_string(d - 1) + "(halfsphere,d=" +
                     std::to_string(d) + ")", n, m, PolytopeKind::Plain, fct, std::move(expected));
    };
    half_cell(2, 3, {{3, 1, 0}});
    half_cell(2, 4, {{6, 1, 0}, {-24, 1, -2}});
    half_cell(2, 5, {{10, 1, 0}, {-60, 1, -2}});
    half_cell(2, 6, {{15, 1, 0}, {-180, 1, -2}, {720, 1, -4}});
    half_cell(2, 7, {{21, 1, 0}, {-420, 1, -2}, {2520, 1, -4}});
    half_cell(2, 8, {{28, 1, 0}, {-840, 1, -2}, {10080, 1, -4}, {-40320, 1, -6}});
    half_cell(3, 4, {{4, 1, 0}});
    half_cell(3, 5, {{20, 3, 0}, {-10, 1, -2}});
    half_cell(3, 6, {{10, 1, 0}, {-30, 1, -2}});
    half_cell(3, 7, {{14, 1, 0}, {-70, 1, -2}, {105, 1, -4}});
    half_cell(3, 8, {{56, 3, 0}, {-140, 1, -2}, {420, 1, -4}});
    half_cell(4, 5, {{5, 1, 0}});
    half_cell(4, 6, {{15, 1, 0}, {-200, 3, -2}});
    half_cell(4, 7, {{35, 1, 0}, {-700, 3, -2}});
    half_cell(4, 8, {{70, 1, 0}, {-2800, 3, -2}, {101920, 27, -4}});

    return cells;
}

namespace {

CellCheck check_one(const TableCell& cell, double rel_tol, const ExactOptions& opts) {
    CellCheck c;
    c.cell = cell;
    c.expected = pi_poly_value(cell.expected);
    c.computed = evaluate(cell.functional, cell.model, cell.kind, cell.n, opts).value;
    c.rel_err = std::fabs(c.computed - c.expected) / std::fabs(c.expected);
    c.pass = c.rel_err <= rel_tol;
    return c;
}

}  // namespace

std::vector<CellCheck> verify_cells(double rel_tol, const ExactOptions& opts) {
    std::vector<CellCheck> out;
    for (const auto& cell : appendix_cells()) {
        out.push_back(check_one(cell, rel_tol, opts));
    }
    return out;
}

std::vector<CellCheck> verify_sphere3_laws(int n_max, double rel_tol, const ExactOptions& opts) {
    const Model sphere3 = Model::sphere(3);
    std::vector<CellCheck> out;
    for (int n = 4; n <= n_max; ++n) {
        const double nn = n;
        struct Law {
            const char* quantity;
            PolytopeKind kind;
            FunctionalSpec functional;
            double value;
        };
        const Law laws[] = {
            {"E Vol3(P) law", PolytopeKind::Plain, FunctionalSpec::volume(),
             4.0 * pi / 3.0 * (nn - 1) * (nn - 2) * (nn - 3) / ((nn + 1) * (nn + 2) * (nn + 3))},
            {"E Vol3(S) law", PolytopeKind::Symmetric, FunctionalSpec::volume(),
             4.0 * pi / 3.0 * nn * (nn - 2) / ((nn + 1) * (nn + 3))},
            {"E S2(P) law", PolytopeKind::Plain, FunctionalSpec::surface(),
             4.0 * pi * (nn - 1) * (nn - 2) / ((nn + 1) * (nn + 2))},
            {"E S2(S) law", PolytopeKind::Symmetric, FunctionalSpec::surface(),
             4.0 * pi * (nn - 1) / (nn + 2)},
            {"E mw3(P) law", PolytopeKind::Plain, FunctionalSpec::mean_width(),
             2.0 * (nn - 1) / (nn + 1)},
            {"E mw3(S) law", PolytopeKind::Symmetric, FunctionalSpec::mean_width(),
             2.0 * nn / (nn + 1)},
        };
        for (const Law& law : laws) {
            CellCheck c;
            c.cell = TableCell{"table4-laws", law.quantity, n, sphere3, law.kind, law.functional, {}};
            c.expected = law.value;
            c.computed = evaluate(law.functional, sphere3, law.kind, n, opts).value;
            c.rel_err = std::fabs(c.computed - c.expected) / std::fabs(c.expected);
            c.pass = c.rel_err <= rel_tol;
            out.push_back(c);
        }
    }
    return out;
}

}  // namespace betapoly::tables
