// betapoly: exact expected functionals of random beta / beta' / spherical
// polytopes, with Monte Carlo verification.
//
// Subcommands:
//   exact          evaluate one functional through the integral formulas
//   mc             Monte Carlo estimate (+ z-score against the exact value)
//   verify-tables  reproduce the appendix tables of particular values
//   sweep          CSV of a functional over an n range or a beta list
//   selftest       run the invariant batteries
//
// Exit codes: 0 success, 1 verification/selftest failure, 2 invalid config.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "betapoly/expectations.hpp"
#include "betapoly/mc.hpp"
#include "betapoly/selftest.hpp"
#include "betapoly/tables.hpp"

using nlohmann::json;
using namespace betapoly;

namespace {

struct ModelFlags {
    std::string family = "beta";
    int d = 2;
    double beta = 0.0;
    double alpha = 0.0;  // half-sphere weight exponent
    std::string kind = "P";
    std::string functional = "volume";
    int k = 1;
    double a = 0.0;
    double b = 0.0;
};

void add_model_flags(CLI::App* cmd, ModelFlags& mf, bool with_functional = true) {
    cmd->add_option("--family", mf.family, "beta | betaprime | sphere | halfsphere")
        ->check(CLI::IsMember({"beta", "betaprime", "sphere", "halfsphere"}));
    cmd->add_option("--d", mf.d, "ambient dimension")->required();
    cmd->add_option("--beta", mf.beta, "distribution parameter (beta / betaprime)");
    cmd->add_option("--alpha", mf.alpha, "half-sphere density exponent (family halfsphere)");
    cmd->add_option("--kind", mf.kind, "P (hull) | S (symmetric hull) | Q (origin adjoined)")
        ->check(CLI::IsMember({"P", "S", "Q"}));
    if (with_functional) {
        cmd->add_option("--functional", mf.functional,
                        "volume | intrinsic | surface | meanwidth | tfunctional | facets | vertices")
            ->check(CLI::IsMember({"volume", "intrinsic", "surface", "meanwidth", "tfunctional",
                                   "facets", "vertices"}));
        cmd->add_option("--k", mf.k, "intrinsic volume order (functional intrinsic)");
        cmd->add_option("--a", mf.a, "T-functional distance exponent");
        cmd->add_option("--b", mf.b, "T-functional face-volume exponent");
    }
}

Model make_model(const ModelFlags& mf) {
    if (mf.family == "beta") return Model::beta_ball(mf.d, mf.beta);
    if (mf.family == "betaprime") return Model::beta_prime(mf.d, mf.beta);
    if (mf.family == "sphere") return Model::sphere(mf.d);
    // Half-sphere facet counts coincide with the beta' model at
    // beta = (alpha + d + 1) / 2.
    if (!(mf.alpha > -1.0)) throw std::domain_error("halfsphere requires alpha > -1");
    return Model::beta_prime(mf.d, 0.5 * (mf.alpha + mf.d + 1.0));
}

PolytopeKind make_kind(const ModelFlags& mf) {
    if (mf.kind == "P") return PolytopeKind::Plain;
    if (mf.kind == "S") return PolytopeKind::Symmetric;
    return PolytopeKind::WithOrigin;
}

FunctionalSpec make_functional(const ModelFlags& mf) {
    if (mf.functional == "volume") return FunctionalSpec::volume();
    if (mf.functional == "intrinsic") return FunctionalSpec::intrinsic(mf.k);
    if (mf.functional == "surface") return FunctionalSpec::surface();
    if (mf.functional == "meanwidth") return FunctionalSpec::mean_width();
    if (mf.functional == "tfunctional") return FunctionalSpec::t_func(mf.a, mf.b);
    if (mf.functional == "facets") return FunctionalSpec::facets();
    return FunctionalSpec::vertices();
}

struct Output {
    std::string format = "text";  // text | csv | json
    std::string path;             // empty = stdout

    void add_flags(CLI::App* cmd) {
        cmd->add_option("--format", format, "text | csv | json")
            ->check(CLI::IsMember({"text", "csv", "json"}));
        cmd->add_option("--out", path, "write output to this file instead of stdout");
    }

    void write(const std::string& text) const {
        if (path.empty()) {
            std::cout << text;
        } else {
            std::ofstream f(path);
            if (!f) throw std::runtime_error("cannot open output file: " + path);
            f << text;
        }
    }
};

std::string csv_inputs_header() { return "family,d,beta,kind,functional,k,a,b,n"; }

std::string csv_inputs_row(const ModelFlags& mf, int n) {
    std::ostringstream os;
    os << mf.family << ',' << mf.d << ',';
    if (mf.family == "halfsphere") {
        os << mf.alpha;
    } else if (mf.family == "sphere") {
        os << "";
    } else {
        os << mf.beta;
    }
    os << ',' << mf.kind << ',' << mf.functional << ',' << mf.k << ',' << mf.a << ',' << mf.b
       << ',' << n;
    return os.str();
}

json json_inputs(const ModelFlags& mf, int n) {
    json j;
    j["family"] = mf.family;
    j["d"] = mf.d;
    if (mf.family == "beta" || mf.family == "betaprime") j["beta"] = mf.beta;
    if (mf.family == "halfsphere") j["alpha"] = mf.alpha;
    j["kind"] = mf.kind;
    j["functional"] = mf.functional;
    if (mf.functional == "intrinsic") j["k"] = mf.k;
    if (mf.functional == "tfunctional") {
        j["a"] = mf.a;
        j["b"] = mf.b;
    }
    j["n"] = n;
    return j;
}

std::optional<ExactResult> try_exact(const FunctionalSpec& fs, const Model& model,
                                     PolytopeKind kind, int n, const ExactOptions& opts) {
    try {
        return evaluate(fs, model, kind, n, opts);
    } catch (const std::exception&) {
        return std::nullopt;
    }
}

// ---------------------------------------------------------------------------

int cmd_exact(const ModelFlags& mf, int n, double tol, const Output& out) {
    ExactOptions opts;
    if (tol > 0) {
        opts.abs_tol = tol;
        opts.rel_tol = tol;
    }
    const ExactResult r = evaluate(make_functional(mf), make_model(mf), make_kind(mf), n, opts);
    std::ostringstream os;
    if (out.format == "csv") {
        os << csv_inputs_header() << ",value,abs_err\n"
           << csv_inputs_row(mf, n) << ',' << std::setprecision(17) << r.value << ','
           << r.abs_error << '\n';
    } else if (out.format == "json") {
        json j = json_inputs(mf, n);
        j["value"] = r.value;
        j["abs_err"] = r.abs_error;
        os << j.dump(2) << '\n';
    } else {
        os << std::setprecision(15) << r.value << "   (quadrature abs error <= " << r.abs_error
           << ")\n";
    }
    out.write(os.str());
    return 0;
}

int cmd_mc(const ModelFlags& mf, int n, long samples, std::uint64_t seed, int directions,
           const Output& out) {
    const Model model = make_model(mf);
    const PolytopeKind kind = make_kind(mf);
    const FunctionalSpec fs = make_functional(mf);
    mc::McOptions mopts;
    mopts.directions = directions;
    const mc::Estimate est = mc::estimate(fs, model, kind, n, samples, seed, mopts);
    const auto exact = try_exact(fs, model, kind, n, {});

    std::string zs = "n/a";
    double zval = 0.0;
    bool have_z = false;
    if (exact) {
        if (est.std_error > 0.0) {
            zval = mc::zscore(exact->value, est);
            zs = std::to_string(zval);
            have_z = true;
        } else {
            zs = est.mean == exact->value ? "exact-match" : "exact-mismatch";
        }
    }

    std::ostringstream os;
    if (out.format == "csv") {
        os << csv_inputs_header() << ",value,stderr,samples,seed,exact,z\n"
           << csv_inputs_row(mf, n) << ',' << std::setprecision(17) << est.mean << ','
           << est.std_error << ',' << est.samples << ',' << est.seed << ',';
        if (exact) os << exact->value;
        os << ',';
        if (have_z) os << zval;
        os << '\n';
    } else if (out.format == "json") {
        json j = json_inputs(mf, n);
        j["value"] = est.mean;
        j["stderr"] = est.std_error;
        j["samples"] = est.samples;
        j["seed"] = est.seed;
        j["degenerate_resamples"] = est.degenerate_resamples;
        if (exact) j["exact"] = exact->value;
        if (have_z) j["z"] = zval;
        os << j.dump(2) << '\n';
    } else {
        os << std::setprecision(12) << "estimate = " << est.mean << "  stderr = " << est.std_error
           << "  samples = " << est.samples << "  seed = " << est.seed << '\n';
        if (exact) os << "exact    = " << exact->value << "  z = " << zs << '\n';
    }
    out.write(os.str());
    return 0;
}

int cmd_verify_tables(double tol, const Output& out) {
    auto checks = tables::verify_cells(tol);
    auto laws = tables::verify_sphere3_laws(50, tol);
    checks.insert(checks.end(), laws.begin(), laws.end());

    int failures = 0;
    std::ostringstream os;
    if (out.format == "csv") {
        os << "table,quantity,n,expected,computed,rel_err,status\n";
    }
    json jcells = json::array();
    for (const auto& c : checks) {
        if (!c.pass) failures += 1;
        if (out.format == "csv") {
            os << c.cell.table << ',' << '"' << c.cell.quantity << '"' << ',' << c.cell.n << ','
               << std::setprecision(17) << c.expected << ',' << c.computed << ',' << c.rel_err
               << ',' << (c.pass ? "pass" : "FAIL") << '\n';
        } else if (out.format == "json") {
            json j;
            j["table"] = c.cell.table;
            j["quantity"] = c.cell.quantity;
            j["n"] = c.cell.n;
            j["expected"] = c.expected;
            j["computed"] = c.computed;
            j["rel_err"] = c.rel_err;
            j["pass"] = c.pass;
            jcells.push_back(j);
        } else {
            os << (c.pass ? "pass " : "FAIL ") << c.cell.table << "  n=" << c.cell.n << "  "
               << c.cell.quantity;
            if (!c.cell.expected.empty()) {
                os << " = " << tables::pi_poly_text(c.cell.expected);
            }
            os << std::setprecision(17) << "  expected=" << c.expected
               << " computed=" << c.computed << " relerr=" << std::setprecision(3) << c.rel_err
               << '\n';
        }
    }
    if (out.format == "json") {
        json j;
        j["cells"] = jcells;
        j["failures"] = failures;
        os << j.dump(2) << '\n';
    } else {
        os << (failures == 0 ? "all " + std::to_string(checks.size()) + " cells pass\n"
                             : std::to_string(failures) + " of " + std::to_string(checks.size()) +
                                   " cells FAILED\n");
    }
    out.write(os.str());
    return failures == 0 ? 0 : 1;
}

int cmd_sweep(const ModelFlags& mf, const std::string& n_range, const std::string& beta_list,
              const Output& out) {
    int n_lo = 0, n_hi = 0;
    {
        const auto pos = n_range.find("..");
        if (pos == std::string::npos) {
            n_lo = n_hi = std::stoi(n_range);
        } else {
            n_lo = std::stoi(n_range.substr(0, pos));
            n_hi = std::stoi(n_range.substr(pos + 2));
        }
        if (n_hi < n_lo) throw std::domain_error("sweep: empty n range");
    }
    std::vector<double> betas;
    if (!beta_list.empty()) {
        std::istringstream is(beta_list);
        std::string tok;
        while (std::getline(is, tok, ',')) betas.push_back(std::stod(tok));
    } else {
        betas.push_back(mf.beta);
    }

    std::ostringstream os;
    json jrows = json::array();
    if (out.format != "json") os << csv_inputs_header() << ",value,abs_err\n";
    for (double beta : betas) {
        ModelFlags cur = mf;
        cur.beta = beta;
        for (int n = n_lo; n <= n_hi; ++n) {
            const ExactResult r =
                evaluate(make_functional(cur), make_model(cur), make_kind(cur), n, {});
            if (out.format == "json") {
                json j = json_inputs(cur, n);
                j["value"] = r.value;
                j["abs_err"] = r.abs_error;
                jrows.push_back(j);
            } else {
                os << csv_inputs_row(cur, n) << ',' << std::setprecision(17) << r.value << ','
                   << r.abs_error << '\n';
            }
        }
    }
    if (out.format == "json") os << jrows.dump(2) << '\n';
    out.write(os.str());
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact expected functionals of random beta/beta'/spherical polytopes"};
    app.require_subcommand(1);
    app.set_config("--config", "", "key=value config file; command-line flags win");

    ModelFlags mf_exact, mf_mc, mf_sweep;
    Output out_exact, out_mc, out_tables, out_sweep;
    int n_exact = 0, n_mc = 0;
    double tol_exact = 0.0, tol_tables = 1e-9;
    long samples = 100000;
    std::uint64_t seed = 0x5EEDBE7A;
    int directions = 8;
    std::string n_range, beta_list;

    CLI::App* exact = app.add_subcommand("exact", "evaluate an exact expectation");
    add_model_flags(exact, mf_exact);
    exact->add_option("--n", n_exact, "number of sample points")->required();
    exact->add_option("--tol", tol_exact, "quadrature tolerance override");
    out_exact.add_flags(exact);

    CLI::App* mc_cmd = app.add_subcommand("mc", "Monte Carlo estimate with z-score");
    add_model_flags(mc_cmd, mf_mc);
    mc_cmd->add_option("--n", n_mc, "number of sample points")->required();
    mc_cmd->add_option("--samples", samples, "Monte Carlo samples (default 1e5)");
    mc_cmd->add_option("--seed", seed, "64-bit master seed");
    mc_cmd->add_option("--directions", directions, "directions/frames per sample");
    out_mc.add_flags(mc_cmd);

    CLI::App* tables_cmd =
        app.add_subcommand("verify-tables", "reproduce the appendix tables 1-6");
    tables_cmd->add_option("--tol", tol_tables, "relative tolerance per cell (default 1e-9)");
    out_tables.add_flags(tables_cmd);

    CLI::App* sweep = app.add_subcommand("sweep", "functional over an n range or beta list");
    add_model_flags(sweep, mf_sweep);
    sweep->add_option("--n", n_range, "n or n range, e.g. 4..10")->required();
    sweep->add_option("--beta-list", beta_list, "comma-separated beta values to sweep");
    out_sweep.add_flags(sweep);

    CLI::App* selftest_cmd = app.add_subcommand("selftest", "run the invariant batteries");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return 2;
    }

    try {
        if (exact->parsed()) return cmd_exact(mf_exact, n_exact, tol_exact, out_exact);
        if (mc_cmd->parsed()) return cmd_mc(mf_mc, n_mc, samples, seed, directions, out_mc);
        if (tables_cmd->parsed()) return cmd_verify_tables(tol_tables, out_tables);
        if (sweep->parsed()) return cmd_sweep(mf_sweep, n_range, beta_list, out_sweep);
        if (selftest_cmd->parsed()) return selftest::run_all(std::cout) ? 0 : 1;
    } catch (const std::domain_error& e) {
        std::cerr << "invalid configuration: " << e.what() << '\n';
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid configuration: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 2;
}
