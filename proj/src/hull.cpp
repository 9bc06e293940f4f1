#include "betapoly/hull.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

#include "betapoly/specfun.hpp"

namespace betapoly::hull {

namespace {

constexpr double kVisibleTol = 1e-10;   // times the coordinate scale
constexpr double kPlaneTol = 1e-9;      // facet coplanarity / containment checks

double dot(std::span<const double> a, std::span<const double> b) {
    double s = 0.0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

// Determinant by Gaussian elimination with partial pivoting; m is n x n
// row-major and is destroyed.
template <typename Real>
Real det_inplace(std::vector<Real>& m, int n) {
    Real det = 1;
    for (int c = 0; c < n; ++c) {
        int piv = c;
        Real best = std::fabs(m[static_cast<size_t>(c) * n + c]);
        for (int r = c + 1; r < n; ++r) {
            const Real v = std::fabs(m[static_cast<size_t>(r) * n + c]);
            if (v > best) {
                best = v;
                piv = r;
            }
        }
        if (best == 0) return 0;
        if (piv != c) {
            for (int j = 0; j < n; ++j) {
                std::swap(m[static_cast<size_t>(piv) * n + j], m[static_cast<size_t>(c) * n + j]);
            }
            det = -det;
        }
        const Real p = m[static_cast<size_t>(c) * n + c];
        det *= p;
        for (int r = c + 1; r < n; ++r) {
            const Real f = m[static_cast<size_t>(r) * n + c] / p;
            for (int j = c; j < n; ++j) {
                m[static_cast<size_t>(r) * n + j] -= f * m[static_cast<size_t>(c) * n + j];
            }
        }
    }
    return det;
}

struct SimpFacet {
    std::vector<int> verts;       // exactly d input indices
    std::vector<double> normal;   // outward unit
    double offset = 0.0;
    double measure = 0.0;
    bool alive = true;
};

class Builder {
public:
    Builder(const PointCloud& cloud) : cloud_(cloud), d_(cloud.dim) {
        scale_ = 1.0;
        for (double c : cloud.coords) scale_ = std::max(scale_, std::fabs(c));
    }

    HullMesh build();

private:
    const PointCloud& cloud_;
    int d_;
    double scale_ = 1.0;
    std::vector<SimpFacet> facets_;
    std::vector<double> center_;  // interior reference point, fixed after the seed simplex

    std::span<const double> pt(int i) const { return cloud_.point(i); }

    bool seed_simplex(std::vector<int>& sel) const;
    void make_facet(std::vector<int> verts);
    void insert_point(int idx);
    bool visible(const SimpFacet& f, int idx) const;
    int orientation_ld(const SimpFacet& f, std::span<const double> p) const;
    HullMesh finalize();
};

// Greedy affine-basis growth: starting from the lexicographically smallest
// point, repeatedly add the point with the largest residual after projecting
// onto the current affine span.
bool Builder::seed_simplex(std::vector<int>& sel) const {
    const int n = cloud_.size();
    int first = 0;
    for (int i = 1; i < n; ++i) {
        if (std::lexicographical_compare(pt(i).begin(), pt(i).end(), pt(first).begin(),
                                         pt(first).end())) {
            first = i;
        }
    }
    sel = {first};
    std::vector<std::vector<double>> basis;  // orthonormal directions
    const double tol = 1e-9 * scale_;
    while (static_cast<int>(sel.size()) < d_ + 1) {
        int best = -1;
        double best_res = tol;
        std::vector<double> best_dir;
        for (int i = 0; i < n; ++i) {
            if (std::find(sel.begin(), sel.end(), i) != sel.end()) continue;
            std::vector<double> v(d_);
            for (int j = 0; j < d_; ++j) v[j] = pt(i)[j] - pt(sel[0])[j];
            for (const auto& b : basis) {
                const double c = dot(v, b);
                for (int j = 0; j < d_; ++j) v[j] -= c * b[j];
            }
            const double res = std::sqrt(dot(v, v));
            if (res > best_res) {
                best_res = res;
                best = i;
                best_dir = v;
            }
        }
        if (best < 0) return false;
        for (double& c : best_dir) c /= best_res;
        basis.push_back(std::move(best_dir));
        sel.push_back(best);
    }
    return true;
}

void Builder::make_facet(std::vector<int> verts) {
    SimpFacet f;
    f.verts = std::move(verts);

    // Normal as the generalized cross product of the edge vectors: cofactor
    // expansion of the (d-1) x d matrix of rows x_i - x_0.
    std::vector<double> edges(static_cast<size_t>(d_ - 1) * d_);
    const auto x0 = pt(f.verts[0]);
    for (int i = 1; i < d_; ++i) {
        const auto xi = pt(f.verts[i]);
        for (int j = 0; j < d_; ++j) edges[static_cast<size_t>(i - 1) * d_ + j] = xi[j] - x0[j];
    }
    f.normal.assign(d_, 0.0);
    std::vector<double> minor;
    for (int j = 0; j < d_; ++j) {
        minor.assign(static_cast<size_t>(d_ - 1) * (d_ - 1), 0.0);
        for (int r = 0; r < d_ - 1; ++r) {
            int cc = 0;
            for (int c = 0; c < d_; ++c) {
                if (c == j) continue;
                minor[static_cast<size_t>(r) * (d_ - 1) + cc++] = edges[static_cast<size_t>(r) * d_ + c];
            }
        }
        const double mj = (d_ > 1) ? det_inplace(minor, d_ - 1) : 1.0;
        f.normal[j] = ((j % 2) == 0 ? 1.0 : -1.0) * mj;
    }
    const double nn = std::sqrt(dot(f.normal, f.normal));
    if (!(nn > 1e-13 * std::pow(std::max(scale_, 1e-30), d_ - 1))) {
        throw std::runtime_error("convex_hull: degenerate facet (affinely dependent vertices)");
    }
    for (double& c : f.normal) c /= nn;
    f.offset = dot(f.normal, x0);
    if (dot(f.normal, center_) > f.offset) {
        for (double& c : f.normal) c = -c;
        f.offset = -f.offset;
    }

    // (d-1)-volume via the Gram determinant of the edge vectors.
    if (d_ == 1) {
        f.measure = 1.0;
    } else {
        std::vector<double> gram(static_cast<size_t>(d_ - 1) * (d_ - 1));
        for (int i = 0; i < d_ - 1; ++i) {
            for (int j = 0; j < d_ - 1; ++j) {
                gram[static_cast<size_t>(i) * (d_ - 1) + j] =
                    std::inner_product(edges.begin() + static_cast<size_t>(i) * d_,
                                       edges.begin() + static_cast<size_t>(i + 1) * d_,
                                       edges.begin() + static_cast<size_t>(j) * d_, 0.0);
            }
        }
        const double g = det_inplace(gram, d_ - 1);
        f.measure = std::sqrt(std::max(g, 0.0)) / std::exp(specfun::log_factorial(d_ - 1));
    }
    std::sort(f.verts.begin(), f.verts.end());
    facets_.push_back(std::move(f));
}

// Long double orientation check used when the double predicate is within
// tolerance of zero: compares the sign of det[x_1 - p, ..., x_d - p] against
// det[x_1 - c, ..., x_d - c] (c strictly interior).  Returns +1 for visible,
// -1 for beneath, 0 for on-plane.
int Builder::orientation_ld(const SimpFacet& f, std::span<const double> p) const {
    auto signed_det = [&](std::span<const double> q) -> long double {
        std::vector<long double> m(static_cast<size_t>(d_) * d_);
        for (int i = 0; i < d_; ++i) {
            const auto xi = pt(f.verts[i]);
            for (int j = 0; j < d_; ++j) {
                m[static_cast<size_t>(i) * d_ + j] =
                    static_cast<long double>(xi[j]) - static_cast<long double>(q[j]);
            }
        }
        return det_inplace(m, d_);
    };
    const long double dp = signed_det(p);
    const long double dc = signed_det(std::span<const double>(center_));
    long double ref = 1;
    for (int i = 0; i < d_; ++i) ref *= static_cast<long double>(scale_);
    const long double tiny = 1e-14L * std::max(ref, 1e-300L);
    if (std::fabs(static_cast<double>(dp)) <= static_cast<double>(tiny) ||
        std::fabs(static_cast<double>(dc)) <= static_cast<double>(tiny)) {
        return 0;
    }
    return (dp > 0) == (dc > 0) ? -1 : +1;
}

bool Builder::visible(const SimpFacet& f, int idx) const {
    const double s = dot(f.normal, pt(idx)) - f.offset;
    const double tol = kVisibleTol * scale_;
    if (s > tol) return true;
    if (s < -tol) return false;
    return orientation_ld(f, pt(idx)) > 0;
}

void Builder::insert_point(int idx) {
    std::vector<int> vis;
    for (int fi = 0; fi < static_cast<int>(facets_.size()); ++fi) {
        if (facets_[fi].alive && visible(facets_[fi], idx)) vis.push_back(fi);
    }
    if (vis.empty()) return;

    // Horizon ridges: (d-1)-subsets shared by exactly one visible facet.
    std::map<std::vector<int>, int> ridge_count;
    for (int fi : vis) {
        const auto& vs = facets_[fi].verts;
        for (int skip = 0; skip < d_; ++skip) {
            std::vector<int> ridge;
            ridge.reserve(d_ - 1);
            for (int i = 0; i < d_; ++i) {
                if (i != skip) ridge.push_back(vs[i]);
            }
            ridge_count[ridge] += 1;
        }
    }
    for (int fi : vis) facets_[fi].alive = false;
    for (auto& [ridge, count] : ridge_count) {
        if (count != 1) continue;
        std::vector<int> verts = ridge;
        verts.push_back(idx);
        make_facet(std::move(verts));
    }
}

HullMesh Builder::finalize() {
    HullMesh mesh;
    mesh.dim = d_;
    mesh.full_dimensional = true;

    std::vector<const SimpFacet*> alive;
    for (const auto& f : facets_) {
        if (f.alive) alive.push_back(&f);
    }

    std::set<int> vset;
    for (const auto* f : alive) vset.insert(f->verts.begin(), f->verts.end());
    mesh.vertices.assign(vset.begin(), vset.end());

    mesh.interior.assign(d_, 0.0);
    for (int v : mesh.vertices) {
        for (int j = 0; j < d_; ++j) mesh.interior[j] += pt(v)[j];
    }
    for (double& c : mesh.interior) c /= static_cast<double>(mesh.vertices.size());

    // Containment check: every input point beneath every facet.
    const double tol = kPlaneTol * std::max(scale_, 1.0);
    for (const auto* f : alive) {
        for (int i = 0; i < cloud_.size(); ++i) {
            if (dot(f->normal, pt(i)) > f->offset + tol) {
                throw std::runtime_error("convex_hull: containment check failed");
            }
        }
    }

    // Ridge closure: in a watertight simplicial boundary every ridge belongs
    // to exactly two facets.
    std::map<std::vector<int>, std::vector<int>> ridges;
    for (int fi = 0; fi < static_cast<int>(alive.size()); ++fi) {
        const auto& vs = alive[fi]->verts;
        for (int skip = 0; skip < d_; ++skip) {
            std::vector<int> ridge;
            for (int i = 0; i < d_; ++i) {
                if (i != skip) ridge.push_back(vs[i]);
            }
            ridges[ridge].push_back(fi);
        }
    }
    for (const auto& [ridge, fs] : ridges) {
        if (fs.size() != 2) {
            throw std::runtime_error("convex_hull: boundary is not watertight");
        }
    }

    // Merge coplanar neighbours (union-find over ridge-adjacent facets with
    // matching planes) so e.g. a cube reports 6 facets, not 12 triangles.
    std::vector<int> parent(alive.size());
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const auto& [ridge, fs] : ridges) {
        const SimpFacet* f = alive[fs[0]];
        const SimpFacet* g = alive[fs[1]];
        double ndiff = 0.0;
        for (int j = 0; j < d_; ++j) ndiff = std::max(ndiff, std::fabs(f->normal[j] - g->normal[j]));
        if (ndiff < kPlaneTol && std::fabs(f->offset - g->offset) < tol) {
            parent[find(fs[0])] = find(fs[1]);
        }
    }
    std::map<int, HullFacet> merged;
    std::map<int, double> rep_measure;
    for (int fi = 0; fi < static_cast<int>(alive.size()); ++fi) {
        const SimpFacet* f = alive[fi];
        const int root = find(fi);
        auto& out = merged[root];
        out.vertices.insert(out.vertices.end(), f->verts.begin(), f->verts.end());
        out.measure += f->measure;
        if (f->measure >= rep_measure[root]) {
            rep_measure[root] = f->measure;
            out.normal = f->normal;
            out.offset = f->offset;
        }
        mesh.simplex_facets.push_back(f->verts);
    }
    for (auto& [root, f] : merged) {
        std::sort(f.vertices.begin(), f.vertices.end());
        f.vertices.erase(std::unique(f.vertices.begin(), f.vertices.end()), f.vertices.end());
        mesh.facets.push_back(std::move(f));
    }
    return mesh;
}

HullMesh Builder::build() {
    std::vector<int> seed;
    if (cloud_.size() < d_ + 1 || !seed_simplex(seed)) {
        HullMesh mesh;
        mesh.dim = d_;
        mesh.full_dimensional = false;
        return mesh;
    }
    center_.assign(d_, 0.0);
    for (int v : seed) {
        for (int j = 0; j < d_; ++j) center_[j] += pt(v)[j];
    }
    for (double& c : center_) c /= static_cast<double>(d_ + 1);

    for (int skip = 0; skip <= d_; ++skip) {
        std::vector<int> verts;
        for (int i = 0; i <= d_; ++i) {
            if (i != skip) verts.push_back(seed[i]);
        }
        make_facet(std::move(verts));
    }

    std::vector<bool> used(cloud_.size(), false);
    for (int v : seed) used[v] = true;
    for (int i = 0; i < cloud_.size(); ++i) {
        if (!used[i]) insert_point(i);
    }
    return finalize();
}

HullMesh hull_1d(const PointCloud& cloud) {
    HullMesh mesh;
    mesh.dim = 1;
    int imin = 0, imax = 0;
    for (int i = 1; i < cloud.size(); ++i) {
        if (cloud.coords[i] < cloud.coords[imin]) imin = i;
        if (cloud.coords[i] > cloud.coords[imax]) imax = i;
    }
    const double lo = cloud.coords[imin];
    const double hi = cloud.coords[imax];
    if (!(hi - lo > 0.0)) {
        mesh.full_dimensional = false;
        return mesh;
    }
    mesh.full_dimensional = true;
    mesh.vertices = {std::min(imin, imax), std::max(imin, imax)};
    mesh.interior = {0.5 * (lo + hi)};
    HullFacet left{{imin}, {-1.0}, -lo, 1.0};
    HullFacet right{{imax}, {1.0}, hi, 1.0};
    mesh.facets = {left, right};
    mesh.simplex_facets = {{imin}, {imax}};
    return mesh;
}

}  // namespace

HullMesh convex_hull(const PointCloud& cloud) {
    if (cloud.dim < 1) throw std::invalid_argument("convex_hull: dimension must be >= 1");
    if (cloud.size() == 0) throw std::invalid_argument("convex_hull: empty cloud");
    if (cloud.dim == 1) return hull_1d(cloud);
    Builder b(cloud);
    return b.build();
}

namespace {

void require_full(const HullMesh& mesh, const char* what) {
    if (!mesh.full_dimensional) {
        throw std::domain_error(std::string(what) + ": hull is lower-dimensional");
    }
}

}  // namespace

double volume(const HullMesh& mesh) {
    require_full(mesh, "volume");
    double v = 0.0;
    for (const auto& f : mesh.facets) {
        double nc = 0.0;
        for (int j = 0; j < mesh.dim; ++j) nc += f.normal[j] * mesh.interior[j];
        v += (f.offset - nc) * f.measure;
    }
    return v / mesh.dim;
}

double surface_area(const HullMesh& mesh) {
    require_full(mesh, "surface_area");
    double s = 0.0;
    for (const auto& f : mesh.facets) s += f.measure;
    return s;
}

int facet_count(const HullMesh& mesh) {
    require_full(mesh, "facet_count");
    return static_cast<int>(mesh.facets.size());
}

int vertex_count(const HullMesh& mesh) {
    require_full(mesh, "vertex_count");
    return static_cast<int>(mesh.vertices.size());
}

double t_functional_of(const HullMesh& mesh, double a, double b) {
    require_full(mesh, "t_functional_of");
    double t = 0.0;
    for (const auto& f : mesh.facets) {
        t += std::pow(std::fabs(f.offset), a) * std::pow(f.measure, b);
    }
    return t;
}

double t_functional_signed(const HullMesh& mesh, double a, double b) {
    require_full(mesh, "t_functional_signed");
    double t = 0.0;
    for (const auto& f : mesh.facets) {
        const double sign = f.offset >= 0.0 ? 1.0 : -1.0;
        t += sign * std::pow(std::fabs(f.offset), a) * std::pow(f.measure, b);
    }
    return t;
}

double width_along(const PointCloud& cloud, std::span<const double> direction) {
    if (cloud.size() == 0) throw std::invalid_argument("width_along: empty cloud");
    if (static_cast<int>(direction.size()) != cloud.dim) {
        throw std::invalid_argument("width_along: direction dimension mismatch");
    }
    double lo = 0.0, hi = 0.0;
    for (int i = 0; i < cloud.size(); ++i) {
        const double s = dot(cloud.point(i), direction);
        if (i == 0) {
            lo = hi = s;
        } else {
            lo = std::min(lo, s);
            hi = std::max(hi, s);
        }
    }
    return hi - lo;
}

PointCloud project_cloud(const PointCloud& cloud, int k, const std::vector<double>& frame) {
    const int d = cloud.dim;
    if (k < 1 || k > d) throw std::invalid_argument("project_cloud: need 1 <= k <= d");
    if (static_cast<int>(frame.size()) != d * k) {
        throw std::invalid_argument("project_cloud: frame must be d x k");
    }
    for (int i = 0; i < k; ++i) {
        for (int j = i; j < k; ++j) {
            double g = 0.0;
            for (int r = 0; r < d; ++r) {
                g += frame[static_cast<size_t>(i) * d + r] * frame[static_cast<size_t>(j) * d + r];
            }
            const double expect = (i == j) ? 1.0 : 0.0;
            if (std::fabs(g - expect) > 1e-10) {
                throw std::invalid_argument("project_cloud: frame is not orthonormal");
            }
        }
    }
    PointCloud out(k);
    out.coords.resize(static_cast<size_t>(cloud.size()) * k);
    for (int i = 0; i < cloud.size(); ++i) {
        const auto p = cloud.point(i);
        for (int c = 0; c < k; ++c) {
            double s = 0.0;
            for (int r = 0; r < d; ++r) s += frame[static_cast<size_t>(c) * d + r] * p[r];
            out.coords[static_cast<size_t>(i) * k + c] = s;
        }
    }
    return out;
}

}  // namespace betapoly::hull
