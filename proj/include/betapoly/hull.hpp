#pragma once

#include <span>
#include <vector>

// Exact convex-hull geometry in R^d for small d (intended range d <= 6).
// Incremental beneath-beyond construction with an epsilon ladder on the
// orientation predicate:
//   1. signed distance against the facet plane in double, tolerance
//      1e-10 * coordinate scale;
//   2. borderline cases re-decided by a long double orientation determinant
//      against the hull's interior point;
//   3. points still indistinguishable from the plane are treated as beneath,
//      so exact ties resolve deterministically by insertion (index) order.

namespace betapoly::hull {

struct PointCloud {
    int dim = 0;
    std::vector<double> coords;  // size() * dim, row-major

    PointCloud() = default;
    explicit PointCloud(int d) : dim(d) {}
    PointCloud(int d, std::vector<double> flat) : dim(d), coords(std::move(flat)) {}

    int size() const { return dim > 0 ? static_cast<int>(coords.size()) / dim : 0; }
    std::span<const double> point(int i) const {
        return {coords.data() + static_cast<size_t>(i) * dim, static_cast<size_t>(dim)};
    }
    void push_point(std::span<const double> p) {
        coords.insert(coords.end(), p.begin(), p.end());
    }
};

struct HullFacet {
    std::vector<int> vertices;    // >= dim input indices, sorted
    std::vector<double> normal;   // outward unit normal
    double offset = 0.0;          // <normal, x> = offset on the facet plane
    double measure = 0.0;         // (d-1)-dimensional volume
};

struct HullMesh {
    int dim = 0;
    // False when the input is lower-dimensional (a reported outcome, not an
    // error); facets and derived functionals are then unavailable.
    bool full_dimensional = false;
    std::vector<int> vertices;                      // hull vertices, sorted input indices
    std::vector<HullFacet> facets;                  // coplanar-merged facets
    std::vector<std::vector<int>> simplex_facets;   // triangulated boundary (d indices each)
    std::vector<double> interior;                   // strictly interior point (vertex centroid)
};

/// Facet-complete convex hull.  Inputs with fewer than d+1 points or of lower
/// affine dimension yield full_dimensional = false.
HullMesh convex_hull(const PointCloud& cloud);

double volume(const HullMesh& mesh);
double surface_area(const HullMesh& mesh);
int facet_count(const HullMesh& mesh);
int vertex_count(const HullMesh& mesh);

/// Sum over facets of eta^a * Vol_{d-1}^b, eta = distance from the facet's
/// affine hull to the origin.
double t_functional_of(const HullMesh& mesh, double a, double b);

/// Signed variant: eta enters with sign +1 when the origin lies on the inner
/// side of the facet and -1 otherwise, so (1/d) * signed T_{1,1} equals the
/// hull volume even when the origin is outside.
double t_functional_signed(const HullMesh& mesh, double a, double b);

/// max <u,x> - min <u,x> over the cloud; u is expected to be a unit vector.
double width_along(const PointCloud& cloud, std::span<const double> direction);

/// Coordinates of the points in a k-frame (d x k, column-major, orthonormal
/// columns).  Throws if the frame's Gram matrix deviates from identity by
/// more than 1e-10.
PointCloud project_cloud(const PointCloud& cloud, int k, const std::vector<double>& frame);

}  // namespace betapoly::hull
