#pragma once

#include <algorithm>
#include <vector>

#include "bonnesen/error.hpp"
#include "bonnesen/vec.hpp"

namespace bonn {

// Halfspace {x : <normal, x> <= offset}, |normal| = 1.
struct Halfspace {
    Vec normal;
    double offset = 0.0;
};

// Unit direction in R^d. Construction normalizes and rejects zero vectors.
struct Direction {
    Vec u;

    explicit Direction(const Vec& v) {
        double m = norm(v);
        if (!(m > 0.0)) throw ZeroDirection("direction must be nonzero");
        u = (1.0 / m) * v;
    }
    int dim() const { return u.n; }
};

// Vertex-represented convex polytope with cached facet halfspaces.
// Instances are immutable after construction (build via hull()) and safe to
// share between threads. Degenerate (flat) bodies are first-class: ambient
// facets are populated only when intrinsic_dim == dim; flat bodies carry an
// affine frame plus facets in intrinsic coordinates instead.
struct ConvexBody {
    int dim = 0;
    std::vector<Vec> vertices;
    std::vector<Halfspace> facets;  // ambient; empty when intrinsic_dim < dim
    int intrinsic_dim = 0;

    // cached measures, filled by hull()
    double volume = 0.0;            // d-volume; 0 for degenerate bodies
    double intrinsic_volume = 0.0;  // intrinsic_dim-volume
    Vec centroid;                   // mass centroid (ambient)

    // affine frame of the vertex set: origin + orthonormal basis of the
    // affine hull (intrinsic_dim vectors). Identity-like when full-dim.
    Vec frame_origin;
    std::vector<Vec> frame_basis;
    std::vector<Halfspace> flat_facets;  // intrinsic coords; only when degenerate

    bool full_dim() const { return intrinsic_dim == dim; }

    Vec to_local(const Vec& x) const {
        Vec y(intrinsic_dim);
        for (int j = 0; j < intrinsic_dim; ++j) y[j] = dot(x - frame_origin, frame_basis[static_cast<size_t>(j)]);
        return y;
    }
    Vec to_ambient(const Vec& y) const {
        Vec x = frame_origin;
        for (int j = 0; j < intrinsic_dim; ++j) x += y[j] * frame_basis[static_cast<size_t>(j)];
        return x;
    }
};

inline double coordinate_scale(const ConvexBody& k) {
    double s = 1.0;
    for (const Vec& v : k.vertices)
        for (int i = 0; i < v.n; ++i) s = std::max(s, std::fabs(v[i]));
    return s;
}

// Exact diameter (max pairwise vertex distance).
inline double diameter(const ConvexBody& k) {
    double best = 0.0;
    for (size_t i = 0; i < k.vertices.size(); ++i)
        for (size_t j = i + 1; j < k.vertices.size(); ++j)
            best = std::max(best, dist(k.vertices[i], k.vertices[j]));
    return best;
}

inline Vec vertex_centroid(const ConvexBody& k) {
    Vec m(k.dim);
    for (const Vec& v : k.vertices) m += v;
    m *= 1.0 / static_cast<double>(k.vertices.size());
    return m;
}

}  // namespace bonn
