#pragma once

#include <optional>
#include <vector>

#include "bonnesen/ops.hpp"

namespace bonn {

// Lebesgue measure, computed at construction from the simplicial boundary
// decomposition (fan from an interior point). 0 for degenerate bodies.
inline double volume(const ConvexBody& k) { return k.volume; }

// intrinsic_dim-dimensional measure (equals volume for full-dim bodies).
inline double intrinsic_volume(const ConvexBody& k) { return k.intrinsic_volume; }

inline Vec mass_centroid(const ConvexBody& k) { return k.centroid; }

// The body re-expressed in the intrinsic coordinates of its affine hull;
// full-dimensional in R^intrinsic_dim.
inline ConvexBody flatten(const ConvexBody& k) {
    if (k.full_dim()) return k;
    ConvexBody r;
    r.dim = k.intrinsic_dim;
    r.intrinsic_dim = k.intrinsic_dim;
    for (const Vec& v : k.vertices) r.vertices.push_back(k.to_local(v));
    r.facets = k.flat_facets;
    r.volume = k.intrinsic_volume;
    r.intrinsic_volume = k.intrinsic_volume;
    r.centroid = k.to_local(k.centroid);
    r.frame_origin = Vec::zero(r.dim);
    for (int i = 0; i < r.dim; ++i) r.frame_basis.push_back(Vec::axis(i, r.dim));
    return r;
}

namespace detail {

// Nearest point of the affine hull of a small point subset, in barycentric
// form; returns false when weights are infeasible or the system is singular.
inline bool affine_nearest(const std::vector<Vec>& w, const Vec& p, Vec& out, double& d2) {
    const int m = static_cast<int>(w.size());
    if (m == 1) {
        out = w[0];
        d2 = norm2(w[0] - p);
        return true;
    }
    std::array<std::array<double, kMaxDim>, kMaxDim> g{};
    std::array<double, kMaxDim> rhs{};
    for (int i = 1; i < m; ++i) {
        Vec di = w[static_cast<size_t>(i)] - w[0];
        for (int j = 1; j < m; ++j)
            g[static_cast<size_t>(i - 1)][static_cast<size_t>(j - 1)] =
                dot(di, w[static_cast<size_t>(j)] - w[0]);
        rhs[static_cast<size_t>(i - 1)] = dot(di, p - w[0]);
    }
    Vec lam;
    if (!solve_linear(g, rhs, m - 1, 1e-300, lam)) return false;
    double l0 = 1.0;
    for (int i = 0; i < m - 1; ++i) l0 -= lam[i];
    if (l0 < -1e-12) return false;
    for (int i = 0; i < m - 1; ++i)
        if (lam[i] < -1e-12) return false;
    out = l0 * w[0];
    for (int i = 1; i < m; ++i) out += lam[i - 1] * w[static_cast<size_t>(i)];
    d2 = norm2(out - p);
    return true;
}

}  // namespace detail

// Distance from a point to the convex hull of a vertex set (GJK-style:
// nearest point on the current simplex, then a support-direction expansion).
inline double distance_to_hull(const std::vector<Vec>& verts, const Vec& p) {
    int start = 0;
    double bestd = norm2(verts[0] - p);
    for (int i = 1; i < static_cast<int>(verts.size()); ++i) {
        double d2 = norm2(verts[static_cast<size_t>(i)] - p);
        if (d2 < bestd) {
            bestd = d2;
            start = i;
        }
    }
    double scale = 1.0;
    for (const Vec& v : verts)
        for (int i = 0; i < v.n; ++i) scale = std::max(scale, std::fabs(v[i]));

    std::vector<int> w = {start};
    Vec nearest = verts[static_cast<size_t>(start)];
    for (int iter = 0; iter < 256; ++iter) {
        // nearest point over all nonempty subsets of the working set
        double bd2 = 1e300;
        Vec bpt;
        std::vector<int> bsub;
        const int m = static_cast<int>(w.size());
        for (int mask = 1; mask < (1 << m); ++mask) {
            std::vector<Vec> sub;
            std::vector<int> ids;
            for (int i = 0; i < m; ++i)
                if (mask & (1 << i)) {
                    sub.push_back(verts[static_cast<size_t>(w[static_cast<size_t>(i)])]);
                    ids.push_back(w[static_cast<size_t>(i)]);
                }
            Vec cand;
            double d2;
            if (detail::affine_nearest(sub, p, cand, d2) && d2 < bd2 - 1e-300) {
                bd2 = d2;
                bpt = cand;
                bsub = ids;
            }
        }
        nearest = bpt;
        w = bsub;
        double dn = std::sqrt(bd2);
        if (dn <= 1e-13 * scale) return 0.0;
        Vec dir = p - nearest;
        int s = 0;
        double bests = -1e300;
        for (int i = 0; i < static_cast<int>(verts.size()); ++i) {
            double v = dot(dir, verts[static_cast<size_t>(i)]);
            if (v > bests) {
                bests = v;
                s = i;
            }
        }
        if (bests <= dot(dir, nearest) + 1e-13 * scale * norm(dir)) return dn;
        bool dup = false;
        for (int i : w)
            if (i == s) dup = true;
        if (dup) return dn;
        w.push_back(s);
    }
    return norm(nearest - p);
}

inline double distance_to_body(const ConvexBody& k, const Vec& p) {
    return distance_to_hull(k.vertices, p);
}

// Hausdorff distance between convex bodies: attained at vertices.
inline double hausdorff(const ConvexBody& a, const ConvexBody& b) {
    if (a.dim != b.dim) throw DimensionMismatch("hausdorff: dimensions disagree");
    double h = 0.0;
    for (const Vec& v : a.vertices) h = std::max(h, distance_to_hull(b.vertices, v));
    for (const Vec& v : b.vertices) h = std::max(h, distance_to_hull(a.vertices, v));
    return h;
}

// Translation t with b ~= a + t (mass centroid match); nullopt when the
// translate check fails beyond tol_abs.
inline std::optional<Vec> translate_between(const ConvexBody& a, const ConvexBody& b, double tol_abs) {
    if (a.dim != b.dim) throw DimensionMismatch("translate_between: dimensions disagree");
    Vec t = b.centroid - a.centroid;
    if (hausdorff(translate(a, t), b) <= tol_abs) return t;
    return std::nullopt;
}

}  // namespace bonn
