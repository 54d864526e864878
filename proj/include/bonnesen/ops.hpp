#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "bonnesen/hull.hpp"

namespace bonn {

inline double support(const ConvexBody& k, const Vec& v) {
    if (v.n != k.dim) throw DimensionMismatch("support: direction dimension disagrees");
    if (!(norm(v) > 0.0)) throw ZeroDirection("support: zero direction");
    double best = -1e300;
    for (const Vec& x : k.vertices) best = std::max(best, dot(v, x));
    return best;
}

inline ConvexBody translate(const ConvexBody& k, const Vec& t) {
    ConvexBody r = k;
    for (Vec& v : r.vertices) v += t;
    for (Halfspace& f : r.facets) f.offset += dot(f.normal, t);
    r.centroid += t;
    r.frame_origin += t;
    return r;
}

inline ConvexBody scale_body(const ConvexBody& k, double s) {
    if (!(s > 0.0)) throw OutOfRange("scale: factor must be positive");
    ConvexBody r = k;
    for (Vec& v : r.vertices) v *= s;
    for (Halfspace& f : r.facets) f.offset *= s;
    for (Halfspace& f : r.flat_facets) f.offset *= s;
    r.centroid *= s;
    r.frame_origin *= s;
    double sv = 1.0;
    for (int i = 0; i < k.dim; ++i) sv *= s;
    r.volume *= sv;
    sv = 1.0;
    for (int i = 0; i < k.intrinsic_dim; ++i) sv *= s;
    r.intrinsic_volume *= sv;
    return r;
}

// alpha*A + beta*B, realized as the hull of pairwise vertex combinations.
inline ConvexBody minkowski_combination(const ConvexBody& a, const ConvexBody& b, double alpha,
                                        double beta, const Tolerances& tol = Tolerances::defaults()) {
    if (a.dim != b.dim) throw DimensionMismatch("minkowski_combination: dimensions disagree");
    if (!(alpha > 0.0) || !(beta > 0.0))
        throw OutOfRange("minkowski_combination: coefficients must be positive");
    std::vector<Vec> pts;
    pts.reserve(a.vertices.size() * b.vertices.size());
    for (const Vec& x : a.vertices)
        for (const Vec& y : b.vertices) pts.push_back(alpha * x + beta * y);
    return hull_any(pts, a.dim, tol);
}

// Face {x in K : <v,x> = h_K(v)}; vertices within eps_geom of the max are all
// included so the face is closed.
inline ConvexBody face(const ConvexBody& k, const Direction& v,
                       const Tolerances& tol = Tolerances::defaults()) {
    double h = support(k, v.u);
    double eps = tol.eps_geom * coordinate_scale(k);
    std::vector<Vec> pts;
    for (const Vec& x : k.vertices)
        if (dot(v.u, x) >= h - eps) pts.push_back(x);
    return hull_any(pts, k.dim, tol);
}

// Orthogonal projection into u^perp, expressed in the deterministic basis
// from orthonormal_complement(u). Sections use the same basis, so the two
// are directly comparable as (d-1)-bodies.
inline ConvexBody project(const ConvexBody& k, const Direction& u,
                          const Tolerances& tol = Tolerances::defaults()) {
    if (u.dim() != k.dim) throw DimensionMismatch("project: direction dimension disagrees");
    std::vector<Vec> basis = orthonormal_complement(u.u);
    const int kd = k.dim - 1;
    std::vector<Vec> pts;
    pts.reserve(k.vertices.size());
    for (const Vec& x : k.vertices) {
        Vec y(kd);
        for (int j = 0; j < kd; ++j) y[j] = dot(x, basis[static_cast<size_t>(j)]);
        pts.push_back(y);
    }
    return hull_any(pts, kd, tol);
}

// 1-faces of a full-dimensional body: a vertex pair is an edge iff the
// facets active at both span a (d-1)-dimensional normal space.
inline std::vector<std::pair<int, int>> edges(const ConvexBody& k) {
    if (!k.full_dim()) throw DegenerateBody("edges: body must be full-dimensional");
    const double act_tol = 1e-7 * coordinate_scale(k);
    const int n = static_cast<int>(k.vertices.size());
    std::vector<std::vector<int>> act(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i)
        for (int fi = 0; fi < static_cast<int>(k.facets.size()); ++fi) {
            const Halfspace& f = k.facets[static_cast<size_t>(fi)];
            if (dot(f.normal, k.vertices[static_cast<size_t>(i)]) >= f.offset - act_tol)
                act[static_cast<size_t>(i)].push_back(fi);
        }
    std::vector<std::pair<int, int>> result;
    std::vector<Vec> normals;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            normals.clear();
            size_t pi = 0, pj = 0;
            const auto &ai = act[static_cast<size_t>(i)], &aj = act[static_cast<size_t>(j)];
            while (pi < ai.size() && pj < aj.size()) {
                if (ai[pi] == aj[pj]) {
                    normals.push_back(k.facets[static_cast<size_t>(ai[pi])].normal);
                    ++pi;
                    ++pj;
                } else if (ai[pi] < aj[pj])
                    ++pi;
                else
                    ++pj;
            }
            if (static_cast<int>(normals.size()) >= k.dim - 1 &&
                numeric_rank(normals, k.dim, 1e-7) >= k.dim - 1)
                result.emplace_back(i, j);
        }
    return result;
}

// Parameter range {t : x + t*u in K} for full-dimensional K.
inline std::optional<std::pair<double, double>> chord_range(const ConvexBody& k, const Vec& x,
                                                            const Vec& u,
                                                            const Tolerances& tol = Tolerances::defaults()) {
    const double eps = tol.eps_geom * coordinate_scale(k);
    double lo = -1e300, hi = 1e300;
    for (const Halfspace& f : k.facets) {
        double s = dot(f.normal, u);
        double r = f.offset - dot(f.normal, x);
        if (s > 1e-12) {
            hi = std::min(hi, r / s);
        } else if (s < -1e-12) {
            lo = std::max(lo, r / s);
        } else if (r < -eps) {
            return std::nullopt;
        }
    }
    if (lo > hi + eps) return std::nullopt;
    if (lo > hi) {
        double mid = 0.5 * (lo + hi);
        return std::make_pair(mid, mid);
    }
    return std::make_pair(lo, hi);
}

// Slice K cap {<x,u> = p} as a (d-1)-body in the same basis as project().
// nullopt when the hyperplane misses K.
inline std::optional<ConvexBody> section(const ConvexBody& k, const Direction& u, double p,
                                         const Tolerances& tol = Tolerances::defaults()) {
    if (u.dim() != k.dim) throw DimensionMismatch("section: direction dimension disagrees");
    if (!k.full_dim()) throw DegenerateBody("section: body must be full-dimensional");
    const double eps = tol.eps_geom * coordinate_scale(k);
    std::vector<double> t(k.vertices.size());
    for (size_t i = 0; i < k.vertices.size(); ++i) t[i] = dot(k.vertices[i], u.u);
    std::vector<Vec> cut;
    for (size_t i = 0; i < k.vertices.size(); ++i)
        if (std::fabs(t[i] - p) <= eps) cut.push_back(k.vertices[i]);
    for (const auto& [i, j] : edges(k)) {
        double ti = t[static_cast<size_t>(i)], tj = t[static_cast<size_t>(j)];
        double a = std::min(ti, tj), b = std::max(ti, tj);
        if (a < p - eps && b > p + eps) {
            double w = (p - ti) / (tj - ti);
            cut.push_back(k.vertices[static_cast<size_t>(i)] +
                          w * (k.vertices[static_cast<size_t>(j)] - k.vertices[static_cast<size_t>(i)]));
        }
    }
    if (cut.empty()) return std::nullopt;
    std::vector<Vec> basis = orthonormal_complement(u.u);
    const int kd = k.dim - 1;
    std::vector<Vec> pts;
    pts.reserve(cut.size());
    for (const Vec& x : cut) {
        Vec y(kd);
        for (int j = 0; j < kd; ++j) y[j] = dot(x, basis[static_cast<size_t>(j)]);
        pts.push_back(y);
    }
    return hull_any(pts, kd, tol);
}

// Membership within absolute tolerance `tol_abs`. Degenerate bodies test
// distance to the affine hull plus the facet system in intrinsic coordinates.
inline bool contains(const ConvexBody& k, const Vec& x, double tol_abs) {
    if (x.n != k.dim) throw DimensionMismatch("contains: point dimension disagrees");
    if (k.full_dim()) {
        for (const Halfspace& f : k.facets)
            if (dot(f.normal, x) > f.offset + tol_abs) return false;
        return true;
    }
    Vec r = x - k.frame_origin;
    for (const Vec& b : k.frame_basis) r -= dot(r, b) * b;
    if (norm(r) > tol_abs) return false;
    if (k.intrinsic_dim == 0) return true;
    Vec y = k.to_local(x);
    if (k.intrinsic_dim == 1 && k.flat_facets.empty()) {
        double lo = 1e300, hi = -1e300;
        for (const Vec& v : k.vertices) {
            double t = dot(v - k.frame_origin, k.frame_basis[0]);
            lo = std::min(lo, t);
            hi = std::max(hi, t);
        }
        return y[0] >= lo - tol_abs && y[0] <= hi + tol_abs;
    }
    for (const Halfspace& f : k.flat_facets)
        if (dot(f.normal, y) > f.offset + tol_abs) return false;
    return true;
}

}  // namespace bonn
