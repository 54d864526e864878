#pragma once

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <vector>

#include "bonnesen/body.hpp"
#include "bonnesen/error.hpp"
#include "bonnesen/tolerances.hpp"
#include "bonnesen/vec.hpp"

namespace bonn {
namespace detail {

struct RawHull {
    std::vector<int> vertex_ids;  // indices into the working point list
    std::vector<Halfspace> facets;
    std::vector<std::vector<int>> facet_verts;  // per facet, supporting vertex ids
    double volume = 0.0;
    Vec centroid;
};

inline RawHull hull_1d(const std::vector<Vec>& pts) {
    int lo = 0, hi = 0;
    for (int i = 1; i < static_cast<int>(pts.size()); ++i) {
        if (pts[static_cast<size_t>(i)][0] < pts[static_cast<size_t>(lo)][0]) lo = i;
        if (pts[static_cast<size_t>(i)][0] > pts[static_cast<size_t>(hi)][0]) hi = i;
    }
    RawHull r;
    r.vertex_ids = {lo, hi};
    Vec plus{1.0};
    Vec minus{-1.0};
    r.facets = {{plus, pts[static_cast<size_t>(hi)][0]}, {minus, -pts[static_cast<size_t>(lo)][0]}};
    r.facet_verts = {{hi}, {lo}};
    r.volume = pts[static_cast<size_t>(hi)][0] - pts[static_cast<size_t>(lo)][0];
    r.centroid = Vec{0.5 * (pts[static_cast<size_t>(hi)][0] + pts[static_cast<size_t>(lo)][0])};
    return r;
}

// Andrew monotone chain; strict turns only, so midpoints of edges are dropped.
inline RawHull hull_2d(const std::vector<Vec>& pts, double eps_dist) {
    const int n = static_cast<int>(pts.size());
    std::vector<int> order(static_cast<size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        const Vec &pa = pts[static_cast<size_t>(a)], &pb = pts[static_cast<size_t>(b)];
        if (pa[0] != pb[0]) return pa[0] < pb[0];
        return pa[1] < pb[1];
    });
    auto keeps_turn = [&](int o, int a, int b) {
        const Vec &po = pts[static_cast<size_t>(o)], &pa = pts[static_cast<size_t>(a)],
                  &pb = pts[static_cast<size_t>(b)];
        double cross = (pa[0] - po[0]) * (pb[1] - po[1]) - (pa[1] - po[1]) * (pb[0] - po[0]);
        // height of a over chord o-b must exceed eps_dist
        return cross > eps_dist * std::max(1.0, dist(po, pb));
    };
    std::vector<int> chain;
    for (int pass = 0; pass < 2; ++pass) {
        size_t start = chain.size();
        const auto& seq = order;
        for (int idx = 0; idx < n; ++idx) {
            int i = pass == 0 ? seq[static_cast<size_t>(idx)] : seq[static_cast<size_t>(n - 1 - idx)];
            while (chain.size() >= start + 2 &&
                   !keeps_turn(chain[chain.size() - 2], chain[chain.size() - 1], i))
                chain.pop_back();
            chain.push_back(i);
        }
        chain.pop_back();  // endpoint repeats as the next pass's start
    }
    RawHull r;
    r.vertex_ids = chain;  // counterclockwise
    const int m = static_cast<int>(chain.size());
    double area2 = 0.0, cx = 0.0, cy = 0.0;
    for (int i = 0; i < m; ++i) {
        const Vec &p = pts[static_cast<size_t>(chain[static_cast<size_t>(i)])],
                  &q = pts[static_cast<size_t>(chain[static_cast<size_t>((i + 1) % m)])];
        double w = p[0] * q[1] - q[0] * p[1];
        area2 += w;
        cx += (p[0] + q[0]) * w;
        cy += (p[1] + q[1]) * w;
        Vec t = q - p;
        Vec nrm = normalized(Vec{t[1], -t[0]});
        double off = std::max(dot(nrm, p), dot(nrm, q));
        r.facets.push_back({nrm, off});
        r.facet_verts.push_back({chain[static_cast<size_t>(i)], chain[static_cast<size_t>((i + 1) % m)]});
    }
    r.volume = 0.5 * area2;
    r.centroid = Vec{cx / (3.0 * area2), cy / (3.0 * area2)};
    return r;
}

struct SimpFacet {
    std::array<int, kMaxDim> v{};   // k vertex ids
    std::array<int, kMaxDim> nb{};  // neighbor across the ridge opposite v[i]
    Vec normal;
    double offset = 0.0;
    bool alive = true;
    std::vector<int> outside;
};

inline bool facet_plane(const std::vector<Vec>& pts, const std::array<int, kMaxDim>& vid, int k,
                        const Vec& interior, Vec& normal, double& offset, double tiny) {
    std::vector<Vec> span;
    span.reserve(static_cast<size_t>(k - 1));
    const Vec& q0 = pts[static_cast<size_t>(vid[0])];
    for (int i = 1; i < k; ++i) span.push_back(pts[static_cast<size_t>(vid[static_cast<size_t>(i)])] - q0);
    Vec g = generalized_cross(span);
    double m = norm(g);
    if (m <= tiny) return false;
    normal = (1.0 / m) * g;
    offset = dot(normal, q0);
    if (dot(normal, interior) > offset) {
        normal = -normal;
        offset = -offset;
    }
    return true;
}

// Incremental (beneath-beyond) hull in R^k, k in {3,4}, with conflict lists
// and a final full-rescan pass that reinserts any point the lossy
// reassignment dropped while still outside.
inline RawHull hull_kd(const std::vector<Vec>& pts, int k, double scale, double eps_geom) {
    const int n = static_cast<int>(pts.size());
    const double eps_vis = eps_geom * scale;
    const double tiny = 1e-14 * scale;

    // initial simplex: spread-out corners via greedy orthogonal residuals
    std::vector<int> corner;
    {
        int a = 0, b = 0;
        double best = -1.0;
        std::vector<int> cand;
        for (int axis = 0; axis < k; ++axis) {
            int lo = 0, hi = 0;
            for (int i = 1; i < n; ++i) {
                if (pts[static_cast<size_t>(i)][axis] < pts[static_cast<size_t>(lo)][axis]) lo = i;
                if (pts[static_cast<size_t>(i)][axis] > pts[static_cast<size_t>(hi)][axis]) hi = i;
            }
            cand.push_back(lo);
            cand.push_back(hi);
        }
        for (int i : cand)
            for (int j : cand) {
                double d2 = norm2(pts[static_cast<size_t>(i)] - pts[static_cast<size_t>(j)]);
                if (d2 > best) {
                    best = d2;
                    a = i;
                    b = j;
                }
            }
        corner = {a, b};
        std::vector<Vec> basis = {normalized(pts[static_cast<size_t>(b)] - pts[static_cast<size_t>(a)])};
        while (static_cast<int>(corner.size()) < k + 1) {
            int pick = -1;
            double bestres = -1.0;
            for (int i = 0; i < n; ++i) {
                Vec r = pts[static_cast<size_t>(i)] - pts[static_cast<size_t>(a)];
                for (const Vec& e : basis) r -= dot(r, e) * e;
                double m = norm(r);
                if (m > bestres) {
                    bestres = m;
                    pick = i;
                }
            }
            if (pick < 0 || bestres <= eps_vis)
                throw DegenerateBody("hull: affine rank below requested dimension");
            corner.push_back(pick);
            Vec r = pts[static_cast<size_t>(pick)] - pts[static_cast<size_t>(a)];
            for (const Vec& e : basis) r -= dot(r, e) * e;
            basis.push_back(normalized(r));
        }
    }
    Vec m0(k);
    for (int c : corner) m0 += pts[static_cast<size_t>(c)];
    m0 *= 1.0 / static_cast<double>(k + 1);

    std::vector<SimpFacet> facets;
    for (int omit = 0; omit <= k; ++omit) {
        SimpFacet f;
        int t = 0;
        for (int i = 0; i <= k; ++i)
            if (i != omit) f.v[static_cast<size_t>(t++)] = corner[static_cast<size_t>(i)];
        // neighbor across the ridge opposite position t is the facet omitting v[t]
        for (int i = 0; i < k; ++i) {
            int cv = f.v[static_cast<size_t>(i)];
            int pos = 0;
            for (int j = 0; j <= k; ++j)
                if (corner[static_cast<size_t>(j)] == cv) pos = j;
            f.nb[static_cast<size_t>(i)] = pos;
        }
        if (!facet_plane(pts, f.v, k, m0, f.normal, f.offset, tiny))
            throw DegenerateBody("hull: degenerate initial simplex");
        facets.push_back(std::move(f));
    }

    std::vector<char> is_corner(static_cast<size_t>(n), 0);
    for (int c : corner) is_corner[static_cast<size_t>(c)] = 1;
    auto assign_point = [&](int p, const std::vector<int>& candidates) {
        int best = -1;
        double bestviol = eps_vis;
        for (int fi : candidates) {
            const SimpFacet& f = facets[static_cast<size_t>(fi)];
            if (!f.alive) continue;
            double viol = dot(f.normal, pts[static_cast<size_t>(p)]) - f.offset;
            if (viol > bestviol) {
                bestviol = viol;
                best = fi;
            }
        }
        if (best >= 0) facets[static_cast<size_t>(best)].outside.push_back(p);
        return best >= 0;
    };
    {
        std::vector<int> all_f(facets.size());
        std::iota(all_f.begin(), all_f.end(), 0);
        for (int p = 0; p < n; ++p)
            if (!is_corner[static_cast<size_t>(p)]) assign_point(p, all_f);
    }

    std::vector<int> pending;
    for (size_t fi = 0; fi < facets.size(); ++fi)
        if (!facets[fi].outside.empty()) pending.push_back(static_cast<int>(fi));

    std::vector<int> visible, stack, new_ids;
    std::vector<char> seen;
    for (int pass = 0; pass < 64; ++pass) {
        while (!pending.empty()) {
            int fi = pending.back();
            if (!facets[static_cast<size_t>(fi)].alive || facets[static_cast<size_t>(fi)].outside.empty()) {
                pending.pop_back();
                continue;
            }
            // farthest conflict point of this facet
            int p = -1;
            double bestviol = -1.0;
            for (int q : facets[static_cast<size_t>(fi)].outside) {
                double viol = dot(facets[static_cast<size_t>(fi)].normal, pts[static_cast<size_t>(q)]) -
                              facets[static_cast<size_t>(fi)].offset;
                if (viol > bestviol) {
                    bestviol = viol;
                    p = q;
                }
            }
            const Vec& pp = pts[static_cast<size_t>(p)];

            visible.clear();
            stack.assign(1, fi);
            seen.assign(facets.size(), 0);
            seen[static_cast<size_t>(fi)] = 1;
            while (!stack.empty()) {
                int g = stack.back();
                stack.pop_back();
                visible.push_back(g);
                for (int t = 0; t < k; ++t) {
                    int h = facets[static_cast<size_t>(g)].nb[static_cast<size_t>(t)];
                    if (seen[static_cast<size_t>(h)] || !facets[static_cast<size_t>(h)].alive) continue;
                    if (dot(facets[static_cast<size_t>(h)].normal, pp) - facets[static_cast<size_t>(h)].offset >
                        eps_vis) {
                        seen[static_cast<size_t>(h)] = 1;
                        stack.push_back(h);
                    }
                }
            }

            // horizon ridges -> new facets
            std::map<std::array<int, kMaxDim>, std::pair<int, int>> ridge_link;  // sub-ridge -> (facet, slot)
            new_ids.clear();
            for (int g : visible) {
                const auto gv = facets[static_cast<size_t>(g)].v;   // copies: push_back below
                const auto gnb = facets[static_cast<size_t>(g)].nb;  // invalidates references
                for (int t = 0; t < k; ++t) {
                    int h = gnb[static_cast<size_t>(t)];
                    if (seen[static_cast<size_t>(h)]) continue;  // interior ridge of the visible region
                    SimpFacet nf;
                    int w = 0;
                    for (int i = 0; i < k; ++i)
                        if (i != t) nf.v[static_cast<size_t>(w++)] = gv[static_cast<size_t>(i)];
                    nf.v[static_cast<size_t>(k - 1)] = p;
                    if (!facet_plane(pts, nf.v, k, m0, nf.normal, nf.offset, tiny)) {
                        // nearly flat ridge cone: inherit the boundary plane
                        nf.normal = facets[static_cast<size_t>(h)].normal;
                        nf.offset = facets[static_cast<size_t>(h)].offset;
                        for (int i = 0; i < k; ++i)
                            nf.offset = std::max(
                                nf.offset, dot(nf.normal, pts[static_cast<size_t>(nf.v[static_cast<size_t>(i)])]));
                    }
                    int nid = static_cast<int>(facets.size());
                    nf.nb[static_cast<size_t>(k - 1)] = h;
                    // relink the boundary facet's slot that pointed at g
                    for (int s = 0; s < k; ++s)
                        if (facets[static_cast<size_t>(h)].nb[static_cast<size_t>(s)] == g)
                            facets[static_cast<size_t>(h)].nb[static_cast<size_t>(s)] = nid;
                    facets.push_back(std::move(nf));
                    new_ids.push_back(nid);
                }
            }
            // wire adjacency among the new facets via shared sub-ridges
            for (int nid : new_ids) {
                SimpFacet& nf = facets[static_cast<size_t>(nid)];
                for (int t = 0; t + 1 < k; ++t) {  // slots opposite ridge vertices
                    std::array<int, kMaxDim> key{};
                    key.fill(-1);
                    int w = 0;
                    for (int i = 0; i + 1 < k; ++i)
                        if (i != t) key[static_cast<size_t>(w++)] = nf.v[static_cast<size_t>(i)];
                    std::sort(key.begin(), key.begin() + std::max(0, k - 2));
                    auto it = ridge_link.find(key);
                    if (it == ridge_link.end()) {
                        ridge_link[key] = {nid, t};
                    } else {
                        nf.nb[static_cast<size_t>(t)] = it->second.first;
                        facets[static_cast<size_t>(it->second.first)]
                            .nb[static_cast<size_t>(it->second.second)] = nid;
                    }
                }
            }
            // retire the visible region, re-scatter its conflict points
            std::vector<int> orphans;
            for (int g : visible) {
                facets[static_cast<size_t>(g)].alive = false;
                for (int q : facets[static_cast<size_t>(g)].outside)
                    if (q != p) orphans.push_back(q);
                facets[static_cast<size_t>(g)].outside.clear();
            }
            for (int q : orphans) assign_point(q, new_ids);
            for (int nid : new_ids)
                if (!facets[static_cast<size_t>(nid)].outside.empty()) pending.push_back(nid);
        }
        // full rescan: catch points dropped while still outside a survivor
        std::vector<int> alive_ids;
        std::vector<char> on_hull(static_cast<size_t>(n), 0);
        for (size_t fi = 0; fi < facets.size(); ++fi)
            if (facets[fi].alive) {
                alive_ids.push_back(static_cast<int>(fi));
                for (int t = 0; t < k; ++t) on_hull[static_cast<size_t>(facets[fi].v[static_cast<size_t>(t)])] = 1;
            }
        bool dirty = false;
        for (int p = 0; p < n; ++p)
            if (!on_hull[static_cast<size_t>(p)] && assign_point(p, alive_ids)) dirty = true;
        if (!dirty) break;
        for (int fi : alive_ids)
            if (!facets[static_cast<size_t>(fi)].outside.empty()) pending.push_back(fi);
    }

    // measures from the simplicial boundary (exact partition, merge-independent)
    RawHull r;
    double vol = 0.0;
    Vec cent(k);
    std::vector<int> alive_ids;
    for (size_t fi = 0; fi < facets.size(); ++fi)
        if (facets[fi].alive) alive_ids.push_back(static_cast<int>(fi));
    for (int fi : alive_ids) {
        const SimpFacet& f = facets[static_cast<size_t>(fi)];
        std::array<std::array<double, kMaxDim>, kMaxDim> M{};
        for (int i = 0; i < k; ++i) {
            Vec e = pts[static_cast<size_t>(f.v[static_cast<size_t>(i)])] - m0;
            for (int j = 0; j < k; ++j) M[static_cast<size_t>(i)][static_cast<size_t>(j)] = e[j];
        }
        double det = 0.0;
        if (k == 3) {
            det = M[0][0] * (M[1][1] * M[2][2] - M[1][2] * M[2][1]) -
                  M[0][1] * (M[1][0] * M[2][2] - M[1][2] * M[2][0]) +
                  M[0][2] * (M[1][0] * M[2][1] - M[1][1] * M[2][0]);
        } else {
            std::vector<Vec> rows;
            for (int i = 1; i < k; ++i)
                rows.push_back(pts[static_cast<size_t>(f.v[static_cast<size_t>(i)])] -
                               pts[static_cast<size_t>(f.v[0])]);
            Vec g = generalized_cross(rows);
            det = dot(g, pts[static_cast<size_t>(f.v[0])] - m0);
        }
        double fact = k == 3 ? 6.0 : 24.0;
        double sv = std::fabs(det) / fact;
        vol += sv;
        Vec sc = m0;
        for (int i = 0; i < k; ++i) sc += pts[static_cast<size_t>(f.v[static_cast<size_t>(i)])];
        sc *= 1.0 / static_cast<double>(k + 1);
        cent += sv * sc;
    }
    r.volume = vol;
    r.centroid = vol > 0.0 ? (1.0 / vol) * cent : m0;

    // merge coplanar simplicial facets into true facets (area-weighted groups)
    struct Group {
        Vec nsum;
        double offsum = 0.0, wsum = 0.0;
    };
    std::vector<Group> groups;
    std::vector<double> area(alive_ids.size());
    std::vector<size_t> order(alive_ids.size());
    for (size_t i = 0; i < alive_ids.size(); ++i) {
        const SimpFacet& f = facets[static_cast<size_t>(alive_ids[i])];
        std::vector<Vec> rows;
        for (int t = 1; t < k; ++t)
            rows.push_back(pts[static_cast<size_t>(f.v[static_cast<size_t>(t)])] -
                           pts[static_cast<size_t>(f.v[0])]);
        area[i] = norm(generalized_cross(rows));
        order[i] = i;
    }
    std::sort(order.begin(), order.end(), [&](size_t a, size_t b) { return area[a] > area[b]; });
    const double merge_dot = 1.0 - 1e-7;
    const double merge_off = 1e-7 * scale;
    for (size_t oi : order) {
        const SimpFacet& f = facets[static_cast<size_t>(alive_ids[oi])];
        int hit = -1;
        for (size_t gi = 0; gi < groups.size(); ++gi) {
            Vec rep = normalized(groups[gi].nsum);
            double roff = groups[gi].offsum / groups[gi].wsum;
            if (dot(rep, f.normal) >= merge_dot && std::fabs(f.offset - roff) <= merge_off) {
                hit = static_cast<int>(gi);
                break;
            }
        }
        double w = std::max(area[oi], tiny);
        if (hit < 0) {
            groups.push_back({w * f.normal, w * f.offset, w});
        } else {
            groups[static_cast<size_t>(hit)].nsum += w * f.normal;
            groups[static_cast<size_t>(hit)].offsum += w * f.offset;
            groups[static_cast<size_t>(hit)].wsum += w;
        }
    }

    // candidate vertices = union of alive facet corners
    std::vector<int> cand;
    {
        std::vector<char> mark(static_cast<size_t>(n), 0);
        for (int fi : alive_ids)
            for (int t = 0; t < k; ++t) {
                int v = facets[static_cast<size_t>(fi)].v[static_cast<size_t>(t)];
                if (!mark[static_cast<size_t>(v)]) {
                    mark[static_cast<size_t>(v)] = 1;
                    cand.push_back(v);
                }
            }
        std::sort(cand.begin(), cand.end());
    }
    std::vector<Halfspace> merged;
    for (const Group& g : groups) {
        Vec nrm = normalized(g.nsum);
        double off = -1e300;
        for (int v : cand) off = std::max(off, dot(nrm, pts[static_cast<size_t>(v)]));
        merged.push_back({nrm, off});
    }

    // a candidate is a true vertex iff its active facet normals span R^k
    const double act_tol = 1e-7 * scale;
    r.facet_verts.assign(merged.size(), {});
    for (int v : cand) {
        std::vector<Vec> act;
        std::vector<size_t> act_id;
        for (size_t gi = 0; gi < merged.size(); ++gi) {
            if (dot(merged[gi].normal, pts[static_cast<size_t>(v)]) >= merged[gi].offset - act_tol) {
                act.push_back(merged[gi].normal);
                act_id.push_back(gi);
            }
        }
        if (numeric_rank(act, k, 1e-7) == k) {
            r.vertex_ids.push_back(v);
            for (size_t gi : act_id) r.facet_verts[gi].push_back(v);
        }
    }
    r.facets = std::move(merged);
    return r;
}

}  // namespace detail

// Convex hull for points in R^d (any intrinsic dimension <= d). Internal
// entry point: accepts d = 1; the public hull() guards 2 <= d <= 4.
inline ConvexBody hull_any(const std::vector<Vec>& points, int dim,
                           const Tolerances& tol = Tolerances::defaults()) {
    if (points.empty()) throw GeomError("hull: need at least one point");
    for (const Vec& p : points)
        if (p.n != dim) throw DimensionMismatch("hull: point dimension disagrees");

    double scale = 1.0;
    for (const Vec& p : points)
        for (int i = 0; i < dim; ++i) scale = std::max(scale, std::fabs(p[i]));
    const double eps = tol.eps_geom * scale;

    // dedup within eps
    std::vector<Vec> pts;
    std::vector<int> src;
    for (int i = 0; i < static_cast<int>(points.size()); ++i) {
        bool dup = false;
        for (const Vec& q : pts)
            if (dist(points[static_cast<size_t>(i)], q) <= eps) {
                dup = true;
                break;
            }
        if (!dup) {
            pts.push_back(points[static_cast<size_t>(i)]);
            src.push_back(i);
        }
    }

    // affine frame: origin = mean, basis by greedy residual Gram-Schmidt
    Vec origin(dim);
    for (const Vec& p : pts) origin += p;
    origin *= 1.0 / static_cast<double>(pts.size());
    std::vector<Vec> basis;
    while (static_cast<int>(basis.size()) < dim) {
        int pick = -1;
        double bestres = eps;
        for (int i = 0; i < static_cast<int>(pts.size()); ++i) {
            Vec r = pts[static_cast<size_t>(i)] - origin;
            for (const Vec& b : basis) r -= dot(r, b) * b;
            double m = norm(r);
            if (m > bestres) {
                bestres = m;
                pick = i;
            }
        }
        if (pick < 0) break;
        Vec r = pts[static_cast<size_t>(pick)] - origin;
        for (const Vec& b : basis) r -= dot(r, b) * b;
        basis.push_back(normalized(r));
    }
    const int k = static_cast<int>(basis.size());

    ConvexBody body;
    body.dim = dim;
    body.intrinsic_dim = k;
    body.frame_origin = origin;
    body.frame_basis = basis;

    if (k == 0) {
        body.vertices = {pts[0]};
        body.centroid = pts[0];
        body.frame_origin = pts[0];
        return body;
    }

    const bool fulldim = (k == dim);
    std::vector<Vec> work;
    if (fulldim) {
        work = pts;
        body.frame_origin = Vec::zero(dim);
        body.frame_basis.clear();
        for (int i = 0; i < dim; ++i) body.frame_basis.push_back(Vec::axis(i, dim));
    } else {
        work.reserve(pts.size());
        for (const Vec& p : pts) {
            Vec y(k);
            for (int j = 0; j < k; ++j) y[j] = dot(p - origin, basis[static_cast<size_t>(j)]);
            work.push_back(y);
        }
    }

    detail::RawHull raw;
    if (k == 1)
        raw = detail::hull_1d(work);
    else if (k == 2)
        raw = detail::hull_2d(work, eps);
    else
        raw = detail::hull_kd(work, k, scale, tol.eps_geom);

    for (int id : raw.vertex_ids) body.vertices.push_back(pts[static_cast<size_t>(id)]);
    body.intrinsic_volume = raw.volume;
    if (fulldim) {
        body.volume = raw.volume;
        body.centroid = raw.centroid;
        body.facets = std::move(raw.facets);
    } else {
        body.volume = 0.0;
        body.centroid = body.to_ambient(raw.centroid);
        body.flat_facets = std::move(raw.facets);
    }
    (void)src;
    return body;
}

// Convex hull of a point set; extreme points only in `vertices`; facets
// populated when the hull is full-dimensional.
inline ConvexBody hull(const std::vector<Vec>& points, int dim,
                       const Tolerances& tol = Tolerances::defaults()) {
    if (dim < 2 || dim > kMaxDim)
        throw Unsupported("hull: dimension must be between 2 and 4");
    return hull_any(points, dim, tol);
}

}  // namespace bonn
