#pragma once

#include <algorithm>
#include <utility>
#include <vector>

#include "bonnesen/measure.hpp"
#include "bonnesen/ops.hpp"

namespace bonn {

// Per-direction record of the offset -> section-area function p |->
// mu_{d-1}(K cap (pu + L)), L = u^perp. Unimodal by Brunn-Minkowski; Q is the
// global max, [q_lo, q_hi] the arg-max plateau, k-(s)/k+(s) the level bounds.
struct SectionProfile {
    ConvexBody body;
    Direction u;
    double p_min = 0.0, p_max = 0.0;
    double Q = 0.0;
    double q_lo = 0.0, q_hi = 0.0;
    std::vector<double> breakpoints;
    std::vector<double> breakpoint_areas;

    // evaluation caches
    std::vector<Vec> basis;
    std::vector<std::pair<int, int>> edge_list;
    std::vector<double> vert_offset;
    double eps = 0.0;

    // (d-1)-volume of the section at offset p along u.
    double area(double p) const {
        const int d = body.dim;
        const auto& vs = body.vertices;
        thread_local std::vector<Vec> cut;
        cut.clear();
        for (size_t i = 0; i < vs.size(); ++i)
            if (std::fabs(vert_offset[i] - p) <= eps) cut.push_back(vs[i]);
        for (const auto& [i, j] : edge_list) {
            double ti = vert_offset[static_cast<size_t>(i)], tj = vert_offset[static_cast<size_t>(j)];
            double a = std::min(ti, tj), b = std::max(ti, tj);
            if (a < p - eps && b > p + eps) {
                double w = (p - ti) / (tj - ti);
                cut.push_back(vs[static_cast<size_t>(i)] +
                              w * (vs[static_cast<size_t>(j)] - vs[static_cast<size_t>(i)]));
            }
        }
        if (cut.size() < 2) return 0.0;
        if (d == 2) {
            double lo = 1e300, hi = -1e300;
            for (const Vec& x : cut) {
                double y = dot(x, basis[0]);
                lo = std::min(lo, y);
                hi = std::max(hi, y);
            }
            return std::max(0.0, hi - lo);
        }
        if (d == 3) {
            // convex section polygon: angle-sort around the mean, shoelace
            thread_local std::vector<std::pair<double, std::pair<double, double>>> pg;
            pg.clear();
            double mx = 0.0, my = 0.0;
            for (const Vec& x : cut) {
                double a0 = dot(x, basis[0]), a1 = dot(x, basis[1]);
                pg.push_back({0.0, {a0, a1}});
                mx += a0;
                my += a1;
            }
            mx /= static_cast<double>(pg.size());
            my /= static_cast<double>(pg.size());
            for (auto& e : pg) e.first = std::atan2(e.second.second - my, e.second.first - mx);
            std::sort(pg.begin(), pg.end());
            double a2 = 0.0;
            for (size_t i = 0; i < pg.size(); ++i) {
                const auto& p0 = pg[i].second;
                const auto& p1 = pg[(i + 1) % pg.size()].second;
                a2 += p0.first * p1.second - p1.first * p0.second;
            }
            return std::fabs(a2) * 0.5;
        }
        // d == 4: build the 3-dimensional section body
        std::vector<Vec> pts;
        pts.reserve(cut.size());
        for (const Vec& x : cut) {
            Vec y(3);
            for (int j = 0; j < 3; ++j) y[j] = dot(x, basis[static_cast<size_t>(j)]);
            pts.push_back(y);
        }
        ConvexBody s = hull_any(pts, 3);
        return s.full_dim() ? s.volume : 0.0;
    }
};

namespace detail {

// Maximum of a unimodal function on [a, b] by golden-section search.
template <typename F>
inline std::pair<double, double> golden_max(F&& f, double a, double b, int iters = 80) {
    const double inv_phi = 0.6180339887498949;
    double x1 = b - inv_phi * (b - a), x2 = a + inv_phi * (b - a);
    double f1 = f(x1), f2 = f(x2);
    for (int i = 0; i < iters && (b - a) > 1e-14 * std::max(1.0, std::fabs(a) + std::fabs(b)); ++i) {
        if (f1 < f2) {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + inv_phi * (b - a);
            f2 = f(x2);
        } else {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - inv_phi * (b - a);
            f1 = f(x1);
        }
    }
    return f1 >= f2 ? std::make_pair(x1, f1) : std::make_pair(x2, f2);
}

}  // namespace detail

inline constexpr double kOffsetTol = 1e-7;  // eps_off

// Builds the section profile: breakpoints at vertex offsets, Q by scanning
// breakpoint intervals with golden-section refinement (area is smooth between
// breakpoints and unimodal overall), arg-max plateau by bisection at level
// Q(1 - 1e-9) snapped to breakpoints within eps_off.
inline SectionProfile build_profile(const ConvexBody& k, const Direction& u,
                                    const Tolerances& tol = Tolerances::defaults()) {
    if (!k.full_dim()) throw DegenerateBody("build_profile: body must be full-dimensional");
    if (u.dim() != k.dim) throw DimensionMismatch("build_profile: direction dimension disagrees");
    SectionProfile prof{.body = k, .u = u};
    prof.basis = orthonormal_complement(u.u);
    prof.edge_list = edges(k);
    prof.eps = tol.eps_geom * coordinate_scale(k);
    prof.vert_offset.reserve(k.vertices.size());
    for (const Vec& v : k.vertices) prof.vert_offset.push_back(dot(v, u.u));

    std::vector<double> bps = prof.vert_offset;
    std::sort(bps.begin(), bps.end());
    for (double b : bps)
        if (prof.breakpoints.empty() || b - prof.breakpoints.back() > prof.eps)
            prof.breakpoints.push_back(b);
    prof.p_min = prof.breakpoints.front();
    prof.p_max = prof.breakpoints.back();
    for (double b : prof.breakpoints) prof.breakpoint_areas.push_back(prof.area(b));

    size_t ilo = 0, ihi = 0;
    double bpmax = 0.0;
    for (size_t i = 0; i < prof.breakpoints.size(); ++i) bpmax = std::max(bpmax, prof.breakpoint_areas[i]);
    {
        bool seen = false;
        for (size_t i = 0; i < prof.breakpoints.size(); ++i) {
            if (prof.breakpoint_areas[i] >= bpmax * (1.0 - tol.eps_vol)) {
                if (!seen) ilo = i;
                ihi = i;
                seen = true;
            }
        }
    }
    prof.Q = bpmax;
    double arg = prof.breakpoints[ilo];
    auto f = [&](double p) { return prof.area(p); };
    if (ilo > 0) {
        auto [x, fx] = detail::golden_max(f, prof.breakpoints[ilo - 1], prof.breakpoints[ilo]);
        if (fx > prof.Q) {
            prof.Q = fx;
            arg = x;
        }
    }
    if (ihi + 1 < prof.breakpoints.size()) {
        auto [x, fx] = detail::golden_max(f, prof.breakpoints[ihi], prof.breakpoints[ihi + 1]);
        if (fx > prof.Q) {
            prof.Q = fx;
            arg = x;
        }
    }

    // plateau edges at level Q(1 - 1e-9), then snap to breakpoints
    const double s_star = prof.Q * (1.0 - 1e-9);
    auto bisect_left = [&](double lo, double hi) {
        // leftmost p in [lo, hi] with area(p) >= s_star; area(hi) >= s_star
        if (prof.area(lo) >= s_star) return lo;
        for (int i = 0; i < 60 && hi - lo > 1e-14 * std::max(1.0, std::fabs(hi)); ++i) {
            double mid = 0.5 * (lo + hi);
            (prof.area(mid) >= s_star ? hi : lo) = mid;
        }
        return hi;
    };
    auto bisect_right = [&](double lo, double hi) {
        if (prof.area(hi) >= s_star) return hi;
        for (int i = 0; i < 60 && hi - lo > 1e-14 * std::max(1.0, std::fabs(hi)); ++i) {
            double mid = 0.5 * (lo + hi);
            (prof.area(mid) >= s_star ? lo : hi) = mid;
        }
        return lo;
    };
    prof.q_lo = bisect_left(prof.p_min, arg);
    prof.q_hi = bisect_right(arg, prof.p_max);
    for (double b : prof.breakpoints) {
        if (std::fabs(prof.q_lo - b) <= kOffsetTol) {
            prof.q_lo = b;
            break;
        }
    }
    for (double b : prof.breakpoints) {
        if (std::fabs(prof.q_hi - b) <= kOffsetTol) prof.q_hi = b;
    }
    prof.Q = std::max({prof.Q, prof.area(prof.q_lo), prof.area(prof.q_hi)});
    return prof;
}

// k-(s) = min{p : area(p) >= s}, k+(s) = max{p : area(p) >= s}, by bisection
// on the monotone branches. When the bottom (top) cap already has area >= s
// the bound clamps to p_min (p_max).
inline std::pair<double, double> level_bounds(const SectionProfile& prof, double s,
                                              const Tolerances& tol = Tolerances::defaults()) {
    if (!(s > 0.0) || s > prof.Q * (1.0 + tol.eps_vol))
        throw OutOfRange("level_bounds: s outside (0, Q]");
    if (s >= prof.Q * (1.0 - 1e-12)) return {prof.q_lo, prof.q_hi};

    auto area_ge = [&](double p) { return prof.area(p) >= s; };
    double km, kp;
    if (area_ge(prof.p_min)) {
        km = prof.p_min;
    } else {
        double lo = prof.p_min, hi = prof.q_lo;
        for (int i = 0; i < 52 && hi - lo > 1e-12 * std::max(1.0, std::fabs(hi)); ++i) {
            double mid = 0.5 * (lo + hi);
            (area_ge(mid) ? hi : lo) = mid;
        }
        km = hi;
    }
    if (area_ge(prof.p_max)) {
        kp = prof.p_max;
    } else {
        double lo = prof.q_hi, hi = prof.p_max;
        for (int i = 0; i < 52 && hi - lo > 1e-12 * std::max(1.0, std::fabs(hi)); ++i) {
            double mid = 0.5 * (lo + hi);
            (area_ge(mid) ? lo : hi) = mid;
        }
        kp = lo;
    }
    return {km, kp};
}

// Layer-cake identity: integral over s in (0, Q] of k+(s) - k-(s) by the
// composite midpoint rule; converges to volume(K).
inline double layer_cake_volume(const SectionProfile& prof, int n_levels,
                                const Tolerances& tol = Tolerances::defaults()) {
    if (n_levels < 16) throw OutOfRange("layer_cake_volume: n_levels must be at least 16");
    const double h = prof.Q / n_levels;
    double sum = 0.0;
    for (int j = 0; j < n_levels; ++j) {
        double s = (j + 0.5) * h;
        auto [km, kp] = level_bounds(prof, s, tol);
        sum += kp - km;
    }
    return sum * h;
}

}  // namespace bonn
