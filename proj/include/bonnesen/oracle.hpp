#pragma once

#include <vector>

#include "bonnesen/body.hpp"
#include "bonnesen/error.hpp"
#include "bonnesen/random.hpp"
#include "bonnesen/vec.hpp"

// Brute-force estimators sharing no code with the exact volume/section
// routines: only the raw vertex list and the facet membership predicate
// (what contains() evaluates) are used.

namespace bonn {

struct GridSpec {
    int n = 0;
    Vec lo, hi;
};

inline GridSpec make_grid(const ConvexBody& k, int n) {
    if (n < 16) throw OutOfRange("grid: n must be at least 16");
    GridSpec g;
    g.n = n;
    g.lo = Vec(k.dim);
    g.hi = Vec(k.dim);
    for (int i = 0; i < k.dim; ++i) {
        double lo = 1e300, hi = -1e300;
        for (const Vec& v : k.vertices) {
            lo = std::min(lo, v[i]);
            hi = std::max(hi, v[i]);
        }
        double pad = 1e-6 * std::max(1.0, hi - lo);
        g.lo[i] = lo - pad;
        g.hi[i] = hi + pad;
    }
    return g;
}

namespace detail {

// Counts grid-line centers x0 = lo + (i+1/2)*cell, i in [0,n), that satisfy
// every inequality of `facets` given the other coordinates held in `x`.
// Mathematically the same predicate contains() tests, evaluated row-wise.
inline long count_row(const std::vector<Halfspace>& facets, Vec x, int axis, double lo, double cell,
                      int n) {
    double tlo = -1e300, thi = 1e300;
    for (const Halfspace& f : facets) {
        double a = f.normal[axis];
        double rest = dot(f.normal, x) - a * x[axis];
        double r = f.offset - rest;
        if (a > 1e-300) {
            thi = std::min(thi, r / a);
        } else if (a < -1e-300) {
            tlo = std::max(tlo, r / a);
        } else if (r < 0.0) {
            return 0;
        }
    }
    if (tlo > thi) return 0;
    double ilo = std::ceil((tlo - lo) / cell - 0.5);
    double ihi = std::floor((thi - lo) / cell - 0.5);
    long a = std::max(0L, static_cast<long>(ilo));
    long b = std::min(static_cast<long>(n) - 1, static_cast<long>(ihi));
    return b >= a ? b - a + 1 : 0;
}

}  // namespace detail

// Cell-center counting estimate of the d-volume.
inline double grid_volume(const ConvexBody& k, int n) {
    if (!k.full_dim()) throw DegenerateBody("grid_volume: body must be full-dimensional");
    GridSpec g = make_grid(k, n);
    const int d = k.dim;
    std::vector<double> cell(static_cast<size_t>(d));
    double cellvol = 1.0;
    for (int i = 0; i < d; ++i) {
        cell[static_cast<size_t>(i)] = (g.hi[i] - g.lo[i]) / n;
        cellvol *= cell[static_cast<size_t>(i)];
    }
    long count = 0;
    std::vector<int> idx(static_cast<size_t>(d - 1), 0);
    Vec x(d);
    for (;;) {
        for (int i = 0; i < d - 1; ++i)
            x[i + 1] = g.lo[i + 1] + (idx[static_cast<size_t>(i)] + 0.5) * cell[static_cast<size_t>(i + 1)];
        count += detail::count_row(k.facets, x, 0, g.lo[0], cell[0], n);
        int c = d - 2;
        while (c >= 0 && ++idx[static_cast<size_t>(c)] == n) {
            idx[static_cast<size_t>(c)] = 0;
            --c;
        }
        if (c < 0) break;
    }
    return static_cast<double>(count) * cellvol;
}

struct SampledProfile {
    std::vector<double> offsets;
    std::vector<double> areas;
};

// Section-area estimates by (d-1)-grid counting in u^perp coordinates.
inline SampledProfile grid_section_profile(const ConvexBody& k, const Direction& u, int n_offsets,
                                           int n_grid) {
    if (!k.full_dim()) throw DegenerateBody("grid_section_profile: body must be full-dimensional");
    const int d = k.dim;
    std::vector<Vec> basis = orthonormal_complement(u.u);
    double pmin = 1e300, pmax = -1e300;
    Vec blo(d - 1), bhi(d - 1);
    for (int j = 0; j < d - 1; ++j) {
        blo[j] = 1e300;
        bhi[j] = -1e300;
    }
    for (const Vec& v : k.vertices) {
        double t = dot(v, u.u);
        pmin = std::min(pmin, t);
        pmax = std::max(pmax, t);
        for (int j = 0; j < d - 1; ++j) {
            double y = dot(v, basis[static_cast<size_t>(j)]);
            blo[j] = std::min(blo[j], y);
            bhi[j] = std::max(bhi[j], y);
        }
    }
    // facet system pulled back to (offset-parameterized) section coordinates:
    // point(p, y) = p*u + sum y_j basis_j
    SampledProfile out;
    std::vector<double> cell(static_cast<size_t>(d - 1));
    double cellvol = 1.0;
    for (int j = 0; j < d - 1; ++j) {
        double pad = 1e-9 * std::max(1.0, bhi[j] - blo[j]);
        blo[j] -= pad;
        bhi[j] += pad;
        cell[static_cast<size_t>(j)] = (bhi[j] - blo[j]) / n_grid;
        cellvol *= cell[static_cast<size_t>(j)];
    }
    for (int io = 0; io < n_offsets; ++io) {
        double p = pmin + (io + 0.5) * (pmax - pmin) / n_offsets;
        std::vector<Halfspace> sect;
        sect.reserve(k.facets.size());
        for (const Halfspace& f : k.facets) {
            Halfspace h;
            h.normal = Vec(d - 1);
            for (int j = 0; j < d - 1; ++j) h.normal[j] = dot(f.normal, basis[static_cast<size_t>(j)]);
            h.offset = f.offset - p * dot(f.normal, u.u);
            sect.push_back(h);
        }
        long count = 0;
        if (d - 1 == 1) {
            Vec y(1);
            y[0] = 0.0;
            count = detail::count_row(sect, y, 0, blo[0], cell[0], n_grid);
        } else {
            std::vector<int> idx(static_cast<size_t>(d - 2), 0);
            Vec y(d - 1);
            for (;;) {
                for (int j = 0; j < d - 2; ++j)
                    y[j + 1] = blo[j + 1] + (idx[static_cast<size_t>(j)] + 0.5) * cell[static_cast<size_t>(j + 1)];
                count += detail::count_row(sect, y, 0, blo[0], cell[0], n_grid);
                int c = d - 3;
                while (c >= 0 && ++idx[static_cast<size_t>(c)] == n_grid) {
                    idx[static_cast<size_t>(c)] = 0;
                    --c;
                }
                if (c < 0) break;
            }
        }
        out.offsets.push_back(p);
        out.areas.push_back(static_cast<double>(count) * cellvol);
    }
    return out;
}

// Seeded Monte Carlo spot-check variant (kept behind an explicit call; the
// deterministic cell-center estimator is the default everywhere).
inline double mc_volume(const ConvexBody& k, long samples, uint64_t seed) {
    if (!k.full_dim()) throw DegenerateBody("mc_volume: body must be full-dimensional");
    GridSpec g = make_grid(k, 16);
    SplitMix64 rng(seed);
    const int d = k.dim;
    double boxvol = 1.0;
    for (int i = 0; i < d; ++i) boxvol *= g.hi[i] - g.lo[i];
    long count = 0;
    for (long s = 0; s < samples; ++s) {
        Vec x(d);
        for (int i = 0; i < d; ++i) x[i] = rng.uniform(g.lo[i], g.hi[i]);
        bool in = true;
        for (const Halfspace& f : k.facets)
            if (dot(f.normal, x) > f.offset) {
                in = false;
                break;
            }
        if (in) ++count;
    }
    return boxvol * static_cast<double>(count) / static_cast<double>(samples);
}

}  // namespace bonn
