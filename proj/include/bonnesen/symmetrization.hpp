#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "bonnesen/profiles.hpp"

namespace bonn {

// Chord description of a full-dimensional body along u:
// K = {x + lam*u : x in base, -g(x) <= lam <= f(x)} with f, g concave.
struct ChordFunction {
    ConvexBody base;  // pi_u K, in u^perp coordinates
    ConvexBody body;
    Vec u;
    std::vector<Vec> basis;

    Vec lift(const Vec& x) const {
        Vec p = Vec::zero(u.n);
        for (int j = 0; j < x.n; ++j) p += x[j] * basis[static_cast<size_t>(j)];
        return p;
    }
    // chord parameter range (lo, hi) at base point x; f(x) = hi, g(x) = -lo
    std::optional<std::pair<double, double>> chord(const Vec& x) const {
        return chord_range(body, lift(x), u);
    }
    double f(const Vec& x) const {
        auto c = chord(x);
        return c ? c->second : 0.0;
    }
    double g(const Vec& x) const {
        auto c = chord(x);
        return c ? -c->first : 0.0;
    }
};

inline ChordFunction chord_function(const ConvexBody& k, const Direction& u,
                                    const Tolerances& tol = Tolerances::defaults()) {
    if (!k.full_dim()) throw DegenerateBody("chord_function: body must be full-dimensional");
    ChordFunction cf;
    cf.base = project(k, u, tol);
    cf.body = k;
    cf.u = u.u;
    cf.basis = orthonormal_complement(u.u);
    return cf;
}

// Steiner symmetral S_u K: every chord parallel to u recentered onto u^perp.
// d = 2: exact polygon via vertex-offset breakpoints (grid_n ignored).
// d >= 3: inner approximation, hull of symmetrized chord endpoints over an
// inclusive grid of the base plus the projected vertices; nested grids give
// nested hulls, so refinement is monotone.
inline ConvexBody steiner(const ConvexBody& k, const Direction& u, int grid_n,
                          const Tolerances& tol = Tolerances::defaults()) {
    if (!k.full_dim()) throw DegenerateBody("steiner: body must be full-dimensional");
    if (u.dim() != k.dim) throw DimensionMismatch("steiner: direction dimension disagrees");
    const int d = k.dim;
    if (d >= 3 && grid_n < 8) throw OutOfRange("steiner: grid_n must be at least 8");
    ChordFunction cf = chord_function(k, u, tol);

    std::vector<Vec> out;
    auto emit = [&](const Vec& x) {
        auto c = cf.chord(x);
        if (!c) return;
        double half = 0.5 * std::max(0.0, c->second - c->first);
        Vec p = cf.lift(x);
        out.push_back(p + half * u.u);
        out.push_back(p - half * u.u);
    };

    if (d == 2) {
        std::vector<double> bps;
        for (const Vec& v : k.vertices) bps.push_back(dot(v, cf.basis[0]));
        std::sort(bps.begin(), bps.end());
        for (double t : bps) emit(Vec{t});
    } else {
        Vec lo(d - 1), hi(d - 1);
        for (int j = 0; j < d - 1; ++j) {
            lo[j] = 1e300;
            hi[j] = -1e300;
        }
        for (const Vec& v : cf.base.vertices)
            for (int j = 0; j < d - 1; ++j) {
                lo[j] = std::min(lo[j], v[j]);
                hi[j] = std::max(hi[j], v[j]);
            }
        std::vector<int> idx(static_cast<size_t>(d - 1), 0);
        for (;;) {
            Vec x(d - 1);
            for (int j = 0; j < d - 1; ++j)
                x[j] = lo[j] + (hi[j] - lo[j]) * idx[static_cast<size_t>(j)] / grid_n;
            emit(x);
            int c = d - 2;
            while (c >= 0 && ++idx[static_cast<size_t>(c)] > grid_n) {
                idx[static_cast<size_t>(c)] = 0;
                --c;
            }
            if (c < 0) break;
        }
        for (const Vec& v : k.vertices) {
            Vec x(d - 1);
            for (int j = 0; j < d - 1; ++j) x[j] = dot(v, cf.basis[static_cast<size_t>(j)]);
            emit(x);
        }
    }
    return hull_any(out, d, tol);
}

// Schwarz rounding R_l K for l = span(u), d = 3: each slice replaced by the
// disk of equal area centered on l, discretized with m_ring points.
inline ConvexBody schwarz(const ConvexBody& k, const Direction& u, int n_slices, int m_ring,
                          const Tolerances& tol = Tolerances::defaults()) {
    if (k.dim != 3) throw Unsupported("schwarz: only d = 3 is supported");
    if (!k.full_dim()) throw DegenerateBody("schwarz: body must be full-dimensional");
    if (n_slices < 8 || m_ring < 8) throw OutOfRange("schwarz: need n_slices >= 8 and m_ring >= 8");
    SectionProfile prof = build_profile(k, u, tol);
    const double pi = 3.14159265358979323846;
    std::vector<Vec> out;
    for (int i = 0; i <= n_slices; ++i) {
        double p = prof.p_min + (prof.p_max - prof.p_min) * i / n_slices;
        double r = std::sqrt(std::max(0.0, prof.area(p)) / pi);
        for (int j = 0; j < m_ring; ++j) {
            double th = 2.0 * pi * j / m_ring;
            out.push_back(p * u.u + (r * std::cos(th)) * prof.basis[0] +
                          (r * std::sin(th)) * prof.basis[1]);
        }
    }
    return hull_any(out, 3, tol);
}

struct InclusionReport {
    bool holds = false;
    double min_margin = 0.0;
};

namespace detail {

// Valid sample points of pi_u K with exact half-chord lengths of K along u.
// The half-chord of S_u K at x equals half the chord length of K at x, so
// these come straight from the H-representation.
struct ChordSamples {
    std::vector<Vec> base_pts;  // u^perp coordinates
    std::vector<double> half;
};

inline ChordSamples sample_half_chords(const ConvexBody& k, const Direction& u, int grid_n,
                                       const Tolerances& tol) {
    const int d = k.dim;
    std::vector<Vec> basis = orthonormal_complement(u.u);
    ChordSamples out;
    auto emit = [&](const Vec& x) {
        Vec p = Vec::zero(d);
        for (int j = 0; j < d - 1; ++j) p += x[j] * basis[static_cast<size_t>(j)];
        auto c = chord_range(k, p, u.u, tol);
        if (!c) return;
        out.base_pts.push_back(x);
        out.half.push_back(0.5 * std::max(0.0, c->second - c->first));
    };
    Vec lo(d - 1), hi(d - 1);
    for (int j = 0; j < d - 1; ++j) {
        lo[j] = 1e300;
        hi[j] = -1e300;
    }
    for (const Vec& v : k.vertices)
        for (int j = 0; j < d - 1; ++j) {
            double y = dot(v, basis[static_cast<size_t>(j)]);
            lo[j] = std::min(lo[j], y);
            hi[j] = std::max(hi[j], y);
        }
    std::vector<int> idx(static_cast<size_t>(d - 1), 0);
    for (;;) {
        Vec x(d - 1);
        for (int j = 0; j < d - 1; ++j)
            x[j] = lo[j] + (hi[j] - lo[j]) * idx[static_cast<size_t>(j)] / grid_n;
        emit(x);
        int cx = d - 2;
        while (cx >= 0 && ++idx[static_cast<size_t>(cx)] > grid_n) {
            idx[static_cast<size_t>(cx)] = 0;
            --cx;
        }
        if (cx < 0) break;
    }
    for (const Vec& v : k.vertices) {
        Vec x(d - 1);
        for (int j = 0; j < d - 1; ++j) x[j] = dot(v, basis[static_cast<size_t>(j)]);
        emit(x);
    }
    return out;
}

}  // namespace detail

// Claim: alpha*S_u A + beta*S_u B is contained in S_u(alpha*A + beta*B).
// Both sides are symmetric through u^perp, so inclusion reduces to half-chord
// comparison over the left side's shadow. The left side's half-chord at
// alpha*x' + beta*x'' is the sup-convolution over matched pairs, so the
// margin is scanned over sampled pairs; all chords are exact (H-rep of A, B,
// and of the exact Minkowski sum), so a true inclusion can never be reported
// violated beyond rounding.
inline InclusionReport check_steiner_inclusion(const ConvexBody& a, const ConvexBody& b, double alpha,
                                               double beta, const Direction& u, int grid_n,
                                               const Tolerances& tol = Tolerances::defaults()) {
    if (a.dim != b.dim) throw DimensionMismatch("check_steiner_inclusion: dimensions disagree");
    const int d = a.dim;
    ConvexBody c = minkowski_combination(a, b, alpha, beta, tol);
    const int side_n = d == 2 ? grid_n : std::min(grid_n, 24);
    detail::ChordSamples sa = detail::sample_half_chords(a, u, side_n, tol);
    detail::ChordSamples sb = detail::sample_half_chords(b, u, side_n, tol);
    std::vector<Vec> basis = orthonormal_complement(u.u);

    double min_margin = 1e300;
    for (size_t i = 0; i < sa.base_pts.size(); ++i)
        for (size_t j = 0; j < sb.base_pts.size(); ++j) {
            Vec x = alpha * sa.base_pts[i] + beta * sb.base_pts[j];
            Vec p = Vec::zero(d);
            for (int t = 0; t < d - 1; ++t) p += x[t] * basis[static_cast<size_t>(t)];
            auto cc = chord_range(c, p, u.u, tol);
            double hc = cc ? 0.5 * std::max(0.0, cc->second - cc->first) : 0.0;
            min_margin = std::min(min_margin, hc - (alpha * sa.half[i] + beta * sb.half[j]));
        }
    double eps_incl = 1e-6 * diameter(c);
    return {min_margin >= -eps_incl, min_margin};
}

// Claim: alpha*R_l A + beta*R_l B is contained in R_l(alpha*A + beta*B),
// l = span(u), d = 3. Checked per slice on the common normalized offset
// parameterization: the rounded radii are exact functions of the section
// areas, so no discretized Schwarz bodies enter the comparison.
inline InclusionReport check_schwarz_inclusion(const ConvexBody& a, const ConvexBody& b, double alpha,
                                               double beta, const Direction& u, int n_slices,
                                               const Tolerances& tol = Tolerances::defaults()) {
    if (a.dim != 3 || b.dim != 3) throw Unsupported("check_schwarz_inclusion: only d = 3");
    ConvexBody c = minkowski_combination(a, b, alpha, beta, tol);
    SectionProfile pa = build_profile(a, u, tol);
    SectionProfile pb = build_profile(b, u, tol);
    SectionProfile pc = build_profile(c, u, tol);
    const double pi = 3.14159265358979323846;
    double min_margin = 1e300;
    for (int i = 0; i <= n_slices; ++i) {
        double t = static_cast<double>(i) / n_slices;
        double pA = pa.p_min + t * (pa.p_max - pa.p_min);
        double pB = pb.p_min + t * (pb.p_max - pb.p_min);
        double p = alpha * pA + beta * pB;
        double rC = std::sqrt(std::max(0.0, pc.area(p)) / pi);
        double rA = std::sqrt(std::max(0.0, pa.area(pA)) / pi);
        double rB = std::sqrt(std::max(0.0, pb.area(pB)) / pi);
        min_margin = std::min(min_margin, rC - (alpha * rA + beta * rB));
    }
    double eps_incl = 1e-6 * diameter(c);
    return {min_margin >= -eps_incl, min_margin};
}

}  // namespace bonn
