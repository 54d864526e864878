#pragma once

#include <cmath>
#include <string>

#include "bonnesen/profiles.hpp"

namespace bonn {

enum class Mode { Section, Projection };

inline std::string to_string(Mode m) { return m == Mode::Section ? "section" : "projection"; }

// Both sides of the inequality chain lhs >= bonnesen_rhs >= bm_rhs for one
// (A, B, alpha, beta, u) instance, with equality flags at eps_eq relative.
struct BonnesenReport {
    Mode mode = Mode::Section;
    double lhs = 0.0;
    double M = 0.0, N = 0.0;
    double bonnesen_rhs = 0.0;
    double bm_rhs = 0.0;
    double gap_bonnesen = 0.0;
    double gap_holder = 0.0;
    bool equality_bonnesen = false;
    bool equality_holder = false;
    double holder_ratio_lhs = 0.0;
    double holder_ratio_rhs = 0.0;
};

// Brunn-Minkowski right-hand side (alpha*volA^(1/d) + beta*volB^(1/d))^d.
inline double bm_bound(double vol_a, double vol_b, double alpha, double beta, int d) {
    if (!(vol_a > 0.0) || !(vol_b > 0.0)) throw NonPositiveVolume("bm_bound: volumes must be positive");
    if (!(alpha > 0.0) || !(beta > 0.0)) throw OutOfRange("bm_bound: coefficients must be positive");
    double root = alpha * std::pow(vol_a, 1.0 / d) + beta * std::pow(vol_b, 1.0 / d);
    return std::pow(root, static_cast<double>(d));
}

// Bonnesen right-hand side
// (alpha*M^(1/(d-1)) + beta*N^(1/(d-1)))^(d-1) * (alpha*volA/M + beta*volB/N).
// Always >= bm_bound by the Holder inequality.
inline double bonnesen_bound(double vol_a, double vol_b, double m_max, double n_max, double alpha,
                             double beta, int d) {
    if (!(vol_a > 0.0) || !(vol_b > 0.0) || !(m_max > 0.0) || !(n_max > 0.0))
        throw NonPositiveVolume("bonnesen_bound: volumes must be positive");
    if (!(alpha > 0.0) || !(beta > 0.0))
        throw OutOfRange("bonnesen_bound: coefficients must be positive");
    double cross =
        alpha * std::pow(m_max, 1.0 / (d - 1)) + beta * std::pow(n_max, 1.0 / (d - 1));
    return std::pow(cross, static_cast<double>(d - 1)) * (alpha * vol_a / m_max + beta * vol_b / n_max);
}

// Computes lhs = vol(alpha*A + beta*B) and both bounds. Section mode reads
// M, N off the section profiles along u (hyperplanes parallel to L = u^perp);
// Projection mode uses the shadow volumes.
inline BonnesenReport verify_chain(const ConvexBody& a, const ConvexBody& b, double alpha, double beta,
                                   const Direction& u, Mode mode,
                                   const Tolerances& tol = Tolerances::defaults()) {
    if (a.dim != b.dim) throw DimensionMismatch("verify_chain: dimensions disagree");
    if (!a.full_dim() || !b.full_dim()) throw DegenerateBody("verify_chain: bodies must be full-dimensional");
    if (!(alpha > 0.0) || !(beta > 0.0)) throw OutOfRange("verify_chain: coefficients must be positive");

    BonnesenReport r;
    r.mode = mode;
    if (mode == Mode::Section) {
        r.M = build_profile(a, u, tol).Q;
        r.N = build_profile(b, u, tol).Q;
    } else {
        r.M = volume(project(a, u, tol));
        r.N = volume(project(b, u, tol));
    }
    ConvexBody c = minkowski_combination(a, b, alpha, beta, tol);
    r.lhs = volume(c);
    const int d = a.dim;
    r.bonnesen_rhs = bonnesen_bound(volume(a), volume(b), r.M, r.N, alpha, beta, d);
    r.bm_rhs = bm_bound(volume(a), volume(b), alpha, beta, d);
    r.gap_bonnesen = r.lhs - r.bonnesen_rhs;
    r.gap_holder = r.bonnesen_rhs - r.bm_rhs;
    r.holder_ratio_lhs = std::pow(volume(a), 1.0 / d) / std::pow(r.M, 1.0 / (d - 1));
    r.holder_ratio_rhs = std::pow(volume(b), 1.0 / d) / std::pow(r.N, 1.0 / (d - 1));
    r.equality_bonnesen = std::fabs(r.gap_bonnesen) <= tol.eps_eq * r.lhs;
    r.equality_holder = std::fabs(r.holder_ratio_lhs - r.holder_ratio_rhs) <=
                        tol.eps_eq * std::max(r.holder_ratio_lhs, r.holder_ratio_rhs);
    return r;
}

}  // namespace bonn
