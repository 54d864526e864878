#pragma once

#include <array>
#include <cassert>
#include <cmath>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace bonn {

inline constexpr int kMaxDim = 4;

// Point/vector in R^n for 1 <= n <= kMaxDim. Fixed storage, runtime dimension.
struct Vec {
    std::array<double, kMaxDim> c{};
    int n = 0;

    Vec() = default;
    explicit Vec(int dim) : n(dim) { assert(dim >= 0 && dim <= kMaxDim); }
    Vec(std::initializer_list<double> xs) : n(static_cast<int>(xs.size())) {
        assert(n <= kMaxDim);
        int i = 0;
        for (double x : xs) c[static_cast<size_t>(i++)] = x;
    }

    static Vec zero(int dim) { return Vec(dim); }
    static Vec axis(int i, int dim) {
        Vec v(dim);
        v.c[static_cast<size_t>(i)] = 1.0;
        return v;
    }

    double& operator[](int i) { return c[static_cast<size_t>(i)]; }
    double operator[](int i) const { return c[static_cast<size_t>(i)]; }

    Vec& operator+=(const Vec& o) {
        for (int i = 0; i < n; ++i) c[static_cast<size_t>(i)] += o[i];
        return *this;
    }
    Vec& operator-=(const Vec& o) {
        for (int i = 0; i < n; ++i) c[static_cast<size_t>(i)] -= o[i];
        return *this;
    }
    Vec& operator*=(double s) {
        for (int i = 0; i < n; ++i) c[static_cast<size_t>(i)] *= s;
        return *this;
    }

    friend Vec operator+(Vec a, const Vec& b) { return a += b; }
    friend Vec operator-(Vec a, const Vec& b) { return a -= b; }
    friend Vec operator*(double s, Vec a) { return a *= s; }
    friend Vec operator*(Vec a, double s) { return a *= s; }
    friend Vec operator-(Vec a) { return a *= -1.0; }
};

inline double dot(const Vec& a, const Vec& b) {
    assert(a.n == b.n);
    double s = 0.0;
    for (int i = 0; i < a.n; ++i) s += a[i] * b[i];
    return s;
}

inline double norm2(const Vec& a) { return dot(a, a); }
inline double norm(const Vec& a) { return std::sqrt(norm2(a)); }
inline double dist(const Vec& a, const Vec& b) { return norm(a - b); }

inline Vec normalized(const Vec& a) {
    double m = norm(a);
    Vec r = a;
    if (m > 0.0) r *= 1.0 / m;
    return r;
}

// Vector orthogonal to k-1 given vectors in R^k; its norm equals the
// (k-1)-volume of the parallelepiped they span. k = a.size() + 1.
inline Vec generalized_cross(const std::vector<Vec>& a) {
    const int k = static_cast<int>(a.size()) + 1;
    Vec r(k);
    if (k == 2) {
        r[0] = -a[0][1];
        r[1] = a[0][0];
    } else if (k == 3) {
        r[0] = a[0][1] * a[1][2] - a[0][2] * a[1][1];
        r[1] = a[0][2] * a[1][0] - a[0][0] * a[1][2];
        r[2] = a[0][0] * a[1][1] - a[0][1] * a[1][0];
    } else if (k == 4) {
        // cofactor expansion of det with a symbolic top row
        auto det3 = [](double m00, double m01, double m02, double m10, double m11, double m12,
                       double m20, double m21, double m22) {
            return m00 * (m11 * m22 - m12 * m21) - m01 * (m10 * m22 - m12 * m20) +
                   m02 * (m10 * m21 - m11 * m20);
        };
        r[0] = det3(a[0][1], a[0][2], a[0][3], a[1][1], a[1][2], a[1][3], a[2][1], a[2][2], a[2][3]);
        r[1] = -det3(a[0][0], a[0][2], a[0][3], a[1][0], a[1][2], a[1][3], a[2][0], a[2][2], a[2][3]);
        r[2] = det3(a[0][0], a[0][1], a[0][3], a[1][0], a[1][1], a[1][3], a[2][0], a[2][1], a[2][3]);
        r[3] = -det3(a[0][0], a[0][1], a[0][2], a[1][0], a[1][1], a[1][2], a[2][0], a[2][1], a[2][2]);
    } else {
        assert(k == 2 || k == 3 || k == 4);
    }
    return r;
}

// Solves A x = b for a k-by-k system by Gaussian elimination with partial
// pivoting. Returns false when the pivot falls below `min_pivot`.
inline bool solve_linear(std::array<std::array<double, kMaxDim>, kMaxDim>& A,
                         std::array<double, kMaxDim>& b, int k, double min_pivot, Vec& out) {
    std::array<int, kMaxDim> perm{};
    for (int i = 0; i < k; ++i) perm[static_cast<size_t>(i)] = i;
    for (int col = 0; col < k; ++col) {
        int best = col;
        double bestv = std::fabs(A[static_cast<size_t>(col)][static_cast<size_t>(col)]);
        for (int r = col + 1; r < k; ++r) {
            double v = std::fabs(A[static_cast<size_t>(r)][static_cast<size_t>(col)]);
            if (v > bestv) {
                bestv = v;
                best = r;
            }
        }
        if (bestv <= min_pivot) return false;
        if (best != col) {
            std::swap(A[static_cast<size_t>(best)], A[static_cast<size_t>(col)]);
            std::swap(b[static_cast<size_t>(best)], b[static_cast<size_t>(col)]);
        }
        for (int r = col + 1; r < k; ++r) {
            double f = A[static_cast<size_t>(r)][static_cast<size_t>(col)] /
                       A[static_cast<size_t>(col)][static_cast<size_t>(col)];
            if (f == 0.0) continue;
            for (int c2 = col; c2 < k; ++c2)
                A[static_cast<size_t>(r)][static_cast<size_t>(c2)] -=
                    f * A[static_cast<size_t>(col)][static_cast<size_t>(c2)];
            b[static_cast<size_t>(r)] -= f * b[static_cast<size_t>(col)];
        }
    }
    out = Vec(k);
    for (int r = k - 1; r >= 0; --r) {
        double s = b[static_cast<size_t>(r)];
        for (int c2 = r + 1; c2 < k; ++c2)
            s -= A[static_cast<size_t>(r)][static_cast<size_t>(c2)] * out[c2];
        out[r] = s / A[static_cast<size_t>(r)][static_cast<size_t>(r)];
    }
    return true;
}

// Rank of a set of vectors in R^k with tolerance, via modified Gram-Schmidt.
// Optionally returns the orthonormal basis found.
inline int numeric_rank(const std::vector<Vec>& vs, int k, double tol,
                        std::vector<Vec>* basis_out = nullptr) {
    std::vector<Vec> basis;
    for (const Vec& v : vs) {
        Vec r = v;
        for (const Vec& b : basis) r -= dot(r, b) * b;
        if (norm(r) > tol) {
            basis.push_back(normalized(r));
            if (static_cast<int>(basis.size()) == k) break;
        }
    }
    int rank = static_cast<int>(basis.size());
    if (basis_out) *basis_out = std::move(basis);
    return rank;
}

// Deterministic orthonormal basis of u^perp: Gram-Schmidt on the standard
// basis, skipping the coordinate most aligned with u.
inline std::vector<Vec> orthonormal_complement(const Vec& u) {
    const int d = u.n;
    int skip = 0;
    for (int i = 1; i < d; ++i)
        if (std::fabs(u[i]) > std::fabs(u[skip])) skip = i;
    std::vector<Vec> basis;
    Vec un = normalized(u);
    for (int i = 0; i < d; ++i) {
        if (i == skip) continue;
        Vec r = Vec::axis(i, d);
        r -= dot(r, un) * un;
        for (const Vec& b : basis) r -= dot(r, b) * b;
        basis.push_back(normalized(r));
    }
    return basis;
}

}  // namespace bonn
