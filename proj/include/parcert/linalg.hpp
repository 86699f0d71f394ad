#pragma once

#include "parcert/rational.hpp"

#include <optional>
#include <vector>

namespace parcert {

using Vec = std::vector<Rat>;
using Mat = std::vector<Vec>;

inline Vec zero_vec(std::size_t n) { return Vec(n, Rat(0)); }

inline Vec add(const Vec& u, const Vec& v) {
    Vec w(u);
    for (std::size_t k = 0; k < w.size(); ++k) w[k] += v[k];
    return w;
}

inline Vec sub(const Vec& u, const Vec& v) {
    Vec w(u);
    for (std::size_t k = 0; k < w.size(); ++k) w[k] -= v[k];
    return w;
}

inline Vec neg(const Vec& u) {
    Vec w(u);
    for (auto& x : w) x = -x;
    return w;
}

inline Vec scale(const Rat& c, const Vec& u) {
    Vec w(u);
    for (auto& x : w) x *= c;
    return w;
}

inline bool is_zero(const Vec& u) {
    for (const auto& x : u)
        if (x != 0) return false;
    return true;
}

// Coefficient sum; the height of a root written over the simple roots.
inline Rat coord_sum(const Vec& u) {
    Rat s(0);
    for (const auto& x : u) s += x;
    return s;
}

inline Rat dot(const Mat& gram, const Vec& u, const Vec& v) {
    Rat s(0);
    for (std::size_t a = 0; a < u.size(); ++a) {
        if (u[a] == 0) continue;
        for (std::size_t b = 0; b < v.size(); ++b)
            if (v[b] != 0) s += u[a] * gram[a][b] * v[b];
    }
    return s;
}

inline Vec mat_vec(const Mat& m, const Vec& v) {
    Vec w(m.size(), Rat(0));
    for (std::size_t a = 0; a < m.size(); ++a)
        for (std::size_t b = 0; b < v.size(); ++b) w[a] += m[a][b] * v[b];
    return w;
}

// Deterministic ordering used everywhere roots are listed: by coefficient
// sum, then lexicographically on coordinates.
inline bool height_lex_less(const Vec& u, const Vec& v) {
    Rat hu = coord_sum(u), hv = coord_sum(v);
    if (hu != hv) return hu < hv;
    return u < v;
}

// Solve a square nonsingular system exactly.
inline Vec solve_square(Mat a, Vec b) {
    const std::size_t n = a.size();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && a[piv][col] == 0) ++piv;
        if (piv == n) throw std::logic_error("solve_square: singular matrix");
        std::swap(a[piv], a[col]);
        std::swap(b[piv], b[col]);
        for (std::size_t row = 0; row < n; ++row) {
            if (row == col || a[row][col] == 0) continue;
            Rat f = a[row][col] / a[col][col];
            for (std::size_t k = col; k < n; ++k) a[row][k] -= f * a[col][k];
            b[row] -= f * b[col];
        }
    }
    Vec x(n);
    for (std::size_t k = 0; k < n; ++k) x[k] = b[k] / a[k][k];
    return x;
}

// Solve a (possibly under/overdetermined) system a x = b. Returns the
// particular solution with every free variable set to zero, pivoting on the
// leftmost usable column, so the result is deterministic. nullopt if
// inconsistent.
inline std::optional<Vec> solve_consistent(Mat a, Vec b) {
    const std::size_t rows = a.size();
    const std::size_t cols = rows ? a[0].size() : 0;
    std::vector<std::size_t> pivot_col;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = r;
        while (piv < rows && a[piv][c] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(a[piv], a[r]);
        std::swap(b[piv], b[r]);
        for (std::size_t row = 0; row < rows; ++row) {
            if (row == r || a[row][c] == 0) continue;
            Rat f = a[row][c] / a[r][c];
            for (std::size_t k = c; k < cols; ++k) a[row][k] -= f * a[r][k];
            b[row] -= f * b[r];
        }
        pivot_col.push_back(c);
        ++r;
    }
    for (std::size_t row = r; row < rows; ++row)
        if (b[row] != 0) return std::nullopt;
    Vec x(cols, Rat(0));
    for (std::size_t k = 0; k < pivot_col.size(); ++k)
        x[pivot_col[k]] = b[k] / a[k][pivot_col[k]];
    return x;
}

} // namespace parcert
