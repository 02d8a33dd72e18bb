#pragma once

// Test-side oracle: dense Gaussian-rational elimination written independently of the
// library's sparse echelon code. Used to cross-check ranks and kernels.

#include <gmpxx.h>

#include <cstddef>
#include <utility>
#include <vector>

namespace oracle {

struct Q2 {
    mpq_class re, im;

    bool zero() const { return sgn(re) == 0 && sgn(im) == 0; }
    friend Q2 operator+(const Q2& a, const Q2& b) { return {a.re + b.re, a.im + b.im}; }
    friend Q2 operator-(const Q2& a, const Q2& b) { return {a.re - b.re, a.im - b.im}; }
    friend Q2 operator*(const Q2& a, const Q2& b) { return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re}; }
    friend Q2 operator/(const Q2& a, const Q2& b) {
        mpq_class n = b.re * b.re + b.im * b.im;
        return {(a.re * b.re + a.im * b.im) / n, (a.im * b.re - a.re * b.im) / n};
    }
    friend bool operator==(const Q2& a, const Q2& b) { return a.re == b.re && a.im == b.im; }
};

using Matrix = std::vector<std::vector<Q2>>;  // row-major

inline std::size_t rank(Matrix m) {
    std::size_t r = 0;
    const std::size_t rows = m.size(), cols = rows ? m[0].size() : 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && m[p][c].zero()) ++p;
        if (p == rows) continue;
        std::swap(m[p], m[r]);
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c].zero()) continue;
            Q2 f = m[i][c] / m[r][c];
            for (std::size_t j = c; j < cols; ++j) m[i][j] = m[i][j] - f * m[r][j];
        }
        ++r;
    }
    return r;
}

// Determinant by cofactor-free elimination.
inline Q2 det(Matrix m) {
    const std::size_t n = m.size();
    Q2 d{1, 0};
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && m[p][c].zero()) ++p;
        if (p == n) return {0, 0};
        if (p != c) {
            std::swap(m[p], m[c]);
            d = Q2{0, 0} - d;
        }
        d = d * m[c][c];
        for (std::size_t i = c + 1; i < n; ++i) {
            Q2 f = m[i][c] / m[c][c];
            for (std::size_t j = c; j < n; ++j) m[i][j] = m[i][j] - f * m[c][j];
        }
    }
    return d;
}

}  // namespace oracle
