#pragma once

#include <optional>
#include <vector>

#include "lfoliate/rat.hpp"

namespace lfoliate {

using RatVec = std::vector<Rat>;
using RatMat = std::vector<RatVec>;  // row major

inline RatMat mat_zero(int r, int c) { return RatMat(r, RatVec(c, Rat(0))); }

inline RatMat mat_identity(int n) {
    RatMat m = mat_zero(n, n);
    for (int i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

inline RatMat mat_mul(const RatMat& a, const RatMat& b) {
    int r = (int)a.size(), k = (int)b.size(), c = (int)b[0].size();
    RatMat m = mat_zero(r, c);
    for (int i = 0; i < r; ++i)
        for (int t = 0; t < k; ++t) {
            if (a[i][t] == 0) continue;
            for (int j = 0; j < c; ++j) m[i][j] += a[i][t] * b[t][j];
        }
    return m;
}

inline bool mat_is_zero(const RatMat& a) {
    for (auto& row : a)
        for (auto& x : row)
            if (x != 0) return false;
    return true;
}

// In-place reduced row echelon form; returns pivot column list.
inline std::vector<int> rref(RatMat& m) {
    std::vector<int> pivots;
    if (m.empty()) return pivots;
    int rows = (int)m.size(), cols = (int)m[0].size();
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int pr = -1;
        for (int i = r; i < rows; ++i)
            if (m[i][c] != 0) {
                pr = i;
                break;
            }
        if (pr < 0) continue;
        std::swap(m[r], m[pr]);
        Rat inv = Rat(1) / m[r][c];
        for (int j = c; j < cols; ++j) m[r][j] *= inv;
        for (int i = 0; i < rows; ++i) {
            if (i == r || m[i][c] == 0) continue;
            Rat f = m[i][c];
            for (int j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

inline int rank(RatMat m) { return (int)rref(m).size(); }

// Basis of the right nullspace of m (list of column vectors).
inline std::vector<RatVec> nullspace(RatMat m) {
    if (m.empty()) return {};
    int cols = (int)m[0].size();
    std::vector<int> pivots = rref(m);
    std::vector<bool> is_pivot(cols, false);
    for (int c : pivots) is_pivot[c] = true;
    std::vector<RatVec> basis;
    for (int f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        RatVec v(cols, Rat(0));
        v[f] = 1;
        for (size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -m[i][f];
        basis.push_back(std::move(v));
    }
    return basis;
}

// Solve m x = b; nullopt when infeasible. Returns one particular solution.
inline std::optional<RatVec> solve(RatMat m, RatVec b) {
    int rows = (int)m.size();
    if (rows == 0) return RatVec{};
    int cols = (int)m[0].size();
    for (int i = 0; i < rows; ++i) m[i].push_back(b[i]);
    std::vector<int> pivots = rref(m);
    // Infeasible iff a pivot lands in the augmented column.
    if (!pivots.empty() && pivots.back() == cols) return std::nullopt;
    RatVec x(cols, Rat(0));
    for (size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = m[i][cols];
    return x;
}

// Row span helper: echelonize the rows of m, dropping zero rows.
inline RatMat row_basis(RatMat m) {
    std::vector<int> pivots = rref(m);
    m.resize(pivots.size());
    return m;
}

// Is v in the row span of basis (basis assumed echelonized or not)?
inline bool in_row_span(const RatMat& basis, const RatVec& v) {
    RatMat m = basis;
    m.push_back(v);
    return rank(m) == rank(basis);
}

// Coordinates of v in the given row basis, if any.
inline std::optional<RatVec> coordinates_in(const RatMat& basis, const RatVec& v) {
    if (basis.empty()) {
        for (auto& x : v)
            if (x != 0) return std::nullopt;
        return RatVec{};
    }
    int n = (int)v.size(), k = (int)basis.size();
    RatMat m = mat_zero(n, k);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < k; ++j) m[i][j] = basis[j][i];
    return solve(m, v);
}

}  // namespace lfoliate
