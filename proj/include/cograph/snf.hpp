#pragma once

#include <stdexcept>
#include <vector>

#include "bigint.hpp"

namespace cograph {

using IntMatrix = std::vector<std::vector<Int>>;

inline IntMatrix identity_matrix(int n) {
    IntMatrix m(n, std::vector<Int>(n, 0));
    for (int i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

inline IntMatrix mat_mul(const IntMatrix& a, const IntMatrix& b) {
    int r = (int)a.size();
    int mid = r ? (int)a[0].size() : 0;
    int c = mid ? (int)b[0].size() : (b.empty() ? 0 : (int)b[0].size());
    IntMatrix out(r, std::vector<Int>(c, 0));
    for (int i = 0; i < r; ++i)
        for (int k = 0; k < mid; ++k) {
            if (a[i][k] == 0) continue;
            for (int j = 0; j < c; ++j) out[i][j] += a[i][k] * b[k][j];
        }
    return out;
}

// U*A*V = D with U,V unimodular, D diagonal, d1 | d2 | ...
struct SmithNormalForm {
    IntMatrix D, U, V;
    int rows = 0, cols = 0, rank = 0;
    Int det_u = 1, det_v = 1;

    std::vector<Int> invariants() const {
        std::vector<Int> inv;
        for (int i = 0; i < rank; ++i) inv.push_back(D[i][i]);
        return inv;
    }

    bool verify(const IntMatrix& a) const {
        if ((det_u != 1 && det_u != -1) || (det_v != 1 && det_v != -1)) return false;
        IntMatrix uav = mat_mul(mat_mul(U, a), V);
        if (uav != D) return false;
        for (int i = 0; i + 1 < rank; ++i)
            if (D[i + 1][i + 1] % D[i][i] != 0) return false;
        return true;
    }
};

inline SmithNormalForm smith_normal_form(const IntMatrix& a, int cols_if_empty = 0) {
    SmithNormalForm s;
    s.rows = (int)a.size();
    s.cols = s.rows ? (int)a[0].size() : cols_if_empty;
    s.D = a;
    s.U = identity_matrix(s.rows);
    s.V = identity_matrix(s.cols);
    IntMatrix& D = s.D;
    IntMatrix& U = s.U;
    IntMatrix& V = s.V;
    int m = s.rows, n = s.cols;

    auto swap_rows = [&](int i, int j) {
        if (i == j) return;
        std::swap(D[i], D[j]);
        std::swap(U[i], U[j]);
        s.det_u = -s.det_u;
    };
    auto swap_cols = [&](int i, int j) {
        if (i == j) return;
        for (auto& row : D) std::swap(row[i], row[j]);
        for (auto& row : V) std::swap(row[i], row[j]);
        s.det_v = -s.det_v;
    };
    auto add_row = [&](int dst, int src, const Int& q) { // row_dst += q*row_src
        if (q == 0) return;
        for (int j = 0; j < n; ++j) D[dst][j] += q * D[src][j];
        for (int j = 0; j < m; ++j) U[dst][j] += q * U[src][j];
    };
    auto add_col = [&](int dst, int src, const Int& q) {
        if (q == 0) return;
        for (int i = 0; i < m; ++i) D[i][dst] += q * D[i][src];
        for (int i = 0; i < n; ++i) V[i][dst] += q * V[i][src];
    };
    auto negate_row = [&](int i) {
        for (auto& x : D[i]) x = -x;
        for (auto& x : U[i]) x = -x;
        s.det_u = -s.det_u;
    };

    int t = 0;
    while (t < m && t < n) {
        // find smallest nonzero entry in the remaining block
        int pi = -1, pj = -1;
        for (int i = t; i < m; ++i)
            for (int j = t; j < n; ++j)
                if (D[i][j] != 0) {
                    if (pi == -1 || abs(D[i][j]) < abs(D[pi][pj])) {
                        pi = i;
                        pj = j;
                    }
                }
        if (pi == -1) break;
        swap_rows(t, pi);
        swap_cols(t, pj);

        bool clean = false;
        while (!clean) {
            clean = true;
            for (int i = t + 1; i < m; ++i) {
                if (D[i][t] == 0) continue;
                Int q = D[i][t] / D[t][t];
                add_row(i, t, -q);
                if (D[i][t] != 0) { // remainder became the smaller pivot
                    swap_rows(t, i);
                    clean = false;
                }
            }
            for (int j = t + 1; j < n; ++j) {
                if (D[t][j] == 0) continue;
                Int q = D[t][j] / D[t][t];
                add_col(j, t, -q);
                if (D[t][j] != 0) {
                    swap_cols(t, j);
                    clean = false;
                }
            }
            if (clean) {
                // pivot must divide the rest of the block
                for (int i = t + 1; i < m && clean; ++i)
                    for (int j = t + 1; j < n && clean; ++j)
                        if (D[i][j] % D[t][t] != 0) {
                            add_row(t, i, 1);
                            clean = false;
                        }
            }
        }
        if (D[t][t] < 0) negate_row(t);
        ++t;
    }
    s.rank = t;
    return s;
}

// Membership of a row vector in the row space of the decomposed matrix.
// in_rational_span: target lies in the Q-row space. denominator: least
// d >= 1 with d*target in the integer row lattice (1 means the target
// itself is a Z-combination of rows).
struct RowSpaceMembership {
    bool in_rational_span = false;
    Int denominator = 0;
};

inline RowSpaceMembership row_space_membership(const SmithNormalForm& s,
                                               const std::vector<Int>& target) {
    if ((int)target.size() != s.cols)
        throw std::invalid_argument("target length mismatch");
    // z = target * V ; then w*D = z needs w_i = z_i/d_i
    std::vector<Int> z(s.cols, 0);
    for (int j = 0; j < s.cols; ++j)
        for (int i = 0; i < s.cols; ++i)
            if (target[i] != 0) z[j] += target[i] * s.V[i][j];
    RowSpaceMembership r;
    for (int i = s.rank; i < s.cols; ++i)
        if (z[i] != 0) return r; // outside the rational span
    r.in_rational_span = true;
    Int den = 1;
    for (int i = 0; i < s.rank; ++i) {
        if (z[i] == 0) continue;
        Int g = int_gcd(s.D[i][i], z[i]);
        den = int_lcm(den, s.D[i][i] / g);
    }
    r.denominator = den;
    return r;
}

inline bool in_integer_row_lattice(const SmithNormalForm& s, const std::vector<Int>& target) {
    auto r = row_space_membership(s, target);
    return r.in_rational_span && r.denominator == 1;
}

// Basis of the integer kernel {x : A x = 0}: trailing columns of V.
inline std::vector<std::vector<Int>> kernel_basis(const SmithNormalForm& s) {
    std::vector<std::vector<Int>> basis;
    for (int j = s.rank; j < s.cols; ++j) {
        std::vector<Int> col(s.cols);
        for (int i = 0; i < s.cols; ++i) col[i] = s.V[i][j];
        basis.push_back(std::move(col));
    }
    return basis;
}

} // namespace cograph
