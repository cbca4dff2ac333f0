#pragma once

// Independent dense reference implementation used by tests and the CLI's
// self-check mode. Deliberately shares nothing with the block-structured
// ring/inverse/factor code beyond the Scalar type, so agreement between the
// two is meaningful evidence.

#include <optional>
#include <vector>

#include "blockmat/block_matrix.hpp"
#include "blockmat/errors.hpp"
#include "blockmat/scalar.hpp"

namespace blockmat::oracle {

namespace detail {

inline void place(const BlockMatrix& b, ElementGrid& out, int row_off, int col_off) {
    switch (b.kind()) {
        case BlockKind::Zero:
            break; // grid is zero-initialized
        case BlockKind::ScalarDiag: {
            const Scalar& s = b.scalar_value();
            for (int k = 1; k <= b.elt_rows(); ++k)
                out.at(row_off + k, col_off + k) = s;
            break;
        }
        case BlockKind::Leaf: {
            const ElementGrid& g = b.grid();
            for (int r = 1; r <= g.rows(); ++r)
                for (int c = 1; c <= g.cols(); ++c)
                    out.at(row_off + r, col_off + c) = g.at(r, c);
            break;
        }
        case BlockKind::RBlock: {
            int ro = row_off;
            for (int i = 1; i <= b.block_rows(); ++i) {
                int co = col_off;
                for (int j = 1; j <= b.block_cols(); ++j) {
                    place(b.block(i, j), out, ro, co);
                    co += b.block(i, j).elt_cols();
                }
                ro += b.block(i, 1).elt_rows();
            }
            break;
        }
    }
}

} // namespace detail

/// Reads a block matrix out into a dense grid by recursive block placement.
inline ElementGrid flatten(const BlockMatrix& b) {
    ElementGrid out(b.elt_rows(), b.elt_cols());
    detail::place(b, out, 0, 0);
    return out;
}

inline ElementGrid identity(int n) {
    ElementGrid out(n, n);
    for (int k = 1; k <= n; ++k) out.at(k, k) = Scalar(1);
    return out;
}

inline ElementGrid dense_add(const ElementGrid& a, const ElementGrid& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw DimensionError("dense add: dimension mismatch");
    ElementGrid out(a.rows(), a.cols());
    for (int r = 1; r <= a.rows(); ++r)
        for (int c = 1; c <= a.cols(); ++c) out.at(r, c) = a.at(r, c) + b.at(r, c);
    return out;
}

inline ElementGrid dense_sub(const ElementGrid& a, const ElementGrid& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw DimensionError("dense sub: dimension mismatch");
    ElementGrid out(a.rows(), a.cols());
    for (int r = 1; r <= a.rows(); ++r)
        for (int c = 1; c <= a.cols(); ++c) out.at(r, c) = a.at(r, c) - b.at(r, c);
    return out;
}

inline ElementGrid dense_neg(const ElementGrid& a) {
    ElementGrid out(a.rows(), a.cols());
    for (int r = 1; r <= a.rows(); ++r)
        for (int c = 1; c <= a.cols(); ++c) out.at(r, c) = -a.at(r, c);
    return out;
}

inline ElementGrid dense_conj_transpose(const ElementGrid& a) {
    ElementGrid out(a.cols(), a.rows());
    for (int r = 1; r <= a.rows(); ++r)
        for (int c = 1; c <= a.cols(); ++c) out.at(c, r) = a.at(r, c).conj();
    return out;
}

/// Classical triple-loop product.
inline ElementGrid dense_mul(const ElementGrid& a, const ElementGrid& b) {
    if (a.cols() != b.rows())
        throw DimensionError("dense mul: inner dimensions " + std::to_string(a.cols()) +
                             " and " + std::to_string(b.rows()) + " differ");
    ElementGrid out(a.rows(), b.cols());
    for (int r = 1; r <= a.rows(); ++r)
        for (int c = 1; c <= b.cols(); ++c) {
            Scalar acc(0);
            for (int k = 1; k <= a.cols(); ++k) acc += a.at(r, k) * b.at(k, c);
            out.at(r, c) = acc;
        }
    return out;
}

/// Exact determinant by Gaussian elimination with row swaps.
inline Scalar dense_det(const ElementGrid& a) {
    if (a.rows() != a.cols()) throw DimensionError("dense det: non-square input");
    int n = a.rows();
    ElementGrid m = a;
    Scalar det(1);
    for (int k = 1; k <= n; ++k) {
        int pivot_row = 0;
        for (int r = k; r <= n; ++r)
            if (!m.at(r, k).is_zero()) {
                pivot_row = r;
                break;
            }
        if (pivot_row == 0) return Scalar(0);
        if (pivot_row != k) {
            for (int c = k; c <= n; ++c) std::swap(m.at(k, c), m.at(pivot_row, c));
            det = -det;
        }
        det *= m.at(k, k);
        Scalar inv_pivot = m.at(k, k).inverse();
        for (int r = k + 1; r <= n; ++r) {
            if (m.at(r, k).is_zero()) continue;
            Scalar factor = m.at(r, k) * inv_pivot;
            for (int c = k; c <= n; ++c) m.at(r, c) -= factor * m.at(k, c);
        }
    }
    return det;
}

/// Exact inverse by Gauss-Jordan elimination on [A | I]. Empty optional
/// exactly when the input is singular.
inline std::optional<ElementGrid> dense_inv(const ElementGrid& a) {
    if (a.rows() != a.cols()) throw DimensionError("dense inv: non-square input");
    int n = a.rows();
    ElementGrid m = a;
    ElementGrid inv = identity(n);
    for (int k = 1; k <= n; ++k) {
        int pivot_row = 0;
        for (int r = k; r <= n; ++r)
            if (!m.at(r, k).is_zero()) {
                pivot_row = r;
                break;
            }
        if (pivot_row == 0) return std::nullopt;
        if (pivot_row != k)
            for (int c = 1; c <= n; ++c) {
                std::swap(m.at(k, c), m.at(pivot_row, c));
                std::swap(inv.at(k, c), inv.at(pivot_row, c));
            }
        Scalar inv_pivot = m.at(k, k).inverse();
        for (int c = 1; c <= n; ++c) {
            m.at(k, c) *= inv_pivot;
            inv.at(k, c) *= inv_pivot;
        }
        for (int r = 1; r <= n; ++r) {
            if (r == k || m.at(r, k).is_zero()) continue;
            Scalar factor = m.at(r, k);
            for (int c = 1; c <= n; ++c) {
                m.at(r, c) -= factor * m.at(k, c);
                inv.at(r, c) -= factor * inv.at(k, c);
            }
        }
    }
    return inv;
}

struct DenseLU {
    ElementGrid l;
    ElementGrid u;
};

/// Doolittle LU without row exchanges: L unit lower triangular, U upper
/// triangular, L*U = A. Empty optional on any zero pivot, i.e. whenever some
/// leading principal minor (including det A itself) is singular.
inline std::optional<DenseLU> dense_lu(const ElementGrid& a) {
    if (a.rows() != a.cols()) throw DimensionError("dense lu: non-square input");
    int n = a.rows();
    ElementGrid l = identity(n);
    ElementGrid u(n, n);
    for (int i = 1; i <= n; ++i) {
        for (int j = i; j <= n; ++j) {
            Scalar acc = a.at(i, j);
            for (int m = 1; m < i; ++m) acc -= l.at(i, m) * u.at(m, j);
            u.at(i, j) = acc;
        }
        if (u.at(i, i).is_zero()) return std::nullopt;
        Scalar inv_pivot = u.at(i, i).inverse();
        for (int j = i + 1; j <= n; ++j) {
            Scalar acc = a.at(j, i);
            for (int m = 1; m < i; ++m) acc -= l.at(j, m) * u.at(m, i);
            l.at(j, i) = acc * inv_pivot;
        }
    }
    return DenseLU{std::move(l), std::move(u)};
}

/// Determinant of the k-th leading principal submatrix.
inline Scalar leading_principal_minor(const ElementGrid& a, int k) {
    if (a.rows() != a.cols()) throw DimensionError("minor: non-square input");
    if (k < 1 || k > a.rows()) throw IndexError("minor order out of range");
    ElementGrid sub(k, k);
    for (int r = 1; r <= k; ++r)
        for (int c = 1; c <= k; ++c) sub.at(r, c) = a.at(r, c);
    return dense_det(sub);
}

} // namespace blockmat::oracle
