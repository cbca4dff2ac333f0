#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "blockmat/block_matrix.hpp"
#include "blockmat/errors.hpp"
#include "blockmat/inverse.hpp"
#include "blockmat/ring.hpp"

namespace blockmat {

/// M = P * L * U with P a permutation, L unit lower triangular and U upper
/// triangular, both element-wise: every diagonal block of L is itself unit
/// lower triangular, and of U upper triangular, recursively.
struct PLUResult {
    BlockMatrix p;
    BlockMatrix l;
    BlockMatrix u;
};

/// True iff every element above the diagonal is 0 and every diagonal
/// element is 1. Throws DimensionError on non-square input.
inline bool is_unit_lower(const BlockMatrix& b) {
    if (!b.is_square())
        throw DimensionError("is_unit_lower: non-square matrix");
    for (int r = 1; r <= b.elt_rows(); ++r)
        for (int c = r; c <= b.elt_cols(); ++c) {
            const Scalar e = b.elt(r, c);
            if (c == r ? !e.is_one() : !e.is_zero()) return false;
        }
    return true;
}

/// True iff every element below the diagonal is 0.
inline bool is_upper(const BlockMatrix& b) {
    if (!b.is_square())
        throw DimensionError("is_upper: non-square matrix");
    for (int r = 2; r <= b.elt_rows(); ++r)
        for (int c = 1; c < r; ++c)
            if (!b.elt(r, c).is_zero()) return false;
    return true;
}

namespace detail {

/// Doolittle LU without row exchanges for leaf nodes. Empty optional on any
/// zero pivot, i.e. whenever a leading principal minor is singular.
inline std::optional<std::pair<ElementGrid, ElementGrid>> leaf_lu(const ElementGrid& a) {
    int n = a.rows();
    ElementGrid l(n, n);
    ElementGrid u(n, n);
    for (int k = 1; k <= n; ++k) l.at(k, k) = Scalar(1);
    for (int i = 1; i <= n; ++i) {
        for (int j = i; j <= n; ++j) {
            Scalar acc = a.at(i, j);
            for (int m = 1; m < i; ++m) acc -= l.at(i, m) * u.at(m, j);
            u.at(i, j) = acc;
        }
        if (u.at(i, i).is_zero()) return std::nullopt;
        Scalar pivot_inv = u.at(i, i).inverse();
        for (int j = i + 1; j <= n; ++j) {
            Scalar acc = a.at(j, i);
            for (int m = 1; m < i; ++m) acc -= l.at(j, m) * u.at(m, i);
            l.at(j, i) = acc * pivot_inv;
        }
    }
    return std::make_pair(std::move(l), std::move(u));
}

} // namespace detail

/// Recursive block PLU decomposition, restricted to square matrices whose
/// leading principal minors are non-singular; returns an empty optional
/// (FAIL) when one of them is singular. Only 1x1 and 2x2 block grids with
/// square principal blocks are handled.
///
/// For the 2x2 grid [[A,B],[C,D]]:
///   P1, L1, U1 = plu(A)
///   X = C * U1^-1
///   Y = P1^-1 * L1^-1 * B
///   P2, L2, U2 = plu(D - X * Y)
///   P = [[P1, 0],[0, P2]], L = [[L1, 0],[X, L2]], U = [[U1, Y],[0, U2]]
/// The no-exchange base case makes every P an identity, which keeps this
/// assembly exact.
inline std::optional<PLUResult> plu_decomp(const BlockMatrix& m) {
    if (!m.is_square())
        throw UnsupportedShapeError("plu_decomp: requires a square matrix, got " +
                                    std::to_string(m.elt_rows()) + "x" +
                                    std::to_string(m.elt_cols()));
    switch (m.kind()) {
        case BlockKind::Zero:
            return std::nullopt; // every leading principal minor is singular
        case BlockKind::ScalarDiag: {
            const Scalar& s = m.scalar_value();
            if (s.is_zero()) return std::nullopt;
            int n = m.elt_rows();
            return PLUResult{BlockMatrix::scalar(n, Scalar(1)),
                             BlockMatrix::scalar(n, Scalar(1)),
                             BlockMatrix::scalar(n, s)};
        }
        case BlockKind::Leaf: {
            auto lu = detail::leaf_lu(m.grid());
            if (!lu) return std::nullopt;
            return PLUResult{BlockMatrix::scalar(m.elt_rows(), Scalar(1)),
                             BlockMatrix::matrix(std::move(lu->first)),
                             BlockMatrix::matrix(std::move(lu->second))};
        }
        case BlockKind::RBlock: {
            auto [p, q] = m.block_dims();
            if (p == 1 && q == 1) {
                auto child = plu_decomp(m.block(1, 1));
                if (!child) return std::nullopt;
                return PLUResult{
                    BlockMatrix::rblock(BlockGrid(1, 1, {std::move(child->p)})),
                    BlockMatrix::rblock(BlockGrid(1, 1, {std::move(child->l)})),
                    BlockMatrix::rblock(BlockGrid(1, 1, {std::move(child->u)}))};
            }
            if (p != 2 || q != 2)
                throw UnsupportedShapeError(
                    "plu_decomp: only 1x1 and 2x2 block grids are handled, got " +
                    std::to_string(p) + "x" + std::to_string(q));
            const BlockMatrix& a = m.block(1, 1);
            const BlockMatrix& b = m.block(1, 2);
            const BlockMatrix& c = m.block(2, 1);
            const BlockMatrix& d = m.block(2, 2);
            if (!a.is_square() || !d.is_square())
                throw UnsupportedShapeError("plu_decomp: Principal block not square");
            if (a.elt_rows() != b.elt_rows() || c.elt_rows() != d.elt_rows() ||
                a.elt_cols() != c.elt_cols() || b.elt_cols() != d.elt_cols())
                throw ShapeError("plu_decomp: Bad shape");
            int n1 = a.elt_rows();
            int n2 = d.elt_rows();

            auto first = plu_decomp(a);
            if (!first) return std::nullopt;
            auto l1_inv = inv(first->l);
            auto u1_inv = inv(first->u);
            auto p1_inv = inv(first->p);
            if (!l1_inv || !u1_inv || !p1_inv) return std::nullopt;
            BlockMatrix x = times(c, *u1_inv);
            BlockMatrix y = times(*p1_inv, times(*l1_inv, b));
            BlockMatrix t = minus(d, times(x, y));
            auto second = plu_decomp(t);
            if (!second) return std::nullopt;

            BlockMatrix z12 = BlockMatrix::zero(n1, n2);
            BlockMatrix z21 = BlockMatrix::zero(n2, n1);
            return PLUResult{
                bm({{first->p, z12}, {z21, second->p}}),
                bm({{first->l, z12}, {x, second->l}}),
                bm({{first->u, y}, {z21, second->u}})};
        }
    }
    throw Error("corrupt kind tag");
}

} // namespace blockmat
