#pragma once

#include <utility>
#include <vector>

#include "blockmat/block_matrix.hpp"
#include "blockmat/errors.hpp"
#include "blockmat/traverse.hpp"

namespace blockmat {

/// A + B. Shape rules as for zip.
inline BlockMatrix plus(const BlockMatrix& a, const BlockMatrix& b) {
    return zip([](const Scalar& x, const Scalar& y) { return x + y; }, a, b);
}

/// A - B. Shape rules as for zip.
inline BlockMatrix minus(const BlockMatrix& a, const BlockMatrix& b) {
    return zip([](const Scalar& x, const Scalar& y) { return x - y; }, a, b);
}

/// -A. Shape rules as for map; zero and scalar kinds survive.
inline BlockMatrix neg(const BlockMatrix& a) {
    return map([](const Scalar& x) { return -x; }, a);
}

/// Conjugate transpose. Blocks of the result are the transposed blocks of
/// the input, each conjugate-transposed themselves.
inline BlockMatrix herm_trans(const BlockMatrix& a) {
    switch (a.kind()) {
        case BlockKind::Zero:
            return BlockMatrix::zero(a.elt_cols(), a.elt_rows());
        case BlockKind::ScalarDiag:
            return BlockMatrix::scalar(a.elt_rows(), a.scalar_value().conj());
        case BlockKind::Leaf: {
            ElementGrid g(a.elt_cols(), a.elt_rows());
            for (int r = 1; r <= a.elt_rows(); ++r)
                for (int c = 1; c <= a.elt_cols(); ++c)
                    g.at(c, r) = a.grid().at(r, c).conj();
            return BlockMatrix::matrix(std::move(g));
        }
        case BlockKind::RBlock: {
            std::vector<BlockMatrix> children;
            children.reserve(static_cast<std::size_t>(a.block_rows()) * a.block_cols());
            for (int j = 1; j <= a.block_cols(); ++j)
                for (int i = 1; i <= a.block_rows(); ++i)
                    children.push_back(herm_trans(a.block(i, j)));
            return BlockMatrix::rblock(
                BlockGrid(a.block_cols(), a.block_rows(), std::move(children)));
        }
    }
    throw Error("corrupt kind tag");
}

/// A * B by classical multiplication. Kind pairings follow zip: a zero
/// operand gives a zero result, a scalar operand scales the other side in
/// place of its structure, leaf times leaf is the dense triple loop, and
/// rblock times rblock requires the inner partitions to agree and combines
/// children block-wise. Leaf with rblock is an error in either order.
inline BlockMatrix times(const BlockMatrix& a, const BlockMatrix& b) {
    if (a.elt_cols() != b.elt_rows())
        throw DimensionError("times: inner dimensions " + std::to_string(a.elt_cols()) +
                             " and " + std::to_string(b.elt_rows()) + " differ");

    if (a.kind() == BlockKind::Zero || b.kind() == BlockKind::Zero)
        return BlockMatrix::zero(a.elt_rows(), b.elt_cols());

    if (a.kind() == BlockKind::ScalarDiag) {
        const Scalar& s = a.scalar_value();
        return map([&s](const Scalar& x) { return s * x; }, b);
    }
    if (b.kind() == BlockKind::ScalarDiag) {
        const Scalar& s = b.scalar_value();
        return map([&s](const Scalar& x) { return x * s; }, a);
    }

    if (a.kind() == BlockKind::Leaf && b.kind() == BlockKind::Leaf) {
        ElementGrid g(a.elt_rows(), b.elt_cols());
        for (int r = 1; r <= a.elt_rows(); ++r)
            for (int c = 1; c <= b.elt_cols(); ++c) {
                Scalar acc(0);
                for (int k = 1; k <= a.elt_cols(); ++k)
                    acc += a.grid().at(r, k) * b.grid().at(k, c);
                g.at(r, c) = acc;
            }
        return BlockMatrix::matrix(std::move(g));
    }

    if (a.kind() == BlockKind::RBlock && b.kind() == BlockKind::RBlock) {
        if (a.col_partition() != b.row_partition())
            throw ShapeError("times: inner partitions differ");
        int p = a.block_rows(), q = a.block_cols(), r = b.block_cols();
        std::vector<BlockMatrix> children;
        children.reserve(static_cast<std::size_t>(p) * r);
        for (int i = 1; i <= p; ++i)
            for (int k = 1; k <= r; ++k) {
                // Seed with the j=1 product and fold the rest in with plus,
                // left to right.
                BlockMatrix acc = times(a.block(i, 1), b.block(1, k));
                for (int j = 2; j <= q; ++j)
                    acc = plus(acc, times(a.block(i, j), b.block(j, k)));
                children.push_back(std::move(acc));
            }
        return BlockMatrix::rblock(BlockGrid(p, r, std::move(children)));
    }

    throw ShapeError(std::string("times: cannot combine ") + kind_name(a.kind()) +
                     " with " + kind_name(b.kind()));
}

} // namespace blockmat
