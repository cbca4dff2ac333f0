#pragma once

#include <numeric>
#include <utility>
#include <vector>

#include "blockmat/block_matrix.hpp"
#include "blockmat/errors.hpp"
#include "blockmat/scalar.hpp"

namespace blockmat {

// Structure-preserving elementwise traversal. The element function must be
// pure: the implicit-entry shortcuts below evaluate f(0) once and reuse it.
//
// map keeps the input's partition tree but may promote kinds, following one
// rule: a kind with implicit entries survives only if f keeps those entries
// implicit. Concretely f(0) != 0 turns a zero or scalar node into a dense
// leaf, since its off entries become explicit.

template <typename F>
BlockMatrix map(F&& f, const BlockMatrix& a) {
    switch (a.kind()) {
        case BlockKind::Zero: {
            Scalar z = f(Scalar(0));
            if (z.is_zero()) return BlockMatrix::zero(a.elt_rows(), a.elt_cols());
            ElementGrid g(a.elt_rows(), a.elt_cols());
            for (int r = 1; r <= g.rows(); ++r)
                for (int c = 1; c <= g.cols(); ++c) g.at(r, c) = z;
            return BlockMatrix::matrix(std::move(g));
        }
        case BlockKind::ScalarDiag: {
            Scalar z = f(Scalar(0));
            Scalar d = f(a.scalar_value());
            if (z.is_zero()) return BlockMatrix::scalar(a.elt_rows(), std::move(d));
            ElementGrid g(a.elt_rows(), a.elt_cols());
            for (int r = 1; r <= g.rows(); ++r)
                for (int c = 1; c <= g.cols(); ++c) g.at(r, c) = (r == c) ? d : z;
            return BlockMatrix::matrix(std::move(g));
        }
        case BlockKind::Leaf: {
            ElementGrid g(a.elt_rows(), a.elt_cols());
            for (int r = 1; r <= g.rows(); ++r)
                for (int c = 1; c <= g.cols(); ++c) g.at(r, c) = f(a.grid().at(r, c));
            return BlockMatrix::matrix(std::move(g));
        }
        case BlockKind::RBlock: {
            std::vector<BlockMatrix> children;
            children.reserve(static_cast<std::size_t>(a.block_rows()) * a.block_cols());
            for (int i = 1; i <= a.block_rows(); ++i)
                for (int j = 1; j <= a.block_cols(); ++j)
                    children.push_back(map(f, a.block(i, j)));
            return BlockMatrix::rblock(
                BlockGrid(a.block_rows(), a.block_cols(), std::move(children)));
        }
    }
    throw Error("corrupt kind tag");
}

/// Splits a structureless (zero or scalar) node into an rblock matching the
/// given partitions without changing any element. Scalars require equal row
/// and column partitions, since their diagonal must land in square blocks.
/// Both partitions singleton returns the input unchanged.
inline BlockMatrix conform(const BlockMatrix& b, const Partition& row_part,
                           const Partition& col_part) {
    auto positive = [](const Partition& p) {
        for (int s : p)
            if (s < 1) return false;
        return !p.empty();
    };
    if (!positive(row_part) || !positive(col_part))
        throw ShapeError("conform: partitions must be non-empty with positive parts");
    if (std::accumulate(row_part.begin(), row_part.end(), 0) != b.elt_rows() ||
        std::accumulate(col_part.begin(), col_part.end(), 0) != b.elt_cols())
        throw ShapeError("conform: partition sums do not match the matrix dimensions");

    if (b.kind() == BlockKind::Zero) {
        if (row_part.size() == 1 && col_part.size() == 1) return b;
        std::vector<BlockMatrix> children;
        children.reserve(row_part.size() * col_part.size());
        for (int rs : row_part)
            for (int cs : col_part) children.push_back(BlockMatrix::zero(rs, cs));
        return BlockMatrix::rblock(BlockGrid(static_cast<int>(row_part.size()),
                                             static_cast<int>(col_part.size()),
                                             std::move(children)));
    }
    if (b.kind() == BlockKind::ScalarDiag) {
        if (row_part != col_part)
            throw ShapeError("conform: scalar requires equal row and column partitions");
        if (row_part.size() == 1) return b;
        std::vector<BlockMatrix> children;
        children.reserve(row_part.size() * col_part.size());
        for (std::size_t i = 0; i < row_part.size(); ++i)
            for (std::size_t j = 0; j < col_part.size(); ++j)
                children.push_back(i == j
                                       ? BlockMatrix::scalar(row_part[i], b.scalar_value())
                                       : BlockMatrix::zero(row_part[i], col_part[j]));
        return BlockMatrix::rblock(BlockGrid(static_cast<int>(row_part.size()),
                                             static_cast<int>(col_part.size()),
                                             std::move(children)));
    }
    throw ShapeError("conform: input must have zero or scalar kind");
}

// zip combines two matrices of equal dimensions elementwise. Allowed kind
// pairings and result structure:
//   - zero with any kind: the zero side curries f with 0 and the result takes
//     the other side's structure (map rules decide the kinds);
//   - scalar with any kind: the scalar is conformed to the other side's
//     partition (rblock) or materialized against it (leaf/scalar);
//   - leaf with leaf: entrywise;
//   - rblock with rblock: identical partitions on both axes, children zipped
//     pairwise.
// Leaf with rblock is an error in either order.

template <typename F>
BlockMatrix zip(F&& f, const BlockMatrix& a, const BlockMatrix& b) {
    if (a.dims() != b.dims())
        throw DimensionError("zip: dimension mismatch, " + std::to_string(a.elt_rows()) +
                             "x" + std::to_string(a.elt_cols()) + " vs " +
                             std::to_string(b.elt_rows()) + "x" +
                             std::to_string(b.elt_cols()));

    if (a.kind() == BlockKind::Zero)
        return map([&f](const Scalar& x) { return f(Scalar(0), x); }, b);
    if (b.kind() == BlockKind::Zero)
        return map([&f](const Scalar& x) { return f(x, Scalar(0)); }, a);

    if (a.kind() == BlockKind::ScalarDiag && b.kind() == BlockKind::ScalarDiag) {
        Scalar off = f(Scalar(0), Scalar(0));
        Scalar diag = f(a.scalar_value(), b.scalar_value());
        if (off.is_zero()) return BlockMatrix::scalar(a.elt_rows(), std::move(diag));
        ElementGrid g(a.elt_rows(), a.elt_cols());
        for (int r = 1; r <= g.rows(); ++r)
            for (int c = 1; c <= g.cols(); ++c) g.at(r, c) = (r == c) ? diag : off;
        return BlockMatrix::matrix(std::move(g));
    }

    if (a.kind() == BlockKind::ScalarDiag && b.kind() == BlockKind::Leaf) {
        const Scalar& s = a.scalar_value();
        ElementGrid g(b.elt_rows(), b.elt_cols());
        for (int r = 1; r <= g.rows(); ++r)
            for (int c = 1; c <= g.cols(); ++c)
                g.at(r, c) = f(r == c ? s : Scalar(0), b.grid().at(r, c));
        return BlockMatrix::matrix(std::move(g));
    }
    if (a.kind() == BlockKind::Leaf && b.kind() == BlockKind::ScalarDiag) {
        const Scalar& s = b.scalar_value();
        ElementGrid g(a.elt_rows(), a.elt_cols());
        for (int r = 1; r <= g.rows(); ++r)
            for (int c = 1; c <= g.cols(); ++c)
                g.at(r, c) = f(a.grid().at(r, c), r == c ? s : Scalar(0));
        return BlockMatrix::matrix(std::move(g));
    }

    if (a.kind() == BlockKind::ScalarDiag && b.kind() == BlockKind::RBlock) {
        Partition rp = b.row_partition(), cp = b.col_partition();
        if (rp != cp)
            throw ShapeError(
                "zip: scalar cannot conform to an rblock whose row and column "
                "partitions differ");
        std::vector<BlockMatrix> children;
        children.reserve(rp.size() * cp.size());
        for (std::size_t i = 0; i < rp.size(); ++i)
            for (std::size_t j = 0; j < cp.size(); ++j) {
                BlockMatrix piece =
                    i == j ? BlockMatrix::scalar(rp[i], a.scalar_value())
                           : BlockMatrix::zero(rp[i], cp[j]);
                children.push_back(
                    zip(f, piece, b.block(static_cast<int>(i) + 1, static_cast<int>(j) + 1)));
            }
        return BlockMatrix::rblock(BlockGrid(static_cast<int>(rp.size()),
                                             static_cast<int>(cp.size()),
                                             std::move(children)));
    }
    if (a.kind() == BlockKind::RBlock && b.kind() == BlockKind::ScalarDiag) {
        Partition rp = a.row_partition(), cp = a.col_partition();
        if (rp != cp)
            throw ShapeError(
                "zip: scalar cannot conform to an rblock whose row and column "
                "partitions differ");
        std::vector<BlockMatrix> children;
        children.reserve(rp.size() * cp.size());
        for (std::size_t i = 0; i < rp.size(); ++i)
            for (std::size_t j = 0; j < cp.size(); ++j) {
                BlockMatrix piece =
                    i == j ? BlockMatrix::scalar(rp[i], b.scalar_value())
                           : BlockMatrix::zero(rp[i], cp[j]);
                children.push_back(
                    zip(f, a.block(static_cast<int>(i) + 1, static_cast<int>(j) + 1), piece));
            }
        return BlockMatrix::rblock(BlockGrid(static_cast<int>(rp.size()),
                                             static_cast<int>(cp.size()),
                                             std::move(children)));
    }

    if (a.kind() == BlockKind::Leaf && b.kind() == BlockKind::Leaf) {
        ElementGrid g(a.elt_rows(), a.elt_cols());
        for (int r = 1; r <= g.rows(); ++r)
            for (int c = 1; c <= g.cols(); ++c)
                g.at(r, c) = f(a.grid().at(r, c), b.grid().at(r, c));
        return BlockMatrix::matrix(std::move(g));
    }

    if (a.kind() == BlockKind::RBlock && b.kind() == BlockKind::RBlock) {
        if (a.row_partition() != b.row_partition() ||
            a.col_partition() != b.col_partition())
            throw ShapeError("zip: rblock partitions differ");
        std::vector<BlockMatrix> children;
        children.reserve(static_cast<std::size_t>(a.block_rows()) * a.block_cols());
        for (int i = 1; i <= a.block_rows(); ++i)
            for (int j = 1; j <= a.block_cols(); ++j)
                children.push_back(zip(f, a.block(i, j), b.block(i, j)));
        return BlockMatrix::rblock(
            BlockGrid(a.block_rows(), a.block_cols(), std::move(children)));
    }

    throw ShapeError(std::string("zip: cannot combine ") + kind_name(a.kind()) +
                     " with " + kind_name(b.kind()));
}

} // namespace blockmat
