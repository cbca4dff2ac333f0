#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "blockmat/block_matrix.hpp"
#include "blockmat/errors.hpp"
#include "blockmat/ring.hpp"

namespace blockmat {

// Inversion. Singular inputs are reported by returning an empty optional
// (the FAIL outcome); shapes the module does not handle throw
// UnsupportedShapeError instead, so callers can tell a mathematical failure
// from a library limitation.

namespace detail {

/// Dense Gauss-Jordan inverse for leaf nodes. Pivots on the first nonzero
/// entry in each column; over an exact field any nonzero pivot is as good as
/// any other.
inline std::optional<ElementGrid> leaf_inverse(const ElementGrid& a) {
    int n = a.rows();
    ElementGrid work = a;
    ElementGrid inv(n, n);
    for (int k = 1; k <= n; ++k) inv.at(k, k) = Scalar(1);
    for (int k = 1; k <= n; ++k) {
        int pivot = 0;
        for (int r = k; r <= n; ++r)
            if (!work.at(r, k).is_zero()) {
                pivot = r;
                break;
            }
        if (pivot == 0) return std::nullopt;
        if (pivot != k)
            for (int c = 1; c <= n; ++c) {
                std::swap(work.at(k, c), work.at(pivot, c));
                std::swap(inv.at(k, c), inv.at(pivot, c));
            }
        Scalar scale = work.at(k, k).inverse();
        for (int c = 1; c <= n; ++c) {
            work.at(k, c) *= scale;
            inv.at(k, c) *= scale;
        }
        for (int r = 1; r <= n; ++r) {
            if (r == k || work.at(r, k).is_zero()) continue;
            Scalar factor = work.at(r, k);
            for (int c = 1; c <= n; ++c) {
                work.at(r, c) -= factor * work.at(k, c);
                inv.at(r, c) -= factor * inv.at(k, c);
            }
        }
    }
    return inv;
}

inline void require_square(const BlockMatrix& m, const char* op) {
    if (!m.is_square())
        throw UnsupportedShapeError(std::string(op) + ": requires a square matrix, got " +
                                    std::to_string(m.elt_rows()) + "x" +
                                    std::to_string(m.elt_cols()));
}

} // namespace detail

/// Inversion assuming non-singular leading blocks. For a 2x2 block grid
/// [[A,B],[C,D]] this is the Schur-complement formula
///
///   [[A^-1 + A^-1 B S^-1 C A^-1, -A^-1 B S^-1],
///    [-S^-1 C A^-1,               S^-1]]
///
/// with S = D - C A^-1 B. Fails (empty optional) when A or S is singular,
/// which can happen even for invertible input; inv() falls back to
/// inv_by_mtm() in that case. Grids larger than 2x2 are unsupported.
inline std::optional<BlockMatrix> try_inv(const BlockMatrix& m) {
    detail::require_square(m, "try_inv");
    switch (m.kind()) {
        case BlockKind::Zero:
            return std::nullopt;
        case BlockKind::ScalarDiag: {
            const Scalar& s = m.scalar_value();
            if (s.is_zero()) return std::nullopt;
            return BlockMatrix::scalar(m.elt_rows(), s.inverse());
        }
        case BlockKind::Leaf: {
            auto inv = detail::leaf_inverse(m.grid());
            if (!inv) return std::nullopt;
            return BlockMatrix::matrix(std::move(*inv));
        }
        case BlockKind::RBlock: {
            auto [p, q] = m.block_dims();
            if (p == 1 && q == 1) {
                auto child = try_inv(m.block(1, 1));
                if (!child) return std::nullopt;
                return BlockMatrix::rblock(BlockGrid(1, 1, {std::move(*child)}));
            }
            if (p != 2 || q != 2)
                throw UnsupportedShapeError(
                    "try_inv: only 1x1 and 2x2 block grids are handled, got " +
                    std::to_string(p) + "x" + std::to_string(q));
            const BlockMatrix& a = m.block(1, 1);
            const BlockMatrix& b = m.block(1, 2);
            const BlockMatrix& c = m.block(2, 1);
            const BlockMatrix& d = m.block(2, 2);
            if (!a.is_square() || !d.is_square())
                throw UnsupportedShapeError("try_inv: principal blocks must be square");

            auto a_inv = try_inv(a);
            if (!a_inv) return std::nullopt;
            BlockMatrix a_inv_b = times(*a_inv, b);
            BlockMatrix c_a_inv = times(c, *a_inv);
            BlockMatrix schur = minus(d, times(c_a_inv, b));
            auto s_inv = try_inv(schur);
            if (!s_inv) return std::nullopt;

            BlockMatrix q11 = plus(*a_inv, times(times(a_inv_b, *s_inv), c_a_inv));
            BlockMatrix q12 = neg(times(a_inv_b, *s_inv));
            BlockMatrix q21 = neg(times(*s_inv, c_a_inv));
            return BlockMatrix::rblock(BlockGrid(
                2, 2, {std::move(q11), std::move(q12), std::move(q21), std::move(*s_inv)}));
        }
    }
    throw Error("corrupt kind tag");
}

/// General inversion through the Gram matrix: M^-1 = (M^H M)^-1 M^H.
/// Over a formally real or complex field M^H M has invertible leading
/// principal minors whenever M is invertible, so try_inv on it cannot hit a
/// singular leading block; the result is empty exactly when M is singular.
inline std::optional<BlockMatrix> inv_by_mtm(const BlockMatrix& m) {
    detail::require_square(m, "inv_by_mtm");
    BlockMatrix mh = herm_trans(m);
    auto gram_inv = try_inv(times(mh, m));
    if (!gram_inv) return std::nullopt;
    return times(*gram_inv, mh);
}

/// Which route inv() took.
enum class InvPath { Direct, GramFallback };

inline const char* to_string(InvPath p) {
    return p == InvPath::Direct ? "direct" : "gram-fallback";
}

struct InvOutcome {
    std::optional<BlockMatrix> inverse; // empty = singular (FAIL)
    InvPath path = InvPath::Direct;
};

/// Full inversion with path instrumentation: try_inv first, and if that
/// fails, the general Gram-matrix method. Empty inverse only for genuinely
/// singular input.
inline InvOutcome inv_traced(const BlockMatrix& m) {
    detail::require_square(m, "inv");
    auto direct = try_inv(m);
    if (direct) return {std::move(direct), InvPath::Direct};
    return {inv_by_mtm(m), InvPath::GramFallback};
}

/// Full inversion; empty optional when the matrix is singular.
inline std::optional<BlockMatrix> inv(const BlockMatrix& m) {
    return inv_traced(m).inverse;
}

/// Schur complement of the (i,j) block of a 2x2 block grid, together with
/// the two products used to build it.
struct SchurResult {
    BlockMatrix schur; // M(i',j') - M(i',j) * inv(M(i,j)) * M(i,j')
    BlockMatrix left;  // M(i',j) * inv(M(i,j))
    BlockMatrix right; // inv(M(i,j)) * M(i,j')
};

/// The inversion is delegated to `invf`, which reports failure with an empty
/// optional; that failure propagates. i and j select the pivot block.
template <typename InvFn>
std::optional<SchurResult> schur_comp(const BlockMatrix& m, int i, int j, InvFn&& invf) {
    if (m.block_dims() != std::pair<int, int>(2, 2))
        throw UnsupportedShapeError("schur_comp: requires a 2x2 block grid");
    if (i < 1 || i > 2 || j < 1 || j > 2)
        throw IndexError("schur_comp: block index (" + std::to_string(i) + "," +
                         std::to_string(j) + ") outside the 2x2 grid");
    int io = 3 - i, jo = 3 - j;
    auto pivot_inv = invf(m.block(i, j));
    if (!pivot_inv) return std::nullopt;
    BlockMatrix left = times(m.block(io, j), *pivot_inv);
    BlockMatrix right = times(*pivot_inv, m.block(i, jo));
    BlockMatrix schur = minus(m.block(io, jo), times(left, m.block(i, jo)));
    return SchurResult{std::move(schur), std::move(left), std::move(right)};
}

/// schur_comp with the default try_inv inversion.
inline std::optional<SchurResult> schur_comp(const BlockMatrix& m, int i, int j) {
    return schur_comp(m, i, j, [](const BlockMatrix& x) { return try_inv(x); });
}

} // namespace blockmat
