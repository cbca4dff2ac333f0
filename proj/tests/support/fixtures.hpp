#pragma once

// Fixed matrices shared across test suites.

#include "blockmat/block_matrix.hpp"
#include "blockmat/scalar.hpp"

namespace testfix {

using blockmat::BlockGrid;
using blockmat::BlockMatrix;
using blockmat::ElementGrid;
using blockmat::Scalar;

/// 3x5 matrix partitioned as a 2x2 block grid with blocks
///   [[11,12],[13,14]]  [[15,16,17],[18,19,20]]
///   [[21,22]]          [[23,24,25]]
/// Flattened row by row it reads 11..25.
inline BlockMatrix sample_partitioned() {
    BlockMatrix tl = BlockMatrix::matrix(ElementGrid{{Scalar(11), Scalar(12)},
                                                     {Scalar(13), Scalar(14)}});
    BlockMatrix tr = BlockMatrix::matrix(ElementGrid{{Scalar(15), Scalar(16), Scalar(17)},
                                                     {Scalar(18), Scalar(19), Scalar(20)}});
    BlockMatrix bl = BlockMatrix::matrix(ElementGrid{{Scalar(21), Scalar(22)}});
    BlockMatrix br = BlockMatrix::matrix(ElementGrid{{Scalar(23), Scalar(24), Scalar(25)}});
    return BlockMatrix::rblock(BlockGrid{{tl, tr}, {bl, br}});
}

/// Invertible 4x4 matrix partitioned into four rank-one (hence singular)
/// 2x2 blocks. Inverting it requires the Gram fallback, because the Schur
/// route dies on the singular (1,1) block.
inline BlockMatrix all_singular_blocks() {
    BlockMatrix a = BlockMatrix::matrix(ElementGrid{{Scalar(1), Scalar(0)},
                                                    {Scalar(0), Scalar(0)}});
    BlockMatrix b = BlockMatrix::matrix(ElementGrid{{Scalar(0), Scalar(0)},
                                                    {Scalar(0), Scalar(2)}});
    BlockMatrix c = BlockMatrix::matrix(ElementGrid{{Scalar(0), Scalar(3)},
                                                    {Scalar(0), Scalar(0)}});
    BlockMatrix d = BlockMatrix::matrix(ElementGrid{{Scalar(0), Scalar(0)},
                                                    {Scalar(4), Scalar(0)}});
    return BlockMatrix::rblock(BlockGrid{{a, b}, {c, d}});
}

/// 4x4 matrix as a 2x2 grid of 2x2 leaves, with non-singular leading
/// principal minors; a convenient fixed input for PLU demonstrations.
inline BlockMatrix plu_demo() {
    BlockMatrix a = BlockMatrix::matrix(ElementGrid{{Scalar(2), Scalar(1)},
                                                    {Scalar(1), Scalar(1)}});
    BlockMatrix b = BlockMatrix::matrix(ElementGrid{{Scalar(1), Scalar(0)},
                                                    {Scalar(0), Scalar(1)}});
    BlockMatrix c = BlockMatrix::matrix(ElementGrid{{Scalar(1), Scalar(2)},
                                                    {Scalar(0), Scalar(1)}});
    BlockMatrix d = BlockMatrix::matrix(ElementGrid{{Scalar(3), Scalar(1)},
                                                    {Scalar(1), Scalar(2)}});
    return BlockMatrix::rblock(BlockGrid{{a, b}, {c, d}});
}

} // namespace testfix
