#pragma once

// Umbrella header: recursive block matrices over exact Gaussian rationals,
// with structure-preserving traversal, ring operations, Schur-complement
// inversion with a Gram-matrix fallback, and recursive block PLU.

#include "blockmat/block_matrix.hpp"
#include "blockmat/errors.hpp"
#include "blockmat/factor.hpp"
#include "blockmat/inverse.hpp"
#include "blockmat/io.hpp"
#include "blockmat/oracle.hpp"
#include "blockmat/ring.hpp"
#include "blockmat/scalar.hpp"
#include "blockmat/traverse.hpp"
