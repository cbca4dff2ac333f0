#include <doctest.h>

#include <random>

#include "blockmat/oracle.hpp"
#include "blockmat/ring.hpp"
#include "support/fixtures.hpp"
#include "support/generators.hpp"

using namespace blockmat;

TEST_SUITE("ring") {
    TEST_CASE("additive identities and inverses") {
        std::mt19937 rng(21);
        for (int trial = 0; trial < 20; ++trial) {
            BlockMatrix a = testgen::random_any(rng, 10, 2);
            BlockMatrix z = BlockMatrix::zero(a.elt_rows(), a.elt_cols());
            CHECK(eq_elements(plus(a, z), a));
            CHECK(eq_elements(minus(a, z), a));
            CHECK(eq_elements(minus(a, a), z));
            CHECK(eq_elements(plus(a, neg(a)), z));
            CHECK(eq_elements(neg(neg(a)), a));
        }
        BlockMatrix s = plus(BlockMatrix::scalar(2, Scalar(3)),
                             BlockMatrix::scalar(2, Scalar(4)));
        CHECK(s.kind() == BlockKind::ScalarDiag);
        CHECK(s.scalar_value() == Scalar(7));
    }

    TEST_CASE("neg keeps implicit kinds") {
        CHECK(neg(BlockMatrix::zero(2, 2)).kind() == BlockKind::Zero);
        BlockMatrix s = neg(BlockMatrix::scalar(3, Scalar(Rational(1, 2))));
        CHECK(s.kind() == BlockKind::ScalarDiag);
        CHECK(s.scalar_value() == Scalar(Rational(-1, 2)));
    }

    TEST_CASE("times with scalar and zero operands") {
        std::mt19937 rng(22);
        for (int trial = 0; trial < 20; ++trial) {
            BlockMatrix x = testgen::random_any(rng, 10, 2);
            BlockMatrix one = BlockMatrix::scalar(x.elt_rows(), Scalar(1));
            BlockMatrix lhs = times(one, x);
            CHECK(eq_elements(lhs, x));
            CHECK(lhs.kind() == x.kind()); // scalar operand preserves structure
            if (x.kind() == BlockKind::RBlock) {
                CHECK(lhs.row_partition() == x.row_partition());
                CHECK(lhs.col_partition() == x.col_partition());
            }
        }
        BlockMatrix z = times(BlockMatrix::zero(2, 3),
                              BlockMatrix::matrix(ElementGrid(3, 4)));
        CHECK(z.kind() == BlockKind::Zero);
        CHECK(z.dims() == std::pair<int, int>(2, 4));

        BlockMatrix ss = times(BlockMatrix::scalar(2, Scalar(3)),
                               BlockMatrix::scalar(2, Scalar(Rational(1, 3))));
        CHECK(ss.kind() == BlockKind::ScalarDiag);
        CHECK(ss.scalar_value() == Scalar(1));
    }

    TEST_CASE("times leaf by leaf") {
        BlockMatrix a = BlockMatrix::matrix(ElementGrid{{Scalar(1), Scalar(2)},
                                                        {Scalar(3), Scalar(4)}});
        BlockMatrix b = BlockMatrix::matrix(ElementGrid{{Scalar(5), Scalar(6)},
                                                        {Scalar(7), Scalar(8)}});
        BlockMatrix p = times(a, b);
        CHECK(p.kind() == BlockKind::Leaf);
        CHECK(p.elt(1, 1) == Scalar(19));
        CHECK(p.elt(1, 2) == Scalar(22));
        CHECK(p.elt(2, 1) == Scalar(43));
        CHECK(p.elt(2, 2) == Scalar(50));
    }

    TEST_CASE("times shape errors") {
        BlockMatrix leaf = BlockMatrix::matrix(ElementGrid(3, 3));
        BlockMatrix r = BlockMatrix::rblock(
            BlockGrid{{BlockMatrix::matrix(ElementGrid(2, 2)),
                       BlockMatrix::matrix(ElementGrid(2, 1))},
                      {BlockMatrix::matrix(ElementGrid(1, 2)),
                       BlockMatrix::matrix(ElementGrid(1, 1))}});
        CHECK_THROWS_AS(times(leaf, r), ShapeError);
        CHECK_THROWS_AS(times(r, leaf), ShapeError);
        CHECK_THROWS_AS(times(BlockMatrix::matrix(ElementGrid(2, 3)),
                              BlockMatrix::matrix(ElementGrid(2, 3))),
                        DimensionError);

        // inner partitions (2,1) vs (1,2)
        BlockMatrix r2 = BlockMatrix::rblock(
            BlockGrid{{BlockMatrix::matrix(ElementGrid(1, 1)),
                       BlockMatrix::matrix(ElementGrid(1, 2))},
                      {BlockMatrix::matrix(ElementGrid(2, 1)),
                       BlockMatrix::matrix(ElementGrid(2, 2))}});
        CHECK_THROWS_AS(times(r, r2), ShapeError);
    }

    TEST_CASE("herm_trans structure") {
        BlockMatrix s = herm_trans(BlockMatrix::scalar(2, Scalar(Rational(1), Rational(2))));
        CHECK(s.kind() == BlockKind::ScalarDiag);
        CHECK(s.scalar_value() == Scalar(Rational(1), Rational(-2)));

        CHECK(herm_trans(BlockMatrix::zero(2, 5)).dims() == std::pair<int, int>(5, 2));

        BlockMatrix ex = testfix::sample_partitioned();
        BlockMatrix ht = herm_trans(ex);
        CHECK(ht.dims() == std::pair<int, int>(5, 3));
        CHECK(ht.block_dims() == std::pair<int, int>(2, 2));
        // block (1,2) of the transpose is the transpose of block (2,1)
        CHECK(ht.block(1, 2).dims() == std::pair<int, int>(2, 1));
        CHECK(ht.block(1, 2).elt(1, 1) == Scalar(21));
        CHECK(ht.block(1, 2).elt(2, 1) == Scalar(22));
        CHECK(eq_elements(herm_trans(ht), ex));
    }

    TEST_CASE("ring operations match the dense oracle") {
        std::mt19937 rng(23);
        for (int trial = 0; trial < 60; ++trial) {
            auto [a, b] = testgen::random_zip_pair(rng, 12, 3);
            CHECK(oracle::flatten(plus(a, b)) ==
                  oracle::dense_add(oracle::flatten(a), oracle::flatten(b)));
            CHECK(oracle::flatten(minus(a, b)) ==
                  oracle::dense_sub(oracle::flatten(a), oracle::flatten(b)));
            CHECK(oracle::flatten(neg(a)) == oracle::dense_neg(oracle::flatten(a)));

            auto [c, d] = testgen::random_times_pair(rng, 9, 3);
            CHECK(oracle::flatten(times(c, d)) ==
                  oracle::dense_mul(oracle::flatten(c), oracle::flatten(d)));

            BlockMatrix h = testgen::random_any(rng, 10, 3, /*complex=*/true);
            CHECK(oracle::flatten(herm_trans(h)) ==
                  oracle::dense_conj_transpose(oracle::flatten(h)));
        }
    }

    TEST_CASE("associativity spot check") {
        std::mt19937 rng(24);
        for (int trial = 0; trial < 10; ++trial) {
            int depth = testgen::rand_int(rng, 0, 2);
            testgen::AxisTree t1 = testgen::random_axis_tree(rng, testgen::rand_int(rng, 1, 6), depth);
            testgen::AxisTree t2 = testgen::random_axis_tree(rng, testgen::rand_int(rng, 1, 6), depth);
            testgen::AxisTree t3 = testgen::random_axis_tree(rng, testgen::rand_int(rng, 1, 6), depth);
            testgen::AxisTree t4 = testgen::random_axis_tree(rng, testgen::rand_int(rng, 1, 6), depth);
            BlockMatrix a = testgen::random_matrix(rng, t1, t2);
            BlockMatrix b = testgen::random_matrix(rng, t2, t3);
            BlockMatrix c = testgen::random_matrix(rng, t3, t4);
            CHECK(oracle::flatten(times(times(a, b), c)) ==
                  oracle::flatten(times(a, times(b, c))));
        }
    }

    TEST_CASE("herm_trans is a product antihomomorphism") {
        std::mt19937 rng(25);
        for (int trial = 0; trial < 15; ++trial) {
            int depth = testgen::rand_int(rng, 0, 2);
            testgen::AxisTree t1 = testgen::random_axis_tree(rng, testgen::rand_int(rng, 1, 8), depth);
            testgen::AxisTree t2 = testgen::random_axis_tree(rng, testgen::rand_int(rng, 1, 8), depth);
            testgen::AxisTree t3 = testgen::random_axis_tree(rng, testgen::rand_int(rng, 1, 8), depth);
            BlockMatrix a = testgen::random_matrix(rng, t1, t2, /*complex=*/true);
            BlockMatrix b = testgen::random_matrix(rng, t2, t3, /*complex=*/true);
            CHECK(oracle::flatten(herm_trans(times(a, b))) ==
                  oracle::flatten(times(herm_trans(b), herm_trans(a))));
        }
    }
}
