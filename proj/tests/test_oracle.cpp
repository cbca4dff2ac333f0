#include <doctest.h>

#include <random>

#include "blockmat/block_matrix.hpp"
#include "blockmat/oracle.hpp"
#include "support/fixtures.hpp"
#include "support/generators.hpp"

using namespace blockmat;
using oracle::dense_det;
using oracle::dense_inv;
using oracle::dense_lu;
using oracle::dense_mul;
using oracle::flatten;
using oracle::identity;

TEST_SUITE("oracle") {
    TEST_CASE("flatten the 3x5 sample") {
        ElementGrid g = flatten(testfix::sample_partitioned());
        REQUIRE(g.rows() == 3);
        REQUIRE(g.cols() == 5);
        int expected[3][5] = {{11, 12, 15, 16, 17}, {13, 14, 18, 19, 20},
                              {21, 22, 23, 24, 25}};
        for (int r = 1; r <= 3; ++r)
            for (int c = 1; c <= 5; ++c) CHECK(g.at(r, c) == Scalar(expected[r - 1][c - 1]));
    }

    TEST_CASE("flatten scalar and zero") {
        ElementGrid s = flatten(BlockMatrix::scalar(2, Scalar(Rational(1, 3))));
        CHECK(s.at(1, 1) == Scalar(Rational(1, 3)));
        CHECK(s.at(1, 2) == Scalar(0));
        CHECK(s.at(2, 2) == Scalar(Rational(1, 3)));

        ElementGrid z = flatten(BlockMatrix::zero(1, 4));
        for (int c = 1; c <= 4; ++c) CHECK(z.at(1, c) == Scalar(0));
    }

    TEST_CASE("flatten agrees with elt everywhere") {
        std::mt19937 rng(2024);
        for (int trial = 0; trial < 30; ++trial) {
            BlockMatrix b = testgen::random_any(rng, 10, 3);
            ElementGrid g = flatten(b);
            for (int r = 1; r <= b.elt_rows(); ++r)
                for (int c = 1; c <= b.elt_cols(); ++c) CHECK(g.at(r, c) == b.elt(r, c));
        }
    }

    TEST_CASE("dense_mul") {
        std::mt19937 rng(5);
        ElementGrid x = testgen::random_grid(rng, 2, 2);
        CHECK(dense_mul(identity(2), x) == x);

        ElementGrid row(1, 3, {Scalar(1), Scalar(2), Scalar(3)});
        ElementGrid col(3, 1, {Scalar(4), Scalar(5), Scalar(6)});
        ElementGrid dot = dense_mul(row, col);
        CHECK(dot.rows() == 1);
        CHECK(dot.cols() == 1);
        CHECK(dot.at(1, 1) == Scalar(32));

        // sample times an all-ones column gives the row sums
        ElementGrid ones(5, 1, std::vector<Scalar>(5, Scalar(1)));
        ElementGrid sums = dense_mul(flatten(testfix::sample_partitioned()), ones);
        CHECK(sums.at(1, 1) == Scalar(71));
        CHECK(sums.at(2, 1) == Scalar(84));
        CHECK(sums.at(3, 1) == Scalar(115));

        CHECK_THROWS_AS(dense_mul(ElementGrid(2, 3), ElementGrid(2, 3)), DimensionError);
    }

    TEST_CASE("dense_inv") {
        ElementGrid a(2, 2, {Scalar(2), Scalar(1), Scalar(1), Scalar(1)});
        auto inv = dense_inv(a);
        REQUIRE(inv.has_value());
        CHECK(inv->at(1, 1) == Scalar(1));
        CHECK(inv->at(1, 2) == Scalar(-1));
        CHECK(inv->at(2, 1) == Scalar(-1));
        CHECK(inv->at(2, 2) == Scalar(2));
        CHECK(dense_mul(a, *inv) == identity(2));

        ElementGrid singular(2, 2, {Scalar(1), Scalar(2), Scalar(2), Scalar(4)});
        CHECK_FALSE(dense_inv(singular).has_value());
        CHECK_THROWS_AS(dense_inv(ElementGrid(2, 3)), DimensionError);

        std::mt19937 rng(77);
        for (int trial = 0; trial < 20; ++trial) {
            int n = testgen::rand_int(rng, 1, 6);
            ElementGrid m = testgen::random_grid(rng, n, n);
            auto mi = dense_inv(m);
            bool invertible = !dense_det(m).is_zero();
            CHECK(mi.has_value() == invertible);
            if (mi) CHECK(dense_mul(m, *mi) == identity(n));
        }
    }

    TEST_CASE("dense_det") {
        CHECK(dense_det(identity(4)) == Scalar(1));
        ElementGrid swapped(2, 2, {Scalar(0), Scalar(1), Scalar(1), Scalar(0)});
        CHECK(dense_det(swapped) == Scalar(-1));
        ElementGrid a(2, 2, {Scalar(2), Scalar(1), Scalar(1), Scalar(1)});
        CHECK(dense_det(a) == Scalar(1));
    }

    TEST_CASE("dense_lu") {
        ElementGrid a(2, 2, {Scalar(2), Scalar(1), Scalar(1), Scalar(1)});
        auto lu = dense_lu(a);
        REQUIRE(lu.has_value());
        CHECK(lu->l.at(1, 1) == Scalar(1));
        CHECK(lu->l.at(2, 1) == Scalar(Rational(1, 2)));
        CHECK(lu->u.at(1, 1) == Scalar(2));
        CHECK(lu->u.at(2, 2) == Scalar(Rational(1, 2)));
        CHECK(dense_mul(lu->l, lu->u) == a);

        // zero leading pivot: no factorization without exchanges
        ElementGrid pivotless(2, 2, {Scalar(0), Scalar(1), Scalar(1), Scalar(0)});
        CHECK_FALSE(dense_lu(pivotless).has_value());

        std::mt19937 rng(88);
        int succeeded = 0;
        for (int trial = 0; trial < 20; ++trial) {
            int n = testgen::rand_int(rng, 1, 6);
            ElementGrid m = testgen::random_grid(rng, n, n);
            auto f = dense_lu(m);
            if (!f) continue;
            ++succeeded;
            CHECK(dense_mul(f->l, f->u) == m);
            for (int r = 1; r <= n; ++r)
                for (int c = 1; c <= n; ++c) {
                    if (r == c) CHECK(f->l.at(r, c) == Scalar(1));
                    if (r < c) CHECK(f->l.at(r, c) == Scalar(0));
                    if (r > c) CHECK(f->u.at(r, c) == Scalar(0));
                }
        }
        CHECK(succeeded > 10); // random rational matrices rarely hit zero pivots
    }

    TEST_CASE("flatten of an rblock concatenates child flattens") {
        std::mt19937 rng(31);
        for (int trial = 0; trial < 20; ++trial) {
            BlockMatrix b = testgen::random_any(rng, 10, 2);
            if (b.kind() != BlockKind::RBlock) continue;
            ElementGrid whole = flatten(b);
            int row_off = 0;
            for (int i = 1; i <= b.block_rows(); ++i) {
                int col_off = 0;
                for (int j = 1; j <= b.block_cols(); ++j) {
                    ElementGrid part = flatten(b.block(i, j));
                    for (int r = 1; r <= part.rows(); ++r)
                        for (int c = 1; c <= part.cols(); ++c)
                            CHECK(whole.at(row_off + r, col_off + c) == part.at(r, c));
                    col_off += part.cols();
                }
                row_off += b.block(i, 1).elt_rows();
            }
        }
    }
}
