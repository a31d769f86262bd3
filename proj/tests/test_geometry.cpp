#include <doctest.h>

#include <random>

#include "test_support.hpp"

using namespace quadrigen;

TEST_CASE("checked arithmetic raises instead of wrapping") {
    CHECK(checked_add(2, 3) == 5);
    CHECK(checked_mul(-4, 5) == -20);
    const Int big = INT64_MAX;
    CHECK_THROWS_AS(checked_add(big, 1), OverflowError);
    CHECK_THROWS_AS(checked_mul(big, 2), OverflowError);
    CHECK_THROWS_AS(checked_sub(INT64_MIN, 1), OverflowError);
    CHECK_THROWS_AS(checked_neg(INT64_MIN), OverflowError);
}

TEST_CASE("primitive directions") {
    CHECK(primitive(LatticePoint(4, -6)) == LatticePoint(2, -3));
    CHECK(primitive(LatticePoint(0, 0, 5)) == LatticePoint(0, 0, 1));
    CHECK(primitive(LatticePoint(-3, 0, 0)) == LatticePoint(-1, 0, 0));
    CHECK_THROWS_AS(primitive(LatticePoint(0, 0)), InvalidParameters);
    CHECK(content(LatticePoint(6, -9, 12)) == 3);
}

TEST_CASE("graded lexicographic order") {
    // sum first, then lexicographic; this drives every tie-break downstream
    CHECK(graded_lex_less(LatticePoint(0, 3), LatticePoint(3, 0)));
    CHECK(graded_lex_less(LatticePoint(1, 0), LatticePoint(0, 2)));
    CHECK(!graded_lex_less(LatticePoint(1, 1), LatticePoint(1, 1)));
    CHECK(graded_lex_less(LatticePoint(0, 1, 1), LatticePoint(1, 1, 0)));
}

TEST_CASE("point arithmetic guards dimensions") {
    CHECK_THROWS_AS(LatticePoint(1, 2) + LatticePoint(1, 2, 3), DimensionMismatch);
    CHECK_THROWS_AS(dot(LatticePoint(1, 2), LatticePoint(1, 2, 3)), DimensionMismatch);
    CHECK(LatticePoint(1, 2, 3) - LatticePoint(1, 1, 1) == LatticePoint(0, 1, 2));
    CHECK(3 * LatticePoint(1, -2) == LatticePoint(3, -6));
}

TEST_CASE("matrix determinant and unimodular inverse") {
    IntMatrix shear = IntMatrix::from_rows({LatticePoint(1, 1), LatticePoint(0, 1)});
    CHECK(shear.determinant() == 1);
    IntMatrix inv = shear.inverse_unimodular();
    CHECK(inv.times(shear) == IntMatrix::identity(2));

    IntMatrix m3 = IntMatrix::from_columns(
        {LatticePoint(1, 0, 0), LatticePoint(1, 1, 0), LatticePoint(1, 1, 1)});
    CHECK(m3.determinant() == 1);
    CHECK(m3.inverse_unimodular().times(m3) == IntMatrix::identity(3));

    IntMatrix bad = IntMatrix::from_rows({LatticePoint(2, 0), LatticePoint(0, 1)});
    CHECK_THROWS_AS(bad.inverse_unimodular(), NotUnimodular);
}

TEST_CASE("affine unimodular maps compose and invert") {
    CHECK_THROWS_AS(
        AffineUnimodularMap(IntMatrix::from_rows({LatticePoint(2, 0), LatticePoint(0, 1)}),
                            LatticePoint(0, 0)),
        NotUnimodular);

    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        int dim = trial % 2 ? 2 : 3;
        AffineUnimodularMap t = random_unimodular_map(rng, dim);
        AffineUnimodularMap inv = t.inverse();
        LatticePoint p = qtest::random_point(rng, dim, 20);
        CHECK(inv.apply(t.apply(p)) == p);
        AffineUnimodularMap id = inv.after(t);
        CHECK(id.apply(p) == p);
    }
}

TEST_CASE("unimodular completion puts the normal last") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 300; ++trial) {
        int dim = trial % 2 ? 2 : 3;
        LatticePoint n = qtest::random_point(rng, dim, 12);
        if (n.is_zero()) continue;
        n = primitive(n);
        IntMatrix u = complete_to_unimodular_row(n);
        Int det = u.determinant();
        CHECK((det == 1 || det == -1));
        CHECK(u.row(dim - 1) == n);
    }
    CHECK_THROWS_AS(complete_to_unimodular_row(LatticePoint(2, 4)), InvalidParameters);
}
