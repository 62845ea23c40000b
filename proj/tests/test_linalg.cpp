#include <doctest.h>

#include "symcube/linalg.hpp"

using namespace symcube;

TEST_CASE("sparse integer rank") {
    CHECK(sparse_int_rank({}) == 0);
    CHECK(sparse_int_rank({{{0, 2}, {1, 4}}}) == 1);
    CHECK(sparse_int_rank({{{0, 2}, {1, 4}}, {{0, 1}, {1, 2}}}) == 1);
    CHECK(sparse_int_rank({{{0, 1}}, {{1, 1}}, {{0, 1}, {1, 1}}}) == 2);
    // explicit zero entries are ignored
    CHECK(sparse_int_rank({{{0, 0}, {1, 1}}, {{0, 1}, {1, 0}}}) == 2);
    CHECK(sparse_int_rank({{{0, 0}}}) == 0);
    // big entries stay exact: two rows that a float method would confuse
    Int big = Int(1) << 200;
    CHECK(sparse_int_rank({{{0, big}, {1, big + 1}}, {{0, big - 1}, {1, big}}}) == 2);
}

TEST_CASE("dense rank and determinant over the rationals") {
    DenseMatrix<Rat> m{{{Rat(1), Rat(2)}, {Rat(3), Rat(4)}}};
    CHECK(dense_rank(m) == 2);
    CHECK(dense_det(m) == Rat(-2));
    DenseMatrix<Rat> s{{{Rat(1), Rat(2)}, {Rat(2), Rat(4)}}};
    CHECK(dense_rank(s) == 1);
    CHECK(dense_det(s) == Rat(0));
    DenseMatrix<Rat> t{{{Rat(0), Rat(1), Rat(0)},
                        {Rat(0), Rat(0), Rat(2)},
                        {Rat(3), Rat(0), Rat(0)}}};
    CHECK(dense_det(t) == Rat(6));
}

TEST_CASE("dense inverse round trip") {
    DenseMatrix<Rat> m{{{Rat(2), Rat(1)}, {Rat(1), Rat(1)}}};
    auto inv = dense_inverse(m);
    CHECK(inv.rows[0][0] == Rat(1));
    CHECK(inv.rows[0][1] == Rat(-1));
    CHECK(inv.rows[1][0] == Rat(-1));
    CHECK(inv.rows[1][1] == Rat(2));
    DenseMatrix<Rat> sing{{{Rat(1), Rat(2)}, {Rat(2), Rat(4)}}};
    CHECK_THROWS_AS((void)dense_inverse(sing), invalid_input);
}

TEST_CASE("dense operations over the gaussian rationals") {
    Gaussian i = Gaussian::i();
    DenseMatrix<Gaussian> m{{{Gaussian(1), i}, {i, Gaussian(1)}}};
    CHECK(dense_det(m) == Gaussian(2));  // 1 - i^2
    CHECK(dense_rank(m) == 2);
    auto inv = dense_inverse(m);
    // m * inv = identity
    for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 2; ++c) {
            Gaussian acc(0);
            for (int t = 0; t < 2; ++t)
                acc += m.rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(t)] *
                       inv.rows[static_cast<std::size_t>(t)][static_cast<std::size_t>(c)];
            CHECK(acc == (r == c ? Gaussian(1) : Gaussian(0)));
        }
    DenseMatrix<Gaussian> sing{{{Gaussian(1), i}, {-i, Gaussian(1)}}};
    CHECK(dense_det(sing).is_zero());
    CHECK(dense_rank(sing) == 1);
}
