#include <doctest.h>

#include "symcube/dims.hpp"
#include "symcube/lr.hpp"

using namespace symcube;

TEST_CASE("Pieri cases") {
    auto e = lr_expand(Partition({1}), Partition({1}), 2);
    REQUIRE(e.size() == 2);
    CHECK(e[Partition({2})] == 1);
    CHECK(e[Partition({1, 1})] == 1);

    auto p = lr_expand(Partition({2, 1}), Partition({1}), 4);
    REQUIRE(p.size() == 3);
    CHECK(p[Partition({3, 1})] == 1);
    CHECK(p[Partition({2, 2})] == 1);
    CHECK(p[Partition({2, 1, 1})] == 1);
}

TEST_CASE("unit of the ring") {
    auto e = lr_expand(Partition({3}), Partition{}, 1);
    REQUIRE(e.size() == 1);
    CHECK(e[Partition({3})] == 1);
    CHECK(lr_coefficient(Partition({3}), Partition{}, Partition({3})) == 1);
    CHECK(lr_coefficient(Partition{}, Partition{}, Partition{}) == 1);
}

TEST_CASE("trivial component of V tensor V^* appears once") {
    // lambda = [2] against its n=4 dual [2,2,2]
    auto e = lr_expand(Partition({2}), Partition({2, 2, 2}), 4);
    CHECK(e[Partition({2, 2, 2, 2})] == 1);
}

TEST_CASE("known multiplicity two") {
    CHECK(lr_coefficient(Partition({2, 1}), Partition({2, 1}), Partition({3, 2, 1})) == 2);
}

TEST_CASE("vanishing cases") {
    // size mismatch
    CHECK(lr_coefficient(Partition({2}), Partition({1}), Partition({2})) == 0);
    // not containing lambda
    CHECK(lr_coefficient(Partition({3}), Partition({1}), Partition({2, 2})) == 0);
    // too long for the window
    auto e = lr_expand(Partition({1, 1}), Partition({1, 1}), 2);
    CHECK(e.find(Partition({1, 1, 1, 1})) == e.end());
    CHECK(e[Partition({2, 2})] == 1);
}

TEST_CASE("symmetry of the coefficients") {
    std::vector<Partition> small;
    for (long k = 0; k <= 4; ++k)
        for (const auto& p : partitions_of(k)) small.push_back(p);
    for (const auto& l : small)
        for (const auto& m : small) {
            auto a = lr_expand(l, m, 8);
            auto b = lr_expand(m, l, 8);
            CHECK(a == b);
        }
}

TEST_CASE("dimension conservation at n = 5") {
    const int n = 5;
    for (long a = 0; a <= 3; ++a)
        for (long b = 0; b <= 3; ++b)
            for (const auto& l : partitions_of(a))
                for (const auto& m : partitions_of(b)) {
                    Int lhs = 0;
                    for (const auto& [nu, c] : lr_expand(l, m, n))
                        lhs += c * weyl_dim(nu, n);
                    CHECK(lhs == weyl_dim(l, n) * weyl_dim(m, n));
                }
}
