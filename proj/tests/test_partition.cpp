#include <doctest.h>

#include "symcube/partition.hpp"

using namespace symcube;

TEST_CASE("partition canonical form and validation") {
    Partition p({3, 1, 0, 0});
    CHECK(p.length() == 2);
    CHECK(p.size() == 4);
    CHECK(p == Partition({3, 1}));
    CHECK(p.part(0) == 3);
    CHECK(p.part(5) == 0);
    CHECK(Partition{}.empty());
    CHECK(Partition{}.size() == 0);
    CHECK_THROWS_AS(Partition({1, 2}), invalid_input);
    CHECK_THROWS_AS(Partition({2, -1}), invalid_input);
    CHECK(Partition({2, 1}).to_string() == "[2,1]");
    CHECK(Partition{}.to_string() == "[]");
}

TEST_CASE("containment") {
    CHECK(Partition({3, 2}).contains(Partition({2, 2})));
    CHECK(Partition({3, 2}).contains(Partition{}));
    CHECK_FALSE(Partition({3, 2}).contains(Partition({1, 1, 1})));
    CHECK_FALSE(Partition({3, 2}).contains(Partition({4})));
}

TEST_CASE("conjugate is an involution") {
    CHECK(conjugate(Partition({3, 1})) == Partition({2, 1, 1}));
    CHECK(conjugate(Partition{}) == Partition{});
    for (long k = 0; k <= 6; ++k)
        for (const auto& p : partitions_of(k)) {
            CHECK(conjugate(conjugate(p)) == p);
            CHECK(conjugate(p).size() == p.size());
            CHECK(conjugate(p).length() == static_cast<int>(p.part(0)));
        }
}

TEST_CASE("dual partition") {
    CHECK(dual_partition(Partition({3}), 3) == Partition({3, 3}));
    CHECK(dual_partition(Partition({2, 1}), 3) == Partition({2, 1}));
    CHECK(dual_partition(Partition({1}), 4) == Partition({1, 1, 1}));
    CHECK(dual_partition(Partition{}, 4) == Partition{});
    // size identity and involution at fixed first part
    for (int n = 2; n <= 5; ++n)
        for (const auto& p : partitions_of(3)) {
            if (p.length() > n) {
                CHECK_THROWS_AS((void)dual_partition(p, n), invalid_input);
                continue;
            }
            Partition d = dual_partition(p, n);
            CHECK(d.size() == n * p.part(0) - p.size());
        }
    CHECK(dual_partition(dual_partition(Partition({3, 3}), 3), 3) == Partition({3, 3}));
}

TEST_CASE("component weights") {
    GLWeight w = gl_weight_of_component(Partition({2, 2, 2, 2}), 2, 4);
    CHECK(w == GLWeight(4, {0, 0, 0, 0}));
    GLWeight a = gl_weight_of_component(Partition({4, 2, 2}), 2, 4);
    CHECK(a == GLWeight(4, {2, 0, 0, -2}));
    CHECK_THROWS_AS((void)gl_weight_of_component(Partition({2, 1}), 2, 4),
                    invalid_input);
    CHECK(sl_weight(GLWeight(4, {1, 0, 0, -1})) == std::vector<long>({2, 1, 1}));
    CHECK(sl_weight(GLWeight(3, {0, 0, 0})) == std::vector<long>({0, 0}));
}

TEST_CASE("weight basics") {
    GLWeight w(4, {1, 1, -1, -1});
    CHECK(w.is_dominant());
    CHECK(w.is_zero_sum());
    CHECK_FALSE(GLWeight(3, {0, 1, -1}).is_dominant());
    CHECK_FALSE(GLWeight(3, {1, 0, 0}).is_zero_sum());
    CHECK_THROWS_AS(GLWeight(3, {1, 0}), invalid_input);
    CHECK(w.to_string() == "[1,1,-1,-1]");
}

TEST_CASE("templates instantiate and match") {
    WeightTemplate t({1}, {-1});
    CHECK(t.to_string() == "[1,0*,-1]");
    CHECK(instantiate(t, 4) == GLWeight(4, {1, 0, 0, -1}));
    CHECK(instantiate(t, 2) == GLWeight(2, {1, -1}));
    WeightTemplate t3({1, 1, 1}, {-1, -1, -1});
    CHECK(instantiate(t3, 6) == GLWeight(6, {1, 1, 1, -1, -1, -1}));
    CHECK_THROWS_AS((void)instantiate(t3, 5), invalid_input);
    // non-dominant template instantiation is rejected
    CHECK_THROWS_AS((void)instantiate(WeightTemplate({-1}, {1}), 4), invalid_input);

    auto m = match_template(GLWeight(6, {2, 1, 0, 0, -1, -2}));
    REQUIRE(m.has_value());
    CHECK(*m == WeightTemplate({2, 1}, {-1, -2}));
    CHECK(instantiate(*m, 6) == GLWeight(6, {2, 1, 0, 0, -1, -2}));
    // no interior zero: ambiguous
    CHECK_FALSE(match_template(GLWeight(4, {1, 1, -1, -1})).has_value());
    CHECK(match_template(GLWeight(3, {0, 0, 0})) == WeightTemplate({}, {}));
}

TEST_CASE("template canonicalization") {
    CHECK(WeightTemplate({1, 0}, {0, -1}) == WeightTemplate({1}, {-1}));
    CHECK(WeightTemplate({}, {}).to_string() == "[0*]");
}

TEST_CASE("partitions_of enumeration") {
    auto p4 = partitions_of(4);
    REQUIRE(p4.size() == 5);
    CHECK(p4.front() == Partition({4}));
    CHECK(p4.back() == Partition({1, 1, 1, 1}));
    CHECK(partitions_of(0).size() == 1);
    CHECK(partitions_of(0).front() == Partition{});
    CHECK(partitions_of(6).size() == 11);
}
