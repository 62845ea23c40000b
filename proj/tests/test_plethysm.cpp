#include <doctest.h>

#include "symcube/dims.hpp"
#include "symcube/plethysm.hpp"

using namespace symcube;

TEST_CASE("algebra names") {
    CHECK(algebra_from_name("gl") == Algebra::gl);
    CHECK(algebra_from_name("sl") == Algebra::sl);
    CHECK_THROWS_AS((void)algebra_from_name("so"), invalid_input);
    CHECK(std::string(algebra_name(Algebra::sl)) == "sl");
}

TEST_CASE("degree one is the whole algebra") {
    auto g = decompose_gl(1, 4);
    REQUIRE(g.components.size() == 2);
    CHECK(g.components[GLWeight(4, {0, 0, 0, 0})] == 1);
    CHECK(g.components[GLWeight(4, {1, 0, 0, -1})] == 1);
    CHECK(g.total_dim() == 16);

    auto s = decompose_sl(1, 4);
    REQUIRE(s.components.size() == 1);
    CHECK(s.components[GLWeight(4, {1, 0, 0, -1})] == 1);
    CHECK(s.total_dim() == 15);
}

TEST_CASE("squares at n = 4") {
    auto g = decompose_gl(2, 4);
    REQUIRE(g.components.size() == 4);
    CHECK(g.components[GLWeight(4, {0, 0, 0, 0})] == 2);
    CHECK(g.components[GLWeight(4, {1, 0, 0, -1})] == 2);
    CHECK(g.components[GLWeight(4, {2, 0, 0, -2})] == 1);
    CHECK(g.components[GLWeight(4, {1, 1, -1, -1})] == 1);
    CHECK(g.total_dim() == 136);  // C(17,2)

    auto s = decompose_sl(2, 4);
    REQUIRE(s.components.size() == 4);
    for (const auto& [w, m] : s.components) CHECK(m == 1);
    CHECK(s.total_dim() == 120);  // C(16,2)
}

TEST_CASE("cubes reproduce the nine-component table") {
    const std::vector<long> gl_mult = {3, 4, 2, 1, 2, 1, 1, 1, 1};
    const std::vector<long> sl_mult = {1, 2, 1, 1, 1, 1, 1, 1, 1};
    const auto& tmpl = symmetric_cube_templates();
    REQUIRE(tmpl.size() == 9);
    for (int n = 6; n <= 8; ++n) {
        auto g = decompose_gl(3, n);
        auto s = decompose_sl(3, n);
        REQUIRE(g.components.size() == 9);
        REQUIRE(s.components.size() == 9);
        for (std::size_t r = 0; r < tmpl.size(); ++r) {
            GLWeight w = instantiate(tmpl[r], n);
            CHECK(g.components.at(w) == gl_mult[r]);
            CHECK(s.components.at(w) == sl_mult[r]);
        }
    }
}

TEST_CASE("small n collapses components") {
    // at n = 2 the length-3 and length-4 shapes vanish
    auto g = decompose_gl(3, 2);
    Int total = 0;
    for (const auto& [w, m] : g.components) total += m * weyl_dim(w);
    CHECK(total == g.total_dim());
    CHECK(g.total_dim() == 20);  // C(6,3)
}

TEST_CASE("annotation joins dimensions and patterns") {
    auto a = annotate(decompose_gl(3, 6));
    REQUIRE(a.components.size() == 9);
    // catalog order: trivial first, then adjoint, [2,0*,-2], ...
    CHECK(a.components[0].gl_weight == GLWeight(6, {0, 0, 0, 0, 0, 0}));
    CHECK(a.components[0].multiplicity == 3);
    CHECK(a.components[0].dimension == 1);
    CHECK(a.components[1].gl_weight == GLWeight(6, {1, 0, 0, 0, 0, -1}));
    CHECK(a.components[1].dimension == 35);
    CHECK(a.components[1].variety_dimension == 9);
    for (const auto& c : a.components) {
        REQUIRE(c.pattern.has_value());
        CHECK(instantiate(*c.pattern, 6) == c.gl_weight);
        CHECK(c.sl_wt.size() == 5);
    }
    // no pattern catalog outside k = 3 or below n = 6
    auto b = annotate(decompose_gl(2, 4));
    for (const auto& c : b.components) CHECK_FALSE(c.pattern.has_value());
}

TEST_CASE("dimension conservation across the grid") {
    for (int n = 2; n <= 5; ++n)
        for (int k = 1; k <= 4; ++k) {
            auto g = decompose_gl(k, n);
            Int total = 0;
            for (const auto& [w, m] : g.components) {
                CHECK(w.is_dominant());
                CHECK(w.is_zero_sum());
                CHECK(m > 0);
                total += m * weyl_dim(w);
            }
            CHECK(total == binomial(n * n + k - 1, k));
        }
}
