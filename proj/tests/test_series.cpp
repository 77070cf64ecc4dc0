#include "wci/series.hpp"
#include "wci/smoothness.hpp"

#include <doctest.h>

using namespace wci;

namespace {
Family pn(int n, std::vector<Int> d) { return Family(std::vector<Int>(n + 1, 1), std::move(d)); }
} // namespace

TEST_CASE("expand appends hyperplane and quadric sections") {
    CHECK(expand(pn(3, {3}), 1, 0) == pn(4, {3}));
    CHECK(expand(pn(4, {3}), 0, 1) == pn(6, {2, 3}));
    Family f({1, 1, 2, 3}, {6});
    CHECK(expand(f, 0, 0) == f);
    CHECK(expand(f, 2, 1) == Family({1, 1, 1, 1, 1, 1, 2, 3}, {2, 6}));
}

TEST_CASE("strip recovers the generator") {
    auto s = strip(pn(6, {2, 4}));
    CHECK(s.generator == pn(4, {4}));
    CHECK(s.l == 0);
    CHECK(s.m == 1);

    auto t = strip(pn(4, {3}));
    CHECK(t.generator == pn(3, {3}));
    CHECK(t.l == 1);
    CHECK(t.m == 0);

    CHECK(strip(Family({1, 1, 1, 1, 3}, {6})).minimal());
}

TEST_CASE("generator classification") {
    CHECK(classify_generator(Family({1, 1, 1, 1, 1, 1, 1, 3, 3}, {6, 6})) == GeneratorKind::series);
    CHECK(classify_generator(Family({1, 1, 1, 2, 2, 3, 3}, {6, 6})) == GeneratorKind::semiseries);
    CHECK(classify_generator(pn(6, {2, 3})) == GeneratorKind::none);
    CHECK(classify_generator(projective_line()) == GeneratorKind::series);
    CHECK(classify_generator(plane_conic()) == GeneratorKind::series);
}

TEST_CASE("expansion shifts index by l and keeps variance") {
    std::vector<Family> gens{pn(3, {3}), Family({1, 1, 1, 1, 3}, {6}), Family({1, 1, 1, 2, 2, 3, 3}, {6, 6}),
                             Family({1, 1, 1, 1, 1, 1, 1, 3, 3}, {6, 6})};
    for (const auto& g : gens) {
        for (int l = 0; l <= 3; ++l) {
            for (int m = 0; m <= 3; ++m) {
                if (classify_generator(g) == GeneratorKind::semiseries && m > 0) continue;
                Family x = expand(g, l, m);
                CHECK(fano_index(x) == fano_index(g) + l);
                CHECK(variance(x) == variance(g));
                auto s = strip(x);
                CHECK(s.generator == g);
                CHECK(s.l == l);
                CHECK(s.m == m);
                CHECK(is_combinatorially_smooth(x.pair()).smooth);
            }
        }
    }
}

TEST_CASE("sigma decomposition for c = 2") {
    auto entries = sigma_c(2);
    int series = 0, semi = 0;
    for (const auto& e : entries) {
        (e.kind == GeneratorKind::series ? series : semi)++;
        CHECK(e.instances_smooth);
        CHECK(e.family.instantiate(0).dimension() - e.family.instantiate(0).codimension() == 2);
    }
    CHECK(series == 5);
    CHECK(semi == 6);
}

TEST_CASE("sigma decomposition for c = 0 is the quadric tower") {
    auto entries = sigma_c(0);
    REQUIRE(entries.size() == 1);
    CHECK(entries[0].kind == GeneratorKind::series);
    CHECK(entries[0].family.instantiate(1) == pn(4, {2, 2}));
}
