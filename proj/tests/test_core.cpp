#include "oracles.hpp"
#include "wci/core.hpp"

#include <doctest.h>

#include <random>

using namespace wci;

TEST_CASE("normalize sorts weights and degrees") {
    CHECK(normalize({{6, 4}, {3, 1, 2, 1, 1, 1}}) == Pair{{4, 6}, {1, 1, 1, 1, 2, 3}});
    CHECK(normalize({{3}, {1, 1, 1, 1}}) == Pair{{3}, {1, 1, 1, 1}});
    CHECK(normalize({{10, 4}, {5, 2, 2, 1, 1, 1, 1, 1, 1}}) == Pair{{4, 10}, {1, 1, 1, 1, 1, 1, 2, 2, 5}});
    CHECK(is_normalized({{4, 6}, {1, 1, 2}}));
    CHECK_FALSE(is_normalized({{6, 4}, {1, 1, 2}}));
}

TEST_CASE("fano index") {
    CHECK(fano_index(Family({1, 1, 1, 1, 2, 2, 3}, {4, 6})) == 1);
    CHECK(fano_index(Family({1, 1, 1, 1, 1}, {3})) == 2);
    CHECK(fano_index(Family({1, 1, 2, 3}, {6})) == 1);
}

TEST_CASE("invariant reports") {
    auto r = invariants(Family({1, 1, 1, 1, 1, 1, 5}, {10}));
    CHECK(r.dimension == 5);
    CHECK(r.index == 1);
    CHECK(r.variance == 4);
    CHECK(r.anticanonical_degree == 2);

    auto p6 = invariants(Family(std::vector<Int>(7, 1), {3, 3}));
    CHECK(p6.dimension == 4);
    CHECK(p6.index == 1);
    CHECK(p6.variance == 2);
    CHECK(p6.anticanonical_degree == 9);
    CHECK(p6.s2 == 2);

    auto t = invariants(Family({1, 1, 1, 2, 2, 3, 3}, {6, 6}));
    CHECK(t.anticanonical_degree == 1);
    CHECK(t.coindex == t.dimension + 1 - t.index);
    CHECK(t.variance == t.coindex - t.codimension);
}

TEST_CASE("hilbert coefficients") {
    CHECK(hilbert_coefficient(Family({1, 1, 1, 1, 3}, {6}), 1) == 4);
    CHECK(hilbert_coefficient(Family({1, 1, 1, 1, 2, 5}, {10}), 1) == 4);
    CHECK(hilbert_coefficient(Family({1, 1, 2, 3}, {6}), 0) == 1);
}

TEST_CASE("hilbert coefficients agree with monomial counting") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        int n = 2 + static_cast<int>(rng() % 5);
        int k = static_cast<int>(rng() % 3);
        Pair p;
        for (int i = 0; i < n; ++i) p.weights.push_back(1 + static_cast<Int>(rng() % 4));
        for (int j = 0; j < k; ++j) p.degrees.push_back(2 + static_cast<Int>(rng() % 8));
        p = normalize(p);
        for (Int m = 0; m <= 9; ++m) CHECK(hilbert_coefficient(p, m) == oracle::hilbert(p, m));
    }
}

TEST_CASE("sporadic and linear cone") {
    CHECK(is_sporadic(Family({1, 1, 1, 1, 1, 2}, {6})));
    CHECK_FALSE(is_sporadic(Family({1, 1, 1, 1, 3}, {6})));
    CHECK_FALSE(is_sporadic(Family({1, 1, 1, 1, 1, 1, 5}, {10})));  // table marks it sporadic; see allowlist
    CHECK_FALSE(is_linear_cone({{4, 6}, {1, 1, 1, 1, 2, 2, 3}}));
    CHECK(is_linear_cone({{2, 3}, {1, 1, 1, 1, 1, 2}}));
    CHECK_FALSE(is_linear_cone({{6}, {1, 1, 2, 3}}));
}

TEST_CASE("well-formed ambient") {
    CHECK(ambient_well_formed({1, 1, 2, 3}));
    CHECK_FALSE(ambient_well_formed({2, 2, 2}));
    CHECK(ambient_well_formed({1, 2, 2, 3, 3}));
}

TEST_CASE("string rendering") {
    CHECK(ambient_string({1, 1, 1, 1, 2, 2, 3}) == "P(1^4,2^2,3)");
    CHECK(ambient_string({1, 1, 1, 1, 1}) == "P^4");
    CHECK(degrees_string({4, 6}) == "4,6");
    CHECK(degrees_string({}) == "---");
    CHECK(parse_int_list("1,2, 3") == std::vector<Int>{1, 2, 3});
    CHECK(parse_int_list("1^3,2") == std::vector<Int>{1, 1, 1, 2});
    CHECK_THROWS(parse_int_list("1,x"));
}
