#include "oracles.hpp"
#include "wci/smoothness.hpp"

#include <doctest.h>

#include <random>

using namespace wci;

namespace {

SubsetProfile profile_for(const Pair& p, std::vector<int> idx) { return profile_of(p, idx); }

int index_of(const Pair& p, Int w) {
    for (int i = 0; i < static_cast<int>(p.weights.size()); ++i)
        if (p.weights[i] == w) return i;
    return -1;
}

} // namespace

TEST_CASE("regularity examples") {
    CHECK(is_regular({{30, 30}, {6, 10, 15}}));
    CHECK_FALSE(is_regular({{4}, {1, 1, 2, 2}}));
    CHECK(regularity_violation({{4}, {1, 1, 2, 2}}) == Int{2});
    CHECK(is_regular({{6, 6}, {1, 1, 1, 2, 2, 3, 3}}));
}

TEST_CASE("representability") {
    CHECK(representable(6, {2, 3}));
    CHECK_FALSE(representable(5, {2, 4}));
    CHECK_FALSE(representable(7, {3, 5}));
    CHECK(representable(8, {3, 5}));
    for (Int t = 0; t <= 40; ++t) CHECK(representable(t, {4, 6, 9}) == oracle::combo(t, {4, 6, 9}));
}

TEST_CASE("subset verdicts") {
    Pair a{{6}, {1, 1, 2, 3}};
    auto v = check_subset(a, profile_for(a, {index_of(a, 3)}));
    CHECK(v.q1);

    Pair b{{5, 5}, {1, 1, 2}};
    auto w = check_subset(b, profile_for(b, {index_of(b, 2)}));
    CHECK_FALSE(w.q1);
    REQUIRE(w.q2);
    CHECK(w.q2_witness->l == 0);
    CHECK(verify_q2_witness(b, *w.q2_witness));

    CHECK(check_subset(a, SubsetProfile{}).q1);
}

TEST_CASE("combinatorial smoothness examples") {
    CHECK(is_combinatorially_smooth({{6}, {1, 1, 2, 3}}).smooth);
    CHECK(is_combinatorially_smooth({{4, 6}, {1, 1, 1, 1, 2, 2, 3}}).smooth);
    auto bad = is_combinatorially_smooth({{2, 3, 5, 30}, {1, 1, 1, 1, 1, 6, 10, 15}});
    CHECK_FALSE(bad.smooth);
    CHECK(bad.failure == SmoothFailure::subset);
    auto cone = is_combinatorially_smooth({{2, 3}, {1, 1, 1, 1, 1, 2}});
    CHECK(cone.failure == SmoothFailure::linear_cone);
    auto irr = is_combinatorially_smooth({{4}, {1, 1, 2, 2}});
    CHECK(irr.failure == SmoothFailure::not_regular);
}

TEST_CASE("count form and subset form of regularity agree exhaustively") {
    auto s = oracle::regularity_sweep(10, 7);
    MESSAGE("pairs " << s.pairs << ", regular " << s.regular);
    CHECK(s.pairs > 5'000'000);
    CHECK(s.regular > 0);
    CHECK(s.mismatches == 0);
}

TEST_CASE("subset-form oracle matches on random pairs with full subset enumeration") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 3000; ++trial) {
        Pair p;
        int n = 2 + static_cast<int>(rng() % 8);
        int k = static_cast<int>(rng() % 4);
        for (int i = 0; i < n; ++i) p.weights.push_back(1 + static_cast<Int>(rng() % 12));
        for (int j = 0; j < k; ++j) p.degrees.push_back(1 + static_cast<Int>(rng() % 30));
        p = normalize(p);
        CHECK(is_regular(p) == oracle::regular_subset_form(p));
    }
}

// Optimized Q1/Q2 against the literal search over orders, l and e-matrices.
TEST_CASE("Q1/Q2 checker agrees with exhaustive search") {
    auto s = oracle::q_sweep(5, 800);
    MESSAGE("subsets " << s.subsets << ", q2 " << s.q2_true << ", fixed-n reading diverges on "
                       << s.reading_divergence);
    CHECK(s.subsets > 1000);
    CHECK(s.q2_true > 0);
    CHECK(s.mismatches == 0);
    CHECK(s.bad_witnesses == 0);
}

TEST_CASE("profiles round trip through concrete indices") {
    Pair p{{6, 6}, {1, 1, 1, 2, 2, 3, 3}};
    auto profiles = nonunit_profiles(p);
    CHECK(profiles.size() == 9);  // 0..2 twos times 0..2 threes, empty profile included
    for (const auto& pr : profiles) CHECK(profile_of(p, profile_indices(p, pr)) == pr);
}
