#include "oracles.hpp"
#include "wci/degree_one.hpp"
#include "wci/nef.hpp"
#include "wci/smoothness.hpp"

#include <doctest.h>

#include <numeric>
#include <random>

using namespace wci;

namespace {

Pair with_ones(int t, std::vector<Int> rest, std::vector<Int> degrees) {
    std::vector<Int> w(static_cast<std::size_t>(t), 1);
    w.insert(w.end(), rest.begin(), rest.end());
    return normalize({std::move(degrees), std::move(w)});
}

Pair random_pair(std::mt19937& rng, int max_n, Int max_w, int max_k, Int max_d) {
    Pair p;
    int n = 2 + static_cast<int>(rng() % (max_n - 1));
    int k = 1 + static_cast<int>(rng() % max_k);
    for (int i = 0; i < n; ++i) p.weights.push_back(1 + static_cast<Int>(rng() % max_w));
    for (int j = 0; j < k; ++j) p.degrees.push_back(2 + static_cast<Int>(rng() % (max_d - 1)));
    return normalize(p);
}

} // namespace

TEST_CASE("weighted simplicial complexes") {
    auto c = complex_from_pair({{30, 30}, {6, 10, 15}});
    CHECK(c.degrees.size() == 2);
    CHECK(c.weights.size() == 3);
    CHECK(c.weights.is_simplex({0, 1}));
    CHECK(c.weights.is_simplex({0, 2}));
    CHECK(c.weights.is_simplex({1, 2}));
    CHECK_FALSE(c.weights.is_simplex({0, 1, 2}));
    CHECK(complex_from_pair({{3}, {1, 1, 1, 1}}).weights.empty());

    auto h = ws_complex({2, 4, 8, 3});
    CHECK(h.height[8] == 0);
    CHECK(h.height[4] == 1);
    CHECK(h.height[2] == 2);
    CHECK(h.height[3] == 0);
    CHECK(h.lambda_tilde(2).size() == 3);
    CHECK(WsComplex::precedes(4, 2));
    CHECK_FALSE(WsComplex::precedes(2, 2));
}

TEST_CASE("nef partition maps") {
    Pair p{{4, 6}, {1, 1, 1, 1, 2, 2, 3}};
    VertexMap m{{4, 0}, {5, 0}, {6, 1}};
    CHECK(is_nef_partition_map(p, m, false));
    CHECK_FALSE(is_nef_partition_map(p, m, true));  // 2 + 2 fills d = 4 exactly
    VertexMap swapped{{4, 1}, {5, 1}, {6, 0}};
    CHECK(is_nef_partition_map(p, swapped, true));
    CHECK(map_slacks(p, swapped) == std::vector<Int>{1, 2});

    Pair q{{30, 30}, {6, 10, 15}};
    CHECK_FALSE(is_nef_partition_map(q, {{0, 0}, {1, 0}, {2, 0}}, false));
    CHECK(is_nef_partition_map({{3}, {1, 1, 1, 1}}, {}, true));
}

TEST_CASE("minimal sets") {
    CHECK(check_minimal_set({6, 10, 15}) == SetClass::preminimal);
    CHECK(check_minimal_set({6, 10}) == SetClass::minimal);
    CHECK(lcm_minus_sum({6, 10}) == 14);
    CHECK(check_minimal_set({2, 4}) == SetClass::not_preminimal);
    CHECK(check_minimal_set({3, 3}) == SetClass::not_preminimal);
    CHECK(lcm_of({4, 6, 10}) == 60);
}

TEST_CASE("morphism classes") {
    Pair q{{30, 30}, {6, 10, 15}};
    CHECK(classify_morphism(q, {{0, 0}, {1, 0}, {2, 1}}) == MorphismClass::minimal);
    CHECK(classify_morphism(q, {{0, 0}, {1, 0}, {2, 0}}) == MorphismClass::preminimal);

    Pair r{{15, 15, 18}, {3, 6, 9}};
    CHECK(classify_morphism(r, {{0, 0}, {1, 2}, {2, 2}}) == MorphismClass::minimal);
    CHECK(classify_morphism(r, {{0, 0}, {1, 0}, {2, 2}}) == MorphismClass::not_ws);

    Pair e{{2, 3, 5, 30}, {1, 1, 1, 1, 1, 6, 10, 15}};
    CHECK(classify_morphism(e, {{5, 3}, {6, 3}, {7, 3}}) == MorphismClass::preminimal);
    CHECK(classify_morphism(e, {{5, 3}, {6, 3}, {7, 2}}) == MorphismClass::not_ws);
    CHECK(classify_morphism({{30}, {1, 3, 6}}, {{1, 0}, {2, 0}}) == MorphismClass::ws);
}

TEST_CASE("morphism searches on the worked examples") {
    Pair q{{30, 30}, {6, 10, 15}};
    auto m = find_preminimal_morphism(q);
    REQUIRE(m);
    CHECK(classify_morphism(q, *m) >= MorphismClass::preminimal);
    auto mm = find_minimal_morphism(q);
    REQUIRE(mm);
    CHECK(classify_morphism(q, *mm) == MorphismClass::minimal);

    Pair e = with_ones(5, {6, 10, 15}, {2, 3, 5, 30});
    auto f = find_preminimal_morphism(e);
    REQUIRE(f);
    for (auto [i, j] : *f) CHECK(e.degrees[j] == 30);
    CHECK_FALSE(find_minimal_morphism(e));
    CHECK_FALSE(find_minimal_morphism(e, true));

    Pair ones{{3}, {1, 1, 1, 1}};
    CHECK(find_preminimal_morphism(ones)->empty());
    CHECK(find_minimal_morphism(ones)->empty());
}

TEST_CASE("nef partitions on examples") {
    Pair p{{4, 6}, {1, 1, 1, 1, 2, 2, 3}};
    auto part = find_nef_partition(p, true);
    REQUIRE(part);
    CHECK(is_nef_partition(p, *part));
    CHECK(part->nice(p));

    Pair c0{{}, {1, 1, 2}};
    auto triv = find_nef_partition(c0, true);
    REQUIRE(triv);
    CHECK(triv->blocks.size() == 1);
    CHECK(triv->blocks[0].size() == 3);
}

// Units only in the free block: never. Unrestricted free block: possible once 15 + 10 fit with spare units.
TEST_CASE("the (2,3,5,30) family with t units") {
    for (int t = 1; t <= 20; ++t) {
        Pair e = with_ones(t, {6, 10, 15}, {2, 3, 5, 30});
        CHECK_FALSE(find_nef_partition(e, true, true));
        CHECK_FALSE(find_nef_partition_map(e, false));
        bool general = find_nef_partition(e, true).has_value();
        CHECK(general == (t >= 16));
        CHECK(general == oracle::nef_partition_exists(e, true, false));
        CHECK_FALSE(is_combinatorially_smooth(e).smooth);
    }
}

// Literal recomputation of the pre-minimal lcm sweep.
TEST_CASE("lcm exceeds the sum on every pre-minimal set below 15") {
    auto lit = oracle::lcm_sweep(15);
    auto sweep = preminimal_lcm_sweep(15);
    CHECK(sweep.preminimal_sets == lit.sets);
    CHECK(sweep.singletons == lit.singletons);
    CHECK(sweep.failures.empty());
    CHECK(lit.failures.empty());
    CHECK(lit.sets == 731);

    auto wider = preminimal_lcm_sweep(16);
    CHECK(wider.failures == oracle::lcm_sweep(16).failures);
    CHECK(std::find(wider.failures.begin(), wider.failures.end(), std::vector<Int>{6, 10, 15}) != wider.failures.end());
}

TEST_CASE("nef partition solver agrees with exhaustive assignment") {
    std::mt19937 rng(17);
    int tested = 0;
    while (tested < 400) {
        Pair p = random_pair(rng, 8, 6, 3, 14);
        p.weights.insert(p.weights.begin(), static_cast<std::size_t>(rng() % 3), 1);
        p = normalize(p);
        ++tested;
        for (bool nice : {false, true})
            for (bool pure : {false, true}) {
                auto got = find_nef_partition(p, nice, pure);
                CHECK(got.has_value() == oracle::nef_partition_exists(p, nice, pure));
                if (got) {
                    CHECK(is_nef_partition(p, *got));
                    if (nice) CHECK(got->nice(p));
                    if (pure) CHECK(got->pure(p));
                }
            }
    }
}

// A weak nef map exists iff a pure nice partition exists, for index >= 1 and N <= 10.
TEST_CASE("map route and partition route agree") {
    std::mt19937 rng(23);
    int tested = 0;
    while (tested < 600) {
        Pair p = random_pair(rng, 7, 7, 3, 16);
        int extra = static_cast<int>(rng() % 5);
        p.weights.insert(p.weights.begin(), static_cast<std::size_t>(extra), 1);
        p = normalize(p);
        if (p.weights.size() > 11 || fano_index(p) < 1) continue;
        ++tested;
        auto map = find_nef_partition_map(p, false);
        bool exhaustive = oracle::any_map(p, [&](const VertexMap& m) { return is_nef_partition_map(p, m, false); });
        CHECK(map.has_value() == exhaustive);
        CHECK(map.has_value() == find_nef_partition(p, true, true).has_value());
        if (map) {
            auto part = partition_from_map(p, *map);
            REQUIRE(part);
            CHECK(is_nef_partition(p, *part));
            CHECK(part->nice(p));
        }
        auto strong = find_nef_partition_map(p, true);
        CHECK(strong.has_value() ==
              oracle::any_map(p, [&](const VertexMap& m) { return is_nef_partition_map(p, m, true); }));
    }
}

TEST_CASE("morphism searches against exhaustive maps on regular pairs") {
    std::mt19937 rng(29);
    int tested = 0, minimal_found = 0;
    while (tested < 400) {
        Pair p = random_pair(rng, 7, 12, 3, 30);
        p.weights.insert(p.weights.begin(), 1 + static_cast<std::size_t>(rng() % 6), 1);
        p = normalize(p);
        if (!is_regular(p) || is_linear_cone(p)) continue;
        ++tested;

        auto pre = find_preminimal_morphism(p);
        REQUIRE(pre);
        CHECK(classify_morphism(p, *pre) >= MorphismClass::preminimal);

        bool any_minimal =
            oracle::any_map(p, [&](const VertexMap& m) { return classify_morphism(p, m) == MorphismClass::minimal; });
        auto brute = find_minimal_morphism(p, true);
        CHECK(brute.has_value() == any_minimal);
        auto capped = find_minimal_morphism(p);
        CHECK(capped.has_value() == any_minimal);
        if (capped) {
            ++minimal_found;
            CHECK(classify_morphism(p, *capped) == MorphismClass::minimal);
            CHECK(is_nef_partition_map(p, *capped, true));
            std::map<int, std::vector<Int>> fibers;
            for (auto [i, j] : *capped) fibers[j].push_back(p.weights[i]);
            for (auto& [j, vals] : fibers) {
                if (vals.size() >= 2) CHECK(lcm_minus_sum(vals) > 0);
                CHECK(vals.size() <= prime_divisors(p.degrees[j]).size());
            }
        }

        auto strong_pre = find_preminimal_morphism(p, true);
        if (strong_pre) {
            CHECK(is_nef_partition_map(p, *strong_pre, true));
            CHECK(classify_morphism(p, *strong_pre) >= MorphismClass::preminimal);
        }
        if (p.weights.back() < 15 && is_combinatorially_smooth(p).smooth) CHECK(strong_pre.has_value());
    }
    MESSAGE("regular pairs " << tested << ", with minimal morphism " << minimal_found);
}

TEST_CASE("s2 bound check") {
    CHECK(conjecture_main_check(Family({1, 1, 1, 2, 2, 3, 3}, {6, 6})));
    CHECK(conjecture_main_check(Family(std::vector<Int>(13, 1), {3, 3, 3, 3})));
}
