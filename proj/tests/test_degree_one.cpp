#include "oracles.hpp"
#include "wci/degree_one.hpp"
#include "wci/enumerate.hpp"
#include "wci/smoothness.hpp"

#include <doctest.h>

#include <algorithm>
#include <functional>
#include <random>

using namespace wci;

TEST_CASE("degree-one examples") {
    CHECK(is_degree_one(Family({1, 1, 1, 2, 2, 3, 3}, {6, 6})));
    CHECK(is_degree_one(Family({1, 1, 1, 1, 2, 5}, {10})));
    CHECK_FALSE(is_degree_one(Family({1, 1, 1, 1, 1}, {4})));
}

TEST_CASE("valuations and primes") {
    CHECK(valuation(24, 2) == 3);
    CHECK(valuation(24, 5) == 0);
    CHECK(prime_divisors(60) == std::vector<Int>{2, 3, 5});
    CHECK(is_prime_power(8));
    CHECK(is_prime_power(7));
    CHECK_FALSE(is_prime_power(6));
    CHECK_FALSE(is_prime_power(1));
}

TEST_CASE("p-adic bijection examples") {
    CHECK(padic_bijection_holds({{6, 6}, {1, 1, 1, 2, 2, 3, 3}}));
    CHECK_FALSE(padic_bijection_holds({{4}, {1, 1, 2}}));
}

TEST_CASE("reductions") {
    CHECK(p_reduce({{6, 6}, {2, 2, 3, 3}}, 2) == Pair{{3, 3}, {1, 1, 3, 3}});
    CHECK(p_reduce({{9}, {1, 3, 9}}, 2) == Pair{{9}, {1, 3, 9}});
    CHECK(tilde_reduce({{3, 6}, {1, 2, 3}}) == Pair{{6}, {1, 2}});
    CHECK(tilde_reduce({{6}, {1, 2, 3}}) == Pair{{6}, {1, 2, 3}});
    Pair once = tilde_reduce({{3, 6}, {1, 2, 3}});
    CHECK(tilde_reduce(once) == once);
}

TEST_CASE("class P and the counting inequality") {
    CHECK(in_class_P({{6, 6}, {1, 1, 1, 2, 2, 3, 3}}));
    CHECK(in_class_P(abc_pair(2, 3, 5).pair()));
    auto c = counting_inequality({{6, 6}, {1, 1, 1, 2, 2, 3, 3}});
    CHECK(c.lhs == 4);
    CHECK(c.rhs == 2);
    CHECK(c.strict);
    CHECK(c.consistent);
    auto e = counting_inequality(Pair{});
    CHECK(e.lhs == 0);
    CHECK(e.rhs == 0);
    CHECK_FALSE(e.strict);
    CHECK(e.consistent);
    auto t = counting_inequality(six_tower(2).pair());
    CHECK(t.lhs == 4);
    CHECK(t.rhs == 2);
    CHECK(t.strict);
}

TEST_CASE("prime-power degrees") {
    CHECK(no_prime_power_degrees({{6, 6}, {1, 1, 1, 2, 2, 3, 3}}));
    CHECK(no_prime_power_degrees({{10}, {1, 1, 1, 1, 2, 5}}));
    CHECK(prime_power_degree({{8}, {1, 8}}) == Int{8});
}

TEST_CASE("example constructions are smooth and of degree one") {
    for (auto c : std::vector<std::vector<Int>>{{2, 3}, {2, 5}, {3, 4}, {2, 3, 5}}) {
        Family f = coprime_hypersurface(c);
        CHECK(is_combinatorially_smooth(f.pair()).smooth);
        CHECK(is_degree_one(f));
        CHECK(in_class_P(f.pair()));
    }
    for (int r = 1; r <= 3; ++r) {
        Family f = six_tower(r);
        CHECK(is_combinatorially_smooth(f.pair()).smooth);
        CHECK(is_degree_one(f));
        CHECK(variance(f) == r);
    }
    Family g = abc_pair(2, 3, 5);
    CHECK(is_combinatorially_smooth(g.pair()).smooth);
    CHECK(is_degree_one(g));
    for (Int p : {2, 3, 5}) CHECK(in_class_P(p_reduce(g.pair(), p)));
    CHECK_THROWS_AS(six_tower(0), std::invalid_argument);
}

// Bijection of p-adic level counts versus plain product comparison.
TEST_CASE("p-adic bijection iff equal products on random regular pairs") {
    auto s = oracle::bijection_sweep(3, 500);
    MESSAGE("equal products in " << s.equal_products << " of " << s.pairs);
    CHECK(s.equal_products >= 100);
    CHECK(s.mismatches == 0);
}

namespace {

// Every degree divisible by q^m is representable over the weights divisible by q^m, for all m.
bool levels_representable(const Pair& p, Int q) {
    for (Int qm = q;; qm *= q) {
        std::vector<Int> basis;
        for (Int a : p.weights)
            if (a % qm == 0) basis.push_back(a);
        bool any = !basis.empty();
        for (Int d : p.degrees) {
            if (d % qm != 0) continue;
            any = true;
            if (basis.empty() || !oracle::combo(d, basis)) return false;
        }
        if (!any) return true;
    }
}

bool has_equal_entries(const Pair& p) {
    for (Int d : p.degrees)
        if (std::find(p.weights.begin(), p.weights.end(), d) != p.weights.end()) return true;
    return false;
}

} // namespace

// Reducing by p keeps the p-levels (shifted by one) and regularity; other primes can lose representability.
TEST_CASE("p-reduction keeps its own prime levels but not always the others") {
    Pair p{{10, 12}, {1, 4, 5, 6}};
    CHECK(in_class_P(p));
    CHECK(is_combinatorially_smooth(p).smooth);
    Pair r = p_reduce(p, 5);
    CHECK(r == Pair{{2, 12}, {1, 1, 4, 6}});
    CHECK(is_regular(r));
    CHECK(levels_representable(r, 5));
    CHECK(product(r.weights) == product(r.degrees));
    CHECK_FALSE(levels_representable(r, 2));
    CHECK_FALSE(in_class_P(r));
}

// Cancelling d = a = 2 leaves a pair outside the class, so equality no longer forces emptiness.
TEST_CASE("counting equality with cancellable entries") {
    Pair p{{2, 2, 12}, {1, 2, 4, 6}};
    CHECK(in_class_P(p));
    auto c = counting_inequality(p);
    CHECK(c.lhs == c.rhs);
    CHECK_FALSE(c.consistent);
    Pair t = tilde_reduce(p);
    CHECK(t == Pair{{2, 12}, {1, 4, 6}});
    CHECK_FALSE(in_class_P(t));
}

// Non-unit parts only: unit weights affect neither products, regularity nor representability here.
TEST_CASE("counting inequality and prime-power exclusion on an exhaustive scan of class P") {
    long long members = 0, reductions = 0, reductions_outside = 0;
    std::vector<Int> w, d;
    std::function<void(std::size_t, Int)> degs;
    auto visit = [&] {
        Int pw = 1, pd = 1;
        for (Int x : w) pw *= x;
        for (Int x : d) pd *= x;
        if (pw != pd) return;
        Pair p{d, w};
        p.weights.insert(p.weights.begin(), 1);
        if (!in_class_P(p)) return;
        ++members;
        auto c = counting_inequality(p);
        CHECK(c.lhs >= c.rhs);
        if (!has_equal_entries(p)) {
            CHECK(c.consistent);
            CHECK(no_prime_power_degrees(p));
        }
        Pair t = tilde_reduce(p);
        CHECK(is_regular(t));
        CHECK_FALSE(has_equal_entries(t));
        for (Int q : prime_divisors(pd)) {
            Pair r = p_reduce(p, q);
            ++reductions;
            CHECK(is_regular(r));
            CHECK(product(r.weights) == product(r.degrees));
            CHECK(padic_bijection_holds(r));
            CHECK(levels_representable(r, q));
            reductions_outside += !in_class_P(r);
        }
    };
    degs = [&](std::size_t left, Int from) {
        if (!d.empty()) visit();
        if (left == 0) return;
        for (Int x = from; x <= 30; ++x) {
            d.push_back(x);
            degs(left - 1, x);
            d.pop_back();
        }
    };
    std::function<void(std::size_t, Int)> weights = [&](std::size_t left, Int from) {
        if (!w.empty()) degs(3, 2);
        if (left == 0) return;
        for (Int x = from; x <= 12; ++x) {
            w.push_back(x);
            weights(left - 1, x);
            w.pop_back();
        }
    };
    weights(4, 2);
    MESSAGE("class P members " << members << ", reductions " << reductions << ", leaving the class "
                               << reductions_outside);
    CHECK(members > 1000);
}

TEST_CASE("enumerated degree-one families are sporadic with composite degrees") {
    int found = 0;
    for (int r = 0; r <= 4; ++r) {
        for (const auto& g : enumerate_all(r)) {
            if (anticanonical_degree(g.family) != 1) continue;
            ++found;
            CHECK(is_degree_one(g.family));
            CHECK(is_sporadic(g.family));
            CHECK(in_class_P(g.family.pair()));
            for (Int x : g.family.degrees()) CHECK(prime_divisors(x).size() >= 2);
        }
    }
    CHECK(found >= 6);
}
