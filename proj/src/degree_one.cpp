#include "wci/degree_one.hpp"
#include "wci/smoothness.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace wci {

int valuation(Int x, Int p) {
    int v = 0;
    while (x % p == 0) {
        x /= p;
        ++v;
    }
    return v;
}

std::vector<Int> prime_divisors(Int x) {
    std::vector<Int> out;
    for (Int p = 2; p * p <= x; ++p)
        if (x % p == 0) {
            out.push_back(p);
            while (x % p == 0) x /= p;
        }
    if (x > 1) out.push_back(x);
    return out;
}

bool is_prime_power(Int x) { return x > 1 && prime_divisors(x).size() == 1; }

bool is_degree_one(const Family& f) {
    return fano_index(f) == 1 && product(f.weights()) == product(f.degrees());
}

namespace {

std::set<Int> primes_of(const Pair& p) {
    std::set<Int> ps;
    for (Int a : p.weights)
        for (Int q : prime_divisors(a)) ps.insert(q);
    for (Int d : p.degrees)
        for (Int q : prime_divisors(d)) ps.insert(q);
    return ps;
}

} // namespace

std::vector<PadicProfile> padic_profiles(const Pair& p) {
    std::vector<PadicProfile> out;
    for (Int q : primes_of(p)) {
        std::map<int, PadicProfile> by_level;
        for (int i = 0; i < static_cast<int>(p.weights.size()); ++i)
            if (int v = valuation(p.weights[i], q); v > 0) by_level[v].i_set.push_back(i);
        for (int j = 0; j < static_cast<int>(p.degrees.size()); ++j)
            if (int v = valuation(p.degrees[j], q); v > 0) by_level[v].j_set.push_back(j);
        for (auto& [m, prof] : by_level) {
            prof.p = q;
            prof.m = m;
            out.push_back(prof);
        }
    }
    return out;
}

bool padic_bijection_holds(const Pair& p) {
    for (const auto& prof : padic_profiles(p))
        if (prof.i_set.size() != prof.j_set.size()) return false;
    return true;
}

Pair p_reduce(const Pair& pr, Int p) {
    Pair out = pr;
    for (Int& a : out.weights)
        if (a % p == 0) a /= p;
    for (Int& d : out.degrees)
        if (d % p == 0) d /= p;
    return normalize(out);
}

Pair tilde_reduce(const Pair& pr) {
    std::multiset<Int> w(pr.weights.begin(), pr.weights.end());
    Pair out;
    for (Int d : pr.degrees) {
        auto it = w.find(d);
        if (it != w.end()) w.erase(it);
        else out.degrees.push_back(d);
    }
    out.weights.assign(w.begin(), w.end());
    return normalize(out);
}

bool in_class_P(const Pair& p) {
    if (!is_regular(p) || product(p.weights) != product(p.degrees)) return false;
    for (Int q : primes_of(p)) {
        for (Int pm = q;; pm *= q) {
            std::vector<Int> basis;
            for (Int a : p.weights)
                if (a % pm == 0) basis.push_back(a);
            bool any_degree = false;
            for (Int d : p.degrees) {
                if (d % pm != 0) continue;
                any_degree = true;
                if (basis.empty() || !representable(d, basis)) return false;
            }
            if (!any_degree && basis.empty()) break;
        }
    }
    return true;
}

CountingResult counting_inequality(const Pair& p) {
    CountingResult r;
    r.lhs = static_cast<int>(std::count_if(p.weights.begin(), p.weights.end(), [](Int a) { return a > 1; }));
    r.rhs = static_cast<int>(std::count_if(p.degrees.begin(), p.degrees.end(), [](Int d) { return d > 1; }));
    r.strict = r.lhs > r.rhs;
    Pair t = tilde_reduce(p);
    bool emptied = std::all_of(t.weights.begin(), t.weights.end(), [](Int a) { return a == 1; }) &&
                   std::all_of(t.degrees.begin(), t.degrees.end(), [](Int d) { return d == 1; });
    r.consistent = r.lhs >= r.rhs && (r.lhs == r.rhs) == emptied;
    return r;
}

std::optional<Int> prime_power_degree(const Pair& p) {
    for (Int d : p.degrees)
        if (is_prime_power(d)) return d;
    return std::nullopt;
}

Family coprime_hypersurface(const std::vector<Int>& c) {
    Int prod = 1, sum = 0;
    for (Int x : c) {
        prod *= x;
        sum += x;
    }
    Int alpha = prod - sum;
    if (alpha < 0) throw std::invalid_argument("coprime_hypersurface: product smaller than sum");
    std::vector<Int> w(static_cast<std::size_t>(1 + alpha), 1);
    w.insert(w.end(), c.begin(), c.end());
    return Family(w, {prod});
}

Family six_tower(int r) {
    if (r < 1) throw std::invalid_argument("six_tower: r must be positive");
    std::vector<Int> w(static_cast<std::size_t>(1 + r), 1);
    w.insert(w.end(), static_cast<std::size_t>(r), 2);
    w.insert(w.end(), static_cast<std::size_t>(r), 3);
    return Family(w, std::vector<Int>(static_cast<std::size_t>(r), 6));
}

Family abc_pair(Int a, Int b, Int c) {
    Int abc = a * b * c;
    Int alpha = 2 * abc - a * b - a * c - b * c;
    if (alpha < 0) throw std::invalid_argument("abc_pair: negative unit count");
    std::vector<Int> w(static_cast<std::size_t>(1 + alpha), 1);
    w.insert(w.end(), {a * b, b * c, a * c});
    return Family(w, {abc, abc});
}

} // namespace wci
