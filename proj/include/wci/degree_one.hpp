#pragma once

#include "wci/core.hpp"

#include <optional>
#include <vector>

namespace wci {

struct PadicProfile {
    Int p = 0;
    int m = 0;
    std::vector<int> i_set;
    std::vector<int> j_set;
};

int valuation(Int x, Int p);
std::vector<Int> prime_divisors(Int x);
bool is_prime_power(Int x);

bool is_degree_one(const Family& f);

std::vector<PadicProfile> padic_profiles(const Pair& p);
bool padic_bijection_holds(const Pair& p);

Pair p_reduce(const Pair& pr, Int p);
Pair tilde_reduce(const Pair& pr);

bool in_class_P(const Pair& p);

struct CountingResult {
    int lhs = 0;
    int rhs = 0;
    bool strict = false;
    bool consistent = false;  // lhs >= rhs, equality iff tilde_reduce empties the pair
};

CountingResult counting_inequality(const Pair& p);

// Empty when no degree is a prime power; otherwise the offending degree.
std::optional<Int> prime_power_degree(const Pair& p);
inline bool no_prime_power_degrees(const Pair& p) { return !prime_power_degree(p); }

Family coprime_hypersurface(const std::vector<Int>& c);
Family six_tower(int r);
Family abc_pair(Int a, Int b, Int c);

} // namespace wci
