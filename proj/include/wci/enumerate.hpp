#pragma once

#include "wci/series.hpp"

#include <map>
#include <string>
#include <vector>

namespace wci {

struct BetaVector {
    std::vector<Int> beta;
};

struct EnumerationBudget {
    Int variance = 0;
    int min_codim = 1;
    int max_codim = 0;
    Int max_weight = 0;
    std::map<int, long long> candidates;  // per codimension, after the cheap filters
    std::map<int, long long> visited;     // per codimension, raw box points reached
    std::string binding_bound;            // which weight bound was binding (semiseries)
};

// Enlarges every weight/degree bound of the boxes by `slack` (robustness runs).
struct EnumerationOptions {
    int slack = 0;
    EnumerationBudget* budget = nullptr;
};

std::vector<GeneratorRecord> enumerate_pn_generators(int r);
std::vector<GeneratorRecord> enumerate_weighted_series_generators(int r, EnumerationOptions opt = {});
std::vector<GeneratorRecord> enumerate_semiseries_generators(int r, EnumerationOptions opt = {});

enum class EnumerationKind { series, semiseries, pn, all };

// Sorted in table order.
std::vector<GeneratorRecord> enumerate_all(int r, EnumerationKind kind = EnumerationKind::all);

// Beta parametrization of a normalized index-one generator with a_N > 1.
BetaVector beta_of(const Family& f);

struct BoundReport {
    int r = 0;
    BigInt pn_partitions;
    BigInt series_low_bound;     // codim <= r, weighted
    BigInt series_high_bound;    // codim > r, weighted
    BigInt semi_low_bound;
    BigInt semi_high_bound;
    std::size_t pn_found = 0;
    std::size_t series_low_found = 0;
    std::size_t series_high_found = 0;
    std::size_t semi_low_found = 0;
    std::size_t semi_high_found = 0;

    bool ok() const;
};

BoundReport bound_check(int r, bool include_semiseries = true);

BigInt binomial(Int n, Int k);
BigInt partition_count(int r);

// Ordering of table rows: variance, dimension, degree, h0, then deterministic tie-breaks.
bool table_less(const Family& a, const Family& b);

} // namespace wci
