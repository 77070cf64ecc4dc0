#pragma once

#include "wci/core.hpp"

#include <map>
#include <optional>
#include <vector>

namespace wci {

struct SubsetProfile {
    std::map<Int, int> counts;
    std::map<Int, int> complement_counts;

    int size() const;
    bool operator==(const SubsetProfile&) const = default;
};

struct Q1Witness {
    std::vector<int> representable;  // degree indices representable over I
};

struct Q2Witness {
    std::vector<int> subset;                // the concrete weight indices I
    std::vector<int> permutation;           // degree order p_1..p_k
    int l = 0;
    std::vector<std::vector<int>> e;        // e[j][mu] for the k-l trailing degrees, weight indices outside I
};

struct QVerdict {
    bool q1 = false;
    bool q2 = false;
    std::optional<Q1Witness> q1_witness;
    std::optional<Q2Witness> q2_witness;

    bool ok() const { return q1 || q2; }
};

enum class SmoothFailure { none, not_regular, linear_cone, subset };

struct SmoothnessVerdict {
    bool smooth = false;
    SmoothFailure failure = SmoothFailure::none;
    std::optional<Int> regularity_divisor;
    std::optional<SubsetProfile> profile;
    std::optional<QVerdict> verdict;
};

bool is_regular(const Pair& p);
// First h > 1 breaking the count condition, if any.
std::optional<Int> regularity_violation(const Pair& p);

bool representable(Int target, const std::vector<Int>& basis);

// Concrete indices realizing a profile: the first counts[w] indices of each weight value.
std::vector<int> profile_indices(const Pair& p, const SubsetProfile& profile);
SubsetProfile profile_of(const Pair& p, const std::vector<int>& indices);

// Every profile over weight values > 1 (a unit weight in I makes every degree representable).
std::vector<SubsetProfile> nonunit_profiles(const Pair& p);

QVerdict check_subset(const Pair& p, const SubsetProfile& profile);

// Literal re-check of a Q2 certificate, covering condition over all non-empty J.
bool verify_q2_witness(const Pair& p, const Q2Witness& w);

SmoothnessVerdict is_combinatorially_smooth(const Pair& p);

const char* to_string(SmoothFailure f);

} // namespace wci
