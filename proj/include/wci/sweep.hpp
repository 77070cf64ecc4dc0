#pragma once

#include "wci/series.hpp"

#include <string>
#include <vector>

namespace wci {

struct SweepFamily {
    Family family;
    Family base;  // the generator expanded to obtain `family`
    GeneratorKind kind;
    int l = 0;
    int m = 0;

    bool generator() const { return l == 0 && m == 0; }
};

// Generators of variance <= cap (all kinds up to semi_cap, series only above) and their
// expansions X^l_m with l, m <= expand_max (m = 0 for semiseries).
std::vector<SweepFamily> sweep_corpus(int cap, int semi_cap = 4, int expand_max = 2);

struct NefRecord {
    bool nice_partition = false;  // exact solver, S_0 unrestricted
    bool pure_partition = false;  // exact solver, S_0 only unit weights
    bool weak_map = false;
    bool strong_map = false;
    bool strong_preminimal = false;
    bool minimal_morphism = false;
};

NefRecord nef_record(const Pair& p);

struct ConjectureSummary {
    std::size_t generators = 0;
    std::size_t expansions = 0;
    std::vector<std::string> s2_counterexamples;

    std::size_t nef_checked = 0;
    std::size_t nef_found = 0;
    std::size_t coindex8_checked = 0;
    std::size_t coindex8_found = 0;
    std::size_t linear_checked = 0;  // dim|O(1)| >= dim and variance < 14
    std::size_t linear_found = 0;
    std::vector<std::string> nef_missing;

    std::size_t small_pairs = 0;  // N <= 10
    std::vector<std::string> route_disagreements;

    std::size_t minimal_generators = 0;
    std::size_t minimal_generators_found = 0;
    std::size_t minimal_expansions = 0;
    std::size_t minimal_expansions_found = 0;
    std::vector<std::string> minimal_candidates;  // candidate counterexamples to the minimal-morphism conjecture

    bool ok() const { return s2_counterexamples.empty() && nef_missing.empty() && route_disagreements.empty(); }
};

ConjectureSummary run_conjectures(int cap, int semi_cap = 4, int expand_max = 2);

std::string label(const Family& f);

} // namespace wci
