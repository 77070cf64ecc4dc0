#pragma once

#include "wci/core.hpp"

#include <map>
#include <optional>
#include <vector>

namespace wci {

// Weighted simplicial complex on the entries > 1 of a vector; faces are the subsets with gcd > 1.
struct WsComplex {
    std::vector<int> vertices;   // indices into the source vector
    std::vector<Int> alpha;      // weight of each vertex
    std::vector<Int> values;     // distinct weights, ascending
    std::map<Int, int> height;   // longest chain of proper multiples inside `values`

    int size() const { return static_cast<int>(vertices.size()); }
    bool empty() const { return vertices.empty(); }
    // Positions into `vertices`.
    bool is_simplex(const std::vector<int>& positions) const;
    // f precedes g iff g | f and f != g.
    static bool precedes(Int f, Int g) { return f != g && f % g == 0; }
    // Positions of the vertices whose weight is b or a multiple of b.
    std::vector<int> lambda_tilde(Int b) const;
};

WsComplex ws_complex(const std::vector<Int>& entries);

struct ComplexPair {
    WsComplex degrees;
    WsComplex weights;
};

ComplexPair complex_from_pair(const Pair& p);

// weight index -> degree index (both 0-based positions in the pair); domain is {i : a_i > 1}.
using VertexMap = std::map<int, int>;

std::vector<Int> map_slacks(const Pair& p, const VertexMap& m);
bool is_nef_partition_map(const Pair& p, const VertexMap& m, bool strong);

enum class SetClass { not_preminimal, preminimal, minimal };
enum class MorphismClass { not_ws, ws, preminimal, minimal };

SetClass check_minimal_set(const std::vector<Int>& values);
MorphismClass classify_morphism(const Pair& p, const VertexMap& m);

BigInt lcm_of(const std::vector<Int>& values);
BigInt lcm_minus_sum(const std::vector<Int>& values);

// Intersection of the down-sets of B equals a union of down-sets of common proper multiples.
bool intersection_decomposes(const WsComplex& c, const std::vector<Int>& B);

// Exists for every regular pair; throws std::logic_error if the search fails on one.
// With require_strong the search backtracks until the morphism is also a strong nef partition map.
std::optional<VertexMap> find_preminimal_morphism(const Pair& p, bool require_strong = false);

// brute_force drops the fiber-size cap (number of distinct primes of the target degree).
std::optional<VertexMap> find_minimal_morphism(const Pair& p, bool brute_force = false);

// Any map {i : a_i > 1} -> degrees, not necessarily a WS-morphism.
std::optional<VertexMap> find_nef_partition_map(const Pair& p, bool strong);

struct NefPartition {
    std::vector<std::vector<int>> blocks;  // blocks[0] = S_0, blocks[j] = S_j

    bool nice(const Pair& p) const;
    bool pure(const Pair& p) const;  // S_0 holds only unit weights
};

bool is_nef_partition(const Pair& p, const NefPartition& part);
std::optional<NefPartition> partition_from_map(const Pair& p, const VertexMap& m);

// Exact backtracking over block assignments; pure restricts S_0 to unit weights.
std::optional<NefPartition> find_nef_partition(const Pair& p, bool nice, bool pure = false);

// s_2 <= variance.
bool conjecture_main_check(const Family& f);

struct LcmSweep {
    long long preminimal_sets = 0;
    long long singletons = 0;
    std::vector<std::vector<Int>> failures;  // pre-minimal sets of size >= 2 with lcm - sum <= 0
};

// All pre-minimal subsets of {2, ..., bound - 1}.
LcmSweep preminimal_lcm_sweep(Int bound = 15);

const char* to_string(SetClass c);
const char* to_string(MorphismClass c);

} // namespace wci
