#include "wci/nef.hpp"

#include "wci/degree_one.hpp"
#include "wci/smoothness.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <stdexcept>

namespace wci {

bool WsComplex::is_simplex(const std::vector<int>& positions) const {
    if (positions.empty()) return false;
    Int g = 0;
    for (int v : positions) g = std::gcd(g, alpha[v]);
    return g > 1;
}

std::vector<int> WsComplex::lambda_tilde(Int b) const {
    std::vector<int> out;
    for (int v = 0; v < size(); ++v)
        if (alpha[v] % b == 0) out.push_back(v);
    return out;
}

WsComplex ws_complex(const std::vector<Int>& entries) {
    WsComplex c;
    for (int i = 0; i < static_cast<int>(entries.size()); ++i)
        if (entries[i] > 1) {
            c.vertices.push_back(i);
            c.alpha.push_back(entries[i]);
        }
    std::set<Int> vals(c.alpha.begin(), c.alpha.end());
    c.values.assign(vals.begin(), vals.end());
    // Descending order visits multiples before their divisors.
    for (auto it = c.values.rbegin(); it != c.values.rend(); ++it) {
        int h = 0;
        for (Int m : c.values)
            if (WsComplex::precedes(m, *it)) h = std::max(h, c.height[m] + 1);
        c.height[*it] = h;
    }
    return c;
}

ComplexPair complex_from_pair(const Pair& p) { return {ws_complex(p.degrees), ws_complex(p.weights)}; }

std::vector<Int> map_slacks(const Pair& p, const VertexMap& m) {
    std::vector<Int> s(p.degrees.begin(), p.degrees.end());
    for (auto [i, j] : m) s[j] -= p.weights[i];
    return s;
}

namespace {

bool domain_ok(const Pair& p, const VertexMap& m) {
    std::size_t expected = 0;
    for (Int a : p.weights)
        if (a > 1) ++expected;
    if (m.size() != expected) return false;
    for (auto [i, j] : m) {
        if (i < 0 || i >= static_cast<int>(p.weights.size()) || p.weights[i] <= 1) return false;
        if (j < 0 || j >= static_cast<int>(p.degrees.size())) return false;
    }
    return true;
}

bool minimal_values(const std::vector<Int>& a) {
    Int h = 1;
    for (std::size_t x = 0; x < a.size(); ++x)
        for (std::size_t y = x + 1; y < a.size(); ++y) h = std::lcm(h, std::gcd(a[x], a[y]));
    for (Int v : a)
        if (h % v == 0) return false;
    return true;
}

bool preminimal_values(const std::vector<Int>& a) {
    for (std::size_t x = 0; x < a.size(); ++x)
        for (std::size_t y = 0; y < a.size(); ++y)
            if (x != y && a[y] % a[x] == 0) return false;
    return true;
}

} // namespace

bool is_nef_partition_map(const Pair& p, const VertexMap& m, bool strong) {
    if (!domain_ok(p, m)) return false;
    for (Int s : map_slacks(p, m))
        if (s < (strong ? 1 : 0)) return false;
    return true;
}

SetClass check_minimal_set(const std::vector<Int>& values) {
    if (!preminimal_values(values)) return SetClass::not_preminimal;
    return minimal_values(values) ? SetClass::minimal : SetClass::preminimal;
}

MorphismClass classify_morphism(const Pair& p, const VertexMap& m) {
    if (!domain_ok(p, m)) return MorphismClass::not_ws;
    for (auto [i, j] : m)
        if (p.degrees[j] % p.weights[i] != 0) return MorphismClass::not_ws;
    std::map<int, std::vector<Int>> fibers;
    for (auto [i, j] : m) fibers[j].push_back(p.weights[i]);
    bool all_minimal = true;
    for (auto& [j, vals] : fibers) {
        std::set<Int> distinct(vals.begin(), vals.end());
        if (distinct.size() != vals.size()) return MorphismClass::ws;
        switch (check_minimal_set(vals)) {
        case SetClass::not_preminimal: return MorphismClass::ws;
        case SetClass::preminimal: all_minimal = false; break;
        case SetClass::minimal: break;
        }
    }
    return all_minimal ? MorphismClass::minimal : MorphismClass::preminimal;
}

BigInt lcm_of(const std::vector<Int>& values) {
    BigInt l = 1;
    for (Int v : values) l = boost::multiprecision::lcm(l, BigInt(v));
    return l;
}

BigInt lcm_minus_sum(const std::vector<Int>& values) {
    BigInt s = 0;
    for (Int v : values) s += v;
    return lcm_of(values) - s;
}

bool intersection_decomposes(const WsComplex& c, const std::vector<Int>& B) {
    if (B.empty()) return true;
    std::set<int> inter;
    for (int v = 0; v < c.size(); ++v) inter.insert(v);
    for (Int b : B) {
        auto lt = c.lambda_tilde(b);
        std::set<int> next;
        for (int v : lt)
            if (inter.count(v)) next.insert(v);
        inter = std::move(next);
    }
    std::set<int> uni;
    for (Int d : c.values) {
        bool common = std::all_of(B.begin(), B.end(), [&](Int b) { return WsComplex::precedes(d, b); });
        if (!common) continue;
        for (int v : c.lambda_tilde(d)) uni.insert(v);
    }
    return inter == uni;
}

namespace {

struct Assigner {
    const Pair& p;
    std::vector<int> order;   // weight indices in processing order
    std::vector<Int> load;
    std::vector<std::vector<Int>> fiber;
    VertexMap map;

    explicit Assigner(const Pair& pr) : p(pr), load(pr.degrees.size(), 0), fiber(pr.degrees.size()) {}

    void place(int i, int j) {
        map[i] = j;
        load[j] += p.weights[i];
        fiber[j].push_back(p.weights[i]);
    }
    void unplace(int i, int j) {
        map.erase(i);
        load[j] -= p.weights[i];
        fiber[j].pop_back();
    }
    // Targets ordered by largest remaining slack first, then index.
    std::vector<int> by_slack(std::vector<int> js) const {
        std::stable_sort(js.begin(), js.end(), [&](int x, int y) {
            return p.degrees[x] - load[x] > p.degrees[y] - load[y];
        });
        return js;
    }
    // Two targets with the same degree and the same fiber are interchangeable.
    bool duplicate_target(const std::vector<int>& tried, int j) const {
        for (int t : tried) {
            if (p.degrees[t] != p.degrees[j] || load[t] != load[j]) continue;
            auto a = fiber[t], b = fiber[j];
            std::sort(a.begin(), a.end());
            std::sort(b.begin(), b.end());
            if (a == b) return true;
        }
        return false;
    }
};

std::vector<int> nonunit_indices(const Pair& p) {
    std::vector<int> idx;
    for (int i = 0; i < static_cast<int>(p.weights.size()); ++i)
        if (p.weights[i] > 1) idx.push_back(i);
    std::stable_sort(idx.begin(), idx.end(), [&](int x, int y) { return p.weights[x] > p.weights[y]; });
    return idx;
}

} // namespace

std::optional<VertexMap> find_preminimal_morphism(const Pair& p, bool require_strong) {
    auto cx = ws_complex(p.weights);
    if (cx.empty()) return VertexMap{};

    // Structural check of the down-set intersections the existence induction relies on.
    for (Int b : cx.values) {
        int l = cx.height[b];
        if (l < 2) continue;
        std::vector<Int> below;
        for (Int c : cx.values)
            if (WsComplex::precedes(c, b) && cx.height[c] == l - 1) below.push_back(c);
        for (std::size_t x = 0; x < below.size(); ++x)
            for (std::size_t y = x + 1; y < below.size(); ++y)
                if (!intersection_decomposes(cx, {below[x], below[y]}))
                    throw std::logic_error("down-set intersection does not decompose");
    }

    Assigner st(p);
    st.order = nonunit_indices(p);
    std::stable_sort(st.order.begin(), st.order.end(), [&](int x, int y) {
        return cx.height[p.weights[x]] < cx.height[p.weights[y]];
    });
    Int margin = require_strong ? 1 : 0;

    std::function<bool(std::size_t)> go = [&](std::size_t pos) -> bool {
        if (pos == st.order.size()) return true;
        int i = st.order[pos];
        Int b = p.weights[i];
        std::vector<int> cand;
        for (int j = 0; j < static_cast<int>(p.degrees.size()); ++j) {
            if (p.degrees[j] % b != 0) continue;
            bool blocked = false;
            for (Int v : st.fiber[j])
                if (v % b == 0) blocked = true;  // same value or a proper multiple
            if (blocked) continue;
            if (require_strong && st.load[j] + b > p.degrees[j] - margin) continue;
            cand.push_back(j);
        }
        std::vector<int> tried;
        for (int j : st.by_slack(cand)) {
            if (st.duplicate_target(tried, j)) continue;
            tried.push_back(j);
            st.place(i, j);
            if (go(pos + 1)) return true;
            st.unplace(i, j);
        }
        return false;
    };

    if (!go(0)) {
        if (!require_strong && is_regular(p))
            throw std::logic_error("no pre-minimal morphism for a regular pair");
        return std::nullopt;
    }
    auto cls = classify_morphism(p, st.map);
    if (cls != MorphismClass::preminimal && cls != MorphismClass::minimal)
        throw std::logic_error("constructed morphism is not pre-minimal");
    return st.map;
}

std::optional<VertexMap> find_minimal_morphism(const Pair& p, bool brute_force) {
    Assigner st(p);
    st.order = nonunit_indices(p);
    std::vector<std::size_t> cap(p.degrees.size());
    for (std::size_t j = 0; j < p.degrees.size(); ++j)
        cap[j] = brute_force ? p.weights.size() : prime_divisors(p.degrees[j]).size();

    std::function<bool(std::size_t)> go = [&](std::size_t pos) -> bool {
        if (pos == st.order.size()) return true;
        int i = st.order[pos];
        Int a = p.weights[i];
        std::vector<int> tried;
        for (int j = 0; j < static_cast<int>(p.degrees.size()); ++j) {
            if (p.degrees[j] % a != 0 || st.fiber[j].size() >= cap[j]) continue;
            if (std::find(st.fiber[j].begin(), st.fiber[j].end(), a) != st.fiber[j].end()) continue;
            auto next = st.fiber[j];
            next.push_back(a);
            if (check_minimal_set(next) != SetClass::minimal) continue;
            if (st.duplicate_target(tried, j)) continue;
            tried.push_back(j);
            st.place(i, j);
            if (go(pos + 1)) return true;
            st.unplace(i, j);
        }
        return false;
    };
    if (!go(0)) return std::nullopt;
    return st.map;
}

std::optional<VertexMap> find_nef_partition_map(const Pair& p, bool strong) {
    Assigner st(p);
    st.order = nonunit_indices(p);
    Int margin = strong ? 1 : 0;
    std::function<bool(std::size_t)> go = [&](std::size_t pos) -> bool {
        if (pos == st.order.size()) {
            for (std::size_t j = 0; j < p.degrees.size(); ++j)
                if (p.degrees[j] - st.load[j] < margin) return false;
            return true;
        }
        int i = st.order[pos];
        std::vector<int> tried;
        for (int j = 0; j < static_cast<int>(p.degrees.size()); ++j) {
            if (st.load[j] + p.weights[i] > p.degrees[j] - margin) continue;
            if (st.duplicate_target(tried, j)) continue;
            tried.push_back(j);
            st.place(i, j);
            if (go(pos + 1)) return true;
            st.unplace(i, j);
        }
        return false;
    };
    if (!go(0)) return std::nullopt;
    return st.map;
}

bool NefPartition::nice(const Pair& p) const {
    if (blocks.empty()) return false;
    return std::any_of(blocks[0].begin(), blocks[0].end(), [&](int i) { return p.weights[i] == 1; });
}

bool NefPartition::pure(const Pair& p) const {
    if (blocks.empty()) return true;
    return std::all_of(blocks[0].begin(), blocks[0].end(), [&](int i) { return p.weights[i] == 1; });
}

bool is_nef_partition(const Pair& p, const NefPartition& part) {
    if (part.blocks.size() != p.degrees.size() + 1) return false;
    std::vector<int> seen(p.weights.size(), 0);
    for (auto& b : part.blocks)
        for (int i : b) {
            if (i < 0 || i >= static_cast<int>(p.weights.size()) || seen[i]) return false;
            seen[i] = 1;
        }
    if (std::count(seen.begin(), seen.end(), 0) != 0) return false;
    for (std::size_t j = 0; j < p.degrees.size(); ++j) {
        Int s = 0;
        for (int i : part.blocks[j + 1]) s += p.weights[i];
        if (s != p.degrees[j]) return false;
    }
    return true;
}

namespace {

// Fills each block's deficit with unit weights; the rest go to S_0.
std::optional<NefPartition> fill_with_ones(const Pair& p, std::vector<std::vector<int>> blocks,
                                           const std::vector<Int>& load) {
    std::vector<int> ones;
    for (int i = 0; i < static_cast<int>(p.weights.size()); ++i)
        if (p.weights[i] == 1) ones.push_back(i);
    std::size_t next = 0;
    for (std::size_t j = 0; j < p.degrees.size(); ++j) {
        Int deficit = p.degrees[j] - load[j];
        if (deficit < 0) return std::nullopt;
        for (Int t = 0; t < deficit; ++t) {
            if (next == ones.size()) return std::nullopt;
            blocks[j + 1].push_back(ones[next++]);
        }
    }
    for (; next < ones.size(); ++next) blocks[0].push_back(ones[next]);
    NefPartition part{std::move(blocks)};
    for (auto& b : part.blocks) std::sort(b.begin(), b.end());
    return part;
}

} // namespace

std::optional<NefPartition> partition_from_map(const Pair& p, const VertexMap& m) {
    if (!is_nef_partition_map(p, m, false)) return std::nullopt;
    std::vector<std::vector<int>> blocks(p.degrees.size() + 1);
    std::vector<Int> load(p.degrees.size(), 0);
    for (auto [i, j] : m) {
        blocks[j + 1].push_back(i);
        load[j] += p.weights[i];
    }
    return fill_with_ones(p, std::move(blocks), load);
}

std::optional<NefPartition> find_nef_partition(const Pair& p, bool nice, bool pure) {
    auto order = nonunit_indices(p);
    Int ones = count_ones(p);
    Int need_free = nice ? 1 : 0;
    std::size_t k = p.degrees.size();
    std::vector<Int> load(k, 0);
    std::vector<std::vector<int>> blocks(k + 1);
    std::vector<std::vector<Int>> vals(k + 1);

    std::function<bool(std::size_t)> go = [&](std::size_t pos) -> bool {
        if (pos == order.size()) {
            Int deficit = 0;
            for (std::size_t j = 0; j < k; ++j) deficit += p.degrees[j] - load[j];
            return deficit <= ones - need_free;
        }
        int i = order[pos];
        Int a = p.weights[i];
        std::vector<std::size_t> tried;
        for (std::size_t j = 0; j < k; ++j) {
            if (load[j] + a > p.degrees[j]) continue;
            bool dup = false;
            for (std::size_t t : tried)
                if (p.degrees[t] == p.degrees[j] && vals[t + 1] == vals[j + 1]) dup = true;
            if (dup) continue;
            tried.push_back(j);
            load[j] += a;
            blocks[j + 1].push_back(i);
            vals[j + 1].push_back(a);
            if (go(pos + 1)) return true;
            load[j] -= a;
            blocks[j + 1].pop_back();
            vals[j + 1].pop_back();
        }
        if (!pure) {
            blocks[0].push_back(i);
            if (go(pos + 1)) return true;
            blocks[0].pop_back();
        }
        return false;
    };
    if (!go(0)) return std::nullopt;
    auto part = fill_with_ones(p, blocks, load);
    if (part && nice && !part->nice(p)) return std::nullopt;
    return part;
}

bool conjecture_main_check(const Family& f) { return s2(f.pair()) <= variance(f); }

LcmSweep preminimal_lcm_sweep(Int bound) {
    LcmSweep out;
    std::vector<Int> universe;
    for (Int v = 2; v < bound; ++v) universe.push_back(v);
    std::size_t n = universe.size();
    for (unsigned long mask = 1; mask < (1ul << n); ++mask) {
        std::vector<Int> a;
        for (std::size_t b = 0; b < n; ++b)
            if (mask >> b & 1) a.push_back(universe[b]);
        if (check_minimal_set(a) == SetClass::not_preminimal) continue;
        ++out.preminimal_sets;
        if (a.size() == 1) {
            ++out.singletons;
            continue;
        }
        if (lcm_minus_sum(a) <= 0) out.failures.push_back(a);
    }
    return out;
}

const char* to_string(SetClass c) {
    switch (c) {
    case SetClass::not_preminimal: return "not-pre-minimal";
    case SetClass::preminimal: return "pre-minimal";
    case SetClass::minimal: return "minimal";
    }
    return "?";
}

const char* to_string(MorphismClass c) {
    switch (c) {
    case MorphismClass::not_ws: return "not-ws";
    case MorphismClass::ws: return "ws";
    case MorphismClass::preminimal: return "pre-minimal";
    case MorphismClass::minimal: return "minimal";
    }
    return "?";
}

} // namespace wci
