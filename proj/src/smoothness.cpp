#include "wci/smoothness.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

namespace wci {

int SubsetProfile::size() const {
    int s = 0;
    for (auto& [w, c] : counts) s += c;
    return s;
}

std::optional<Int> regularity_violation(const Pair& p) {
    Int top = 1;
    for (Int w : p.weights) top = std::max(top, w);
    for (Int h = 2; h <= top; ++h) {
        int nw = 0, nd = 0;
        for (Int a : p.weights) nw += (a % h == 0);
        if (nw == 0) continue;
        for (Int d : p.degrees) nd += (d % h == 0);
        if (nw > nd) return h;
    }
    return std::nullopt;
}

bool is_regular(const Pair& p) { return !regularity_violation(p); }

bool representable(Int target, const std::vector<Int>& basis) {
    if (target < 0) return false;
    if (target == 0) return true;
    Int g = 0;
    for (Int b : basis) g = std::gcd(g, b);
    if (g == 0 || target % g != 0) return false;
    std::vector<Int> vals(basis.begin(), basis.end());
    std::sort(vals.begin(), vals.end());
    vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
    if (vals.front() == 1) return true;
    for (Int v : vals)
        if (target % v == 0) return true;
    std::vector<char> ok(static_cast<std::size_t>(target) + 1, 0);
    ok[0] = 1;
    for (Int t = 1; t <= target; ++t)
        for (Int v : vals) {
            if (v > t) break;
            if (ok[static_cast<std::size_t>(t - v)]) {
                ok[static_cast<std::size_t>(t)] = 1;
                break;
            }
        }
    return ok[static_cast<std::size_t>(target)];
}

std::vector<int> profile_indices(const Pair& p, const SubsetProfile& profile) {
    std::vector<int> out;
    std::map<Int, int> taken;
    for (int i = 0; i < static_cast<int>(p.weights.size()); ++i) {
        Int w = p.weights[i];
        auto it = profile.counts.find(w);
        if (it != profile.counts.end() && taken[w] < it->second) {
            ++taken[w];
            out.push_back(i);
        }
    }
    return out;
}

SubsetProfile profile_of(const Pair& p, const std::vector<int>& indices) {
    SubsetProfile pr;
    std::vector<char> in(p.weights.size(), 0);
    for (int i : indices) in[i] = 1;
    for (std::size_t i = 0; i < p.weights.size(); ++i) {
        if (in[i]) ++pr.counts[p.weights[i]];
        else ++pr.complement_counts[p.weights[i]];
    }
    return pr;
}

std::vector<SubsetProfile> nonunit_profiles(const Pair& p) {
    std::map<Int, int> mult;
    for (Int w : p.weights) ++mult[w];
    std::vector<std::pair<Int, int>> vals;
    for (auto& [w, c] : mult)
        if (w > 1) vals.emplace_back(w, c);
    std::vector<SubsetProfile> out;
    std::vector<int> cur(vals.size(), 0);
    while (true) {
        SubsetProfile pr;
        for (auto& [w, c] : mult) pr.complement_counts[w] = c;
        for (std::size_t i = 0; i < vals.size(); ++i) {
            if (cur[i]) {
                pr.counts[vals[i].first] = cur[i];
                pr.complement_counts[vals[i].first] -= cur[i];
                if (pr.complement_counts[vals[i].first] == 0) pr.complement_counts.erase(vals[i].first);
            }
        }
        out.push_back(std::move(pr));
        std::size_t i = 0;
        while (i < vals.size() && cur[i] == vals[i].second) cur[i++] = 0;
        if (i == vals.size()) break;
        ++cur[i];
    }
    return out;
}

namespace {

// Kuhn matching: can every left vertex be matched into the right side?
bool saturating_matching(const std::vector<std::vector<int>>& adj, int right_size) {
    std::vector<int> match(right_size, -1);
    std::vector<char> seen;
    std::function<bool(int)> augment = [&](int u) {
        for (int v : adj[u]) {
            if (seen[v]) continue;
            seen[v] = 1;
            if (match[v] < 0 || augment(match[v])) {
                match[v] = u;
                return true;
            }
        }
        return false;
    };
    for (std::size_t u = 0; u < adj.size(); ++u) {
        seen.assign(right_size, 0);
        if (!augment(static_cast<int>(u))) return false;
    }
    return true;
}

struct Q2Search {
    const Pair& p;
    std::vector<Int> ivals;
    std::vector<int> comp;        // complement weight indices
    std::vector<int> comp_class;  // class id of each complement slot
    int s = 0;
    int right = 0;
    std::vector<int> rem;                       // remaining degree indices
    std::vector<std::vector<int>> cand;         // candidate complement slots per remaining degree
    std::vector<std::vector<int>> chosen;       // chosen slots per assigned remaining degree
    std::vector<int> usage;                     // how many chosen sets touch each slot
    std::vector<std::vector<int>> found;        // weight indices of the successful choice

    // Covering condition restricted to subsets J containing the newest degree.
    bool newest_ok() const {
        std::vector<std::vector<int>> adj;
        for (std::size_t j = 0; j + 1 < chosen.size(); ++j) adj.push_back(chosen[j]);
        for (int c = 0; c < s; ++c) adj.push_back(chosen.back());
        return saturating_matching(adj, right);
    }

    bool assign(std::size_t pos) {
        if (pos == rem.size()) {
            found.clear();
            for (const auto& c : chosen) {
                std::vector<int> idx;
                for (int slot : c) idx.push_back(comp[slot]);
                found.push_back(std::move(idx));
            }
            return true;
        }
        // group candidates by class; within a class, untouched slots are interchangeable
        std::map<int, std::pair<std::vector<int>, std::vector<int>>> groups;  // class -> (used, fresh)
        for (int slot : cand[pos]) {
            auto& g = groups[comp_class[slot]];
            (usage[slot] ? g.first : g.second).push_back(slot);
        }
        std::vector<std::pair<std::vector<int>, std::vector<int>>> gl;
        for (auto& [c, g] : groups) gl.push_back(g);
        std::vector<int> pick;
        return choose(pos, gl, 0, pick);
    }

    bool choose(std::size_t pos, const std::vector<std::pair<std::vector<int>, std::vector<int>>>& gl,
                std::size_t gi, std::vector<int>& pick) {
        int need = s - static_cast<int>(pick.size());
        if (need == 0) {
            chosen.push_back(pick);
            for (int slot : pick) ++usage[slot];
            bool good = newest_ok() && assign(pos + 1);
            for (int slot : pick) --usage[slot];
            chosen.pop_back();
            return good;
        }
        if (gi == gl.size()) return false;
        const auto& [used, fresh] = gl[gi];
        int maxf = std::min<int>(need, static_cast<int>(fresh.size()));
        for (int f = maxf; f >= 0; --f) {
            int rest = need - f;
            int nu = static_cast<int>(used.size());
            // subsets of the used slots of every size up to rest
            for (int mask = 0; mask < (1 << nu); ++mask) {
                int bits = __builtin_popcount(static_cast<unsigned>(mask));
                if (bits > rest) continue;
                std::size_t before = pick.size();
                for (int i = 0; i < f; ++i) pick.push_back(fresh[i]);
                for (int i = 0; i < nu; ++i)
                    if (mask >> i & 1) pick.push_back(used[i]);
                bool good = choose(pos, gl, gi + 1, pick);
                pick.resize(before);
                if (good) return true;
            }
        }
        return false;
    }
};

std::vector<std::vector<int>> combinations(const std::vector<int>& pool, int l) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    std::function<void(std::size_t)> rec = [&](std::size_t start) {
        if (static_cast<int>(cur.size()) == l) {
            out.push_back(cur);
            return;
        }
        for (std::size_t i = start; i < pool.size(); ++i) {
            cur.push_back(pool[i]);
            rec(i + 1);
            cur.pop_back();
        }
    };
    rec(0);
    return out;
}

} // namespace

QVerdict check_subset(const Pair& p, const SubsetProfile& profile) {
    QVerdict v;
    std::vector<int> I = profile_indices(p, profile);
    int g = static_cast<int>(I.size());
    int k = static_cast<int>(p.degrees.size());
    int rho = std::min(k, g);

    std::vector<Int> ivals;
    for (int i : I) ivals.push_back(p.weights[i]);
    std::vector<int> rep;
    for (int j = 0; j < k; ++j)
        if (g > 0 ? representable(p.degrees[j], ivals) : false) rep.push_back(j);

    if (static_cast<int>(rep.size()) >= rho) {
        v.q1 = true;
        v.q1_witness = Q1Witness{rep};
    }

    Q2Search search{p, ivals, {}, {}, 0, 0, {}, {}, {}, {}, {}};
    std::vector<char> inI(p.weights.size(), 0);
    for (int i : I) inI[i] = 1;
    std::map<Int, int> class_of;
    for (int i = 0; i < static_cast<int>(p.weights.size()); ++i) {
        if (inI[i]) continue;
        search.comp.push_back(i);
        auto [it, fresh] = class_of.emplace(p.weights[i], static_cast<int>(class_of.size()));
        search.comp_class.push_back(it->second);
    }
    search.right = static_cast<int>(search.comp.size());

    for (int l = std::min<int>(rho - 1, static_cast<int>(rep.size())); l >= 0 && !v.q2; --l) {
        std::set<std::vector<Int>> seen_values;
        for (const auto& L : combinations(rep, l)) {
            std::vector<Int> key;
            for (int j : L) key.push_back(p.degrees[j]);
            if (!seen_values.insert(key).second) continue;

            search.s = g - l;
            search.rem.clear();
            search.cand.clear();
            std::vector<char> inL(k, 0);
            for (int j : L) inL[j] = 1;
            bool feasible = true;
            for (int j = 0; j < k && feasible; ++j) {
                if (inL[j]) continue;
                std::vector<int> c;
                for (int slot = 0; slot < search.right; ++slot) {
                    Int rest = p.degrees[j] - p.weights[search.comp[slot]];
                    if (rest >= 0 && (rest == 0 || (g > 0 && representable(rest, ivals)))) c.push_back(slot);
                }
                if (static_cast<int>(c.size()) < search.s) feasible = false;
                search.rem.push_back(j);
                search.cand.push_back(std::move(c));
            }
            if (!feasible) continue;
            search.chosen.clear();
            search.usage.assign(search.right, 0);
            if (!search.assign(0)) continue;

            Q2Witness w;
            w.subset = I;
            w.permutation = L;
            w.permutation.insert(w.permutation.end(), search.rem.begin(), search.rem.end());
            w.l = l;
            w.e = search.found;
            v.q2 = true;
            v.q2_witness = w;
            break;
        }
    }
    return v;
}

bool verify_q2_witness(const Pair& p, const Q2Witness& w) {
    int g = static_cast<int>(w.subset.size());
    int k = static_cast<int>(p.degrees.size());
    int rho = std::min(k, g);
    if (w.l < 0 || w.l >= rho) return false;
    if (static_cast<int>(w.permutation.size()) != k) return false;
    std::vector<Int> ivals;
    std::vector<char> inI(p.weights.size(), 0);
    for (int i : w.subset) {
        ivals.push_back(p.weights[i]);
        inI[i] = 1;
    }
    for (int t = 0; t < w.l; ++t)
        if (!representable(p.degrees[w.permutation[t]], ivals)) return false;
    int s = g - w.l;
    int r = k - w.l;
    if (static_cast<int>(w.e.size()) != r) return false;
    for (int t = 0; t < r; ++t) {
        if (static_cast<int>(w.e[t].size()) != s) return false;
        Int d = p.degrees[w.permutation[w.l + t]];
        for (int e : w.e[t]) {
            if (e < 0 || e >= static_cast<int>(p.weights.size()) || inI[e]) return false;
            Int rest = d - p.weights[e];
            if (rest < 0 || (rest > 0 && !representable(rest, ivals))) return false;
        }
    }
    for (unsigned mask = 1; mask < (1u << r); ++mask) {
        std::set<int> touched;
        int size = 0;
        for (int t = 0; t < r; ++t)
            if (mask >> t & 1) {
                ++size;
                touched.insert(w.e[t].begin(), w.e[t].end());
            }
        if (static_cast<int>(touched.size()) < s + size - 1) return false;
    }
    return true;
}

SmoothnessVerdict is_combinatorially_smooth(const Pair& p) {
    SmoothnessVerdict out;
    if (auto h = regularity_violation(p)) {
        out.failure = SmoothFailure::not_regular;
        out.regularity_divisor = h;
        return out;
    }
    if (is_linear_cone(p)) {
        out.failure = SmoothFailure::linear_cone;
        return out;
    }
    if (!p.degrees.empty()) {
        for (auto& pr : nonunit_profiles(p)) {
            if (pr.counts.empty()) continue;
            QVerdict v = check_subset(p, pr);
            if (!v.ok()) {
                out.failure = SmoothFailure::subset;
                out.profile = pr;
                out.verdict = v;
                return out;
            }
        }
    }
    out.smooth = true;
    return out;
}

const char* to_string(SmoothFailure f) {
    switch (f) {
    case SmoothFailure::none: return "none";
    case SmoothFailure::not_regular: return "not-regular";
    case SmoothFailure::linear_cone: return "linear-cone";
    case SmoothFailure::subset: return "subset-not-q1-or-q2";
    }
    return "?";
}

} // namespace wci
