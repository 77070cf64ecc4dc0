#include "wci/enumerate.hpp"
#include "wci/parallel.hpp"
#include "wci/smoothness.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>

namespace wci {

namespace {

// Regularity and linear-cone test for a fixed weight multiset, applied to many degree vectors.
class LeafCheck {
public:
    explicit LeafCheck(const std::vector<Int>& weights) {
        Int top = 1;
        for (Int w : weights) top = std::max(top, w);
        is_weight_.assign(static_cast<std::size_t>(top) + 1, 0);
        for (Int w : weights) is_weight_[static_cast<std::size_t>(w)] = 1;
        for (Int h = 2; h <= top; ++h) {
            int c = 0;
            for (Int w : weights) c += (w % h == 0);
            if (c) need_.emplace_back(h, c);
        }
    }

    // Upper bound on the number of degrees is k: necessary for regularity.
    bool feasible(int k) const {
        for (auto& [h, c] : need_)
            if (c > k) return false;
        return true;
    }

    // Only the first `filled` degrees are fixed; each remaining one may still add one multiple of h.
    bool partial(const std::vector<Int>& d, std::size_t filled) const {
        Int x = d[filled - 1];
        if (x < static_cast<Int>(is_weight_.size()) && is_weight_[static_cast<std::size_t>(x)]) return false;
        auto open = static_cast<int>(d.size() - filled);
        for (auto& [h, c] : need_) {
            int got = open;
            for (std::size_t i = 0; i < filled && got < c; ++i) got += (d[i] % h == 0);
            if (got < c) return false;
        }
        return true;
    }

private:
    std::vector<char> is_weight_;
    std::vector<std::pair<Int, int>> need_;
};

std::vector<GeneratorRecord> filter_generators(const std::vector<Pair>& cands, int r, bool sporadic) {
    auto keep = parallel_map<char>(cands.size(), [&](std::size_t i) -> char {
        Family f(cands[i], Provenance::enumerated);
        if (f.dimension() < 1 || fano_index(f) != 1 || variance(f) != r) return 0;
        if (is_sporadic(f) != sporadic) return 0;
        if (!sporadic && s2(f.pair()) != f.codimension()) return 0;
        return is_combinatorially_smooth(f.pair()).smooth ? 1 : 0;
    });
    std::set<Pair> seen;
    std::vector<GeneratorRecord> out;
    for (std::size_t i = 0; i < cands.size(); ++i) {
        if (!keep[i] || !seen.insert(cands[i]).second) continue;
        out.push_back({Family(cands[i], Provenance::enumerated),
                       sporadic ? GeneratorKind::semiseries : GeneratorKind::series, r});
    }
    std::sort(out.begin(), out.end(),
              [](const GeneratorRecord& a, const GeneratorRecord& b) { return table_less(a.family, b.family); });
    return out;
}

void partitions(int rest, int min_part, std::vector<Int>& cur, std::vector<std::vector<Int>>& out) {
    if (rest == 0) {
        out.push_back(cur);
        return;
    }
    for (int p = min_part; p <= rest; ++p) {
        cur.push_back(p);
        partitions(rest - p, p, cur, out);
        cur.pop_back();
    }
}

void multisets(Int lo, Int hi, int len, std::vector<Int>& cur, const std::function<void(std::vector<Int>&)>& fn) {
    if (len == 0) {
        fn(cur);
        return;
    }
    for (Int v = lo; v <= hi; ++v) {
        cur.push_back(v);
        multisets(v, hi, len - 1, cur, fn);
        cur.pop_back();
    }
}

// Non-decreasing extensions of `cur` in which no h > 1 divides more than `cap` entries.
class CappedMultisets {
public:
    CappedMultisets(Int top, int cap) : cnt_(static_cast<std::size_t>(top) + 1, 0), cap_(cap) {}

    void add_existing(const std::vector<Int>& vals) {
        for (Int v : vals) bump(v, 1);
    }

    void run(Int lo, Int hi, int len, std::vector<Int>& cur, const std::function<void(std::vector<Int>&)>& fn) {
        if (len == 0) {
            fn(cur);
            return;
        }
        for (Int v = lo; v <= hi; ++v) {
            if (!bump(v, 1)) {
                bump(v, -1);
                continue;
            }
            cur.push_back(v);
            run(v, hi, len - 1, cur, fn);
            cur.pop_back();
            bump(v, -1);
        }
    }

private:
    bool bump(Int v, int by) {
        bool ok = true;
        for (Int h = 2; h <= v; ++h)
            if (v % h == 0) {
                cnt_[static_cast<std::size_t>(h)] += by;
                if (cnt_[static_cast<std::size_t>(h)] > cap_) ok = false;
            }
        return ok;
    }

    std::vector<int> cnt_;
    int cap_;
};

// Sorted degree vectors d with d_j = base_j + beta_j, sum(beta) = total, beta_j >= minb_j.
// `check` prunes partial vectors that can no longer become regular or that hit a weight value.
template <class Check, class Fn>
void beta_fill(const std::vector<Int>& base, const std::vector<Int>& minb, Int total, std::size_t j,
               std::vector<Int>& d, const Check& check, const Fn& fn) {
    std::size_t k = base.size();
    if (j + 1 == k) {
        Int b = total;
        if (b < minb[j]) return;
        Int dj = base[j] + b;
        if (j > 0 && dj < d[j - 1]) return;
        d[j] = dj;
        if (check.partial(d, j + 1)) fn(d);
        return;
    }
    Int start = minb[j];
    if (j > 0) start = std::max(start, d[j - 1] - base[j]);
    for (Int b = start; b <= total; ++b) {
        Int dj = base[j] + b;
        // later degrees are at least dj, which costs this much of the remaining beta budget
        Int reserve = 0;
        for (std::size_t t = j + 1; t < k; ++t) reserve += std::max(minb[t], dj - base[t]);
        if (b + reserve > total) break;
        d[j] = dj;
        if (!check.partial(d, j + 1)) continue;
        beta_fill(base, minb, total - b, j + 1, d, check, fn);
    }
}

struct TableKey {
    Int variance;
    int dimension;
    Rational degree;
    BigInt h0;
    int codim;
};

TableKey key_of(const Family& f) {
    Int idx = fano_index(f);
    return {variance(f), f.dimension(), anticanonical_degree(f),
            idx >= 0 ? hilbert_coefficient(f.pair(), idx) : BigInt(0), f.codimension()};
}

} // namespace

bool table_less(const Family& a, const Family& b) {
    TableKey ka = key_of(a), kb = key_of(b);
    if (ka.variance != kb.variance) return ka.variance < kb.variance;
    if (ka.dimension != kb.dimension) return ka.dimension < kb.dimension;
    if (ka.degree != kb.degree) return ka.degree < kb.degree;
    if (ka.h0 != kb.h0) return ka.h0 < kb.h0;
    if (ka.codim != kb.codim) return ka.codim < kb.codim;
    if (a.degrees() != b.degrees()) return a.degrees() > b.degrees();
    return a.weights() < b.weights();
}

std::vector<GeneratorRecord> enumerate_pn_generators(int r) {
    if (r < 0) throw std::invalid_argument("variance must be non-negative");
    if (r == 0)
        return {{projective_line(), GeneratorKind::series, 0}, {plane_conic(), GeneratorKind::series, 0}};
    std::vector<std::vector<Int>> parts;
    std::vector<Int> cur;
    partitions(r, 1, cur, parts);
    std::vector<GeneratorRecord> out;
    for (auto& alpha : parts) {
        std::vector<Int> d;
        Int n = 0;
        for (Int a : alpha) {
            d.push_back(a + 2);
            n += a + 2;
        }
        out.push_back({Family(std::vector<Int>(static_cast<std::size_t>(n + 1), 1), d, Provenance::enumerated),
                       GeneratorKind::series, r});
    }
    std::sort(out.begin(), out.end(),
              [](const GeneratorRecord& a, const GeneratorRecord& b) { return table_less(a.family, b.family); });
    return out;
}

std::vector<GeneratorRecord> enumerate_weighted_series_generators(int r, EnumerationOptions opt) {
    if (r < 1) return {};
    EnumerationBudget local;
    EnumerationBudget& bud = opt.budget ? *opt.budget : local;
    bud.variance = r;
    bud.max_codim = 3 * r - 2 + opt.slack;
    bud.max_weight = r + 1 + opt.slack;

    std::vector<Pair> cands;
    for (int k = 1; k <= bud.max_codim; ++k) {
        // beta_j >= 1 wherever the tail weight is 1, and beta_k >= 1
        for (int t1 = 0; t1 <= std::min(k - 1, r - 2); ++t1) {
            int u = k - t1;
            int positive_slots = std::min(k, r - 1);
            std::vector<Int> upper;
            multisets(3, bud.max_weight, u, upper, [&](std::vector<Int>& ws) {
                std::vector<Int> tail(static_cast<std::size_t>(t1), 1);
                tail.insert(tail.end(), ws.begin(), ws.end());
                // regularity can only be met if the few positions with beta > 0 cover the deficit
                std::set<Int> hs;
                for (Int w : ws)
                    for (Int h = 2; h <= w; ++h)
                        if (w % h == 0) hs.insert(h);
                for (Int h : hs) {
                    int wh = 0, ch = 0;
                    for (std::size_t j = 0; j < tail.size(); ++j) {
                        if (tail[j] % h == 0) ++wh;
                        if (j + 1 < tail.size() && (tail[j] + 1) % h == 0) ++ch;
                    }
                    if (wh > ch + positive_slots) return;
                }
                std::vector<Int> base(tail.size()), minb(tail.size());
                for (std::size_t j = 0; j < tail.size(); ++j) {
                    base[j] = tail[j] + 1;
                    minb[j] = tail[j] == 1 ? 1 : 0;
                }
                base.back() = tail.back() + 2;
                minb.back() = 1;
                std::vector<Int> d(tail.size());
                LeafCheck check(tail);
                beta_fill(base, minb, r - 1, 0, d, check, [&](const std::vector<Int>& degs) {
                    ++bud.visited[k];
                    Int dim = 0;
                    for (std::size_t j = 0; j < degs.size(); ++j) dim += degs[j] - tail[j];
                    Pair p;
                    p.degrees = degs;
                    p.weights.assign(static_cast<std::size_t>(dim + 1), 1);
                    p.weights.insert(p.weights.end(), tail.begin(), tail.end());
                    p = normalize(std::move(p));
                    ++bud.candidates[k];
                    cands.push_back(std::move(p));
                });
            });
        }
    }
    return filter_generators(cands, r, false);
}

std::vector<GeneratorRecord> enumerate_semiseries_generators(int r, EnumerationOptions opt) {
    if (r < 1) return {};
    EnumerationBudget local;
    EnumerationBudget& bud = opt.budget ? *opt.budget : local;
    bud.variance = r;
    bud.max_codim = 2 * r - 1 + opt.slack;
    int binding_kn = 0, binding_other = 0;

    std::vector<Pair> cands;
    for (int k = 1; k <= bud.max_codim; ++k) {
        int n = k + r;
        int N = 2 * k + r;
        Int nmax = std::max(k + 2 * r, 2 * k + r) + opt.slack;
        (k + 2 * r >= 2 * k + r ? binding_kn : binding_other)++;
        bud.max_weight = std::max(bud.max_weight, nmax);
        int tmax = std::min(2 * r + opt.slack, k + r);

        auto weights_at = [&](const std::vector<Int>& W, int i) -> Int {
            int first = N + 1 - static_cast<int>(W.size());
            return i < first ? 1 : W[static_cast<std::size_t>(i - first)];
        };

        for (int t = 0; t <= tmax; ++t) {
            int low = std::max(0, t - k);
            std::vector<Int> lowpart;
            CappedMultisets lowgen(nmax, k);
            lowgen.run(2, nmax, low, lowpart, [&](std::vector<Int>& lw) {
                // a_n and the beta total only involve the low part
                std::vector<Int> probe = lw;
                probe.resize(static_cast<std::size_t>(t), lw.empty() ? Int{2} : lw.back());
                Int an = weights_at(probe, n);
                Int total = 0;
                for (int i = k + 1; i <= n - 1; ++i) total += weights_at(probe, i);
                Int cap = std::min<Int>(nmax, an + 1 + total + opt.slack);
                Int lo = lw.empty() ? 2 : lw.back();
                if (t - low > 0 && lo > cap) return;
                std::vector<Int> hi;
                CappedMultisets higen(nmax, k);
                higen.add_existing(lw);
                higen.run(lo, cap, t - low, hi, [&](std::vector<Int>& hw) {
                    std::vector<Int> W = lw;
                    W.insert(W.end(), hw.begin(), hw.end());
                    LeafCheck check(W);
                    if (!check.feasible(k)) return;
                    std::vector<Int> A(static_cast<std::size_t>(N + 1));
                    for (int i = 0; i <= N; ++i) A[i] = weights_at(W, i);
                    Int aN = A[N];
                    if (aN == 1) return;
                    std::vector<Int> base(static_cast<std::size_t>(k)), minb(static_cast<std::size_t>(k), 0);
                    for (int j = 1; j < k; ++j) base[j - 1] = A[n + j] + 1;
                    base[k - 1] = aN + A[n] + 1;
                    std::vector<Int> d(static_cast<std::size_t>(k));
                    beta_fill(base, minb, total, 0, d, check, [&](const std::vector<Int>& degs) {
                        ++bud.visited[k];
                        Pair p{degs, A};
                        ++bud.candidates[k];
                        cands.push_back(std::move(p));
                    });
                });
            });
        }
    }
    bud.binding_bound = binding_other ? (binding_kn ? "k+2r for small k, 2k+r for k > r" : "2k+r") : "k+2r";
    return filter_generators(cands, r, true);
}

std::vector<GeneratorRecord> enumerate_all(int r, EnumerationKind kind) {
    std::vector<GeneratorRecord> out;
    bool pn = kind == EnumerationKind::all || kind == EnumerationKind::series || kind == EnumerationKind::pn;
    bool weighted = kind == EnumerationKind::all || kind == EnumerationKind::series;
    bool semi = kind == EnumerationKind::all || kind == EnumerationKind::semiseries;
    if (pn) {
        auto v = enumerate_pn_generators(r);
        out.insert(out.end(), v.begin(), v.end());
    }
    if (weighted && r > 0) {
        auto v = enumerate_weighted_series_generators(r);
        out.insert(out.end(), v.begin(), v.end());
    }
    if (semi && r > 0) {
        auto v = enumerate_semiseries_generators(r);
        out.insert(out.end(), v.begin(), v.end());
    }
    std::sort(out.begin(), out.end(),
              [](const GeneratorRecord& a, const GeneratorRecord& b) { return table_less(a.family, b.family); });
    return out;
}

BetaVector beta_of(const Family& f) {
    const auto& a = f.weights();
    const auto& d = f.degrees();
    int k = f.codimension();
    int n = f.dimension();
    int N = f.N();
    if (k == 0 || a[N] == 1) throw std::invalid_argument("beta_of: needs codimension >= 1 and a_N > 1");
    BetaVector b;
    for (int j = 1; j < k; ++j) b.beta.push_back(d[j - 1] - a[n + j] - 1);
    b.beta.push_back(d[k - 1] - a[N] - a[n] - 1);
    return b;
}

BigInt binomial(Int n, Int k) {
    if (k < 0 || n < 0 || k > n) return 0;
    BigInt r = 1;
    for (Int i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

BigInt partition_count(int r) {
    std::vector<BigInt> p(static_cast<std::size_t>(r) + 1, 0);
    p[0] = 1;
    for (int part = 1; part <= r; ++part)
        for (int s = part; s <= r; ++s) p[s] += p[s - part];
    return p[r];
}

bool BoundReport::ok() const {
    return BigInt(pn_found) == pn_partitions && BigInt(series_low_found) <= series_low_bound &&
           BigInt(series_high_found) <= series_high_bound && BigInt(semi_low_found) <= semi_low_bound &&
           BigInt(semi_high_found) <= semi_high_bound;
}

BoundReport bound_check(int r, bool include_semiseries) {
    if (r < 1) throw std::invalid_argument("bound_check: r must be positive");
    BoundReport rep;
    rep.r = r;
    rep.pn_partitions = partition_count(r);
    for (int k = 1; k <= 3 * r - 2; ++k) {
        BigInt b = binomial(r - 2 + k, r - 2);
        (k <= r ? rep.series_low_bound : rep.series_high_bound) += b * b;
    }
    for (int k = 1; k <= 2 * r - 1; ++k) {
        // beta solutions with sum S = (r-1)(k+2r): C(S+k-1, k-1); the printed C(S+k-1, k) vanishes at r = 1
        Int s = static_cast<Int>(r - 1) * (k + 2 * r);
        BigInt b = binomial(2 * k + 3 * r - 2, k + r) * binomial(s + k - 1, k - 1);
        (k <= r ? rep.semi_low_bound : rep.semi_high_bound) += b;
    }
    rep.pn_found = enumerate_pn_generators(r).size();
    for (auto& g : enumerate_weighted_series_generators(r))
        ++(g.family.codimension() <= r ? rep.series_low_found : rep.series_high_found);
    if (include_semiseries)
        for (auto& g : enumerate_semiseries_generators(r))
            ++(g.family.codimension() <= r ? rep.semi_low_found : rep.semi_high_found);
    return rep;
}

} // namespace wci
