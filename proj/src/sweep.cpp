#include "wci/sweep.hpp"

#include "wci/enumerate.hpp"
#include "wci/nef.hpp"
#include "wci/parallel.hpp"

namespace wci {

std::string label(const Family& f) { return ambient_string(f.weights()) + " " + degrees_string(f.degrees()); }

std::vector<SweepFamily> sweep_corpus(int cap, int semi_cap, int expand_max) {
    std::vector<SweepFamily> out;
    for (int r = 0; r <= cap; ++r) {
        auto kind = r <= semi_cap ? EnumerationKind::all : EnumerationKind::series;
        for (const auto& g : enumerate_all(r, kind)) {
            int mmax = g.kind == GeneratorKind::semiseries ? 0 : expand_max;
            for (int l = 0; l <= expand_max; ++l)
                for (int m = 0; m <= mmax; ++m) out.push_back({expand(g.family, l, m), g.family, g.kind, l, m});
        }
    }
    return out;
}

NefRecord nef_record(const Pair& p) {
    NefRecord r;
    r.nice_partition = find_nef_partition(p, true, false).has_value();
    r.pure_partition = find_nef_partition(p, true, true).has_value();
    r.weak_map = find_nef_partition_map(p, false).has_value();
    r.strong_map = find_nef_partition_map(p, true).has_value();
    r.strong_preminimal = find_preminimal_morphism(p, true).has_value();
    r.minimal_morphism = find_minimal_morphism(p).has_value();
    return r;
}

ConjectureSummary run_conjectures(int cap, int semi_cap, int expand_max) {
    auto corpus = sweep_corpus(cap, semi_cap, expand_max);
    auto recs = parallel_map<NefRecord>(corpus.size(), [&](std::size_t i) { return nef_record(corpus[i].family.pair()); });
    ConjectureSummary s;
    for (std::size_t i = 0; i < corpus.size(); ++i) {
        const auto& c = corpus[i];
        const auto& f = c.family;
        const auto& r = recs[i];
        std::string name = label(f);
        (c.generator() ? s.generators : s.expansions)++;
        if (s2(f.pair()) > variance(f)) s.s2_counterexamples.push_back(name);

        ++s.nef_checked;
        s.nef_found += r.nice_partition;
        if (!r.nice_partition) s.nef_missing.push_back(name);
        Int coindex = f.dimension() + 1 - fano_index(f);
        if (coindex <= 8) {
            ++s.coindex8_checked;
            s.coindex8_found += r.nice_partition;
        }
        if (count_ones(f.pair()) - 1 >= f.dimension() && variance(f) < 14) {
            ++s.linear_checked;
            s.linear_found += r.nice_partition;
        }
        if (f.N() <= 10) {
            ++s.small_pairs;
            bool agree = r.weak_map == r.pure_partition && (!r.strong_map || r.pure_partition) &&
                         (!r.strong_preminimal || r.strong_map);
            if (!agree) s.route_disagreements.push_back(name);
        }
        if (c.generator()) {
            ++s.minimal_generators;
            s.minimal_generators_found += r.minimal_morphism;
        } else {
            ++s.minimal_expansions;
            s.minimal_expansions_found += r.minimal_morphism;
        }
        if (!r.minimal_morphism) s.minimal_candidates.push_back(name);
    }
    return s;
}

} // namespace wci
