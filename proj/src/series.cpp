#include "wci/series.hpp"
#include "wci/enumerate.hpp"
#include "wci/smoothness.hpp"

#include <algorithm>
#include <stdexcept>

namespace wci {

Family ParametricFamily::instantiate(int value) const {
    return expand(generator, l, m ? *m : value);
}

Family expand(const Family& f, int l, int m) {
    if (l < 0 || m < 0) throw std::invalid_argument("expand: l and m must be non-negative");
    Pair p = f.pair();
    p.weights.insert(p.weights.end(), static_cast<std::size_t>(l + 2 * m), Int{1});
    p.degrees.insert(p.degrees.end(), static_cast<std::size_t>(m), Int{2});
    return Family(std::move(p), Provenance::expanded);
}

Family projective_line() { return Family({1, 1}, {}); }
Family plane_conic() { return Family({1, 1, 1}, {2}); }

namespace {

Pair remove_copies(Pair p, int twos, int ones) {
    for (int t = 0; t < twos; ++t) {
        auto it = std::find(p.degrees.begin(), p.degrees.end(), Int{2});
        p.degrees.erase(it);
    }
    for (int t = 0; t < ones; ++t) {
        auto it = std::find(p.weights.begin(), p.weights.end(), Int{1});
        p.weights.erase(it);
    }
    return p;
}

} // namespace

StripResult strip(const Family& f) {
    Int idx = fano_index(f);
    if (idx < 1) throw std::domain_error("strip: family is not Fano");
    int twos = static_cast<int>(std::count(f.degrees().begin(), f.degrees().end(), Int{2}));
    int ones = count_ones(f.pair());

    if (variance(f) == 0) {
        if (f.codimension() == 0) {
            int l = f.N() - 1;
            if (f.N() < 1 || ones != f.N() + 1) throw std::domain_error("strip: codimension-0 family is not a projective space");
            return {projective_line(), l, 0};
        }
        if (twos != f.codimension()) throw std::domain_error("strip: variance-0 family outside the quadric tower");
        int m = twos - 1;
        int l = static_cast<int>(idx) - 1;
        if (ones < 2 * m + l + 3 || ones != f.N() + 1) throw std::domain_error("strip: not enough unit weights");
        return {plane_conic(), l, m};
    }

    int m = twos;
    int l = static_cast<int>(idx) - 1;
    if (ones < 2 * m + l) throw std::domain_error("strip: not enough unit weights to remove");
    Pair g = remove_copies(f.pair(), m, 2 * m + l);
    Family gen(std::move(g), f.provenance());
    if (gen.dimension() < 1) throw std::domain_error("strip: generator would have dimension < 1");
    return {gen, l, m};
}

GeneratorKind classify_generator(const Family& f) {
    if (f == projective_line() || f == plane_conic()) return GeneratorKind::series;
    if (fano_index(f) != 1) return GeneratorKind::none;
    if (is_sporadic(f)) return GeneratorKind::semiseries;
    return s2(f.pair()) == f.codimension() ? GeneratorKind::series : GeneratorKind::none;
}

std::vector<SigmaEntry> sigma_c(int c, int instantiate_to) {
    if (c < 0) throw std::invalid_argument("sigma_c: c must be non-negative");
    std::vector<SigmaEntry> series, semi;
    for (int r = 0; r <= c; ++r) {
        int l = c - r;
        for (const auto& g : enumerate_all(r)) {
            if (r == 0 && g.family != plane_conic()) continue;
            SigmaEntry e{ParametricFamily{g.family, l, std::nullopt}, g.kind, g.variance, true};
            if (g.kind == GeneratorKind::semiseries) e.family.m = 0;
            int top = e.family.m ? 0 : instantiate_to;
            for (int t = 0; t <= top; ++t)
                if (!is_combinatorially_smooth(e.family.instantiate(t).pair()).smooth) e.instances_smooth = false;
            (g.kind == GeneratorKind::semiseries ? semi : series).push_back(std::move(e));
        }
    }
    auto by_table = [](const SigmaEntry& a, const SigmaEntry& b) {
        if (a.variance != b.variance) return a.variance < b.variance;
        return table_less(a.family.instantiate(0), b.family.instantiate(0));
    };
    std::stable_sort(series.begin(), series.end(), by_table);
    std::stable_sort(semi.begin(), semi.end(), by_table);
    series.insert(series.end(), semi.begin(), semi.end());
    return series;
}

const char* to_string(GeneratorKind k) {
    switch (k) {
    case GeneratorKind::series: return "series";
    case GeneratorKind::semiseries: return "semiseries";
    case GeneratorKind::none: return "not-a-generator";
    }
    return "?";
}

} // namespace wci
