#include "wci/json.hpp"

namespace wci {

namespace {

Json big(const BigInt& x) {
    if (x >= std::numeric_limits<Int>::min() && x <= std::numeric_limits<Int>::max()) return x.convert_to<Int>();
    return x.str();
}

Json rational(const Rational& q) {
    if (denominator(q) == 1) return big(numerator(q));
    return to_string(q);
}

Json counts(const std::map<Int, int>& c) {
    Json o = Json::object();
    for (auto [w, n] : c) o[std::to_string(w)] = n;
    return o;
}

} // namespace

Json to_json(const Pair& p) { return Json{{"weights", p.weights}, {"degrees", p.degrees}}; }

Json to_json(const InvariantReport& r) {
    Json o;
    o["index"] = r.index;
    o["dimension"] = r.dimension;
    o["codimension"] = r.codimension;
    o["coindex"] = r.coindex;
    o["variance"] = r.variance;
    o["s2"] = r.s2;
    o["ones"] = r.ones;
    o["linear_system_dim"] = r.linear_system_dim;
    o["anticanonical_degree"] = rational(r.anticanonical_degree);
    o["h0_anticanonical"] = big(r.h0_anticanonical);
    o["sporadic"] = r.sporadic;
    o["linear_cone"] = r.linear_cone;
    o["combinatorially_smooth"] = r.combinatorially_smooth;
    return o;
}

Json to_json(const SubsetProfile& s) {
    return Json{{"size", s.size()}, {"counts", counts(s.counts)}, {"complement", counts(s.complement_counts)}};
}

Json to_json(const QVerdict& v) {
    Json o;
    o["q1"] = v.q1;
    o["q2"] = v.q2;
    if (v.q1_witness) o["q1_representable_degrees"] = v.q1_witness->representable;
    if (v.q2_witness) {
        const auto& w = *v.q2_witness;
        o["q2_witness"] = Json{{"subset", w.subset}, {"permutation", w.permutation}, {"l", w.l}, {"e", w.e}};
    }
    return o;
}

Json to_json(const SmoothnessVerdict& v) {
    Json o;
    o["smooth"] = v.smooth;
    o["failure"] = to_string(v.failure);
    if (v.regularity_divisor) o["regularity_divisor"] = *v.regularity_divisor;
    if (v.profile) o["profile"] = to_json(*v.profile);
    if (v.verdict) o["verdict"] = to_json(*v.verdict);
    return o;
}

Json to_json(const TableRow& r, TableKind kind) {
    Json o;
    auto header = table_header(kind);
    auto f = row_fields(r);
    for (std::size_t i = 0; i < header.size(); ++i) o[header[i]] = f[i];
    return o;
}

Json to_json(const Discrepancy& d) {
    return Json{{"row", d.row},       {"field", d.field},     {"reference", d.reference},
                {"computed", d.computed}, {"allowed", d.allowed}, {"note", d.note}};
}

Json to_json(const DiscrepancyReport& r) {
    Json items = Json::array();
    for (const auto& d : r.items) items.push_back(to_json(d));
    return Json{{"discrepancies", items},
                {"missing", r.missing},
                {"extra", r.extra},
                {"undocumented", r.undocumented()}};
}

Json map_to_json(const Pair& p, const VertexMap& m) {
    Json arr = Json::array();
    for (auto [i, j] : m)
        arr.push_back(Json{{"weight_index", i}, {"weight", p.weights[i]}, {"degree_index", j}, {"degree", p.degrees[j]}});
    return arr;
}

Json partition_to_json(const Pair& p, const NefPartition& part) {
    Json blocks = Json::array();
    for (const auto& b : part.blocks) {
        std::vector<Int> w;
        for (int i : b) w.push_back(p.weights[i]);
        blocks.push_back(Json{{"indices", b}, {"weights", w}});
    }
    return Json{{"blocks", blocks}, {"nice", part.nice(p)}, {"pure", part.pure(p)}};
}

} // namespace wci
