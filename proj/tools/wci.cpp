#include "wci/degree_one.hpp"
#include "wci/enumerate.hpp"
#include "wci/json.hpp"
#include "wci/nef.hpp"
#include "wci/series.hpp"
#include "wci/smoothness.hpp"
#include "wci/sweep.hpp"
#include "wci/table.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <iostream>
#include <stdexcept>

using namespace wci;

namespace {

enum Exit { ok = 0, discrepancy = 1, usage = 2, internal = 3 };

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Family read_family(const std::string& weights, const std::string& degrees) {
    try {
        auto a = parse_int_list(weights);
        std::vector<Int> d;
        if (!degrees.empty() && degrees != "---") d = parse_int_list(degrees);
        return Family(a, d);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
}

void print(const Json& j) { std::cout << j.dump(2) << '\n'; }

std::string default_allowlist(const std::string& golden) {
    auto p = std::filesystem::path(golden).parent_path() / "allowlist.csv";
    return std::filesystem::exists(p) ? p.string() : std::string();
}

void print_report(const DiscrepancyReport& rep) {
    for (const auto& d : rep.items)
        std::cerr << (d.allowed ? "allowed " : "DISCREPANCY ") << d.row << ' ' << d.field << ": table " << d.reference
                  << ", computed " << d.computed << (d.note.empty() ? "" : " (" + d.note + ")") << '\n';
    for (const auto& m : rep.missing) std::cerr << "MISSING " << m << '\n';
    for (const auto& e : rep.extra) std::cerr << "EXTRA " << e << '\n';
}

int cmd_classify(const std::string& weights, const std::string& degrees, bool explain, bool require_smooth) {
    Family f = read_family(weights, degrees);
    Json out;
    out["pair"] = to_json(f.pair());
    out["ambient"] = ambient_string(f.weights());
    out["degrees_string"] = degrees_string(f.degrees());
    auto verdict = is_combinatorially_smooth(f.pair());
    if (f.dimension() >= 1 && fano_index(f) >= 1) {
        out["invariants"] = to_json(invariants(f));
    } else {
        out["invariants"] = nullptr;
        out["note"] = "not a Fano pair of positive dimension";
    }
    out["combinatorially_smooth"] = verdict.smooth;
    out["failure"] = to_string(verdict.failure);
    out["linear_cone"] = is_linear_cone(f.pair());
    out["generator"] = to_string(classify_generator(f));
    if (explain) {
        out["smoothness"] = to_json(verdict);
        if (verdict.smooth) {
            Json certs = Json::array();
            for (const auto& prof : nonunit_profiles(f.pair())) {
                Json c = to_json(check_subset(f.pair(), prof));
                c["profile"] = to_json(prof);
                certs.push_back(c);
            }
            out["certificates"] = certs;
        }
    }
    print(out);
    return require_smooth && !verdict.smooth ? discrepancy : ok;
}

EnumerationKind parse_kind(const std::string& k) {
    if (k == "all") return EnumerationKind::all;
    if (k == "series") return EnumerationKind::series;
    if (k == "semiseries") return EnumerationKind::semiseries;
    if (k == "pn") return EnumerationKind::pn;
    throw UsageError("unknown kind '" + k + "'");
}

int cmd_enumerate(int r, const std::string& kind, const std::string& format, const std::string& golden,
                  std::string allowlist, int cap) {
    if (r < 0 || r > cap) throw UsageError("variance must lie in 0.." + std::to_string(cap));
    auto k = parse_kind(kind);
    if (r > 5 && (k == EnumerationKind::all || k == EnumerationKind::semiseries))
        throw UsageError("semiseries enumeration is supported up to variance 5; use --kind series");
    auto rows = generator_table(enumerate_all(r, k), k != EnumerationKind::series || r <= 4);
    write_table(std::cout, rows, TableKind::generators, format);
    if (golden.empty()) return ok;
    auto gold = load_table(golden);
    if (allowlist.empty()) allowlist = default_allowlist(golden);
    auto allow = allowlist.empty() ? std::vector<AllowEntry>{} : load_allowlist(allowlist);
    auto rep = diff_tables(rows, gold, allow, {"variance", "ambient", "degrees", "dimension", "degree", "h0", "sporadic"});
    print_report(rep);
    std::cerr << rows.size() << " rows, " << rep.undocumented() << " undocumented discrepancies\n";
    return rep.clean() ? ok : discrepancy;
}

int cmd_sigma(int c, int inst, const std::string& format, const std::string& golden) {
    if (c < 0 || c > 4) throw UsageError("c must lie in 0..4");
    auto entries = sigma_c(c, inst);
    auto rows = sigma_table(entries);
    write_table(std::cout, rows, TableKind::sigma, format);
    bool smooth = std::all_of(entries.begin(), entries.end(), [](const SigmaEntry& e) { return e.instances_smooth; });
    if (!smooth) std::cerr << "some instantiation fails the smoothness check\n";
    if (golden.empty()) return smooth ? ok : discrepancy;
    auto rep = diff_sigma(rows, load_table(golden), inst);
    print_report(rep);
    return rep.clean() && smooth ? ok : discrepancy;
}

int cmd_conjectures(int cap, int semi_cap, int expand_max) {
    if (cap < 0 || cap > 7) throw UsageError("variance cap must lie in 0..7");
    auto s = run_conjectures(cap, semi_cap, expand_max);
    Json out;
    out["variance_cap"] = cap;
    out["semiseries_cap"] = semi_cap;
    out["expand_max"] = expand_max;
    out["generators"] = s.generators;
    out["expansions"] = s.expansions;
    out["s2_counterexamples"] = s.s2_counterexamples;
    out["nef"] = Json{{"checked", s.nef_checked},
                      {"found", s.nef_found},
                      {"coindex_le_8", Json{{"checked", s.coindex8_checked}, {"found", s.coindex8_found}}},
                      {"linear_system", Json{{"checked", s.linear_checked}, {"found", s.linear_found}}},
                      {"missing", s.nef_missing}};
    out["route_agreement"] = Json{{"pairs_n_le_10", s.small_pairs}, {"disagreements", s.route_disagreements}};
    out["minimal_morphisms"] = Json{{"generators", s.minimal_generators},
                                    {"generators_found", s.minimal_generators_found},
                                    {"expansions", s.minimal_expansions},
                                    {"expansions_found", s.minimal_expansions_found},
                                    {"candidate_counterexamples", s.minimal_candidates}};
    print(out);
    return s.ok() ? ok : discrepancy;
}

int cmd_nef(const std::string& weights, const std::string& degrees, bool strong, bool minimal, bool partition,
            bool brute_force) {
    Family f = read_family(weights, degrees);
    const Pair& p = f.pair();
    Json out;
    out["pair"] = to_json(p);
    out["regular"] = is_regular(p);
    auto cx = complex_from_pair(p);
    out["weight_complex_vertices"] = cx.weights.size();
    out["degree_complex_vertices"] = cx.degrees.size();

    auto pre = find_preminimal_morphism(p, strong);
    if (pre) {
        out["preminimal_morphism"] = map_to_json(p, *pre);
        out["preminimal_class"] = to_string(classify_morphism(p, *pre));
        out["strong_nef_map"] = is_nef_partition_map(p, *pre, true);
        out["slacks"] = map_slacks(p, *pre);
    } else {
        out["preminimal_morphism"] = nullptr;
    }
    if (minimal) {
        auto mm = find_minimal_morphism(p, brute_force);
        out["minimal_morphism"] = mm ? map_to_json(p, *mm) : Json(nullptr);
    }
    if (partition) {
        auto part = find_nef_partition(p, true);
        out["nice_nef_partition"] = part ? partition_to_json(p, *part) : Json(nullptr);
        auto pure = find_nef_partition(p, true, true);
        out["pure_nice_nef_partition"] = pure ? partition_to_json(p, *pure) : Json(nullptr);
    }
    print(out);
    return ok;
}

int cmd_degree_one(const std::string& weights, const std::string& degrees) {
    Family f = read_family(weights, degrees);
    const Pair& p = f.pair();
    Json out;
    out["pair"] = to_json(p);
    out["degree_one"] = is_degree_one(f);
    out["regular"] = is_regular(p);
    out["padic_bijection"] = padic_bijection_holds(p);
    out["class_P"] = in_class_P(p);
    auto pp = prime_power_degree(p);
    out["prime_power_degree"] = pp ? Json(*pp) : Json(nullptr);
    auto c = counting_inequality(p);
    out["counting"] = Json{{"lhs", c.lhs}, {"rhs", c.rhs}, {"strict", c.strict}, {"consistent", c.consistent}};
    print(out);
    return ok;
}

// Degree-one families among the generators of variance <= r; exit 1 if one is not sporadic or has a prime-power degree.
int cmd_degree_one_sweep(int r, int cap) {
    if (r < 0 || r > cap) throw UsageError("variance must lie in 0.." + std::to_string(cap));
    Json rows = Json::array();
    bool all_ok = true;
    for (int v = 0; v <= r; ++v) {
        auto gens = enumerate_all(v);
        auto table = generator_table(gens);
        for (std::size_t i = 0; i < gens.size(); ++i) {
            const Family& f = gens[i].family;
            if (!is_degree_one(f)) continue;
            auto pp = prime_power_degree(f.pair());
            bool row_ok = is_sporadic(f) && !pp && in_class_P(f.pair());
            all_ok = all_ok && row_ok;
            rows.push_back(Json{{"no", table[i].no},
                                {"ambient", table[i].ambient},
                                {"degrees", table[i].degrees},
                                {"sporadic", is_sporadic(f)},
                                {"class_P", in_class_P(f.pair())},
                                {"prime_power_degree", pp ? Json(*pp) : Json(nullptr)}});
        }
    }
    print(Json{{"variance_max", r}, {"families", rows}, {"ok", all_ok}});
    return all_ok ? ok : discrepancy;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Smooth Fano weighted complete intersections: invariants, tables, nef partitions"};
    app.require_subcommand(1);

    std::string weights, degrees, format = "md", kind = "all", golden, allowlist;
    bool explain = false, require_smooth = false, strong = false, minimal = false, partition = false,
         brute = false;
    int variance = 0, c = 2, inst = 3, cap = 7, conj_cap = 4, semi_cap = 4, expand_max = 2;

    auto* classify = app.add_subcommand("classify", "invariants and smoothness verdict of a pair");
    classify->add_option("-a,--weights", weights, "weights, e.g. 1^4,2,3")->required();
    classify->add_option("-d,--degrees", degrees, "degrees, e.g. 4,6");
    classify->add_flag("--explain", explain, "attach the failing profile or the Q-certificates");
    classify->add_flag("--require-smooth", require_smooth, "exit 1 unless the pair is combinatorially smooth");

    auto* enumerate = app.add_subcommand("enumerate", "generators of a given variance in table order");
    enumerate->add_option("-r,--variance", variance, "variance")->required();
    enumerate->add_option("--kind", kind, "all|series|semiseries|pn");
    enumerate->add_option("--format", format, "md|csv|json");
    enumerate->add_option("--golden", golden, "golden CSV to diff against");
    enumerate->add_option("--allowlist", allowlist, "allowlist CSV (default: next to the golden file)");
    enumerate->add_option("--cap", cap, "largest accepted variance");

    auto* sigma = app.add_subcommand("sigma", "families with dim - codim = c as series/semiseries pieces");
    sigma->add_option("-c,--c", c, "dim - codim")->required();
    sigma->add_option("--instantiate", inst, "check instantiations m = 0..n");
    sigma->add_option("--format", format, "md|csv|json");
    sigma->add_option("--golden", golden, "golden CSV to diff against");

    auto* conj = app.add_subcommand("conjectures", "s2 <= variance, nef coverage and minimal morphisms");
    conj->add_option("--variance-cap", conj_cap, "largest variance swept");
    conj->add_option("--semi-cap", semi_cap, "largest variance with semiseries generators");
    conj->add_option("--expand", expand_max, "expansions X^l_m with l, m up to this value");

    auto* nef = app.add_subcommand("nef", "WS-morphisms, nef partition maps and nef partitions");
    nef->add_option("-a,--weights", weights, "weights")->required();
    nef->add_option("-d,--degrees", degrees, "degrees");
    nef->add_flag("--strong", strong, "require the pre-minimal morphism to be a strong nef partition map");
    nef->add_flag("--minimal", minimal, "search for a minimal morphism");
    nef->add_flag("--brute-force", brute, "no fiber-size cap in the minimal search");
    nef->add_flag("--partition", partition, "search for nice nef partitions");

    auto* d1 = app.add_subcommand("degree-one", "anticanonical degree one diagnostics");
    auto* d1_weights = d1->add_option("-a,--weights", weights, "weights");
    d1->add_option("-d,--degrees", degrees, "degrees");
    auto* d1_variance =
        d1->add_option("-r,--variance", variance, "list the degree-one generators of variance <= r instead");
    d1_variance->excludes(d1_weights);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? ok : usage;
    }

    try {
        if (*classify) return cmd_classify(weights, degrees, explain, require_smooth);
        if (*enumerate) return cmd_enumerate(variance, kind, format, golden, allowlist, cap);
        if (*sigma) return cmd_sigma(c, inst, format, golden);
        if (*conj) return cmd_conjectures(conj_cap, semi_cap, expand_max);
        if (*nef) return cmd_nef(weights, degrees, strong, minimal, partition, brute);
        if (*d1) {
            if (d1_variance->count()) return cmd_degree_one_sweep(variance, 4);
            if (weights.empty()) throw UsageError("degree-one needs --weights or --variance");
            return cmd_degree_one(weights, degrees);
        }
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return usage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return usage;
    } catch (const std::domain_error& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return usage;
    } catch (const std::out_of_range& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return usage;
    } catch (const std::logic_error& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return internal;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return usage;
    }
    return usage;
}
