#include "wci/table.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace wci {

std::vector<std::string> table_header(TableKind kind) {
    return {"no", "variance", "ambient", "degrees", "dimension", "degree",
            kind == TableKind::sigma ? "index" : "h0", "sporadic"};
}

std::vector<std::string> row_fields(const TableRow& r) {
    return {r.no, r.variance, r.ambient, r.degrees, r.dimension, r.degree, r.value, r.sporadic};
}

namespace {

const char* sporadic_label(bool s) { return s ? "Sporadic" : "Non-sporadic"; }

std::string field_of(const TableRow& r, const std::string& name) {
    if (name == "no") return r.no;
    if (name == "variance") return r.variance;
    if (name == "ambient") return r.ambient;
    if (name == "degrees") return r.degrees;
    if (name == "dimension") return r.dimension;
    if (name == "degree") return r.degree;
    if (name == "h0" || name == "index") return r.value;
    if (name == "sporadic") return r.sporadic;
    throw std::invalid_argument("unknown table field '" + name + "'");
}

std::string big(const BigInt& x) { return x.str(); }

} // namespace

TableRow make_row(const Family& f, std::string no, bool with_sporadic) {
    TableRow r;
    r.no = std::move(no);
    r.variance = std::to_string(variance(f));
    r.ambient = ambient_string(f.weights());
    r.degrees = degrees_string(f.degrees());
    r.dimension = std::to_string(f.dimension());
    r.degree = to_string(anticanonical_degree(f));
    r.value = big(hilbert_coefficient(f, fano_index(f)));
    if (with_sporadic) r.sporadic = sporadic_label(is_sporadic(f));
    return r;
}

std::vector<TableRow> generator_table(const std::vector<GeneratorRecord>& gens, bool with_sporadic) {
    std::vector<TableRow> out;
    std::map<Int, int> counter;
    for (const auto& g : gens) {
        int n = ++counter[g.variance];
        if (g.variance == 0) n = 1;
        out.push_back(make_row(g.family, std::to_string(g.variance) + "." + std::to_string(n), with_sporadic));
    }
    return out;
}

std::string degree_closed_form(const Rational& base_degree, Int index) {
    if (denominator(base_degree) != 1) return to_string(base_degree) + "*" + std::to_string(2 * index) + "^m";
    BigInt c = numerator(base_degree);
    Int b = 2 * index;
    Int p = b, t = 1;
    for (Int q = 2; q <= b; ++q)
        if (b % q == 0) {
            Int x = b;
            int e = 0;
            while (x % q == 0) x /= q, ++e;
            if (x == 1) p = q, t = e;
            break;
        }
    int e = 0;
    while (c % p == 0) c /= p, ++e;
    if (t == 1) {
        std::string exp = e == 0 ? "m" : "{m+" + std::to_string(e) + "}";
        return (c == 1 ? "" : c.str() + "*") + std::to_string(p) + "^" + exp;
    }
    std::string tm = std::to_string(t) + "m";
    std::string exp = e == 0 ? "{" + tm + "}" : "{" + std::to_string(e) + "+" + tm + "}";
    return (c == 1 ? "" : c.str() + "*") + std::to_string(p) + "^" + exp;
}

std::vector<TableRow> sigma_table(const std::vector<SigmaEntry>& entries) {
    std::vector<TableRow> out;
    int ns = 0, nw = 0;
    for (const auto& e : entries) {
        Family f0 = e.family.instantiate(0);
        TableRow r;
        r.variance = std::to_string(e.variance);
        Int idx = fano_index(f0);
        r.value = std::to_string(idx);
        r.sporadic = sporadic_label(e.kind == GeneratorKind::semiseries);
        if (e.family.m) {
            r.no = std::to_string(++nw) + "'";
            Family f = e.family.instantiate(*e.family.m);
            r.ambient = ambient_string(f.weights());
            r.degrees = degrees_string(f.degrees());
            r.dimension = std::to_string(f.dimension());
            r.degree = to_string(anticanonical_degree(f));
            out.push_back(std::move(r));
            continue;
        }
        r.no = std::to_string(++ns);
        int ones = count_ones(f0.pair());
        std::vector<Int> rest;
        for (Int a : f0.weights())
            if (a > 1) rest.push_back(a);
        if (rest.empty()) {
            r.ambient = "P^{" + std::to_string(ones - 1) + "+2m}";
        } else {
            std::string tail = ambient_string(rest);
            r.ambient = "P(1^{" + std::to_string(ones) + "+2m}," + tail.substr(2);
        }
        std::vector<Int> others;
        int twos = 0;
        for (Int d : f0.degrees()) {
            if (d == 2)
                ++twos;
            else
                others.push_back(d);
        }
        std::string twos_part = twos == 0 ? "2^m" : "2^{m+" + std::to_string(twos) + "}";
        r.degrees = others.empty() ? twos_part : twos_part + "," + degrees_string(others);
        r.dimension = std::to_string(f0.dimension()) + "+m";
        r.degree = degree_closed_form(anticanonical_degree(f0), idx);
        out.push_back(std::move(r));
    }
    return out;
}

Int evaluate_linear(const std::string& expr, int m) {
    std::string s;
    for (char ch : expr)
        if (!std::isspace(static_cast<unsigned char>(ch)) && ch != '{' && ch != '}') s += ch;
    if (s.empty()) throw std::invalid_argument("empty expression");
    Int total = 0;
    std::size_t i = 0;
    while (i < s.size()) {
        int sign = 1;
        if (s[i] == '+' || s[i] == '-') sign = s[i++] == '-' ? -1 : 1;
        Int coef = 1;
        bool has_num = false;
        std::size_t j = i;
        while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
        if (j > i) coef = std::stoll(s.substr(i, j - i)), has_num = true;
        i = j;
        if (i < s.size() && s[i] == 'm') {
            total += sign * coef * m;
            ++i;
        } else {
            if (!has_num) throw std::invalid_argument("bad term in '" + expr + "'");
            total += sign * coef;
        }
        if (i < s.size() && s[i] != '+' && s[i] != '-') throw std::invalid_argument("bad expression '" + expr + "'");
    }
    return total;
}

namespace {

// Splits "b^e" where e is an integer, "m" or a braced linear expression.
std::pair<Int, Int> power_term(const std::string& tok, int m) {
    auto caret = tok.find('^');
    Int base = std::stoll(tok.substr(0, caret));
    Int e = caret == std::string::npos ? 1 : evaluate_linear(tok.substr(caret + 1), m);
    return {base, e};
}

std::vector<std::string> split_top(const std::string& s, char sep) {
    std::vector<std::string> out;
    int depth = 0;
    std::string cur;
    for (char ch : s) {
        if (ch == '{') ++depth;
        if (ch == '}') --depth;
        if (ch == sep && depth == 0) {
            out.push_back(cur);
            cur.clear();
        } else if (!std::isspace(static_cast<unsigned char>(ch))) {
            cur += ch;
        }
    }
    out.push_back(cur);
    return out;
}

std::vector<Int> expand_list(const std::string& s, int m) {
    std::vector<Int> out;
    if (s == "---" || s.empty()) return out;
    for (const auto& tok : split_top(s, ',')) {
        auto [v, times] = power_term(tok, m);
        if (times < 0 || v < 1) throw std::invalid_argument("bad list entry '" + tok + "'");
        out.insert(out.end(), static_cast<std::size_t>(times), v);
    }
    return out;
}

std::vector<Int> ambient_weights(const std::string& ambient, int m) {
    if (ambient.rfind("P^", 0) == 0) return std::vector<Int>(static_cast<std::size_t>(evaluate_linear(ambient.substr(2), m)) + 1, 1);
    if (ambient.size() < 3 || ambient.rfind("P(", 0) != 0 || ambient.back() != ')')
        throw std::invalid_argument("bad ambient '" + ambient + "'");
    auto w = expand_list(ambient.substr(2, ambient.size() - 3), m);
    std::sort(w.begin(), w.end());
    return w;
}

} // namespace

BigInt evaluate_degree(const std::string& expr, int m) {
    auto slash = expr.find('/');
    if (slash != std::string::npos)
        throw std::invalid_argument("non-integral degree expression '" + expr + "'");
    BigInt v = 1;
    for (const auto& tok : split_top(expr, '*')) {
        auto [b, e] = power_term(tok, m);
        if (e < 0) throw std::invalid_argument("negative exponent in '" + expr + "'");
        v *= boost::multiprecision::pow(BigInt(b), static_cast<unsigned>(e));
    }
    return v;
}

std::vector<Int> parse_ambient(const std::string& ambient) { return ambient_weights(ambient, 0); }

Family instantiate_row(const TableRow& row, int m) {
    auto d = expand_list(row.degrees, m);
    std::sort(d.begin(), d.end());
    return Family(ambient_weights(row.ambient, m), d);
}

std::vector<std::vector<std::string>> read_csv(std::istream& in) {
    std::vector<std::vector<std::string>> rows;
    std::vector<std::string> row;
    std::string field;
    bool quoted = false, any = false;
    char ch;
    while (in.get(ch)) {
        any = true;
        if (quoted) {
            if (ch == '"') {
                if (in.peek() == '"') {
                    field += '"';
                    in.get();
                } else {
                    quoted = false;
                }
            } else {
                field += ch;
            }
        } else if (ch == '"') {
            quoted = true;
        } else if (ch == ',') {
            row.push_back(std::move(field));
            field.clear();
        } else if (ch == '\n') {
            row.push_back(std::move(field));
            field.clear();
            rows.push_back(std::move(row));
            row.clear();
            any = false;
        } else if (ch != '\r') {
            field += ch;
        }
    }
    if (any) {
        row.push_back(std::move(field));
        rows.push_back(std::move(row));
    }
    return rows;
}

void write_csv(std::ostream& out, const std::vector<std::vector<std::string>>& rows) {
    for (const auto& row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) out << ',';
            const auto& f = row[i];
            if (f.find_first_of(",\"\n") == std::string::npos) {
                out << f;
                continue;
            }
            out << '"';
            for (char ch : f) out << (ch == '"' ? "\"\"" : std::string(1, ch));
            out << '"';
        }
        out << '\n';
    }
}

std::vector<TableRow> load_table(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    auto rows = read_csv(in);
    if (rows.empty()) throw std::runtime_error("empty table '" + path + "'");
    std::map<std::string, std::size_t> col;
    for (std::size_t i = 0; i < rows[0].size(); ++i) col[rows[0][i]] = i;
    auto get = [&](const std::vector<std::string>& r, std::initializer_list<const char*> names) {
        for (const char* n : names)
            if (auto it = col.find(n); it != col.end()) return it->second < r.size() ? r[it->second] : std::string();
        return std::string();
    };
    std::vector<TableRow> out;
    for (std::size_t i = 1; i < rows.size(); ++i) {
        const auto& r = rows[i];
        out.push_back({get(r, {"no"}), get(r, {"variance"}), get(r, {"ambient"}), get(r, {"degrees"}),
                       get(r, {"dimension"}), get(r, {"degree"}), get(r, {"h0", "index"}), get(r, {"sporadic"})});
    }
    return out;
}

void write_table(std::ostream& out, const std::vector<TableRow>& rows, TableKind kind, const std::string& format) {
    auto header = table_header(kind);
    if (format == "csv") {
        std::vector<std::vector<std::string>> all{header};
        for (const auto& r : rows) all.push_back(row_fields(r));
        write_csv(out, all);
    } else if (format == "json") {
        auto arr = nlohmann::ordered_json::array();
        for (const auto& r : rows) {
            nlohmann::ordered_json o;
            auto f = row_fields(r);
            for (std::size_t i = 0; i < header.size(); ++i) o[header[i]] = f[i];
            arr.push_back(o);
        }
        out << arr.dump(2) << '\n';
    } else if (format == "md") {
        auto line = [&](const std::vector<std::string>& f) {
            out << '|';
            for (const auto& x : f) out << ' ' << x << " |";
            out << '\n';
        };
        line(header);
        out << '|';
        for (std::size_t i = 0; i < header.size(); ++i) out << "---|";
        out << '\n';
        for (const auto& r : rows) line(row_fields(r));
    } else {
        throw std::invalid_argument("unknown format '" + format + "'");
    }
}

std::vector<AllowEntry> load_allowlist(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    auto rows = read_csv(in);
    std::vector<AllowEntry> out;
    for (std::size_t i = 1; i < rows.size(); ++i) {
        auto r = rows[i];
        r.resize(5);
        out.push_back({r[0], r[1], r[2], r[3], r[4]});
    }
    return out;
}

std::size_t DiscrepancyReport::undocumented() const {
    auto n = std::count_if(items.begin(), items.end(), [](const Discrepancy& d) { return !d.allowed; });
    return static_cast<std::size_t>(n) + missing.size() + extra.size();
}

DiscrepancyReport diff_tables(const std::vector<TableRow>& computed, const std::vector<TableRow>& golden,
                              const std::vector<AllowEntry>& allow, const std::vector<std::string>& fields) {
    auto key = [](const TableRow& r) { return instantiate_row(r, 0).pair(); };
    std::map<Pair, const TableRow*> comp;
    for (const auto& r : computed) comp[key(r)] = &r;
    DiscrepancyReport rep;
    std::set<Pair> matched;
    for (const auto& g : golden) {
        auto it = comp.find(key(g));
        if (it == comp.end()) {
            rep.missing.push_back(g.no + " " + g.ambient + " " + g.degrees);
            continue;
        }
        matched.insert(it->first);
        for (const auto& name : fields) {
            std::string pv = field_of(g, name), cv = field_of(*it->second, name);
            if (name == "sporadic" && pv.empty()) continue;
            if (name == "ambient") pv = ambient_string(parse_ambient(pv));
            if (pv == cv) continue;
            Discrepancy d{g.no, name, pv, cv, false, ""};
            for (const auto& a : allow)
                if (a.row == g.no && a.field == name && a.reference == pv && a.computed == cv) {
                    d.allowed = true;
                    d.note = a.note;
                }
            rep.items.push_back(std::move(d));
        }
    }
    for (const auto& [k, r] : comp)
        if (!matched.count(k)) rep.extra.push_back(r->no + " " + r->ambient + " " + r->degrees);
    return rep;
}

DiscrepancyReport diff_sigma(const std::vector<TableRow>& computed, const std::vector<TableRow>& golden, int m_max) {
    DiscrepancyReport rep;
    std::map<std::string, const TableRow*> comp;
    for (const auto& r : computed) comp[r.no] = &r;
    for (const auto& g : golden) {
        auto it = comp.find(g.no);
        if (it == comp.end()) {
            rep.missing.push_back(g.no + " " + g.ambient + " " + g.degrees);
            continue;
        }
        const TableRow& c = *it->second;
        auto add = [&](std::string field, std::string pv, std::string cv) {
            if (pv != cv) rep.items.push_back({g.no, std::move(field), std::move(pv), std::move(cv), false, ""});
        };
        add("variance", g.variance, c.variance);
        add("index", g.value, c.value);
        add("sporadic", g.sporadic, c.sporadic);
        bool parametric = g.ambient.find('m') != std::string::npos || g.degrees.find('m') != std::string::npos;
        int top = parametric ? m_max : 0;
        for (int m = 0; m <= top; ++m) {
            std::string tag = parametric ? "[m=" + std::to_string(m) + "]" : "";
            Family gf = instantiate_row(g, m), cf = instantiate_row(c, m);
            add("ambient" + tag, ambient_string(gf.weights()), ambient_string(cf.weights()));
            add("degrees" + tag, degrees_string(gf.degrees()), degrees_string(cf.degrees()));
            add("dimension" + tag, std::to_string(evaluate_linear(g.dimension, m)),
                std::to_string(evaluate_linear(c.dimension, m)));
            add("degree" + tag, evaluate_degree(g.degree, m).str(), to_string(anticanonical_degree(cf)));
            add("degree-form" + tag, evaluate_degree(c.degree, m).str(), to_string(anticanonical_degree(cf)));
        }
    }
    for (const auto& c : computed)
        if (std::none_of(golden.begin(), golden.end(), [&](const TableRow& g) { return g.no == c.no; }))
            rep.extra.push_back(c.no + " " + c.ambient + " " + c.degrees);
    return rep;
}

} // namespace wci
