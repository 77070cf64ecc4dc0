#include "wci/core.hpp"
#include "wci/smoothness.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace wci {

namespace {

void validate(const Pair& p) {
    if (p.weights.empty())
        throw std::invalid_argument("weights list is empty");
    for (Int w : p.weights)
        if (w < 1) throw std::invalid_argument("weights must be positive");
    for (Int d : p.degrees)
        if (d < 1) throw std::invalid_argument("degrees must be positive");
}

} // namespace

Family::Family(Pair p, Provenance prov) : pair_(normalize(std::move(p))), prov_(prov) {
    validate(pair_);
}

Family::Family(std::vector<Int> weights, std::vector<Int> degrees, Provenance prov)
    : Family(Pair{std::move(degrees), std::move(weights)}, prov) {}

Pair normalize(Pair p) {
    std::sort(p.degrees.begin(), p.degrees.end());
    std::sort(p.weights.begin(), p.weights.end());
    return p;
}

bool is_normalized(const Pair& p) {
    return std::is_sorted(p.degrees.begin(), p.degrees.end()) &&
           std::is_sorted(p.weights.begin(), p.weights.end());
}

Int fano_index(const Pair& p) {
    Int s = 0;
    for (Int a : p.weights) s += a;
    for (Int d : p.degrees) s -= d;
    return s;
}

int count_ones(const Pair& p) {
    return static_cast<int>(std::count(p.weights.begin(), p.weights.end(), Int{1}));
}

int s2(const Pair& p) {
    return static_cast<int>(std::count_if(p.degrees.begin(), p.degrees.end(), [](Int d) { return d > 2; }));
}

Int variance(const Family& f) {
    Int coindex = f.dimension() + 1 - fano_index(f);
    return coindex - f.codimension();
}

BigInt product(const std::vector<Int>& v) {
    BigInt r = 1;
    for (Int x : v) r *= x;
    return r;
}

Rational anticanonical_degree(const Family& f) {
    Rational q(product(f.degrees()), product(f.weights()));
    BigInt idx = fano_index(f);
    BigInt pw = boost::multiprecision::pow(idx, static_cast<unsigned>(std::max(0, f.dimension())));
    return q * Rational(pw);
}

BigInt hilbert_coefficient(const Pair& p, Int m) {
    if (m < 0) throw std::invalid_argument("hilbert_coefficient: m must be non-negative");
    auto n = static_cast<std::size_t>(m) + 1;
    std::vector<BigInt> s(n, 0);
    s[0] = 1;
    for (Int d : p.degrees) {
        auto step = static_cast<std::size_t>(d);
        for (std::size_t i = n; i-- > step;)
            s[i] -= s[i - step];
    }
    for (Int a : p.weights) {
        auto step = static_cast<std::size_t>(a);
        for (std::size_t i = step; i < n; ++i)
            s[i] += s[i - step];
    }
    return s[n - 1];
}

bool is_sporadic(const Family& f) {
    const auto& a = f.weights();
    if (std::find(a.begin(), a.end(), Int{2}) != a.end()) return true;
    return count_ones(f.pair()) - 1 < f.dimension();
}

bool is_linear_cone(const Pair& p) {
    for (Int d : p.degrees)
        if (std::find(p.weights.begin(), p.weights.end(), d) != p.weights.end()) return true;
    return false;
}

bool ambient_well_formed(const std::vector<Int>& weights) {
    if (weights.size() < 2) return false;
    for (std::size_t skip = 0; skip < weights.size(); ++skip) {
        Int g = 0;
        for (std::size_t i = 0; i < weights.size(); ++i)
            if (i != skip) g = std::gcd(g, weights[i]);
        if (g != 1) return false;
    }
    return true;
}

InvariantReport invariants(const Family& f) {
    if (f.dimension() < 1)
        throw std::invalid_argument("dimension must be at least 1");
    InvariantReport r;
    r.index = fano_index(f);
    if (r.index < 1)
        throw std::invalid_argument("family is not Fano (index < 1)");
    r.dimension = f.dimension();
    r.codimension = f.codimension();
    r.coindex = r.dimension + 1 - r.index;
    r.variance = r.coindex - r.codimension;
    r.s2 = s2(f.pair());
    r.ones = count_ones(f.pair());
    r.linear_system_dim = r.ones - 1;
    r.anticanonical_degree = anticanonical_degree(f);
    r.h0_anticanonical = hilbert_coefficient(f.pair(), r.index);
    r.sporadic = is_sporadic(f);
    r.linear_cone = is_linear_cone(f.pair());
    r.combinatorially_smooth = is_combinatorially_smooth(f.pair()).smooth;
    return r;
}

std::string ambient_string(const std::vector<Int>& weights) {
    bool all_ones = std::all_of(weights.begin(), weights.end(), [](Int w) { return w == 1; });
    if (all_ones) return "P^" + std::to_string(weights.size() - 1);
    std::string out = "P(";
    for (std::size_t i = 0; i < weights.size();) {
        std::size_t j = i;
        while (j < weights.size() && weights[j] == weights[i]) ++j;
        if (i) out += ',';
        out += std::to_string(weights[i]);
        if (j - i > 1) out += '^' + std::to_string(j - i);
        i = j;
    }
    return out + ')';
}

std::string degrees_string(const std::vector<Int>& degrees) {
    if (degrees.empty()) return "---";
    std::string out;
    for (std::size_t i = 0; i < degrees.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(degrees[i]);
    }
    return out;
}

std::string to_string(const Rational& q) {
    std::ostringstream os;
    os << numerator(q);
    if (denominator(q) != 1) os << '/' << denominator(q);
    return os.str();
}

std::vector<Int> parse_int_list(const std::string& s) {
    std::vector<Int> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        auto b = tok.find_first_not_of(" \t");
        auto e = tok.find_last_not_of(" \t");
        if (b == std::string::npos) throw std::invalid_argument("empty entry in list '" + s + "'");
        tok = tok.substr(b, e - b + 1);
        std::size_t caret = tok.find('^');
        std::string base = tok.substr(0, caret);
        long long times = 1;
        std::size_t used = 0;
        long long v = std::stoll(base, &used);
        if (used != base.size() || v < 1) throw std::invalid_argument("bad entry '" + tok + "'");
        if (caret != std::string::npos) {
            std::string rep = tok.substr(caret + 1);
            times = std::stoll(rep, &used);
            if (used != rep.size() || times < 1) throw std::invalid_argument("bad repeat count in '" + tok + "'");
        }
        out.insert(out.end(), static_cast<std::size_t>(times), v);
    }
    return out;
}

} // namespace wci
