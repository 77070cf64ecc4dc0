#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace wci {

using Int = std::int64_t;
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

struct Pair {
    std::vector<Int> degrees;
    std::vector<Int> weights;

    bool operator==(const Pair&) const = default;
    auto operator<=>(const Pair&) const = default;
};

enum class Provenance { user, enumerated, expanded };

// A normalized pair read as a family of weighted complete intersections.
class Family {
public:
    explicit Family(Pair p, Provenance prov = Provenance::user);
    Family(std::vector<Int> weights, std::vector<Int> degrees, Provenance prov = Provenance::user);

    const Pair& pair() const { return pair_; }
    const std::vector<Int>& weights() const { return pair_.weights; }
    const std::vector<Int>& degrees() const { return pair_.degrees; }
    Provenance provenance() const { return prov_; }

    int N() const { return static_cast<int>(pair_.weights.size()) - 1; }
    int codimension() const { return static_cast<int>(pair_.degrees.size()); }
    int dimension() const { return N() - codimension(); }

    bool operator==(const Family& o) const { return pair_ == o.pair_; }
    auto operator<=>(const Family& o) const { return pair_ <=> o.pair_; }

private:
    Pair pair_;
    Provenance prov_;
};

struct InvariantReport {
    Int index = 0;
    int dimension = 0;
    int codimension = 0;
    Int coindex = 0;
    Int variance = 0;
    int s2 = 0;
    int ones = 0;
    int linear_system_dim = 0;
    Rational anticanonical_degree;
    BigInt h0_anticanonical;
    bool sporadic = false;
    bool linear_cone = false;
    bool combinatorially_smooth = false;
};

Pair normalize(Pair p);
bool is_normalized(const Pair& p);

Int fano_index(const Pair& p);
inline Int fano_index(const Family& f) { return fano_index(f.pair()); }

int count_ones(const Pair& p);
int s2(const Pair& p);
Int variance(const Family& f);

Rational anticanonical_degree(const Family& f);
BigInt hilbert_coefficient(const Pair& p, Int m);
inline BigInt hilbert_coefficient(const Family& f, Int m) { return hilbert_coefficient(f.pair(), m); }

bool is_sporadic(const Family& f);
bool is_linear_cone(const Pair& p);
bool ambient_well_formed(const std::vector<Int>& weights);

InvariantReport invariants(const Family& f);

BigInt product(const std::vector<Int>& v);

// "P(1^4,2^2,3)" or "P^N" when every weight is 1.
std::string ambient_string(const std::vector<Int>& weights);
// "4,6" or "---" for codimension 0.
std::string degrees_string(const std::vector<Int>& degrees);
std::string to_string(const Rational& q);

std::vector<Int> parse_int_list(const std::string& s);

} // namespace wci
