#pragma once

#include "wci/core.hpp"

#include <optional>
#include <vector>

namespace wci {

enum class GeneratorKind { series, semiseries, none };

struct GeneratorRecord {
    Family family;
    GeneratorKind kind;
    Int variance;
};

struct ParametricFamily {
    Family generator;
    int l = 0;
    std::optional<int> m;  // empty: symbolic parameter

    Family instantiate(int value) const;
};

struct StripResult {
    Family generator;
    int l = 0;
    int m = 0;

    bool minimal() const { return l == 0 && m == 0; }
};

Family expand(const Family& f, int l, int m);
StripResult strip(const Family& f);
GeneratorKind classify_generator(const Family& f);

Family projective_line();
Family plane_conic();

struct SigmaEntry {
    ParametricFamily family;
    GeneratorKind kind;
    Int variance;
    bool instances_smooth;
};

// Decomposition of the families with dim - codim = c into series and semiseries pieces.
std::vector<SigmaEntry> sigma_c(int c, int instantiate_to = 3);

const char* to_string(GeneratorKind k);

} // namespace wci
