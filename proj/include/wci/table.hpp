#pragma once

#include "wci/series.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace wci {

// One row of a classification table; every field is kept in its rendered form.
// `value` is h0(-K) for generator tables and the Fano index for sigma tables.
struct TableRow {
    std::string no;
    std::string variance;
    std::string ambient;
    std::string degrees;
    std::string dimension;
    std::string degree;
    std::string value;
    std::string sporadic;

    bool operator==(const TableRow&) const = default;
};

enum class TableKind { generators, sigma };

std::vector<std::string> table_header(TableKind kind);
std::vector<std::string> row_fields(const TableRow& r);

TableRow make_row(const Family& f, std::string no, bool with_sporadic = true);
// Rows numbered r.1, r.2, ...; the two variance-0 generators share the label 0.1.
std::vector<TableRow> generator_table(const std::vector<GeneratorRecord>& gens, bool with_sporadic = true);

// Rows 1..n for series pieces and 1'..n' for semiseries pieces, with m symbolic.
std::vector<TableRow> sigma_table(const std::vector<SigmaEntry>& entries);
// Closed form C*(2i)^m of the anticanonical degree along a series.
std::string degree_closed_form(const Rational& base_degree, Int index);

// Substitutes m into a parametric row; "2^m" with m = 0 means no copies.
Family instantiate_row(const TableRow& row, int m);
BigInt evaluate_degree(const std::string& expr, int m);
Int evaluate_linear(const std::string& expr, int m);

std::vector<Int> parse_ambient(const std::string& ambient);

std::vector<std::vector<std::string>> read_csv(std::istream& in);
void write_csv(std::ostream& out, const std::vector<std::vector<std::string>>& rows);

std::vector<TableRow> load_table(const std::string& path);
void write_table(std::ostream& out, const std::vector<TableRow>& rows, TableKind kind, const std::string& format);

struct AllowEntry {
    std::string row, field, reference, computed, note;
};

std::vector<AllowEntry> load_allowlist(const std::string& path);

struct Discrepancy {
    std::string row;
    std::string field;
    std::string reference;
    std::string computed;
    bool allowed = false;
    std::string note;
};

struct DiscrepancyReport {
    std::vector<Discrepancy> items;
    std::vector<std::string> missing;  // golden rows with no computed counterpart
    std::vector<std::string> extra;    // computed rows absent from the golden file

    std::size_t undocumented() const;
    bool clean() const { return undocumented() == 0; }
};

// Rows are matched by (weights, degrees); `fields` selects the compared columns.
// Golden ambients are compared in canonical form; an empty golden sporadic cell is not compared.
DiscrepancyReport diff_tables(const std::vector<TableRow>& computed, const std::vector<TableRow>& golden,
                              const std::vector<AllowEntry>& allow, const std::vector<std::string>& fields);

// Compares instantiations m = 0..m_max of the parametric rows field by field.
DiscrepancyReport diff_sigma(const std::vector<TableRow>& computed, const std::vector<TableRow>& golden,
                             int m_max = 3);

} // namespace wci
