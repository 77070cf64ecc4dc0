#pragma once

#include "wci/core.hpp"
#include "wci/nef.hpp"
#include "wci/smoothness.hpp"
#include "wci/table.hpp"

#include <nlohmann/json.hpp>

namespace wci {

// Insertion-ordered so that output is byte-stable.
using Json = nlohmann::ordered_json;

Json to_json(const Pair& p);
Json to_json(const InvariantReport& r);
Json to_json(const SubsetProfile& s);
Json to_json(const QVerdict& v);
Json to_json(const SmoothnessVerdict& v);
Json to_json(const TableRow& r, TableKind kind);
Json to_json(const Discrepancy& d);
Json to_json(const DiscrepancyReport& r);
Json map_to_json(const Pair& p, const VertexMap& m);
Json partition_to_json(const Pair& p, const NefPartition& part);

} // namespace wci
