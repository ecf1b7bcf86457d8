#pragma once

#include <string>

#include <json.hpp>

#include "doubling/oracle.hpp"
#include "doubling/product_set.hpp"
#include "doubling/witness.hpp"

namespace doubling {

using Json = nlohmann::ordered_json;

Json group_to_json(const GroupDescriptor& d);
GroupDescriptor group_from_json(const Json& j);

/// Element schemas: integers a number; zlex an array of dim numbers;
/// heisenberg the array [a, b, c]; bs12 the object {"m":..,"e":..,"n":..}
/// meaning q = m*2^e; free2 a string over {x, y, X, Y} with uppercase
/// meaning inverse.
Json element_to_json(const GroupElement& a);
GroupElement element_from_json(const Group& g, const Json& j);

/// Text forms of the element schemas (free2 is the bare letter string, the
/// rest are JSON fragments). parse_element and format_element round-trip.
GroupElement parse_element(const Group& g, const std::string& text);
std::string format_element(const GroupElement& a);

/// Set files: {"group": {"kind": ...}, "elements": [...]}.
Json set_to_json(const OrderedSet& s);
OrderedSet set_from_json(const Json& j);
OrderedSet load_set_file(const std::string& path);

Json witness_to_json(const ProgressionWitness& w);
Json record_to_json(const DerivationRecord& r);
Json doubling_report_to_json(const DoublingReport& r);

/// Canonical corpus-report serialization. Wall-clock timing is deliberately
/// not part of it, so equal sweeps serialize to equal bytes.
Json report_to_json(const CorpusReport& r);
std::string report_to_csv(const CorpusReport& r);

}  // namespace doubling
