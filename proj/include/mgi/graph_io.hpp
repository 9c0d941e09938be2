#pragma once

#include "mgi/graph.hpp"

#include <json.hpp>

#include <string>

namespace mgi {

using Json = nlohmann::ordered_json;

// Graph JSON:
//   {"vertices":[{"id":str,"q":int}],
//    "edges":[{"id":str,"ends":[str,str],"length":"p/q"}]}
// Lengths may also be given as JSON integers on input. With
// `lengths_optional` a missing length defaults to 1 (family files).
PolarizedMetricGraph graph_from_json(const Json& doc, bool lengths_optional = false);
Json graph_to_json(const PolarizedMetricGraph& g);

PolarizedMetricGraph parse_graph(const std::string& text);
/// Canonical serialization: compact, vertices and edges ordered by id.
std::string serialize_graph(const PolarizedMetricGraph& g);

/// "vertex:ID" or "edge:ID@p/q"; throws UnknownPoint or OffsetOutOfRange.
GraphPoint parse_point(const PolarizedMetricGraph& g, const std::string& text);

Rational rational_from_json(const Json& value, const std::string& what);

}  // namespace mgi
