#pragma once

#include <json.hpp>

#include "shiish/arrangement.h"
#include "shiish/core.h"
#include "shiish/ish.h"
#include "shiish/parking.h"
#include "shiish/shi.h"

namespace shiish::io {

using nlohmann::json;

json to_json(const Word& w);
/// Alphabet 0 means "word length".
Word word_from_json(const json& j, int alphabet_size = 0);

json to_json(const Permutation& p);
Permutation permutation_from_json(const json& j);

json to_json(const SetPartition& p);
SetPartition partition_from_json(const json& j, int n);

/// {"n": int, "edges": [[i, j], ...]}
json to_json(const Graph& g);
Graph graph_from_json(const json& j);

/// {"columns": [[labels], ...]}
json to_json(const LabeledDyckPath& d);
LabeledDyckPath dyck_from_json(const json& j);

/// {"pi": [...], "Pi": [[...], ...]}
json to_json(const ShiCeilingDiagram& d);
ShiCeilingDiagram shi_from_json(const json& j);

/// {"pi": [...], "eps": [...]}
json to_json(const IshCeilingDiagram& d);
IshCeilingDiagram ish_from_json(const json& j);

/// {"board": {"n", "hatted", "graph"}, "rooks": [[col, row], ...]}
json to_json(const RookPlacement& p);
RookPlacement placement_from_json(const json& j);

json to_json(const geometry::RegionReport& r, const geometry::Arrangement& A);
/// The oracle report: arrangement, regions and summary counts.
json to_json(const geometry::CrossValidation& cv);

}  // namespace shiish::io
