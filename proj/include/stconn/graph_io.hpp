#pragma once

#include <string>

#include "stconn/graph.hpp"

namespace stconn {

// JSON graph description: {"n", "edges": [{"u","v","label","weight"?,"literal"?}], "weight_default"?}.
GraphSpec parse_graph_spec(const std::string& json_text);
LabeledMultigraph load_graph(const std::string& json_text);
LabeledMultigraph load_graph_file(const std::string& path);

// Canonical form: every field explicit, edges in construction order.
std::string canonical_graph_json(const LabeledMultigraph& g);

}  // namespace stconn
