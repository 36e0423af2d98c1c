#pragma once

#include <utility>
#include <vector>

#include "stconn/graph.hpp"

namespace stconn {

LabeledMultigraph complete_graph(std::size_t n, double weight = 1.0);
LabeledMultigraph path_graph(std::size_t n);
LabeledMultigraph cycle_graph(std::size_t n);
// Boolean hypercube Q_d; vertex ids are the bit patterns.
LabeledMultigraph hypercube_graph(std::size_t d);
LabeledMultigraph graph_from_pairs(std::size_t n, const std::vector<std::pair<Vertex, Vertex>>& pairs);
// Same topology and literals, new weights (one per edge).
LabeledMultigraph reweighted(const LabeledMultigraph& g, const std::vector<double>& weights);

}  // namespace stconn
