#include "stconn/graph_families.hpp"

#include "stconn/error.hpp"

namespace stconn {

LabeledMultigraph graph_from_pairs(std::size_t n, const std::vector<std::pair<Vertex, Vertex>>& pairs) {
  GraphSpec spec;
  spec.n = n;
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    EdgeSpec es;
    es.u = pairs[k].first;
    es.v = pairs[k].second;
    es.label = "e" + std::to_string(k);
    spec.edges.push_back(es);
  }
  return build_graph(spec);
}

LabeledMultigraph complete_graph(std::size_t n, double weight) {
  GraphSpec spec;
  spec.n = n;
  spec.weight_default = weight;
  std::size_t k = 0;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      EdgeSpec es;
      es.u = u;
      es.v = v;
      es.label = "e" + std::to_string(k++);
      spec.edges.push_back(es);
    }
  }
  return build_graph(spec);
}

LabeledMultigraph path_graph(std::size_t n) {
  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (Vertex u = 0; u + 1 < n; ++u) pairs.emplace_back(u, u + 1);
  return graph_from_pairs(n, pairs);
}

LabeledMultigraph cycle_graph(std::size_t n) {
  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (Vertex u = 0; u < n; ++u) pairs.emplace_back(u, (u + 1) % n);
  return graph_from_pairs(n, pairs);
}

LabeledMultigraph hypercube_graph(std::size_t d) {
  const std::size_t n = std::size_t{1} << d;
  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (Vertex u = 0; u < n; ++u) {
    for (std::size_t i = 0; i < d; ++i) {
      const Vertex v = u ^ (std::size_t{1} << i);
      if (u < v) pairs.emplace_back(u, v);
    }
  }
  return graph_from_pairs(n, pairs);
}

LabeledMultigraph reweighted(const LabeledMultigraph& g, const std::vector<double>& weights) {
  if (weights.size() != g.edge_count()) {
    throw Error(ErrorCode::LengthMismatch, "one weight per edge required");
  }
  GraphSpec spec;
  spec.n = g.vertex_count();
  spec.weight_default = g.weight_default();
  for (std::size_t k = 0; k < g.edge_count(); ++k) {
    const Edge& e = g.edge(k);
    spec.edges.push_back(EdgeSpec{e.u, e.v, e.label, weights[k], e.literal});
  }
  return build_graph(spec);
}

}  // namespace stconn
