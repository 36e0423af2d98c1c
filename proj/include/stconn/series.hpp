#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "stconn/extended_real.hpp"
#include "stconn/graph.hpp"

namespace stconn {

// One unit-weight copy of G per vertex pair {u,v}, u < v, in lexicographic
// order; copy k runs from u to v and its sink is merged with the source of copy k+1.
struct SeriesGraph {
  LabeledMultigraph graph;
  std::size_t original_n = 0;
  std::vector<std::pair<Vertex, Vertex>> copies;
  std::vector<std::vector<Vertex>> vertex_map;  // [copy][original vertex] -> merged id
  Vertex s = 0;
  Vertex t = 0;
};

inline constexpr std::size_t kSeriesMaxVertices = 6;

// Throws TooLarge (n > max_n) or BadInput (n < 2).
SeriesGraph build_series_graph(const LabeledMultigraph& g, std::size_t max_n = kSeriesMaxVertices);

struct SeriesWitnessReport {
  bool g_connected = false;
  bool st_connected = false;
  std::size_t kappa = 0;
  TwoTerminalValue w_plus = TwoTerminalValue::infinite();
  TwoTerminalValue w_minus = TwoTerminalValue::infinite();

  // Connected inputs.
  std::optional<double> r_series;        // R_{s,t}(series graph)
  std::optional<double> r_avg;           // ordered-pair mean on unit-weight G(x)
  std::optional<double> pair_sum;        // sum_{u<v} R_uv(G(x))
  std::optional<double> kirchhoff_literal_residual;  // |R - n(n-1) R_avg|
  std::optional<double> pair_sum_residual;           // |R - sum_{u<v} R_uv|

  // Disconnected inputs.
  std::optional<double> c_series;
  std::optional<double> capacitance_bound;      // 1/(kappa-1), simple G only
  std::optional<double> cap_sum_residual;       // |1/C - (1/2) sum_{s' != t'} 1/C_{s't'}|
  std::optional<double> general_ratio;          // C sqrt(n kappa) / d_max

  bool checks_pass(double tol = 1e-8) const;
};

SeriesWitnessReport series_witness_bounds(const SeriesGraph& sg, const LabeledMultigraph& g, const Input& x);

}  // namespace stconn
