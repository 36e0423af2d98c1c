#include "stconn/series.hpp"

#include <cmath>
#include <cstdint>
#include <numeric>

#include "stconn/electric.hpp"
#include "stconn/error.hpp"
#include "stconn/graph_families.hpp"
#include "stconn/spanprog.hpp"

namespace stconn {

SeriesGraph build_series_graph(const LabeledMultigraph& g, std::size_t max_n) {
  const std::size_t n = g.vertex_count();
  if (n < 2) throw Error(ErrorCode::BadInput, "series construction needs at least two vertices");
  if (n > max_n) {
    throw Error(ErrorCode::TooLarge, "series construction limited to " + std::to_string(max_n) + " vertices");
  }
  SeriesGraph sg;
  sg.original_n = n;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) sg.copies.emplace_back(u, v);
  }
  const std::size_t copies = sg.copies.size();

  // Provisional id copy * n + w; the sink of copy k is glued to the source of copy k + 1.
  std::vector<std::size_t> rep(copies * n);
  std::iota(rep.begin(), rep.end(), 0);
  for (std::size_t k = 0; k + 1 < copies; ++k) {
    rep[(k + 1) * n + sg.copies[k + 1].first] = k * n + sg.copies[k].second;
  }
  std::vector<std::size_t> merged_id(copies * n, SIZE_MAX);
  std::size_t next = 0;
  sg.vertex_map.assign(copies, std::vector<Vertex>(n));
  for (std::size_t p = 0; p < copies * n; ++p) {
    const std::size_t r = rep[p];
    if (merged_id[r] == SIZE_MAX) merged_id[r] = next++;
    sg.vertex_map[p / n][p % n] = merged_id[r];
  }

  GraphSpec spec;
  spec.n = next;
  for (std::size_t k = 0; k < copies; ++k) {
    const std::string tag = "@{" + std::to_string(sg.copies[k].first) + "," + std::to_string(sg.copies[k].second) + "}";
    for (const Edge& e : g.edges()) {
      EdgeSpec es;
      es.u = sg.vertex_map[k][e.u];
      es.v = sg.vertex_map[k][e.v];
      es.label = e.label + tag;
      es.weight = 1.0;
      es.literal = e.literal;
      spec.edges.push_back(es);
    }
  }
  sg.graph = build_graph(spec);
  sg.s = sg.vertex_map.front()[sg.copies.front().first];
  sg.t = sg.vertex_map.back()[sg.copies.back().second];
  return sg;
}

bool SeriesWitnessReport::checks_pass(double tol) const {
  if (st_connected != g_connected) return false;
  if (pair_sum_residual && *pair_sum_residual > tol) return false;
  if (cap_sum_residual && *cap_sum_residual > tol) return false;
  if (c_series && capacitance_bound && *c_series > *capacitance_bound + 1e-9) return false;
  if (r_series && w_plus.is_finite() && std::abs(w_plus.value() - *r_series / 2.0) > tol) return false;
  if (c_series && w_minus.is_finite() && std::abs(w_minus.value() - 2.0 * *c_series) > tol) return false;
  return true;
}

SeriesWitnessReport series_witness_bounds(const SeriesGraph& sg, const LabeledMultigraph& g, const Input& x) {
  const std::size_t n = g.vertex_count();
  if (n != sg.original_n) throw Error(ErrorCode::BadInput, "series graph was built from a different parent");
  const LabeledMultigraph unit = reweighted(g, std::vector<double>(g.edge_count(), 1.0));
  const SubgraphView vx = subgraph(unit, x);
  const SubgraphView vs = subgraph(sg.graph, x);

  SeriesWitnessReport r;
  r.kappa = vx.component_count();
  r.g_connected = vx.is_connected();
  r.st_connected = vs.connected(sg.s, sg.t);

  const SpanProgram prog = build_stconn_program(sg.graph, sg.s, sg.t);
  r.w_plus = positive_witness(prog, x).size;
  r.w_minus = negative_witness(prog, x).size;

  if (r.st_connected) {
    r.r_series = effective_resistance(vs, sg.s, sg.t).value();
  } else {
    r.c_series = effective_capacitance(vs, sg.s, sg.t).value();
  }

  if (r.g_connected) {
    r.r_avg = average_resistance(vx);
    double sum = 0.0;
    for (Vertex u = 0; u < n; ++u) {
      for (Vertex v = u + 1; v < n; ++v) sum += effective_resistance(vx, u, v).value();
    }
    r.pair_sum = sum;
    if (r.r_series) {
      r.kirchhoff_literal_residual = std::abs(*r.r_series - static_cast<double>(n * (n - 1)) * *r.r_avg);
      r.pair_sum_residual = std::abs(*r.r_series - sum);
    }
  } else if (r.c_series) {
    if (g.is_simple()) r.capacitance_bound = 1.0 / static_cast<double>(r.kappa - 1);
    double inv = 0.0;
    bool shorted = false;
    for (Vertex u = 0; u < n; ++u) {
      for (Vertex v = 0; v < n; ++v) {
        if (u == v) continue;
        const TwoTerminalValue c = effective_capacitance(vx, u, v);
        if (c.is_infinite()) continue;
        if (c.value() == 0.0) {
          shorted = true;
        } else {
          inv += 1.0 / c.value();
        }
      }
    }
    const double predicted = shorted || inv == 0.0 ? 0.0 : 1.0 / (0.5 * inv);
    r.cap_sum_residual = std::abs(*r.c_series - predicted);
    const double d_max = laplacian(unit).d_max;
    if (d_max > 0.0) {
      r.general_ratio = *r.c_series * std::sqrt(static_cast<double>(n * r.kappa)) / d_max;
    }
  }
  return r;
}

}  // namespace stconn
