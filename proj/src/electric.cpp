#include "stconn/electric.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <deque>

#include "stconn/error.hpp"
#include "stconn/linalg.hpp"

namespace stconn {

namespace {

TwoTerminalValue harmonic(const TwoTerminalValue& a, const TwoTerminalValue& b) {
  if (a.is_infinite()) return b;
  if (b.is_infinite()) return a;
  const double x = a.value();
  const double y = b.value();
  if (x == 0.0 || y == 0.0) return TwoTerminalValue::finite(0.0);
  return TwoTerminalValue::finite(x * y / (x + y));
}

TwoTerminalValue additive(const TwoTerminalValue& a, const TwoTerminalValue& b) {
  if (a.is_infinite() || b.is_infinite()) return TwoTerminalValue::infinite();
  return TwoTerminalValue::finite(a.value() + b.value());
}

void check_terminals(const LabeledMultigraph& g, Vertex s, Vertex t) {
  if (s >= g.vertex_count() || t >= g.vertex_count()) {
    throw Error(ErrorCode::BadEndpoint, "terminal outside the vertex range");
  }
  if (s == t) throw Error(ErrorCode::SameVertex, "s and t must differ");
}

Eigen::VectorXd terminal_vector(std::size_t n, Vertex s, Vertex t) {
  Eigen::VectorXd b = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(n));
  b(s) = 1.0;
  b(t) = -1.0;
  return b;
}

// Potentials on the blocks of the contracted complement minimizing
// sum c (V(a) - V(b))^2 with V(bs) = 1, V(bt) = 0.
Eigen::VectorXd block_potentials(const SubgraphView& view, std::size_t bs, std::size_t bt) {
  const LabeledMultigraph& g = view.parent();
  const std::size_t kappa = view.component_count();
  const auto& block = view.component_of();
  Eigen::MatrixXd lc = Eigen::MatrixXd::Zero(kappa, kappa);
  std::vector<std::vector<std::size_t>> nbrs(kappa);
  for (std::size_t k = 0; k < g.edge_count(); ++k) {
    if (view.is_present(k)) continue;
    const Edge& e = g.edge(k);
    const std::size_t a = block[e.u];
    const std::size_t b = block[e.v];
    if (a == b) continue;
    lc(a, a) += e.weight;
    lc(b, b) += e.weight;
    lc(a, b) -= e.weight;
    lc(b, a) -= e.weight;
    nbrs[a].push_back(b);
    nbrs[b].push_back(a);
  }
  std::vector<std::size_t> free;
  for (std::size_t b = 0; b < kappa; ++b) {
    if (b != bs && b != bt) free.push_back(b);
  }
  Eigen::VectorXd vals = Eigen::VectorXd::Zero(kappa);
  vals(bs) = 1.0;
  if (!free.empty()) {
    const auto f = static_cast<Eigen::Index>(free.size());
    Eigen::MatrixXd lff(f, f);
    Eigen::VectorXd rhs(f);
    for (Eigen::Index i = 0; i < f; ++i) {
      for (Eigen::Index j = 0; j < f; ++j) lff(i, j) = lc(free[i], free[j]);
      rhs(i) = -lc(free[i], bs);
    }
    const Eigen::VectorXd sol = linalg::pseudo_inverse(lff) * rhs;
    for (Eigen::Index i = 0; i < f; ++i) vals(free[i]) = sol(i);
  }
  // Blocks with no path to a terminal block have no energy contribution; pin them to 1/2.
  std::vector<bool> reached(kappa, false);
  std::deque<std::size_t> queue{bs, bt};
  reached[bs] = reached[bt] = true;
  while (!queue.empty()) {
    const std::size_t a = queue.front();
    queue.pop_front();
    for (std::size_t b : nbrs[a]) {
      if (!reached[b]) {
        reached[b] = true;
        queue.push_back(b);
      }
    }
  }
  for (std::size_t b = 0; b < kappa; ++b) {
    if (!reached[b]) vals(b) = 0.5;
  }
  return vals;
}

double potential_energy(const SubgraphView& view, const std::vector<double>& v) {
  const LabeledMultigraph& g = view.parent();
  double energy = 0.0;
  for (std::size_t k = 0; k < g.edge_count(); ++k) {
    if (view.is_present(k)) continue;
    const Edge& e = g.edge(k);
    const double d = v[e.u] - v[e.v];
    energy += e.weight * d * d;
  }
  return energy;
}

}  // namespace

TwoTerminalValue series_compose(const TwoTerminalValue& a, const TwoTerminalValue& b, Quantity kind) {
  return kind == Quantity::Resistance ? additive(a, b) : harmonic(a, b);
}

TwoTerminalValue parallel_compose(const TwoTerminalValue& a, const TwoTerminalValue& b, Quantity kind) {
  return kind == Quantity::Resistance ? harmonic(a, b) : additive(a, b);
}

TwoTerminalValue effective_resistance(const SubgraphView& view, Vertex s, Vertex t) {
  check_terminals(view.parent(), s, t);
  if (!view.connected(s, t)) return TwoTerminalValue::infinite();
  const LaplacianBundle lb = laplacian(view);
  const Eigen::VectorXd b = terminal_vector(view.parent().vertex_count(), s, t);
  const double r = b.dot(linalg::pseudo_inverse(lb.laplacian) * b);
  return TwoTerminalValue::finite(std::max(r, 0.0));
}

double UnitFlow::net_outflow(const LabeledMultigraph& g, Vertex w) const {
  double total = 0.0;
  for (std::size_t k = 0; k < g.edge_count(); ++k) {
    const Edge& e = g.edge(k);
    if (e.u == w) total += forward[k];
    if (e.v == w) total -= forward[k];
  }
  return total;
}

double flow_energy(const LabeledMultigraph& g, const std::vector<double>& forward,
                   const std::vector<std::size_t>& edges) {
  double energy = 0.0;
  for (std::size_t k : edges) energy += forward[k] * forward[k] / g.edge(k).weight;
  return energy;
}

UnitFlow optimal_flow(const SubgraphView& view, Vertex s, Vertex t) {
  const LabeledMultigraph& g = view.parent();
  check_terminals(g, s, t);
  if (!view.connected(s, t)) throw Error(ErrorCode::Disconnected, "s and t are not connected in G(x)");
  const LaplacianBundle lb = laplacian(view);
  const Eigen::VectorXd p = linalg::pseudo_inverse(lb.laplacian) * terminal_vector(g.vertex_count(), s, t);
  UnitFlow flow;
  flow.forward.assign(g.edge_count(), 0.0);
  for (std::size_t k = 0; k < g.edge_count(); ++k) {
    if (!view.is_present(k)) continue;
    const Edge& e = g.edge(k);
    flow.forward[k] = e.weight * (p(e.u) - p(e.v));
  }
  flow.energy = flow_energy(g, flow.forward, view.present_edges());
  return flow;
}

ContractedComplement contracted_complement(const SubgraphView& view) {
  const LabeledMultigraph& g = view.parent();
  ContractedComplement cc;
  cc.block_of = view.component_of();
  GraphSpec spec;
  spec.n = view.component_count();
  spec.weight_default = g.weight_default();
  for (std::size_t k = 0; k < g.edge_count(); ++k) {
    if (view.is_present(k)) continue;
    const Edge& e = g.edge(k);
    const std::size_t a = cc.block_of[e.u];
    const std::size_t b = cc.block_of[e.v];
    if (a == b) continue;
    EdgeSpec es;
    es.u = a;
    es.v = b;
    es.label = e.label;
    es.weight = e.weight;
    spec.edges.push_back(es);
  }
  cc.graph = build_graph(spec);
  return cc;
}

CapacitanceRoutes capacitance_routes(const SubgraphView& view, Vertex s, Vertex t) {
  check_terminals(view.parent(), s, t);
  if (view.connected(s, t)) return {TwoTerminalValue::infinite(), TwoTerminalValue::infinite()};
  CapacitanceRoutes routes{TwoTerminalValue::infinite(), TwoTerminalValue::infinite()};

  const ContractedComplement cc = contracted_complement(view);
  const SubgraphView all = full_subgraph(cc.graph);
  const TwoTerminalValue r = effective_resistance(all, cc.block_of[s], cc.block_of[t]);
  routes.contracted = r.is_infinite() ? TwoTerminalValue::finite(0.0) : TwoTerminalValue::finite(1.0 / r.value());

  const Eigen::VectorXd blocks = block_potentials(view, view.component_of()[s], view.component_of()[t]);
  std::vector<double> v(view.parent().vertex_count());
  for (Vertex w = 0; w < v.size(); ++w) v[w] = blocks(view.component_of()[w]);
  routes.direct = TwoTerminalValue::finite(potential_energy(view, v));
  return routes;
}

TwoTerminalValue effective_capacitance(const SubgraphView& view, Vertex s, Vertex t) {
  const CapacitanceRoutes routes = capacitance_routes(view, s, t);
  if (routes.contracted.is_finite()) {
    const double a = routes.contracted.value();
    const double b = routes.direct.value();
    if (std::abs(a - b) > 1e-8 * std::max(1.0, std::abs(a))) {
      throw Error(ErrorCode::IdentityViolation, "capacitance routes disagree: " + routes.contracted.to_string() +
                                                    " vs " + routes.direct.to_string());
    }
  }
  return routes.contracted;
}

UnitPotential optimal_potential(const SubgraphView& view, Vertex s, Vertex t) {
  check_terminals(view.parent(), s, t);
  if (view.connected(s, t)) throw Error(ErrorCode::Connected, "s and t are connected in G(x)");
  const Eigen::VectorXd blocks = block_potentials(view, view.component_of()[s], view.component_of()[t]);
  UnitPotential pot;
  pot.values.resize(view.parent().vertex_count());
  for (Vertex w = 0; w < pot.values.size(); ++w) pot.values[w] = blocks(view.component_of()[w]);
  pot.energy = potential_energy(view, pot.values);
  return pot;
}

double average_resistance(const SubgraphView& view) {
  if (!view.is_connected()) throw Error(ErrorCode::Disconnected, "average resistance needs a connected G(x)");
  const std::size_t n = view.parent().vertex_count();
  if (n < 2) return 0.0;
  const Eigen::MatrixXd lp = linalg::pseudo_inverse(laplacian(view).laplacian);
  double total = 0.0;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = 0; v < n; ++v) {
      if (u != v) total += lp(u, u) + lp(v, v) - 2.0 * lp(u, v);
    }
  }
  return total / static_cast<double>(n * (n - 1));
}

}  // namespace stconn
