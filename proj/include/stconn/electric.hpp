#pragma once

#include <vector>

#include "stconn/extended_real.hpp"
#include "stconn/graph.hpp"

namespace stconn {

enum class Quantity { Resistance, Capacitance };

TwoTerminalValue series_compose(const TwoTerminalValue& a, const TwoTerminalValue& b, Quantity kind);
TwoTerminalValue parallel_compose(const TwoTerminalValue& a, const TwoTerminalValue& b, Quantity kind);

// R_{s,t}(G(x)) from the Laplacian pseudoinverse.
TwoTerminalValue effective_resistance(const SubgraphView& view, Vertex s, Vertex t);

struct CapacitanceRoutes {
  TwoTerminalValue contracted;  // conductance of the contracted complement
  TwoTerminalValue direct;      // potential-energy QP
};

CapacitanceRoutes capacitance_routes(const SubgraphView& view, Vertex s, Vertex t);
// Contracted route, after checking both routes agree within 1e-8.
TwoTerminalValue effective_capacitance(const SubgraphView& view, Vertex s, Vertex t);

// theta on the directed edge (u -> v) of each parent edge, as listed; zero on absent edges.
struct UnitFlow {
  std::vector<double> forward;
  double energy = 0.0;  // (1/2) sum over directed edges of theta^2 / c

  double on(std::size_t edge, bool reversed) const { return reversed ? -forward[edge] : forward[edge]; }
  double net_outflow(const LabeledMultigraph& g, Vertex w) const;
};

UnitFlow optimal_flow(const SubgraphView& view, Vertex s, Vertex t);

// J_{E'}(theta) for a flow restricted to a subset of edges.
double flow_energy(const LabeledMultigraph& g, const std::vector<double>& forward,
                   const std::vector<std::size_t>& edges);

struct UnitPotential {
  std::vector<double> values;  // per vertex of the parent
  double energy = 0.0;         // (1/2) sum over directed absent edges of c (V(u) - V(v))^2
};

UnitPotential optimal_potential(const SubgraphView& view, Vertex s, Vertex t);

// Multigraph on the components of G(x), one vertex per component, carrying every absent edge.
struct ContractedComplement {
  LabeledMultigraph graph;
  std::vector<std::size_t> block_of;  // parent vertex -> contracted vertex
};

ContractedComplement contracted_complement(const SubgraphView& view);

}  // namespace stconn
