#include <doctest.h>

#include <functional>
#include <random>

#include "oracles.hpp"
#include "stconn/electric.hpp"
#include "stconn/error.hpp"
#include "stconn/graph_families.hpp"

using namespace stconn;

namespace {

const TwoTerminalValue kInf = TwoTerminalValue::infinite();
TwoTerminalValue fin(double v) { return TwoTerminalValue::finite(v); }

double val(const TwoTerminalValue& v) { return v.value(); }

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::BadInput;
}

}  // namespace

TEST_CASE("two-terminal values tag infinity") {
  CHECK(kInf.is_infinite());
  CHECK(kInf.to_string() == "inf");
  CHECK(fin(0.5).to_string() == "0.5");
  CHECK_THROWS(kInf.value());
  CHECK_THROWS(TwoTerminalValue::finite(-1.0));
}

TEST_CASE("series and parallel composition") {
  CHECK(val(series_compose(fin(1), fin(1), Quantity::Resistance)) == doctest::Approx(2.0));
  CHECK(val(series_compose(fin(1), fin(1), Quantity::Capacitance)) == doctest::Approx(0.5));
  CHECK(val(series_compose(kInf, fin(3), Quantity::Capacitance)) == doctest::Approx(3.0));
  CHECK(series_compose(kInf, fin(3), Quantity::Resistance).is_infinite());
  CHECK(val(parallel_compose(fin(1), fin(2), Quantity::Resistance)) == doctest::Approx(2.0 / 3.0));
  CHECK(val(parallel_compose(fin(1), fin(0.5), Quantity::Capacitance)) == doctest::Approx(1.5));
  CHECK(val(parallel_compose(kInf, fin(5), Quantity::Resistance)) == doctest::Approx(5.0));
  CHECK(parallel_compose(kInf, fin(5), Quantity::Capacitance).is_infinite());
}

TEST_CASE("effective resistance examples") {
  const LabeledMultigraph k2 = complete_graph(2);
  CHECK(val(effective_resistance(subgraph(k2, parse_input("1")), 0, 1)) == doctest::Approx(1.0));
  CHECK(effective_resistance(subgraph(k2, parse_input("0")), 0, 1).is_infinite());
  const LabeledMultigraph k3 = complete_graph(3);
  for (auto [s, t] : {std::pair<Vertex, Vertex>{0, 1}, {0, 2}, {1, 2}}) {
    CHECK(val(effective_resistance(full_subgraph(k3), s, t)) == doctest::Approx(2.0 / 3.0));
  }
  CHECK(code_of([&] { effective_resistance(full_subgraph(k3), 1, 1); }) == ErrorCode::SameVertex);
  CHECK(code_of([&] { effective_resistance(full_subgraph(k3), 0, 5); }) == ErrorCode::BadEndpoint);
}

TEST_CASE("effective capacitance examples") {
  const LabeledMultigraph k2 = complete_graph(2);
  CHECK(val(effective_capacitance(subgraph(k2, parse_input("0")), 0, 1)) == doctest::Approx(1.0));
  CHECK(effective_capacitance(subgraph(k2, parse_input("1")), 0, 1).is_infinite());
  const LabeledMultigraph k3 = complete_graph(3);
  CHECK(val(effective_capacitance(subgraph(k3, parse_input("000")), 0, 2)) == doctest::Approx(1.5));
  const LabeledMultigraph p3 = path_graph(3);
  CHECK(val(effective_capacitance(subgraph(p3, parse_input("00")), 0, 2)) == doctest::Approx(0.5));
  // s and t isolated from each other in the complement: no absent edge joins their blocks.
  const LabeledMultigraph two = graph_from_pairs(4, {{0, 1}, {2, 3}});
  CHECK(val(effective_capacitance(subgraph(two, parse_input("11")), 0, 2)) == doctest::Approx(0.0));
}

TEST_CASE("optimal flows are unit flows with energy R") {
  const LabeledMultigraph k2 = complete_graph(2);
  const UnitFlow f2 = optimal_flow(full_subgraph(k2), 0, 1);
  CHECK(f2.forward[0] == doctest::Approx(1.0));
  CHECK(f2.energy == doctest::Approx(1.0));
  const LabeledMultigraph k3 = complete_graph(3);  // edges (0,1),(0,2),(1,2)
  const UnitFlow f3 = optimal_flow(full_subgraph(k3), 0, 1);
  CHECK(f3.forward[0] == doctest::Approx(2.0 / 3.0));
  CHECK(f3.forward[1] == doctest::Approx(1.0 / 3.0));
  CHECK(f3.forward[2] == doctest::Approx(-1.0 / 3.0));
  CHECK(f3.on(2, true) == doctest::Approx(1.0 / 3.0));
  CHECK(f3.energy == doctest::Approx(2.0 / 3.0));
  const LabeledMultigraph par = graph_from_pairs(2, {{0, 1}, {0, 1}});
  const UnitFlow fp = optimal_flow(full_subgraph(par), 0, 1);
  CHECK(fp.forward[0] == doctest::Approx(0.5));
  CHECK(fp.forward[1] == doctest::Approx(0.5));
  CHECK(fp.energy == doctest::Approx(0.5));
  CHECK(code_of([&] { optimal_flow(subgraph(k3, parse_input("100")), 0, 2); }) == ErrorCode::Disconnected);
}

TEST_CASE("optimal potentials are unit potentials with energy C") {
  const UnitPotential p2 = optimal_potential(subgraph(complete_graph(2), parse_input("0")), 0, 1);
  CHECK(p2.values[0] == doctest::Approx(1.0));
  CHECK(p2.values[1] == doctest::Approx(0.0));
  CHECK(p2.energy == doctest::Approx(1.0));
  const UnitPotential pp = optimal_potential(subgraph(path_graph(3), parse_input("00")), 0, 2);
  CHECK(pp.values[1] == doctest::Approx(0.5));
  CHECK(pp.energy == doctest::Approx(0.5));
  const UnitPotential pk = optimal_potential(subgraph(complete_graph(3), parse_input("000")), 0, 2);
  CHECK(pk.values[1] == doctest::Approx(0.5));
  CHECK(pk.energy == doctest::Approx(1.5));
  CHECK(code_of([] { optimal_potential(full_subgraph(complete_graph(3)), 0, 2); }) == ErrorCode::Connected);
}

TEST_CASE("flow and potential duality against oracles for every input on small parents") {
  std::mt19937_64 rng(21);
  std::vector<LabeledMultigraph> parents = {complete_graph(3), complete_graph(4), path_graph(4), cycle_graph(5)};
  const LabeledMultigraph k5 = complete_graph(5);
  parents.push_back(reweighted(k5, oracle::random_weights(rng, k5.edge_count())));
  for (const LabeledMultigraph& g : parents) {
    const Vertex s = 0;
    const Vertex t = g.vertex_count() - 1;
    for (std::uint64_t i = 0; i < (std::uint64_t{1} << g.variable_count()); ++i) {
      const Input x = input_from_index(i, g.variable_count());
      const SubgraphView v = subgraph(g, x);
      const TwoTerminalValue r = effective_resistance(v, s, t);
      const TwoTerminalValue c = effective_capacitance(v, s, t);
      const auto ro = oracle::resistance(g, x, s, t);
      const auto co = oracle::capacitance(g, x, s, t);
      REQUIRE(r.is_infinite() == !ro.has_value());
      REQUIRE(c.is_infinite() == !co.has_value());
      if (ro) {
        CHECK(r.value() == doctest::Approx(*ro).epsilon(1e-9));
        const UnitFlow f = optimal_flow(v, s, t);
        CHECK(std::abs(f.energy - r.value()) <= 1e-9);
        CHECK(f.net_outflow(g, s) == doctest::Approx(1.0));
        CHECK(f.net_outflow(g, t) == doctest::Approx(-1.0));
        for (Vertex w = 1; w + 1 < g.vertex_count(); ++w) CHECK(std::abs(f.net_outflow(g, w)) < 1e-9);
        for (std::size_t e : v.absent_edges()) CHECK(f.forward[e] == 0.0);
      } else {
        CHECK(c.value() == doctest::Approx(*co).epsilon(1e-9));
        const UnitPotential p = optimal_potential(v, s, t);
        CHECK(std::abs(p.energy - c.value()) <= 1e-9);
        for (std::size_t e : v.present_edges()) CHECK(std::abs(p.values[g.edge(e).u] - p.values[g.edge(e).v]) < 1e-12);
      }
    }
  }
}

TEST_CASE("contracted complement keeps every absent edge") {
  const LabeledMultigraph k4 = complete_graph(4);
  const SubgraphView v = subgraph(k4, parse_input("100001"));  // blocks {0,1}, {2,3}
  const ContractedComplement cc = contracted_complement(v);
  CHECK(cc.graph.vertex_count() == 2);
  CHECK(cc.graph.edge_count() == 4);
  CHECK(cc.block_of == std::vector<std::size_t>{0, 0, 1, 1});
  const CapacitanceRoutes routes = capacitance_routes(v, 0, 2);
  CHECK(routes.contracted.value() == doctest::Approx(4.0));
  CHECK(routes.direct.value() == doctest::Approx(4.0));
}

TEST_CASE("capacitance routes agree on random weighted subgraphs of K5") {
  std::mt19937_64 rng(77);
  const LabeledMultigraph k5 = complete_graph(5);
  for (int trial = 0; trial < 100; ++trial) {
    const LabeledMultigraph g = reweighted(k5, oracle::random_weights(rng, k5.edge_count()));
    const Input x = oracle::random_input(rng, g.variable_count(), 0.3);
    const CapacitanceRoutes r = capacitance_routes(subgraph(g, x), 0, 4);
    REQUIRE(r.contracted.is_infinite() == r.direct.is_infinite());
    if (r.direct.is_finite()) CHECK(std::abs(r.contracted.value() - r.direct.value()) <= 1e-8);
  }
}

TEST_CASE("monotonicity: absent edges raise C, present edges lower R") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 5;
    std::vector<std::pair<Vertex, Vertex>> pairs = {{0, 1}, {1, 2}, {2, 3}, {3, 4}};
    const LabeledMultigraph g = graph_from_pairs(n, pairs);
    const Input x = oracle::random_input(rng, g.variable_count(), 0.5);
    std::uniform_int_distribution<Vertex> vd(0, n - 1);
    Vertex a = vd(rng), b = vd(rng);
    if (a == b) continue;
    pairs.emplace_back(a, b);
    const LabeledMultigraph bigger = graph_from_pairs(n, pairs);
    Input x_absent = x, x_present = x;
    x_absent.push_back(0);
    x_present.push_back(1);
    const TwoTerminalValue c0 = effective_capacitance(subgraph(g, x), 0, 4);
    const TwoTerminalValue c1 = effective_capacitance(subgraph(bigger, x_absent), 0, 4);
    if (c0.is_finite()) CHECK(c1.value() >= c0.value() - 1e-12);
    const TwoTerminalValue r0 = effective_resistance(subgraph(g, x), 0, 4);
    const TwoTerminalValue r1 = effective_resistance(subgraph(bigger, x_present), 0, 4);
    if (r0.is_finite()) CHECK(r1.value() <= r0.value() + 1e-12);
  }
}

TEST_CASE("flow energy over an edge subset") {
  const LabeledMultigraph k3 = complete_graph(3);
  const UnitFlow f = optimal_flow(full_subgraph(k3), 0, 1);
  CHECK(flow_energy(k3, f.forward, {0}) == doctest::Approx(4.0 / 9.0));
  CHECK(flow_energy(k3, f.forward, {0, 1, 2}) == doctest::Approx(2.0 / 3.0));
}
