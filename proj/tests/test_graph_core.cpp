#include <doctest.h>

#include <bit>
#include <functional>
#include <random>

#include "oracles.hpp"
#include "stconn/error.hpp"
#include "stconn/graph.hpp"
#include "stconn/graph_families.hpp"
#include "stconn/graph_io.hpp"
#include "stconn/linalg.hpp"

using namespace stconn;

namespace {

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::BadInput;
}

GraphSpec triangle_spec() {
  GraphSpec s;
  s.n = 3;
  s.edges = {{0, 1, "a", {}, {}}, {1, 2, "b", {}, {}}, {0, 2, "c", {}, {}}};
  return s;
}

}  // namespace

TEST_CASE("bitstrings parse, format and enumerate with index 0 leftmost") {
  CHECK(parse_input("0110") == Input{0, 1, 1, 0});
  CHECK(format_input(Input{1, 0, 1}) == "101");
  CHECK(format_input(input_from_index(1, 3)) == "001");
  CHECK(format_input(input_from_index(6, 3)) == "110");
  CHECK(code_of([] { parse_input("01x"); }) == ErrorCode::BadInput);
}

TEST_CASE("build_graph validates edges and keeps spec order") {
  const LabeledMultigraph g = build_graph(triangle_spec());
  CHECK(g.vertex_count() == 3);
  CHECK(g.edge_count() == 3);
  CHECK(g.variable_count() == 3);
  CHECK(g.edge(1).label == "b");
  CHECK(g.edge(2).literal.var == 2);
  CHECK_FALSE(g.edge(2).literal.negated);

  GraphSpec dup = triangle_spec();
  dup.edges[2].label = "a";
  CHECK(code_of([&] { build_graph(dup); }) == ErrorCode::DuplicateLabel);
  GraphSpec bad = triangle_spec();
  bad.edges[0].v = 7;
  CHECK(code_of([&] { build_graph(bad); }) == ErrorCode::BadEndpoint);
  GraphSpec loop = triangle_spec();
  loop.edges[0].v = 0;
  CHECK(code_of([&] { build_graph(loop); }) == ErrorCode::SelfLoop);
  GraphSpec neg = triangle_spec();
  neg.edges[1].weight = 0.0;
  CHECK(code_of([&] { build_graph(neg); }) == ErrorCode::NonpositiveWeight);
  try {
    build_graph(dup);
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("DuplicateLabel") == 0);
  }
}

TEST_CASE("complete and hypercube families") {
  const LabeledMultigraph k4 = complete_graph(4);
  CHECK(k4.vertex_count() == 4);
  CHECK(k4.edge_count() == 6);
  CHECK(k4.variable_count() == 6);
  CHECK(k4.is_unit_complete());
  CHECK(k4.is_simple());
  const LabeledMultigraph q3 = hypercube_graph(3);
  CHECK(q3.edge_count() == 12);
  for (const Edge& e : q3.edges()) CHECK(std::popcount(e.u ^ e.v) == 1);
  CHECK_FALSE(q3.is_unit_complete());
  const LabeledMultigraph doubled = graph_from_pairs(2, {{0, 1}, {0, 1}});
  CHECK_FALSE(doubled.is_simple());
}

TEST_CASE("subgraph views follow literals, including negated ones") {
  // Vertices top = 0, bottom = 1, left = 2.
  GraphSpec s;
  s.n = 3;
  s.edges = {{0, 2, "x1", {}, Literal{0, false}},
             {2, 1, "not-x2", {}, Literal{1, true}},
             {0, 1, "x3", {}, Literal{2, false}},
             {0, 1, "not-x1", {}, Literal{0, true}}};
  const LabeledMultigraph g = build_graph(s);
  const SubgraphView v = subgraph(g, parse_input("011"));
  CHECK(v.present_edges() == std::vector<std::size_t>{2, 3});
  CHECK(v.absent_edges() == std::vector<std::size_t>{0, 1});
  CHECK(v.component_count() == 2);
  CHECK(v.connected(0, 1));
  CHECK_FALSE(v.connected(0, 2));
  CHECK(code_of([&] { subgraph(g, parse_input("01")); }) == ErrorCode::LengthMismatch);
}

TEST_CASE("component examples on K4 and K5") {
  const LabeledMultigraph k4 = complete_graph(4);
  // Edge order (0,1),(0,2),(0,3),(1,2),(1,3),(2,3).
  const SubgraphView two = subgraph(k4, parse_input("100001"));
  const Partition p = components(two);
  CHECK(p.kappa == 2);
  CHECK(p.blocks == std::vector<std::vector<Vertex>>{{0, 1}, {2, 3}});
  CHECK(subgraph(k4, parse_input("111111")).component_count() == 1);
  CHECK(subgraph(k4, parse_input("000000")).component_count() == 4);
  CHECK(subgraph(k4, parse_input("000000")).present_edges().empty());
  const LabeledMultigraph k5 = complete_graph(5);
  CHECK(subgraph(k5, parse_input("1111000000")).is_connected());
}

TEST_CASE("component count matches union-find and the Laplacian null space for all inputs up to n = 6") {
  std::vector<LabeledMultigraph> parents = {complete_graph(4), hypercube_graph(3), cycle_graph(6), path_graph(5)};
  std::mt19937_64 rng(3);
  const LabeledMultigraph k6 = complete_graph(6);
  for (const LabeledMultigraph& g : parents) {
    for (std::uint64_t i = 0; i < (std::uint64_t{1} << g.variable_count()); ++i) {
      const Input x = input_from_index(i, g.variable_count());
      const SubgraphView v = subgraph(g, x);
      const std::size_t k = oracle::kappa(g, x);
      REQUIRE(v.component_count() == k);
      REQUIRE(laplacian(v).kappa == k);
    }
  }
  for (int trial = 0; trial < 200; ++trial) {
    const Input x = oracle::random_input(rng, k6.variable_count(), 0.3);
    CHECK(laplacian(subgraph(k6, x)).kappa == oracle::kappa(k6, x));
  }
}

TEST_CASE("Laplacian spectra and degree identities") {
  const LaplacianBundle k2 = laplacian(complete_graph(2));
  CHECK(k2.eigenvalues(0) == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(k2.eigenvalues(1) == doctest::Approx(2.0));
  for (std::size_t n = 2; n <= 7; ++n) {
    const LaplacianBundle b = laplacian(complete_graph(n));
    for (Eigen::Index i = 1; i < b.eigenvalues.size(); ++i) CHECK(b.eigenvalues(i) == doctest::Approx(double(n)));
  }
  const LaplacianBundle q3 = laplacian(hypercube_graph(3));
  const std::vector<double> expected = {0, 2, 2, 2, 4, 4, 4, 6};
  for (std::size_t i = 0; i < 8; ++i) CHECK(q3.eigenvalues(static_cast<Eigen::Index>(i)) == doctest::Approx(expected[i]).epsilon(1e-10));
  CHECK(q3.d_max == 3.0);
  CHECK(q3.d_avg == 3.0);

  std::mt19937_64 rng(8);
  const LabeledMultigraph base = complete_graph(5);
  const LabeledMultigraph g = reweighted(base, oracle::random_weights(rng, base.edge_count()));
  const LaplacianBundle b = laplacian(g);
  CHECK((b.laplacian * Eigen::VectorXd::Ones(5)).norm() < 1e-12);
  CHECK(b.laplacian.trace() == doctest::Approx(oracle::total_weighted_degree(g)));
  const auto ev = oracle::symmetric_eigenvalues(oracle::laplacian(g, Input(g.variable_count(), 1)));
  for (std::size_t i = 0; i < ev.size(); ++i) CHECK(b.eigenvalues(static_cast<Eigen::Index>(i)) == doctest::Approx(ev[i]).epsilon(1e-10));
  const LaplacianBundle empty = laplacian(subgraph(base, Input(base.variable_count(), 0)));
  CHECK(empty.kappa == 5);
  CHECK(empty.laplacian.isZero());
}

TEST_CASE("multi-edges stay distinct but adjacency sums their weights") {
  GraphSpec s;
  s.n = 2;
  s.edges = {{0, 1, "a", 1.5, {}}, {0, 1, "b", 2.5, {}}};
  const LabeledMultigraph g = build_graph(s);
  CHECK(g.edge_count() == 2);
  const LaplacianBundle b = laplacian(g);
  CHECK(b.adjacency(0, 1) == doctest::Approx(4.0));
  CHECK(b.degree(0) == doctest::Approx(4.0));
}

TEST_CASE("average resistance is the ordered-pair mean") {
  CHECK(average_resistance(full_subgraph(complete_graph(2))) == doctest::Approx(1.0));
  CHECK(average_resistance(full_subgraph(complete_graph(3))) == doctest::Approx(2.0 / 3.0));
  CHECK(average_resistance(full_subgraph(path_graph(3))) == doctest::Approx(4.0 / 3.0));
  CHECK(code_of([] { average_resistance(subgraph(complete_graph(3), parse_input("100"))); }) == ErrorCode::Disconnected);
  // Ordered-pair mean against the spectral sum, constant 2/(n-1).
  for (std::size_t n = 2; n <= 6; ++n) {
    const LaplacianBundle b = laplacian(complete_graph(n));
    double inv = 0.0;
    for (Eigen::Index i = 1; i < b.eigenvalues.size(); ++i) inv += 1.0 / b.eigenvalues(i);
    CHECK(average_resistance(full_subgraph(complete_graph(n))) == doctest::Approx(2.0 / double(n - 1) * inv));
  }
}

TEST_CASE("graph JSON loads, validates and round-trips through the canonical form") {
  const std::string text = R"({"n": 3, "edges": [
      {"u": 0, "v": 2, "label": "x1", "literal": {"var": 0}},
      {"u": 2, "v": 1, "label": "nx2", "weight": 2.5, "literal": {"var": 1, "negated": true}},
      {"u": 0, "v": 1, "label": "x3", "literal": {"var": 2}}]})";
  const LabeledMultigraph g = load_graph(text);
  CHECK(g.edge(1).weight == 2.5);
  CHECK(g.edge(1).literal.negated);
  const std::string canon = canonical_graph_json(g);
  CHECK(load_graph(canon) == g);
  CHECK(canonical_graph_json(load_graph(canon)) == canon);
  CHECK(code_of([] { load_graph("{\"n\": 2}"); }) == ErrorCode::BadInput);
  CHECK(code_of([] { load_graph("not json"); }) == ErrorCode::BadInput);
  CHECK(code_of([] { load_graph(R"({"n":2,"edges":[{"u":0,"v":1,"label":"a","weight":-1}]})"); }) ==
        ErrorCode::NonpositiveWeight);
}

TEST_CASE("pseudoinverse, range and kernel helpers") {
  Eigen::MatrixXd m(3, 4);
  m << 1, 2, 3, 4, 2, 4, 6, 8, 0, 1, 0, 1;
  CHECK(linalg::numerical_rank(m) == 2);
  const Eigen::MatrixXd pinv = linalg::pseudo_inverse(m);
  CHECK((m * pinv * m - m).norm() < 1e-12);
  CHECK((pinv * m * pinv - pinv).norm() < 1e-12);
  CHECK(((m * pinv).transpose() - m * pinv).norm() < 1e-12);
  const Eigen::MatrixXd k = linalg::kernel_basis(m);
  CHECK(k.cols() == 2);
  CHECK((m * k).norm() < 1e-12);
  CHECK((k.transpose() * k - Eigen::MatrixXd::Identity(2, 2)).norm() < 1e-12);
  const Eigen::MatrixXd pr = linalg::range_projector(m);
  CHECK((pr * pr - pr).norm() < 1e-12);
  CHECK((pr * m - m).norm() < 1e-12);
  CHECK((linalg::kernel_projector(m) + linalg::range_projector(m.transpose()) - Eigen::MatrixXd::Identity(4, 4)).norm() < 1e-12);
}
