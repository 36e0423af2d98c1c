#include <doctest.h>

#include <functional>
#include <random>

#include "oracles.hpp"
#include "stconn/electric.hpp"
#include "stconn/error.hpp"
#include "stconn/graph_families.hpp"
#include "stconn/spanprog.hpp"

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

std::vector<Input> all_inputs(std::size_t n_vars) {
  std::vector<Input> out;
  for (std::uint64_t i = 0; i < (std::uint64_t{1} << n_vars); ++i) out.push_back(input_from_index(i, n_vars));
  return out;
}

}  // namespace

TEST_CASE("program matrix for a single edge") {
  const SpanProgram p = build_stconn_program(complete_graph(2), 0, 1);
  CHECK(p.h_dim == 2);
  CHECK(p.u_dim == 2);
  Eigen::MatrixXd expected(2, 2);
  expected << 1, -1, -1, 1;
  CHECK((p.a - expected).norm() == 0.0);
  CHECK(p.target(0) == 1.0);
  CHECK(p.target(1) == -1.0);
  CHECK(p.blocks[0][1] == std::vector<std::size_t>{0, 1});
  CHECK(p.blocks[0][0].empty());
  CHECK(p.complete_parent);
  CHECK(code_of([&] { p.check_input(parse_input("10")); }) == ErrorCode::LengthMismatch);
}

TEST_CASE("A A^T is twice the parent Laplacian") {
  std::mt19937_64 rng(4);
  const LabeledMultigraph k5 = complete_graph(5);
  const LabeledMultigraph g = reweighted(k5, oracle::random_weights(rng, k5.edge_count()));
  const SpanProgram p = build_stconn_program(g, 0, 3);
  const oracle::Matrix l = oracle::laplacian(g, Input(g.variable_count(), 1));
  const Eigen::MatrixXd aat = p.a * p.a.transpose();
  for (std::size_t i = 0; i < 5; ++i)
    for (std::size_t j = 0; j < 5; ++j) CHECK(aat(i, j) == doctest::Approx(2.0 * l[i][j]));
  CHECK(!p.complete_parent);
}

TEST_CASE("negated literals select the zero block") {
  GraphSpec spec;
  spec.n = 2;
  spec.edges.push_back(EdgeSpec{0, 1, "a", std::nullopt, Literal{0, true}});
  const LabeledMultigraph g = build_graph(spec);
  const SpanProgram p = build_stconn_program(g, 0, 1);
  CHECK(p.blocks[0][0] == std::vector<std::size_t>{0, 1});
  CHECK(p.available_mask(parse_input("0")).sum() == 2.0);
  CHECK(p.available_mask(parse_input("1")).sum() == 0.0);
}

TEST_CASE("make_span_program validation") {
  Eigen::MatrixXd a = Eigen::MatrixXd::Identity(2, 2);
  CHECK(code_of([&] { make_span_program(a, Eigen::VectorXd::Zero(2), {{std::vector<std::size_t>{0}, {1}}}); }) ==
        ErrorCode::BadInput);
  CHECK(code_of([&] { make_span_program(a, Eigen::VectorXd::Ones(2), {{std::vector<std::size_t>{0}, {0}}}); }) ==
        ErrorCode::BadInput);
}

TEST_CASE("positive witness examples") {
  const SpanProgram k2 = build_stconn_program(complete_graph(2), 0, 1);
  const PositiveWitness w = positive_witness(k2, parse_input("1"));
  CHECK(w.size.value() == doctest::Approx(0.5));
  REQUIRE(w.vector);
  CHECK((k2.a * *w.vector - k2.target).norm() < 1e-12);
  CHECK(positive_witness(k2, parse_input("0")).size.is_infinite());
  const SpanProgram k3 = build_stconn_program(complete_graph(3), 0, 2);
  CHECK(positive_witness(k3, parse_input("111")).size.value() == doctest::Approx(1.0 / 3.0));
}

TEST_CASE("negative witness examples") {
  const SpanProgram k2 = build_stconn_program(complete_graph(2), 0, 1);
  const NegativeWitness w = negative_witness(k2, parse_input("0"));
  CHECK(w.size.value() == doctest::Approx(2.0));
  CHECK(negative_witness(k2, parse_input("1")).size.is_infinite());
  const SpanProgram k3 = build_stconn_program(complete_graph(3), 0, 2);
  CHECK(negative_witness(k3, parse_input("000")).size.value() == doctest::Approx(3.0));
}

TEST_CASE("witness sizes equal half R and twice C, with feasible witnesses") {
  std::mt19937_64 rng(12);
  const LabeledMultigraph k4 = complete_graph(4);
  std::vector<LabeledMultigraph> parents = {k4, path_graph(4), cycle_graph(4),
                                            reweighted(k4, oracle::random_weights(rng, k4.edge_count()))};
  for (const LabeledMultigraph& g : parents) {
    const SpanProgram p = build_stconn_program(g, 0, 3);
    for (const Input& x : all_inputs(g.variable_count())) {
      const WitnessReport r = witness_report(p, x);
      const auto ro = oracle::resistance(g, x, 0, 3);
      if (ro) {
        REQUIRE(r.w_plus.is_finite());
        CHECK(r.w_minus.is_infinite());
        CHECK(r.w_plus.value() == doctest::Approx(*ro / 2.0).epsilon(1e-9));
        REQUIRE(r.witness_vector);
        const Eigen::VectorXd& v = *r.witness_vector;
        CHECK((p.a * v - p.target).norm() < 1e-9);
        CHECK((v.array() * (1.0 - p.available_mask(x).array())).matrix().norm() < 1e-12);
      } else {
        const auto co = oracle::capacitance(g, x, 0, 3);
        REQUIRE(co);
        REQUIRE(r.w_minus.is_finite());
        CHECK(r.w_plus.is_infinite());
        CHECK(r.w_minus.value() == doctest::Approx(2.0 * *co).epsilon(1e-9));
        REQUIRE(r.witness_functional);
        const Eigen::VectorXd& om = *r.witness_functional;
        CHECK(om.dot(p.target) == doctest::Approx(1.0));
        CHECK((om.transpose() * p.restricted(x)).norm() < 1e-9);
        CHECK((om.transpose() * p.a).squaredNorm() == doctest::Approx(r.w_minus.value()));
      }
    }
  }
}

TEST_CASE("approximate positive witness") {
  const SpanProgram k2 = build_stconn_program(complete_graph(2), 0, 1);
  const ApproxWitness absent = approx_positive_witness(k2, parse_input("0"));
  CHECK(absent.e_plus == doctest::Approx(0.5));
  CHECK(absent.w_tilde_plus == doctest::Approx(0.5));
  const SpanProgram k4 = build_stconn_program(complete_graph(4), 0, 3);
  const ApproxWitness all = approx_positive_witness(k4, parse_input("111111"));
  CHECK(all.e_plus == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(all.w_tilde_plus == doctest::Approx(0.25));
  const ApproxWitness empty = approx_positive_witness(k4, parse_input("000000"));
  CHECK(empty.e_plus == doctest::Approx(0.25));
  CHECK((k4.a * empty.vector - k4.target).norm() < 1e-9);
  const LabeledMultigraph g = graph_from_pairs(3, {{0, 1}, {1, 2}});
  const SpanProgram pp = build_stconn_program(g, 0, 2);
  CHECK(code_of([&] { approx_positive_witness(build_stconn_program(graph_from_pairs(3, {{0, 1}}), 0, 2),
                                               parse_input("1")); }) == ErrorCode::TargetUnreachable);
  const ApproxWitness half = approx_positive_witness(pp, parse_input("10"));
  CHECK(half.e_plus == doctest::Approx(0.5));
  CHECK(half.e_plus == doctest::Approx(1.0 / (2.0 * effective_capacitance(subgraph(g, parse_input("10")), 0, 2).value())));
}

TEST_CASE("approximate witness error is 1 / (2 C) on random disconnected inputs") {
  std::mt19937_64 rng(8);
  const LabeledMultigraph k5 = complete_graph(5);
  int seen = 0;
  for (int trial = 0; trial < 200 && seen < 40; ++trial) {
    const LabeledMultigraph g = reweighted(k5, oracle::random_weights(rng, k5.edge_count()));
    const Input x = oracle::random_input(rng, g.variable_count(), 0.3);
    const auto co = oracle::capacitance(g, x, 0, 4);
    if (!co) continue;
    ++seen;
    const ApproxWitness w = approx_positive_witness(build_stconn_program(g, 0, 4), x);
    CHECK(w.e_plus == doctest::Approx(1.0 / (2.0 * *co)).epsilon(1e-8));
  }
  CHECK(seen >= 20);
}

TEST_CASE("longest path energy") {
  CHECK(longest_path_energy(complete_graph(4), 0, 3) == doctest::Approx(3.0));
  CHECK(longest_path_energy(path_graph(3), 0, 2) == doctest::Approx(2.0));
  const LabeledMultigraph tri = reweighted(complete_graph(3), {0.5, 1.0, 0.5});  // (0,1),(0,2),(1,2)
  CHECK(longest_path_energy(tri, 0, 2) == doctest::Approx(4.0));
  CHECK(code_of([] { longest_path_energy(complete_graph(13), 0, 1); }) == ErrorCode::TooLarge);
  CHECK(code_of([] { longest_path_energy(graph_from_pairs(3, {{0, 1}}), 0, 2); }) == ErrorCode::Disconnected);
  CHECK(code_of([] { longest_path_energy(complete_graph(3), 1, 1); }) == ErrorCode::SameVertex);
}

TEST_CASE("query bound report") {
  const SpanProgram k2 = build_stconn_program(complete_graph(2), 0, 1);
  const std::vector<Input> both = all_inputs(1);
  const QueryBoundReport r2 = query_bound_report(k2, both);
  CHECK(r2.w_plus_max == doctest::Approx(0.5));
  CHECK(r2.w_minus_max == doctest::Approx(2.0));
  CHECK(r2.decision_bound == doctest::Approx(1.0));
  CHECK(r2.positive_count == 1);
  CHECK(r2.negative_count == 1);
  const SpanProgram k3 = build_stconn_program(complete_graph(3), 0, 2);
  const std::vector<Input> inputs3 = all_inputs(3);
  const QueryBoundReport r3 = query_bound_report(k3, inputs3);
  CHECK(r3.w_plus_max == doctest::Approx(1.0));
  CHECK(r3.w_minus_max == doctest::Approx(4.0));  // edge (0,1) alone: C = 2
  CHECK(r3.decision_bound == doctest::Approx(2.0));
  const std::vector<Input> only_one = {parse_input("1")};
  CHECK(code_of([&] { query_bound_report(k2, only_one); }) == ErrorCode::EmptyClass);
}

TEST_CASE("weight scaling trades w_plus against w_minus") {
  const double alpha = 3.5;
  const SpanProgram p1 = build_stconn_program(complete_graph(4), 0, 3);
  const SpanProgram pa = build_stconn_program(complete_graph(4, alpha), 0, 3);
  for (const Input& x : all_inputs(6)) {
    const WitnessReport r1 = witness_report(p1, x);
    const WitnessReport ra = witness_report(pa, x);
    if (r1.w_plus.is_finite()) CHECK(ra.w_plus.value() == doctest::Approx(r1.w_plus.value() / alpha));
    else CHECK(ra.w_minus.value() == doctest::Approx(r1.w_minus.value() * alpha));
  }
  const std::vector<Input> inputs = all_inputs(6);
  CHECK(query_bound_report(pa, inputs).decision_bound ==
        doctest::Approx(query_bound_report(p1, inputs).decision_bound));
}

TEST_CASE("capacitance estimation bound") {
  CHECK(capacitance_estimation_bound(2.0, 8.0, 0.25) == doctest::Approx(4.0 * 8.0));
  CHECK(code_of([] { capacitance_estimation_bound(1.0, 1.0, 0.0); }) == ErrorCode::BadParameters);
}
