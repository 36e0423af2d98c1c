#pragma once

#include <array>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "stconn/extended_real.hpp"
#include "stconn/graph.hpp"

namespace stconn {

// P = (H, U, tau, A) with H partitioned into H_{i,b}.
struct SpanProgram {
  std::size_t h_dim = 0;
  std::size_t u_dim = 0;
  std::size_t variable_count = 0;
  // blocks[i][b] lists the coordinates spanning H_{i,b}.
  std::vector<std::array<std::vector<std::size_t>, 2>> blocks;
  Eigen::MatrixXd a;
  Eigen::VectorXd target;
  // Set when built from a unit-weight simple complete graph.
  bool complete_parent = false;

  // Throws LengthMismatch.
  void check_input(const Input& x) const;
  // Diagonal of Pi_{H(x)}.
  Eigen::VectorXd available_mask(const Input& x) const;
  Eigen::MatrixXd available_projector(const Input& x) const;
  // A Pi_{H(x)}.
  Eigen::MatrixXd restricted(const Input& x) const;
};

// Validates block disjointness/coverage and tau != 0.
SpanProgram make_span_program(Eigen::MatrixXd a, Eigen::VectorXd target,
                              std::vector<std::array<std::vector<std::size_t>, 2>> blocks);

// Coordinates 2k (u -> v as listed) and 2k+1 (v -> u) for edge k.
SpanProgram build_stconn_program(const LabeledMultigraph& g, Vertex s, Vertex t);

struct PositiveWitness {
  TwoTerminalValue size;
  std::optional<Eigen::VectorXd> vector;
  double residual = 0.0;  // ||A(x) A(x)^+ tau - tau||
};

struct NegativeWitness {
  TwoTerminalValue size;
  std::optional<Eigen::VectorXd> functional;  // omega as a column vector in U
};

struct ApproxWitness {
  double e_plus = 0.0;
  double w_tilde_plus = 0.0;
  Eigen::VectorXd vector;
};

inline constexpr double kFeasibilityTolerance = 1e-9;

PositiveWitness positive_witness(const SpanProgram& p, const Input& x);
NegativeWitness negative_witness(const SpanProgram& p, const Input& x);
// Throws TargetUnreachable when tau is outside col(A).
ApproxWitness approx_positive_witness(const SpanProgram& p, const Input& x);

struct WitnessReport {
  TwoTerminalValue w_plus;
  TwoTerminalValue w_minus;
  std::optional<double> e_plus;
  std::optional<double> w_tilde_plus;
  std::optional<Eigen::VectorXd> witness_vector;
  std::optional<Eigen::VectorXd> witness_functional;
};

WitnessReport witness_report(const SpanProgram& p, const Input& x);

// Max over self-avoiding st-paths of sum 1/c(e). Exhaustive; guarded at max_vertices.
double longest_path_energy(const LabeledMultigraph& g, Vertex s, Vertex t, std::size_t max_vertices = 12);

struct QueryBoundReport {
  double w_plus_max = 0.0;   // over positive inputs
  double w_minus_max = 0.0;  // over negative inputs
  double decision_bound = 0.0;
  std::size_t positive_count = 0;
  std::size_t negative_count = 0;
};

// Throws EmptyClass when either class is empty.
QueryBoundReport query_bound_report(const SpanProgram& p, std::span<const Input> inputs);

// eps^{-3/2} sqrt(C * max_p J(p)).
double capacitance_estimation_bound(double capacitance, double longest_path, double eps);

}  // namespace stconn
