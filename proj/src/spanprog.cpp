#include "stconn/spanprog.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <set>

#include <Eigen/Eigenvalues>

#include "stconn/error.hpp"
#include "stconn/linalg.hpp"

namespace stconn {

void SpanProgram::check_input(const Input& x) const {
  if (x.size() != variable_count) {
    throw Error(ErrorCode::LengthMismatch, "bitstring has length " + std::to_string(x.size()) + ", expected " +
                                               std::to_string(variable_count));
  }
}

Eigen::VectorXd SpanProgram::available_mask(const Input& x) const {
  check_input(x);
  Eigen::VectorXd mask = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(h_dim));
  for (std::size_t i = 0; i < variable_count; ++i) {
    for (std::size_t j : blocks[i][x[i] ? 1 : 0]) mask(j) = 1.0;
  }
  return mask;
}

Eigen::MatrixXd SpanProgram::available_projector(const Input& x) const {
  return available_mask(x).asDiagonal();
}

Eigen::MatrixXd SpanProgram::restricted(const Input& x) const {
  return a * available_mask(x).asDiagonal();
}

SpanProgram make_span_program(Eigen::MatrixXd a, Eigen::VectorXd target,
                              std::vector<std::array<std::vector<std::size_t>, 2>> blocks) {
  if (a.rows() != target.size()) throw Error(ErrorCode::BadInput, "target length must equal the rows of A");
  if (target.norm() == 0.0) throw Error(ErrorCode::BadInput, "target vector must be nonzero");
  const auto h = static_cast<std::size_t>(a.cols());
  std::vector<std::size_t> owner(h, SIZE_MAX);
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    for (int b = 0; b < 2; ++b) {
      for (std::size_t j : blocks[i][b]) {
        if (j >= h) throw Error(ErrorCode::BadInput, "block coordinate outside H");
        if (owner[j] != SIZE_MAX && owner[j] != i) {
          throw Error(ErrorCode::BadInput, "coordinate " + std::to_string(j) + " belongs to two variables");
        }
        owner[j] = i;
      }
    }
  }
  for (std::size_t j = 0; j < h; ++j) {
    if (owner[j] == SIZE_MAX) throw Error(ErrorCode::BadInput, "coordinate " + std::to_string(j) + " is in no block");
  }
  SpanProgram p;
  p.h_dim = h;
  p.u_dim = static_cast<std::size_t>(a.rows());
  p.variable_count = blocks.size();
  p.blocks = std::move(blocks);
  p.a = std::move(a);
  p.target = std::move(target);
  return p;
}

SpanProgram build_stconn_program(const LabeledMultigraph& g, Vertex s, Vertex t) {
  if (s >= g.vertex_count() || t >= g.vertex_count()) {
    throw Error(ErrorCode::BadEndpoint, "terminal outside the vertex range");
  }
  if (s == t) throw Error(ErrorCode::SameVertex, "s and t must differ");
  const auto n = static_cast<Eigen::Index>(g.vertex_count());
  const auto m = static_cast<Eigen::Index>(g.edge_count());
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, 2 * m);
  std::vector<std::array<std::vector<std::size_t>, 2>> blocks(g.variable_count());
  for (Eigen::Index k = 0; k < m; ++k) {
    const Edge& e = g.edge(static_cast<std::size_t>(k));
    const double w = std::sqrt(e.weight);
    a(e.u, 2 * k) = w;
    a(e.v, 2 * k) = -w;
    a(e.v, 2 * k + 1) = w;
    a(e.u, 2 * k + 1) = -w;
    auto& block = blocks[e.literal.var][e.literal.negated ? 0 : 1];
    block.push_back(static_cast<std::size_t>(2 * k));
    block.push_back(static_cast<std::size_t>(2 * k + 1));
  }
  Eigen::VectorXd tau = Eigen::VectorXd::Zero(n);
  tau(s) = 1.0;
  tau(t) = -1.0;
  SpanProgram p = make_span_program(std::move(a), std::move(tau), std::move(blocks));
  p.complete_parent = g.is_unit_complete();
  return p;
}

PositiveWitness positive_witness(const SpanProgram& p, const Input& x) {
  const Eigen::MatrixXd ax = p.restricted(x);
  const Eigen::VectorXd w = linalg::pseudo_inverse(ax) * p.target;
  PositiveWitness out{TwoTerminalValue::infinite(), std::nullopt, 0.0};
  out.residual = (ax * w - p.target).norm();
  if (out.residual <= kFeasibilityTolerance * p.target.norm()) {
    out.size = TwoTerminalValue::finite(w.squaredNorm());
    out.vector = w;
  }
  return out;
}

NegativeWitness negative_witness(const SpanProgram& p, const Input& x) {
  const Eigen::MatrixXd ax = p.restricted(x);
  // Covectors annihilating A(x): v in ker(A(x)^T) = N z.
  const Eigen::MatrixXd n = linalg::kernel_basis(ax.transpose());
  const Eigen::VectorXd a = n.transpose() * p.target;
  NegativeWitness out{TwoTerminalValue::infinite(), std::nullopt};
  if (n.cols() == 0 || a.norm() <= kFeasibilityTolerance * p.target.norm()) return out;

  const Eigen::MatrixXd an = p.a.transpose() * n;
  const Eigen::MatrixXd q = an.transpose() * an;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(q);
  const Eigen::VectorXd mu = es.eigenvalues();
  const Eigen::MatrixXd vecs = es.eigenvectors();
  const double cutoff = linalg::kRelativeCutoff * std::max(1.0, mu.cwiseAbs().maxCoeff());

  Eigen::VectorXd a_null = Eigen::VectorXd::Zero(a.size());
  Eigen::VectorXd qpinv_a = Eigen::VectorXd::Zero(a.size());
  for (Eigen::Index i = 0; i < mu.size(); ++i) {
    const double c = vecs.col(i).dot(a);
    if (mu(i) <= cutoff) {
      a_null += c * vecs.col(i);
    } else {
      qpinv_a += (c / mu(i)) * vecs.col(i);
    }
  }
  Eigen::VectorXd z;
  if (a_null.norm() > kFeasibilityTolerance * a.norm()) {
    z = a_null / a_null.squaredNorm();
  } else {
    z = qpinv_a / a.dot(qpinv_a);
  }
  const Eigen::VectorXd v = n * z;
  out.size = TwoTerminalValue::finite((p.a.transpose() * v).squaredNorm());
  out.functional = v;
  return out;
}

ApproxWitness approx_positive_witness(const SpanProgram& p, const Input& x) {
  const Eigen::VectorXd mask = p.available_mask(x);
  const Eigen::MatrixXd apinv = linalg::pseudo_inverse(p.a);
  const Eigen::VectorXd w0 = apinv * p.target;
  if ((p.a * w0 - p.target).norm() > kFeasibilityTolerance * p.target.norm()) {
    throw Error(ErrorCode::TargetUnreachable, "target is not in the column space of A");
  }
  const Eigen::VectorXd off = Eigen::VectorXd::Ones(mask.size()) - mask;
  const Eigen::MatrixXd z = linalg::kernel_basis(p.a);

  // Stage 1: least unavailable mass over w0 + Z y.
  const Eigen::MatrixXd m = off.asDiagonal() * z;
  const Eigen::VectorXd y1 = linalg::pseudo_inverse(m) * (-(off.asDiagonal() * w0));
  const Eigen::VectorXd w1 = w0 + z * y1;

  // Stage 2: least norm over the stage-1 minimizers w1 + Z K u.
  const Eigen::MatrixXd zk = z * linalg::kernel_basis(m);
  const Eigen::VectorXd w = w1 - zk * (zk.transpose() * w1);

  ApproxWitness out;
  out.vector = w;
  out.e_plus = (off.asDiagonal() * w).squaredNorm();
  out.w_tilde_plus = w.squaredNorm();
  return out;
}

WitnessReport witness_report(const SpanProgram& p, const Input& x) {
  WitnessReport r{TwoTerminalValue::infinite(), TwoTerminalValue::infinite(), std::nullopt, std::nullopt,
                  std::nullopt, std::nullopt};
  const PositiveWitness pos = positive_witness(p, x);
  const NegativeWitness neg = negative_witness(p, x);
  r.w_plus = pos.size;
  r.witness_vector = pos.vector;
  r.w_minus = neg.size;
  r.witness_functional = neg.functional;
  try {
    const ApproxWitness ap = approx_positive_witness(p, x);
    r.e_plus = ap.e_plus;
    r.w_tilde_plus = ap.w_tilde_plus;
  } catch (const Error& e) {
    if (e.code() != ErrorCode::TargetUnreachable) throw;
  }
  return r;
}

double longest_path_energy(const LabeledMultigraph& g, Vertex s, Vertex t, std::size_t max_vertices) {
  const std::size_t n = g.vertex_count();
  if (s >= n || t >= n) throw Error(ErrorCode::BadEndpoint, "terminal outside the vertex range");
  if (s == t) throw Error(ErrorCode::SameVertex, "s and t must differ");
  if (n > max_vertices) {
    throw Error(ErrorCode::TooLarge, "exhaustive path search limited to " + std::to_string(max_vertices) + " vertices");
  }
  if (!full_subgraph(g).connected(s, t)) throw Error(ErrorCode::Disconnected, "s and t are not connected in G");

  // Largest 1/c over parallel edges between each pair.
  std::vector<std::vector<double>> cost(n, std::vector<double>(n, -1.0));
  for (const Edge& e : g.edges()) {
    cost[e.u][e.v] = std::max(cost[e.u][e.v], 1.0 / e.weight);
    cost[e.v][e.u] = cost[e.u][e.v];
  }
  std::vector<bool> on_path(n, false);
  double best = 0.0;
  auto dfs = [&](auto&& self, Vertex v, double acc) -> void {
    if (v == t) {
      best = std::max(best, acc);
      return;
    }
    for (Vertex w = 0; w < n; ++w) {
      if (cost[v][w] < 0.0 || on_path[w]) continue;
      on_path[w] = true;
      self(self, w, acc + cost[v][w]);
      on_path[w] = false;
    }
  };
  on_path[s] = true;
  dfs(dfs, s, 0.0);
  return best;
}

QueryBoundReport query_bound_report(const SpanProgram& p, std::span<const Input> inputs) {
  QueryBoundReport r;
  for (const Input& x : inputs) {
    const PositiveWitness pos = positive_witness(p, x);
    if (pos.size.is_finite()) {
      r.w_plus_max = std::max(r.w_plus_max, pos.size.value());
      ++r.positive_count;
    } else {
      const NegativeWitness neg = negative_witness(p, x);
      if (neg.size.is_finite()) r.w_minus_max = std::max(r.w_minus_max, neg.size.value());
      ++r.negative_count;
    }
  }
  if (r.positive_count == 0 || r.negative_count == 0) {
    throw Error(ErrorCode::EmptyClass, "decision bound needs at least one positive and one negative input");
  }
  r.decision_bound = std::sqrt(r.w_plus_max * r.w_minus_max);
  return r;
}

double capacitance_estimation_bound(double capacitance, double longest_path, double eps) {
  if (!(eps > 0.0) || capacitance < 0.0 || longest_path < 0.0) {
    throw Error(ErrorCode::BadParameters, "estimation bound needs eps > 0 and nonnegative C, J");
  }
  return std::pow(eps, -1.5) * std::sqrt(capacitance * longest_path);
}

}  // namespace stconn
