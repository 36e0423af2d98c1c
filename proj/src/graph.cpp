#include "stconn/graph.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <set>
#include <unordered_set>

#include <Eigen/Eigenvalues>

#include "stconn/error.hpp"

namespace stconn {

Input parse_input(std::string_view bits) {
  Input x;
  x.reserve(bits.size());
  for (char ch : bits) {
    if (ch != '0' && ch != '1') {
      throw Error(ErrorCode::BadInput, "bitstring may contain only '0' and '1'");
    }
    x.push_back(ch == '1' ? 1 : 0);
  }
  return x;
}

std::string format_input(const Input& x) {
  std::string s;
  s.reserve(x.size());
  for (auto b : x) s.push_back(b ? '1' : '0');
  return s;
}

Input input_from_index(std::uint64_t index, std::size_t n_vars) {
  Input x(n_vars, 0);
  for (std::size_t i = 0; i < n_vars; ++i) {
    x[i] = static_cast<std::uint8_t>((index >> (n_vars - 1 - i)) & 1u);
  }
  return x;
}

namespace {

std::string edge_name(std::size_t k, const std::string& label) {
  return "edge #" + std::to_string(k) + " (label \"" + label + "\")";
}

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

  std::size_t find(std::size_t a) {
    while (parent_[a] != a) {
      parent_[a] = parent_[parent_[a]];
      a = parent_[a];
    }
    return a;
  }

  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (b < a) std::swap(a, b);
    parent_[b] = a;
  }

 private:
  std::vector<std::size_t> parent_;
};

}  // namespace

LabeledMultigraph build_graph(const GraphSpec& spec) {
  if (!(spec.weight_default > 0.0)) {
    throw Error(ErrorCode::NonpositiveWeight, "weight_default must be positive");
  }
  LabeledMultigraph g;
  g.n_ = spec.n;
  g.weight_default_ = spec.weight_default;
  std::unordered_set<std::string> labels;
  std::set<std::size_t> vars;
  g.edges_.reserve(spec.edges.size());
  for (std::size_t k = 0; k < spec.edges.size(); ++k) {
    const EdgeSpec& es = spec.edges[k];
    if (es.u >= spec.n || es.v >= spec.n) {
      throw Error(ErrorCode::BadEndpoint, edge_name(k, es.label) + " has an endpoint outside 0.." +
                                              std::to_string(spec.n == 0 ? 0 : spec.n - 1));
    }
    if (es.u == es.v) throw Error(ErrorCode::SelfLoop, edge_name(k, es.label) + " is a self-loop");
    if (!labels.insert(es.label).second) {
      throw Error(ErrorCode::DuplicateLabel, edge_name(k, es.label) + " repeats an earlier label");
    }
    const double w = es.weight.value_or(spec.weight_default);
    if (!(w > 0.0) || !std::isfinite(w)) {
      throw Error(ErrorCode::NonpositiveWeight, edge_name(k, es.label) + " has a nonpositive weight");
    }
    Edge e{es.u, es.v, es.label, w, es.literal.value_or(Literal{k, false})};
    vars.insert(e.literal.var);
    g.edges_.push_back(std::move(e));
  }
  if (!vars.empty() && *vars.rbegin() + 1 != vars.size()) {
    throw Error(ErrorCode::BadInput, "literal variable indices must be exactly 0..N-1");
  }
  g.n_vars_ = vars.size();
  return g;
}

bool LabeledMultigraph::is_simple() const {
  std::set<std::pair<Vertex, Vertex>> seen;
  for (const auto& e : edges_) {
    if (!seen.insert({std::min(e.u, e.v), std::max(e.u, e.v)}).second) return false;
  }
  return true;
}

bool LabeledMultigraph::is_unit_complete() const {
  if (n_ < 2 || edges_.size() != n_ * (n_ - 1) / 2 || !is_simple()) return false;
  std::set<std::size_t> vars;
  for (const auto& e : edges_) {
    if (e.weight != 1.0 || e.literal.negated) return false;
    vars.insert(e.literal.var);
  }
  return vars.size() == edges_.size();
}

SubgraphView subgraph(const LabeledMultigraph& g, const Input& x) {
  if (x.size() != g.variable_count()) {
    throw Error(ErrorCode::LengthMismatch, "bitstring has length " + std::to_string(x.size()) +
                                               ", expected " + std::to_string(g.variable_count()));
  }
  SubgraphView view;
  view.parent_ = &g;
  view.x_ = x;
  view.present_.resize(g.edge_count());
  DisjointSets dsu(g.vertex_count());
  for (std::size_t k = 0; k < g.edge_count(); ++k) {
    const Edge& e = g.edge(k);
    view.present_[k] = e.literal.evaluate(x);
    if (view.present_[k]) dsu.unite(e.u, e.v);
  }
  // Roots are the smallest member, so numbering by first appearance orders components by min vertex.
  view.component_.assign(g.vertex_count(), 0);
  std::vector<std::size_t> id_of_root(g.vertex_count(), SIZE_MAX);
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    const std::size_t r = dsu.find(v);
    if (id_of_root[r] == SIZE_MAX) id_of_root[r] = view.kappa_++;
    view.component_[v] = id_of_root[r];
  }
  return view;
}

SubgraphView full_subgraph(const LabeledMultigraph& g) {
  Input x(g.variable_count(), 0);
  SubgraphView view = subgraph(g, x);
  view.present_.assign(g.edge_count(), true);
  DisjointSets dsu(g.vertex_count());
  for (const auto& e : g.edges()) dsu.unite(e.u, e.v);
  view.kappa_ = 0;
  std::vector<std::size_t> id_of_root(g.vertex_count(), SIZE_MAX);
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    const std::size_t r = dsu.find(v);
    if (id_of_root[r] == SIZE_MAX) id_of_root[r] = view.kappa_++;
    view.component_[v] = id_of_root[r];
  }
  return view;
}

std::vector<std::size_t> SubgraphView::present_edges() const {
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < present_.size(); ++k) {
    if (present_[k]) out.push_back(k);
  }
  return out;
}

std::vector<std::size_t> SubgraphView::absent_edges() const {
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < present_.size(); ++k) {
    if (!present_[k]) out.push_back(k);
  }
  return out;
}

namespace {

LaplacianBundle bundle_from_edges(const LabeledMultigraph& g, const std::vector<bool>& present) {
  const auto n = static_cast<Eigen::Index>(g.vertex_count());
  LaplacianBundle b;
  b.adjacency = Eigen::MatrixXd::Zero(n, n);
  for (std::size_t k = 0; k < g.edge_count(); ++k) {
    if (!present[k]) continue;
    const Edge& e = g.edge(k);
    b.adjacency(e.u, e.v) += e.weight;
    b.adjacency(e.v, e.u) += e.weight;
  }
  b.degree = b.adjacency.rowwise().sum();
  b.laplacian = -b.adjacency;
  b.laplacian.diagonal() += b.degree;
  if (n == 0) {
    b.eigenvalues = Eigen::VectorXd();
    return b;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(b.laplacian, Eigen::EigenvaluesOnly);
  b.eigenvalues = es.eigenvalues();
  b.d_max = b.degree.maxCoeff();
  b.d_avg = b.degree.mean();
  const double cutoff = 1e-10 * std::max(1.0, b.eigenvalues(n - 1));
  b.kappa = 0;
  for (Eigen::Index i = 0; i < n; ++i) {
    if (b.eigenvalues(i) < cutoff) ++b.kappa;
  }
  return b;
}

}  // namespace

LaplacianBundle laplacian(const SubgraphView& view) {
  return bundle_from_edges(view.parent(), view.present_mask());
}

LaplacianBundle laplacian(const LabeledMultigraph& g) {
  return bundle_from_edges(g, std::vector<bool>(g.edge_count(), true));
}

Partition components(const SubgraphView& view) {
  Partition p;
  p.kappa = view.component_count();
  p.blocks.resize(p.kappa);
  for (Vertex v = 0; v < view.parent().vertex_count(); ++v) {
    p.blocks[view.component_of()[v]].push_back(v);
  }
  return p;
}

}  // namespace stconn
