#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

namespace stconn {

using Vertex = std::size_t;

// Input bitstring, one byte (0 or 1) per variable; index 0 is the leftmost character.
using Input = std::vector<std::uint8_t>;

Input parse_input(std::string_view bits);
std::string format_input(const Input& x);
// Input whose string form is the N-bit binary expansion of index.
Input input_from_index(std::uint64_t index, std::size_t n_vars);

struct Literal {
  std::size_t var = 0;
  bool negated = false;

  bool evaluate(const Input& x) const { return (x[var] != 0) != negated; }
  friend bool operator==(const Literal&, const Literal&) = default;
};

struct Edge {
  Vertex u = 0;
  Vertex v = 0;
  std::string label;
  double weight = 1.0;
  Literal literal;

  friend bool operator==(const Edge&, const Edge&) = default;
};

struct EdgeSpec {
  Vertex u = 0;
  Vertex v = 0;
  std::string label;
  std::optional<double> weight;
  std::optional<Literal> literal;
};

struct GraphSpec {
  std::size_t n = 0;
  std::vector<EdgeSpec> edges;
  double weight_default = 1.0;
};

class LabeledMultigraph {
 public:
  LabeledMultigraph() = default;

  std::size_t vertex_count() const noexcept { return n_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  std::size_t variable_count() const noexcept { return n_vars_; }
  double weight_default() const noexcept { return weight_default_; }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  const Edge& edge(std::size_t k) const { return edges_.at(k); }

  // True when there is exactly one unit-weight edge between every vertex pair
  // and every edge has its own positive literal.
  bool is_unit_complete() const;
  // At most one edge between any pair of vertices.
  bool is_simple() const;

  friend bool operator==(const LabeledMultigraph&, const LabeledMultigraph&) = default;

 private:
  friend LabeledMultigraph build_graph(const GraphSpec& spec);

  std::size_t n_ = 0;
  std::size_t n_vars_ = 0;
  double weight_default_ = 1.0;
  std::vector<Edge> edges_;
};

LabeledMultigraph build_graph(const GraphSpec& spec);

// G(x). Holds a pointer to the parent, which must outlive the view.
class SubgraphView {
 public:
  const LabeledMultigraph& parent() const noexcept { return *parent_; }
  const Input& input() const noexcept { return x_; }
  bool is_present(std::size_t edge_index) const { return present_[edge_index]; }
  const std::vector<bool>& present_mask() const noexcept { return present_; }
  std::vector<std::size_t> present_edges() const;
  std::vector<std::size_t> absent_edges() const;

  // Component id per vertex; ids are numbered by smallest member vertex.
  const std::vector<std::size_t>& component_of() const noexcept { return component_; }
  std::size_t component_count() const noexcept { return kappa_; }
  bool connected(Vertex a, Vertex b) const { return component_.at(a) == component_.at(b); }
  bool is_connected() const noexcept { return kappa_ == 1; }

 private:
  friend SubgraphView subgraph(const LabeledMultigraph& g, const Input& x);
  friend SubgraphView full_subgraph(const LabeledMultigraph& g);

  const LabeledMultigraph* parent_ = nullptr;
  Input x_;
  std::vector<bool> present_;
  std::vector<std::size_t> component_;
  std::size_t kappa_ = 0;
};

SubgraphView subgraph(const LabeledMultigraph& g, const Input& x);
// View with every edge present, regardless of literals.
SubgraphView full_subgraph(const LabeledMultigraph& g);

struct LaplacianBundle {
  Eigen::MatrixXd adjacency;
  Eigen::VectorXd degree;
  Eigen::MatrixXd laplacian;
  Eigen::VectorXd eigenvalues;  // ascending
  double d_max = 0.0;
  double d_avg = 0.0;
  std::size_t kappa = 0;  // near-zero eigenvalue multiplicity

  double lambda2() const { return eigenvalues.size() > 1 ? eigenvalues(1) : 0.0; }
  double lambda_max() const { return eigenvalues.size() ? eigenvalues(eigenvalues.size() - 1) : 0.0; }
};

LaplacianBundle laplacian(const SubgraphView& view);
LaplacianBundle laplacian(const LabeledMultigraph& g);

struct Partition {
  std::vector<std::vector<Vertex>> blocks;
  std::size_t kappa = 0;
};

Partition components(const SubgraphView& view);

// Mean of R_{s,t} over ordered pairs s != t.
double average_resistance(const SubgraphView& view);

}  // namespace stconn
