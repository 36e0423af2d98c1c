#pragma once

#include <complex>
#include <optional>
#include <vector>

#include <Eigen/Dense>

#include "stconn/graph.hpp"

namespace stconn {

using GroupElement = std::vector<std::size_t>;

// Cay(Z_{m_1} x ... x Z_{m_k}, S). Element ids are mixed-radix with the first factor most significant.
struct CayleyGraphSpec {
  std::vector<std::size_t> factors;
  std::vector<GroupElement> generators;

  std::size_t order() const;
  std::size_t degree() const { return generators.size(); }
  GroupElement element(std::size_t id) const;
  std::size_t id(const GroupElement& g) const;
};

CayleyGraphSpec complete_cayley_spec(std::size_t n);
CayleyGraphSpec hypercube_cayley_spec(std::size_t d);

// Throws AsymmetricGeneratingSet, or BadInput for malformed factors/elements.
void validate_cayley_spec(const CayleyGraphSpec& spec);

// One unit edge per unordered pair {g, g+s}; vertex ids are element ids.
LabeledMultigraph cayley_graph(const CayleyGraphSpec& spec);

std::complex<double> character(const CayleyGraphSpec& spec, const GroupElement& g, const GroupElement& h);

// lambda_g = d - sum_s chi_g(s), indexed by element id.
std::vector<double> cayley_spectrum(const CayleyGraphSpec& spec);

// |g^> = n^{-1/2} sum_h chi_g(h) |h>.
Eigen::VectorXcd fourier_vector(const CayleyGraphSpec& spec, std::size_t g);

// Recognises K_n (as Z_n) and the hypercube with bit-pattern vertex ids.
std::optional<CayleyGraphSpec> detect_cayley(const LabeledMultigraph& g);

}  // namespace stconn
