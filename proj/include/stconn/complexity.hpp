#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace stconn {

// Constant-free instantiation of a complexity bound. Symbolic unit costs
// (walk step U, stationary-state preparation S, eigenvalue computation L)
// appear as multipliers.
struct ComplexityReport {
  std::string tag;
  std::string formula;
  double value = 0.0;  // pure query count, or the sum of multipliers
  std::map<std::string, double> unit_multipliers;
  std::map<std::string, double> parameters;
  std::map<std::string, double> extra;
};

// Recognised keys: n, kappa, lambda, lambda2, lambda2_G, d_max, d_avg, d, R, epsilon, C, longest_path, W_plus, W_minus.
using ComplexityInputs = std::map<std::string, double>;

std::vector<std::string> complexity_tags();
// Throws MissingParameter, BadParameters.
ComplexityReport complexity_report(const std::string& tag, const ComplexityInputs& inputs);

}  // namespace stconn
