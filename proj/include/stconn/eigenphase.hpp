#pragma once

#include <vector>

#include <Eigen/Dense>

namespace stconn {

// Phases within this distance of 0 or pi are snapped onto them.
inline constexpr double kPhaseSnap = 1e-9;

// Eigenbasis of a real orthogonal matrix: U v_k = exp(i phases[k]) v_k.
struct EigenDecomposition {
  std::vector<double> phases;  // radians in (-pi, pi]
  Eigen::MatrixXcd vectors;    // orthonormal columns
  std::vector<double> weights; // attached state: |<v_k|psi>|^2, or <v_k|rho|v_k>

  std::size_t size() const noexcept { return phases.size(); }
};

EigenDecomposition decompose_orthogonal(const Eigen::MatrixXd& u);

void attach_state(EigenDecomposition& d, const Eigen::VectorXcd& psi);
void attach_density(EigenDecomposition& d, const Eigen::MatrixXcd& rho);

// Smallest nonzero |phase|; pi when every phase is zero.
double phase_gap(const std::vector<double>& phases);

}  // namespace stconn
