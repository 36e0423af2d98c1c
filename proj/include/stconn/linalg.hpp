#pragma once

#include <cstddef>

#include <Eigen/Dense>

namespace stconn::linalg {

// Singular values below kRelativeCutoff * max(1, sigma_max) count as zero.
inline constexpr double kRelativeCutoff = 1e-10;

struct Svd {
  Eigen::MatrixXd u;  // full
  Eigen::VectorXd s;  // descending
  Eigen::MatrixXd v;  // full
  std::size_t rank = 0;
};

Svd svd(const Eigen::MatrixXd& m, double rel_cutoff = kRelativeCutoff);
std::size_t numerical_rank(const Eigen::MatrixXd& m, double rel_cutoff = kRelativeCutoff);
Eigen::MatrixXd pseudo_inverse(const Eigen::MatrixXd& m, double rel_cutoff = kRelativeCutoff);

// Orthonormal bases.
Eigen::MatrixXd range_basis(const Eigen::MatrixXd& m, double rel_cutoff = kRelativeCutoff);
Eigen::MatrixXd kernel_basis(const Eigen::MatrixXd& m, double rel_cutoff = kRelativeCutoff);

Eigen::MatrixXd range_projector(const Eigen::MatrixXd& m, double rel_cutoff = kRelativeCutoff);
Eigen::MatrixXd kernel_projector(const Eigen::MatrixXd& m, double rel_cutoff = kRelativeCutoff);

}  // namespace stconn::linalg
