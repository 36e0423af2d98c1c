#include "stconn/linalg.hpp"

#include <algorithm>

#include <Eigen/SVD>

namespace stconn::linalg {

Svd svd(const Eigen::MatrixXd& m, double rel_cutoff) {
  Svd out;
  if (m.rows() == 0 || m.cols() == 0) {
    out.u = Eigen::MatrixXd::Identity(m.rows(), m.rows());
    out.v = Eigen::MatrixXd::Identity(m.cols(), m.cols());
    out.s = Eigen::VectorXd();
    return out;
  }
  Eigen::JacobiSVD<Eigen::MatrixXd> solver(m, Eigen::ComputeFullU | Eigen::ComputeFullV);
  out.u = solver.matrixU();
  out.v = solver.matrixV();
  out.s = solver.singularValues();
  const double cutoff = rel_cutoff * std::max(1.0, out.s.size() ? out.s(0) : 0.0);
  out.rank = 0;
  for (Eigen::Index i = 0; i < out.s.size(); ++i) {
    if (out.s(i) > cutoff) ++out.rank;
  }
  return out;
}

std::size_t numerical_rank(const Eigen::MatrixXd& m, double rel_cutoff) { return svd(m, rel_cutoff).rank; }

Eigen::MatrixXd pseudo_inverse(const Eigen::MatrixXd& m, double rel_cutoff) {
  const Svd d = svd(m, rel_cutoff);
  const auto r = static_cast<Eigen::Index>(d.rank);
  Eigen::MatrixXd out = Eigen::MatrixXd::Zero(m.cols(), m.rows());
  if (r == 0) return out;
  const Eigen::VectorXd inv = d.s.head(r).cwiseInverse();
  return d.v.leftCols(r) * inv.asDiagonal() * d.u.leftCols(r).transpose();
}

Eigen::MatrixXd range_basis(const Eigen::MatrixXd& m, double rel_cutoff) {
  const Svd d = svd(m, rel_cutoff);
  return d.u.leftCols(static_cast<Eigen::Index>(d.rank));
}

Eigen::MatrixXd kernel_basis(const Eigen::MatrixXd& m, double rel_cutoff) {
  const Svd d = svd(m, rel_cutoff);
  const auto r = static_cast<Eigen::Index>(d.rank);
  return d.v.rightCols(m.cols() - r);
}

Eigen::MatrixXd range_projector(const Eigen::MatrixXd& m, double rel_cutoff) {
  const Eigen::MatrixXd b = range_basis(m, rel_cutoff);
  return b * b.transpose();
}

Eigen::MatrixXd kernel_projector(const Eigen::MatrixXd& m, double rel_cutoff) {
  const Eigen::MatrixXd b = kernel_basis(m, rel_cutoff);
  return b * b.transpose();
}

}  // namespace stconn::linalg
