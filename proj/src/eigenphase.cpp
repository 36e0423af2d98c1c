#include "stconn/eigenphase.hpp"

#include <cmath>
#include <numbers>

#include <Eigen/Eigenvalues>

namespace stconn {

namespace {

// Cosines closer than this are resolved together through the skew part.
constexpr double kClusterGap = 1e-6;

double snap_phase(double theta) {
  if (std::abs(theta) < kPhaseSnap) return 0.0;
  if (std::abs(theta) > std::numbers::pi - kPhaseSnap) return std::numbers::pi;
  return theta;
}

}  // namespace

EigenDecomposition decompose_orthogonal(const Eigen::MatrixXd& u) {
  const Eigen::Index h = u.rows();
  EigenDecomposition out;
  out.vectors.resize(h, h);
  out.phases.reserve(static_cast<std::size_t>(h));
  if (h == 0) return out;

  const Eigen::MatrixXd sym = 0.5 * (u + u.transpose());
  const Eigen::MatrixXd skew = 0.5 * (u - u.transpose());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(sym);
  const Eigen::VectorXd c = es.eigenvalues();
  const Eigen::MatrixXd q = es.eigenvectors();

  Eigen::Index col = 0;
  Eigen::Index begin = 0;
  while (begin < h) {
    Eigen::Index end = begin + 1;
    while (end < h && c(end) - c(end - 1) <= kClusterGap) ++end;
    const Eigen::MatrixXd qc = q.middleCols(begin, end - begin);
    // On this invariant subspace the skew part acts as i sin(theta).
    const Eigen::MatrixXcd k =
        std::complex<double>(0.0, -1.0) * (qc.transpose() * skew * qc).cast<std::complex<double>>();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> ks(k);
    const Eigen::MatrixXcd v = qc.cast<std::complex<double>>() * ks.eigenvectors();
    for (Eigen::Index j = 0; j < v.cols(); ++j) {
      const double cosine = (v.col(j).adjoint() * sym * v.col(j)).real()(0);
      out.phases.push_back(snap_phase(std::atan2(ks.eigenvalues()(j), cosine)));
      out.vectors.col(col++) = v.col(j);
    }
    begin = end;
  }
  return out;
}

void attach_state(EigenDecomposition& d, const Eigen::VectorXcd& psi) {
  const Eigen::VectorXcd coeff = d.vectors.adjoint() * psi;
  d.weights.resize(d.phases.size());
  for (std::size_t k = 0; k < d.weights.size(); ++k) d.weights[k] = std::norm(coeff(static_cast<Eigen::Index>(k)));
}

void attach_density(EigenDecomposition& d, const Eigen::MatrixXcd& rho) {
  const Eigen::MatrixXcd rv = rho * d.vectors;
  d.weights.resize(d.phases.size());
  for (std::size_t k = 0; k < d.weights.size(); ++k) {
    const auto i = static_cast<Eigen::Index>(k);
    d.weights[k] = std::max(0.0, d.vectors.col(i).dot(rv.col(i)).real());
  }
}

double phase_gap(const std::vector<double>& phases) {
  double gap = std::numbers::pi;
  for (double t : phases) {
    if (t != 0.0) gap = std::min(gap, std::abs(t));
  }
  return gap;
}

}  // namespace stconn
