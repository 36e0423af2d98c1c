#include "stconn/spectral.hpp"

#include <algorithm>
#include <limits>
#include <cmath>
#include <numbers>

#include <Eigen/SVD>

#include "stconn/error.hpp"
#include "stconn/linalg.hpp"

namespace stconn {

namespace {

constexpr double kFixedRankCutoff = 1e-8;
// Phases this close to 0 or pi are not counted as a Szegedy pair.
constexpr double kPairExclusion = 1e-6;

double wrap_phase(double t) {
  while (t > std::numbers::pi) t -= 2.0 * std::numbers::pi;
  while (t <= -std::numbers::pi) t += 2.0 * std::numbers::pi;
  return t;
}

std::size_t complex_rank(const Eigen::MatrixXcd& m, double cutoff) {
  if (m.cols() == 0 || m.rows() == 0) return 0;
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m);
  std::size_t r = 0;
  for (Eigen::Index i = 0; i < svd.singularValues().size(); ++i) {
    if (svd.singularValues()(i) > cutoff) ++r;
  }
  return r;
}

}  // namespace

SpanUnitary build_unitary(const SpanProgram& p, const Input& x) {
  SpanUnitary su;
  const auto h = static_cast<Eigen::Index>(p.h_dim);
  const Eigen::MatrixXd id = Eigen::MatrixXd::Identity(h, h);
  su.proj_row = linalg::range_projector(p.a.transpose());
  su.proj_kernel = id - su.proj_row;
  su.proj_available = p.available_projector(x);
  su.u = (2.0 * su.proj_kernel - id) * (2.0 * su.proj_available - id);
  su.complete_parent = p.complete_parent;
  return su;
}

Discriminant discriminant(const Eigen::MatrixXd& proj_a, const Eigen::MatrixXd& proj_b) {
  Discriminant d;
  d.d = proj_a * proj_b;
  const linalg::Svd s = linalg::svd(d.d);
  d.singular_values = s.s.cwiseMax(0.0).cwiseMin(1.0);
  d.left = s.u;
  d.right = s.v;
  return d;
}

Discriminant discriminant(const SpanUnitary& su) { return discriminant(su.proj_row, su.proj_available); }

SpectralProfile spectral_profile(const SpanUnitary& su) {
  SpectralProfile prof;
  prof.decomposition = decompose_orthogonal(su.u);
  prof.phases = prof.decomposition.phases;
  std::sort(prof.phases.begin(), prof.phases.end());
  prof.gap = phase_gap(prof.phases);
  std::vector<double> negated;
  negated.reserve(prof.phases.size());
  for (double t : prof.phases) {
    double s = wrap_phase(t + std::numbers::pi);
    if (std::abs(s) < kPhaseSnap) s = 0.0;
    negated.push_back(s);
  }
  prof.gap_negated = phase_gap(negated);

  std::vector<Eigen::Index> fixed;
  for (std::size_t k = 0; k < prof.decomposition.phases.size(); ++k) {
    if (prof.decomposition.phases[k] == 0.0) fixed.push_back(static_cast<Eigen::Index>(k));
  }
  Eigen::MatrixXcd f(su.u.rows(), static_cast<Eigen::Index>(fixed.size()));
  for (std::size_t i = 0; i < fixed.size(); ++i) f.col(static_cast<Eigen::Index>(i)) = prof.decomposition.vectors.col(fixed[i]);
  prof.fixed_row_dim = complex_rank(su.proj_row.cast<std::complex<double>>() * f, kFixedRankCutoff);
  prof.discriminant_svals = discriminant(su).singular_values;
  prof.complete_parent = su.complete_parent;
  return prof;
}

SzegedyCheck szegedy_check(const Eigen::MatrixXd& proj_a, const Eigen::MatrixXd& proj_b) {
  const auto h = proj_a.rows();
  const Eigen::MatrixXd id = Eigen::MatrixXd::Identity(h, h);
  const EigenDecomposition dec = decompose_orthogonal((2.0 * proj_a - id) * (2.0 * proj_b - id));
  SzegedyCheck out;
  auto nontrivial = [](double t) {
    return std::abs(t) > kPairExclusion && std::abs(t) < std::numbers::pi - kPairExclusion;
  };
  for (double t : dec.phases) {
    if (nontrivial(t)) out.measured.push_back(t);
  }
  const Discriminant d = discriminant(proj_a, proj_b);
  for (Eigen::Index j = 0; j < d.singular_values.size(); ++j) {
    const double sigma = d.singular_values(j);
    const double theta = std::atan2(std::sqrt(std::max(0.0, 1.0 - sigma * sigma)), sigma);
    if (nontrivial(2.0 * theta)) {
      out.predicted.push_back(2.0 * theta);
      out.predicted.push_back(-2.0 * theta);
    }
  }
  std::sort(out.measured.begin(), out.measured.end());
  std::sort(out.predicted.begin(), out.predicted.end());
  out.counts_match = out.measured.size() == out.predicted.size();
  if (out.counts_match) {
    for (std::size_t i = 0; i < out.measured.size(); ++i) {
      out.max_deviation = std::max(out.max_deviation, std::abs(out.measured[i] - out.predicted[i]));
    }
  } else {
    out.max_deviation = std::numeric_limits<double>::infinity();
  }
  return out;
}

std::optional<double> row_vector_in_gap_space_residual(const SpanUnitary& su, const SpectralProfile& profile) {
  if (profile.gap >= std::numbers::pi) return std::nullopt;
  const EigenDecomposition& dec = profile.decomposition;
  std::vector<Eigen::Index> cols;
  for (std::size_t k = 0; k < dec.phases.size(); ++k) {
    if (std::abs(std::abs(dec.phases[k]) - profile.gap) <= 1e-8) cols.push_back(static_cast<Eigen::Index>(k));
  }
  Eigen::MatrixXcd q(su.u.rows(), static_cast<Eigen::Index>(cols.size()));
  for (std::size_t i = 0; i < cols.size(); ++i) q.col(static_cast<Eigen::Index>(i)) = dec.vectors.col(cols[i]);
  const Eigen::MatrixXcd off_row = su.proj_kernel.cast<std::complex<double>>() * q;
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(off_row);
  return svd.singularValues().minCoeff();
}

DeltaBoundReport check_delta_bound(const SpectralProfile& profile, const LaplacianBundle& bundle,
                                   const LaplacianBundle& parent_bundle) {
  if (bundle.kappa != 1) throw Error(ErrorCode::Disconnected, "phase-gap bound needs a connected G(x)");
  DeltaBoundReport r;
  const double l2 = std::max(0.0, bundle.lambda2());
  r.gap = profile.gap;
  r.bound = 2.0 * std::sqrt(l2 / parent_bundle.d_max);
  r.slack = r.gap - r.bound;
  r.holds = r.slack >= -kBoundSlackTolerance;
  r.corrected_bound = 2.0 * std::sqrt(l2 / parent_bundle.lambda_max());
  r.corrected_slack = r.gap - r.corrected_bound;
  r.corrected_holds = r.corrected_slack >= -kBoundSlackTolerance;
  return r;
}

double lambda2_from_gap(const SpectralProfile& profile, std::size_t n) {
  if (!profile.complete_parent) {
    throw Error(ErrorCode::NotCompleteParent, "gap identity holds only for a unit-weight complete parent");
  }
  const double s = std::sin(profile.gap / 2.0);
  return static_cast<double>(n) * s * s;
}

double sigma_max(const Eigen::MatrixXd& a) {
  const linalg::Svd s = linalg::svd(a);
  return s.s.size() ? s.s(0) : 0.0;
}

}  // namespace stconn
