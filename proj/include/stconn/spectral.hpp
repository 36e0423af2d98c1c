#pragma once

#include <optional>
#include <vector>

#include <Eigen/Dense>

#include "stconn/eigenphase.hpp"
#include "stconn/graph.hpp"
#include "stconn/spanprog.hpp"

namespace stconn {

// U(P,x) = (2 Pi_{ker A} - I)(2 Pi_{H(x)} - I).
struct SpanUnitary {
  Eigen::MatrixXd u;
  Eigen::MatrixXd proj_kernel;
  Eigen::MatrixXd proj_row;
  Eigen::MatrixXd proj_available;
  bool complete_parent = false;
};

SpanUnitary build_unitary(const SpanProgram& p, const Input& x);

struct Discriminant {
  Eigen::MatrixXd d;
  Eigen::VectorXd singular_values;  // descending, clamped to [0, 1]
  Eigen::MatrixXd left;
  Eigen::MatrixXd right;
};

Discriminant discriminant(const Eigen::MatrixXd& proj_a, const Eigen::MatrixXd& proj_b);
// Pi_{row A} Pi_{H(x)}, the discriminant of -U(P,x).
Discriminant discriminant(const SpanUnitary& su);

struct SpectralProfile {
  std::vector<double> phases;  // ascending, snapped
  double gap = 0.0;            // Delta(U)
  double gap_negated = 0.0;    // Delta(-U)
  std::size_t fixed_row_dim = 0;
  Eigen::VectorXd discriminant_svals;
  bool complete_parent = false;
  EigenDecomposition decomposition;
};

SpectralProfile spectral_profile(const SpanUnitary& su);

// Nontrivial phases of (2 Pi_A - I)(2 Pi_B - I) against {+-2 arccos sigma_j(Pi_A Pi_B)}.
struct SzegedyCheck {
  std::vector<double> measured;  // sorted
  std::vector<double> predicted; // sorted
  bool counts_match = false;
  double max_deviation = 0.0;
};

SzegedyCheck szegedy_check(const Eigen::MatrixXd& proj_a, const Eigen::MatrixXd& proj_b);

// Distance of row(A) from span of the +-Delta eigenvectors, measured by the
// smallest principal-angle sine; zero when the two subspaces meet.
// Empty when Delta = pi.
std::optional<double> row_vector_in_gap_space_residual(const SpanUnitary& su, const SpectralProfile& profile);

struct DeltaBoundReport {
  double gap = 0.0;
  double bound = 0.0;  // 2 sqrt(lambda2(G(x)) / d_max(G))
  double slack = 0.0;
  bool holds = false;
  double corrected_bound = 0.0;  // 2 sqrt(lambda2(G(x)) / lambda_max(L_G))
  double corrected_slack = 0.0;
  bool corrected_holds = false;
};

inline constexpr double kBoundSlackTolerance = 1e-9;

// Throws Disconnected.
DeltaBoundReport check_delta_bound(const SpectralProfile& profile, const LaplacianBundle& bundle,
                                   const LaplacianBundle& parent_bundle);

// n sin^2(Delta/2). Throws NotCompleteParent.
double lambda2_from_gap(const SpectralProfile& profile, std::size_t n);

double sigma_max(const Eigen::MatrixXd& a);

}  // namespace stconn
