#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "stconn/cayley.hpp"
#include "stconn/graph.hpp"
#include "stconn/qsim.hpp"
#include "stconn/spanprog.hpp"

namespace stconn {

enum class BasisMode { Generic, Fourier, Cayley };
enum class RunMode { Exact, Sampled };

BasisMode parse_basis_mode(const std::string& s);
RunMode parse_run_mode(const std::string& s);
std::string to_string(BasisMode m);
std::string to_string(RunMode m);

// psi_j = A^T |j^>, j = 1..n-1, with |j^> the cyclic Fourier vectors.
struct FourierInitialState {
  std::vector<Eigen::VectorXcd> psi;
  std::vector<double> norms_squared;          // measured
  std::vector<double> formula_norms_squared;  // (1/n) sum_directed c 2(1 - cos(2 pi j (v-u)/n))
  double total = 0.0;                         // sum_j ||psi_j||^2
  double stated_total = 0.0;                  // 2 (1 + 1/(2n)) n d_avg
  double degree_total = 0.0;                  // 2 n d_avg
  Eigen::MatrixXcd reduced_density;           // sum_j psi_j psi_j^* / total
};

FourierInitialState fourier_initial_state(const LabeledMultigraph& g);

// psi_bar_g = A^T |g^> / ||A^T |g^>||, g != 0.
struct CayleyInitialState {
  std::vector<std::size_t> elements;
  std::vector<Eigen::VectorXcd> psi;
  std::vector<double> lambdas;
  std::vector<double> raw_norms_squared;  // ||A^T |g^>||^2
  Eigen::MatrixXcd reduced_density;       // (1/(n-1)) sum_g psi_bar_g psi_bar_g^*
};

CayleyInitialState cayley_initial_state(const CayleyGraphSpec& spec, const LabeledMultigraph& g);

// Pi_{row A} / rank.
Eigen::MatrixXcd generic_initial_density(const SpanProgram& p);

struct Alg1Config {
  double lambda_promise = 0.0;
  std::size_t kappa_promise = 2;
  BasisMode basis = BasisMode::Generic;
  RunMode mode = RunMode::Exact;
  std::uint64_t seed = 0;
  std::optional<CayleyGraphSpec> cayley;  // required in Cayley mode unless detectable
};

struct Alg1Trace {
  bool connected = false;
  std::size_t kappa = 0;
  std::optional<double> lambda2;
  double overlap = 0.0;       // weight of the initial state on the 0-phase space
  double epsilon_lb = 0.0;    // overlap lower bound for disconnected inputs
  double precision = 0.0;     // sqrt(lambda / d_max(G))
  ZeroTestPlan plan;
  double acceptance = 0.0;    // probability that every phase-estimation run reports 0
  double p_low = 0.0;
  double p_high = 0.0;
  AmplitudeDecision amplitude;
  std::size_t queries = 0;
};

// Throws BadPromise, BadParameters, Disconnected (parent not connected).
Alg1Trace algorithm1_decide(const LabeledMultigraph& g, const Input& x, const Alg1Config& config);

struct Alg2Config {
  double epsilon = 0.1;
  RunMode mode = RunMode::Exact;
  std::uint64_t seed = 0;
};

struct Alg2Iteration {
  std::size_t iter = 0;
  double c = 0.0;  // after the update
  double C = 0.0;
  double delta = 0.0;
  double phi = 0.0;
  int decision = 0;
  double p0 = 0.0;
  std::size_t gpe_queries = 0;
  std::size_t amplitude_calls = 0;
  std::size_t votes_for_zero = 0;
  std::size_t repetitions = 0;
};

enum class Alg2Status { Converged, NotConnected, NonTermination };
std::string to_string(Alg2Status s);

struct Alg2Result {
  Alg2Status status = Alg2Status::Converged;
  std::optional<double> estimate;
  double lambda2 = 0.0;  // eigensolver ground truth
  double tau = 0.0;      // Delta(U(P,x)) / pi
  double bound = 0.0;    // (3 pi^2 / 4) eps lambda2
  std::size_t iteration_guard = 0;
  std::vector<Alg2Iteration> log;
  double total_queries = 0.0;
};

// Throws NotCompleteParent, BadParameters.
Alg2Result algorithm2_estimate(const LabeledMultigraph& g, const Input& x, const Alg2Config& config);

// Exact interval update: ({3c, c+2C} on decision 0, {2c+C, 3C} on decision 1) over denominator 3.
struct ExactInterval {
  __int128 c = 0;
  __int128 C = 1;
  unsigned exponent = 0;  // denominator 3^exponent

  double lower() const;
  double upper() const;
  double delta() const;
  double phi() const;
  ExactInterval updated(int decision) const;
};

}  // namespace stconn
