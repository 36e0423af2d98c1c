#pragma once

#include <cstddef>
#include <vector>

#include "stconn/eigenphase.hpp"
#include "stconn/rng.hpp"

namespace stconn {

// |(1/M) sum_k exp(i k (theta - 2 pi y / M))|^2. Throws BadRegisterSize.
double pe_kernel(double theta, std::size_t m, std::size_t y);

// P(Bin(k, q) >= (k + 1) / 2) for odd k.
double binomial_majority_probability(std::size_t k, double q);
// Smallest odd k whose majority vote fails with probability <= eps^2 when each trial succeeds w.p. 3/4.
std::size_t majority_repetitions(double eps);

// Gapped phase estimation; phases in units of pi.
struct GpePlan {
  double phi = 0.0;
  double eps = 0.0;
  double delta = 0.0;
  std::size_t m = 0;            // 2^ceil(log2(8 / phi))
  std::size_t repetitions = 0;  // odd
  double window = 0.0;          // delta + phi / 2
  std::size_t register_qubits = 0;

  std::size_t queries() const noexcept { return m * repetitions; }
};

// Throws BadParameters.
GpePlan plan_gpe(double phi, double eps, double delta);

// Single phase-estimation run landing in the window |bin| <= delta + phi/2.
double gpe_trial_zero_probability(const GpePlan& plan, double theta);

struct GpeBranch {
  double beta0 = 0.0;
  double beta1 = 0.0;
};

GpeBranch gpe_branch(const GpePlan& plan, double theta);

struct GpeOutcome {
  GpePlan plan;
  std::vector<GpeBranch> branches;
  double p0 = 0.0;  // sum_k weight_k beta0_k^2
};

// Uses decomp.phases (radians) and decomp.weights.
GpeOutcome gpe(const EigenDecomposition& decomp, double phi, double eps, double delta);

// Phase estimation at precision theta_min (radians) repeated k times; accept
// "zero" when every run reports y = 0.
struct ZeroTestPlan {
  double precision = 0.0;
  double eps = 0.0;
  std::size_t m = 0;            // 2^ceil(log2(2 pi / precision))
  std::size_t repetitions = 0;  // ceil(log(1/eps) / log 4)

  std::size_t queries() const noexcept { return m * repetitions; }
};

ZeroTestPlan plan_zero_test(double precision, double eps);
double zero_test_probability(const ZeroTestPlan& plan, double theta);
double zero_test_acceptance(const EigenDecomposition& decomp, const ZeroTestPlan& plan);

struct AmplitudeDecision {
  bool above = false;
  double cost = 0.0;          // sqrt(p1) / (p1 - p0)
  std::size_t samples = 0;    // sampled mode only
  double frequency = 0.0;     // sampled mode only
};

// Throws BadThresholds unless p1 > p0 >= 0.
AmplitudeDecision amplitude_decide(double p_exact, double p0, double p1);
AmplitudeDecision amplitude_decide_sampled(double p_exact, double p0, double p1, CounterRng& rng);

// Pairwise summation for order-stable totals.
double pairwise_sum(const std::vector<double>& values);

}  // namespace stconn
