#include "stconn/qsim.hpp"

#include <algorithm>
#include <cmath>
#include <bit>
#include <numbers>

#include "stconn/error.hpp"

namespace stconn {

namespace {

constexpr std::size_t kMaxRegister = std::size_t{1} << 24;

bool is_power_of_two(std::size_t m) { return m >= 2 && (m & (m - 1)) == 0; }

std::size_t register_for(double ratio) {
  std::size_t m = 2;
  while (static_cast<double>(m) < ratio) {
    m <<= 1;
    if (m > kMaxRegister) throw Error(ErrorCode::BadParameters, "phase register would exceed 2^24 outcomes");
  }
  return m;
}

double pairwise_range(const std::vector<double>& v, std::size_t lo, std::size_t hi) {
  if (hi - lo <= 8) {
    double s = 0.0;
    for (std::size_t i = lo; i < hi; ++i) s += v[i];
    return s;
  }
  const std::size_t mid = lo + (hi - lo) / 2;
  return pairwise_range(v, lo, mid) + pairwise_range(v, mid, hi);
}

}  // namespace

double pairwise_sum(const std::vector<double>& values) { return pairwise_range(values, 0, values.size()); }

double pe_kernel(double theta, std::size_t m, std::size_t y) {
  if (!is_power_of_two(m)) throw Error(ErrorCode::BadRegisterSize, "register size must be a power of two >= 2");
  if (y >= m) throw Error(ErrorCode::BadRegisterSize, "outcome index outside the register");
  const double md = static_cast<double>(m);
  const double d = theta - 2.0 * std::numbers::pi * static_cast<double>(y) / md;
  const double den = md * std::sin(d / 2.0);
  if (std::abs(den) < 1e-300) return 1.0;
  const double r = std::sin(md * d / 2.0) / den;
  return std::min(1.0, r * r);
}

double binomial_majority_probability(std::size_t k, double q) {
  if (k % 2 == 0) throw Error(ErrorCode::BadParameters, "majority vote needs an odd count");
  q = std::clamp(q, 0.0, 1.0);
  const std::size_t need = (k + 1) / 2;
  if (q == 0.0) return 0.0;
  if (q == 1.0) return 1.0;
  const double lq = std::log(q);
  const double lp = std::log1p(-q);
  const double lk = std::lgamma(static_cast<double>(k) + 1.0);
  // Sum the smaller tail for accuracy.
  double below = 0.0;
  double above = 0.0;
  for (std::size_t j = 0; j <= k; ++j) {
    const double jd = static_cast<double>(j);
    const double term = std::exp(lk - std::lgamma(jd + 1.0) - std::lgamma(static_cast<double>(k - j) + 1.0) +
                                 jd * lq + static_cast<double>(k - j) * lp);
    (j >= need ? above : below) += term;
  }
  return above <= below ? above : 1.0 - below;
}

std::size_t majority_repetitions(double eps) {
  if (!(eps > 0.0)) throw Error(ErrorCode::BadParameters, "eps must be positive");
  const double target = eps * eps;
  for (std::size_t k = 1;; k += 2) {
    if (1.0 - binomial_majority_probability(k, 0.75) <= target) return k;
    if (k > 100000) throw Error(ErrorCode::BadParameters, "eps too small for the repetition budget");
  }
}

GpePlan plan_gpe(double phi, double eps, double delta) {
  if (!(phi > 0.0 && phi < 1.0)) throw Error(ErrorCode::BadParameters, "phi must lie in (0, 1)");
  if (!(eps > 0.0)) throw Error(ErrorCode::BadParameters, "eps must be positive");
  if (!(delta > 0.0 && delta <= 1.0 - phi + 1e-12)) {
    throw Error(ErrorCode::BadParameters, "delta must lie in (0, 1 - phi]");
  }
  GpePlan plan;
  plan.phi = phi;
  plan.eps = eps;
  plan.delta = delta;
  plan.m = register_for(8.0 / phi);
  plan.repetitions = majority_repetitions(eps);
  plan.window = delta + phi / 2.0;
  plan.register_qubits = static_cast<std::size_t>(std::countr_zero(plan.m));
  return plan;
}

double gpe_trial_zero_probability(const GpePlan& plan, double theta) {
  const double theta_rad = std::numbers::pi * theta;
  const double md = static_cast<double>(plan.m);
  const double limit = plan.window + 1e-12;
  std::vector<double> inside;
  for (std::size_t y = 0; y < plan.m; ++y) {
    double bin = 2.0 * static_cast<double>(y) / md;
    if (bin > 1.0) bin -= 2.0;
    if (std::abs(bin) <= limit) inside.push_back(pe_kernel(theta_rad, plan.m, y));
  }
  return std::clamp(pairwise_sum(inside), 0.0, 1.0);
}

GpeBranch gpe_branch(const GpePlan& plan, double theta) {
  const double p = binomial_majority_probability(plan.repetitions, gpe_trial_zero_probability(plan, theta));
  return GpeBranch{std::sqrt(p), std::sqrt(1.0 - p)};
}

GpeOutcome gpe(const EigenDecomposition& decomp, double phi, double eps, double delta) {
  if (decomp.weights.size() != decomp.phases.size()) {
    throw Error(ErrorCode::BadParameters, "gpe needs a state attached to the decomposition");
  }
  GpeOutcome out;
  out.plan = plan_gpe(phi, eps, delta);
  out.branches.resize(decomp.size());
  std::vector<double> terms(decomp.size(), 0.0);
  for (std::size_t k = 0; k < decomp.size(); ++k) {
    out.branches[k] = gpe_branch(out.plan, decomp.phases[k] / std::numbers::pi);
    terms[k] = decomp.weights[k] * out.branches[k].beta0 * out.branches[k].beta0;
  }
  out.p0 = pairwise_sum(terms);
  return out;
}

ZeroTestPlan plan_zero_test(double precision, double eps) {
  if (!(precision > 0.0) || !(eps > 0.0 && eps < 1.0)) {
    throw Error(ErrorCode::BadParameters, "zero test needs precision > 0 and eps in (0, 1)");
  }
  ZeroTestPlan plan;
  plan.precision = precision;
  plan.eps = eps;
  plan.m = register_for(2.0 * std::numbers::pi / precision);
  plan.repetitions = std::max<std::size_t>(1, static_cast<std::size_t>(std::ceil(std::log(1.0 / eps) / std::log(4.0))));
  return plan;
}

double zero_test_probability(const ZeroTestPlan& plan, double theta) {
  return std::pow(pe_kernel(theta, plan.m, 0), static_cast<double>(plan.repetitions));
}

double zero_test_acceptance(const EigenDecomposition& decomp, const ZeroTestPlan& plan) {
  if (decomp.weights.size() != decomp.phases.size()) {
    throw Error(ErrorCode::BadParameters, "zero test needs a state attached to the decomposition");
  }
  std::vector<double> terms(decomp.size());
  for (std::size_t k = 0; k < decomp.size(); ++k) {
    terms[k] = decomp.weights[k] * zero_test_probability(plan, decomp.phases[k]);
  }
  return pairwise_sum(terms);
}

AmplitudeDecision amplitude_decide(double p_exact, double p0, double p1) {
  if (!(p1 > p0 && p0 >= 0.0)) throw Error(ErrorCode::BadThresholds, "thresholds need p1 > p0 >= 0");
  AmplitudeDecision d;
  d.above = p_exact >= 0.5 * (p0 + p1);
  d.cost = std::sqrt(p1) / (p1 - p0);
  return d;
}

AmplitudeDecision amplitude_decide_sampled(double p_exact, double p0, double p1, CounterRng& rng) {
  AmplitudeDecision d = amplitude_decide(p_exact, p0, p1);
  const double gap = p1 - p0;
  d.samples = static_cast<std::size_t>(std::ceil(32.0 * p1 / (gap * gap)));
  std::size_t hits = 0;
  for (std::size_t i = 0; i < d.samples; ++i) {
    if (rng.uniform() < p_exact) ++hits;
  }
  d.frequency = static_cast<double>(hits) / static_cast<double>(d.samples);
  d.above = d.frequency >= 0.5 * (p0 + p1);
  return d;
}

}  // namespace stconn
