#include "stconn/algorithms.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "stconn/eigenphase.hpp"
#include "stconn/error.hpp"
#include "stconn/linalg.hpp"
#include "stconn/spectral.hpp"

namespace stconn {

namespace {

constexpr double kPi = std::numbers::pi;

double int128_to_double(__int128 v) { return static_cast<double>(v); }

double pow3(unsigned k) { return std::pow(3.0, static_cast<double>(k)); }

Eigen::MatrixXcd density_from(const std::vector<Eigen::VectorXcd>& states, double scale, Eigen::Index dim) {
  Eigen::MatrixXcd rho = Eigen::MatrixXcd::Zero(dim, dim);
  for (const auto& psi : states) rho.noalias() += psi * psi.adjoint();
  return rho * scale;
}

SpanProgram parent_program(const LabeledMultigraph& g) {
  if (g.vertex_count() < 2) throw Error(ErrorCode::BadInput, "graph needs at least two vertices");
  return build_stconn_program(g, 0, 1);
}

}  // namespace

BasisMode parse_basis_mode(const std::string& s) {
  if (s == "generic") return BasisMode::Generic;
  if (s == "fourier") return BasisMode::Fourier;
  if (s == "cayley") return BasisMode::Cayley;
  throw Error(ErrorCode::BadParameters, "unknown basis mode '" + s + "'");
}

RunMode parse_run_mode(const std::string& s) {
  if (s == "exact") return RunMode::Exact;
  if (s == "sampled") return RunMode::Sampled;
  throw Error(ErrorCode::BadParameters, "unknown run mode '" + s + "'");
}

std::string to_string(BasisMode m) {
  switch (m) {
    case BasisMode::Generic: return "generic";
    case BasisMode::Fourier: return "fourier";
    case BasisMode::Cayley: return "cayley";
  }
  return "generic";
}

std::string to_string(RunMode m) { return m == RunMode::Exact ? "exact" : "sampled"; }

std::string to_string(Alg2Status s) {
  switch (s) {
    case Alg2Status::Converged: return "converged";
    case Alg2Status::NotConnected: return "not_connected";
    case Alg2Status::NonTermination: return "non_termination";
  }
  return "converged";
}

FourierInitialState fourier_initial_state(const LabeledMultigraph& g) {
  const SpanProgram p = parent_program(g);
  const std::size_t n = g.vertex_count();
  const double nd = static_cast<double>(n);
  const Eigen::MatrixXcd at = p.a.transpose().cast<std::complex<double>>();
  FourierInitialState st;
  for (std::size_t j = 1; j < n; ++j) {
    Eigen::VectorXcd hat(static_cast<Eigen::Index>(n));
    for (std::size_t u = 0; u < n; ++u) {
      hat(static_cast<Eigen::Index>(u)) = std::polar(1.0 / std::sqrt(nd), 2.0 * kPi * static_cast<double>((j * u) % n) / nd);
    }
    Eigen::VectorXcd psi = at * hat;
    st.norms_squared.push_back(psi.squaredNorm());
    double formula = 0.0;
    for (const Edge& e : g.edges()) {
      const double diff = static_cast<double>(e.v) - static_cast<double>(e.u);
      // Both orientations contribute the same term.
      formula += 2.0 * e.weight * 2.0 * (1.0 - std::cos(2.0 * kPi * static_cast<double>(j) * diff / nd));
    }
    st.formula_norms_squared.push_back(formula / nd);
    st.psi.push_back(std::move(psi));
  }
  st.total = pairwise_sum(st.norms_squared);
  const double d_avg = laplacian(g).d_avg;
  st.stated_total = 2.0 * (1.0 + 1.0 / (2.0 * nd)) * nd * d_avg;
  st.degree_total = 2.0 * nd * d_avg;
  if (!(st.total > 0.0)) throw Error(ErrorCode::BadInput, "graph has no edges");
  st.reduced_density = density_from(st.psi, 1.0 / st.total, static_cast<Eigen::Index>(p.h_dim));
  return st;
}

CayleyInitialState cayley_initial_state(const CayleyGraphSpec& spec, const LabeledMultigraph& g) {
  validate_cayley_spec(spec);
  const std::size_t n = spec.order();
  if (g.vertex_count() != n) throw Error(ErrorCode::BadInput, "group order does not match the vertex count");
  const SpanProgram p = parent_program(g);
  const Eigen::MatrixXcd at = p.a.transpose().cast<std::complex<double>>();
  const std::vector<double> spectrum = cayley_spectrum(spec);
  CayleyInitialState st;
  for (std::size_t id = 1; id < n; ++id) {
    Eigen::VectorXcd psi = at * fourier_vector(spec, id);
    const double norm2 = psi.squaredNorm();
    if (!(norm2 > 1e-12)) throw Error(ErrorCode::BadInput, "Cayley parent must be connected");
    st.elements.push_back(id);
    st.lambdas.push_back(spectrum[id]);
    st.raw_norms_squared.push_back(norm2);
    st.psi.push_back(psi / std::sqrt(norm2));
  }
  st.reduced_density = density_from(st.psi, 1.0 / static_cast<double>(n - 1), static_cast<Eigen::Index>(p.h_dim));
  return st;
}

Eigen::MatrixXcd generic_initial_density(const SpanProgram& p) {
  const Eigen::MatrixXd at = p.a.transpose();
  const Eigen::MatrixXd proj = linalg::range_projector(at);
  const std::size_t rank = linalg::numerical_rank(at);
  if (rank == 0) throw Error(ErrorCode::BadInput, "span program has an empty row space");
  return proj.cast<std::complex<double>>() / static_cast<double>(rank);
}

Alg1Trace algorithm1_decide(const LabeledMultigraph& g, const Input& x, const Alg1Config& config) {
  if (!(config.lambda_promise > 0.0)) throw Error(ErrorCode::BadParameters, "lambda must be positive");
  if (config.kappa_promise < 2) throw Error(ErrorCode::BadParameters, "kappa must be at least 2");
  const std::size_t n = g.vertex_count();
  if (n < 2) throw Error(ErrorCode::BadInput, "graph needs at least two vertices");
  if (config.kappa_promise > n) throw Error(ErrorCode::BadParameters, "kappa exceeds the vertex count");
  const LaplacianBundle parent = laplacian(g);
  if (parent.kappa != 1) throw Error(ErrorCode::Disconnected, "parent graph must be connected");
  const SpanProgram p = parent_program(g);
  p.check_input(x);

  Alg1Trace tr;
  const SubgraphView view = subgraph(g, x);
  tr.kappa = view.component_count();
  tr.connected = view.is_connected();
  if (tr.connected) {
    tr.lambda2 = laplacian(view).lambda2();
    if (*tr.lambda2 < config.lambda_promise * (1.0 - 1e-9)) {
      throw Error(ErrorCode::BadPromise, "lambda2(G(x)) is below the promised lambda");
    }
  } else if (tr.kappa < config.kappa_promise) {
    throw Error(ErrorCode::BadPromise, "G(x) has fewer components than the promised kappa");
  }

  const SpanUnitary su = build_unitary(p, x);
  EigenDecomposition decomp = decompose_orthogonal(su.u);
  const double nd = static_cast<double>(n);
  const double kp = static_cast<double>(config.kappa_promise);
  switch (config.basis) {
    case BasisMode::Generic:
      attach_density(decomp, generic_initial_density(p));
      tr.epsilon_lb = (kp - 1.0) / (nd - 1.0);
      break;
    case BasisMode::Fourier:
      attach_density(decomp, fourier_initial_state(g).reduced_density);
      tr.epsilon_lb = (kp - 1.0) * parent.lambda2() / ((1.0 + 1.0 / (2.0 * nd)) * nd * parent.d_avg);
      break;
    case BasisMode::Cayley: {
      std::optional<CayleyGraphSpec> spec = config.cayley ? config.cayley : detect_cayley(g);
      if (!spec) throw Error(ErrorCode::BadParameters, "cayley basis needs a Cayley parent");
      if (cayley_graph(*spec) != g) {
        // Labels may differ; compare the edge multisets.
        const LabeledMultigraph cg = cayley_graph(*spec);
        std::vector<std::pair<Vertex, Vertex>> a, b;
        for (const Edge& e : g.edges()) a.emplace_back(std::min(e.u, e.v), std::max(e.u, e.v));
        for (const Edge& e : cg.edges()) b.emplace_back(e.u, e.v);
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        if (a != b) throw Error(ErrorCode::BadParameters, "parent graph is not the given Cayley graph");
      }
      attach_density(decomp, cayley_initial_state(*spec, g).reduced_density);
      tr.epsilon_lb = (kp - 1.0) / (nd - 1.0);
      break;
    }
  }

  std::vector<double> zero_weights;
  for (std::size_t k = 0; k < decomp.size(); ++k) {
    if (decomp.phases[k] == 0.0) zero_weights.push_back(decomp.weights[k]);
  }
  tr.overlap = pairwise_sum(zero_weights);

  tr.precision = std::sqrt(config.lambda_promise / parent.d_max);
  tr.p_low = tr.epsilon_lb / 2.0;
  tr.p_high = tr.epsilon_lb;
  tr.plan = plan_zero_test(tr.precision, tr.p_low);
  tr.acceptance = zero_test_acceptance(decomp, tr.plan);
  if (config.mode == RunMode::Exact) {
    tr.amplitude = amplitude_decide(tr.acceptance, tr.p_low, tr.p_high);
  } else {
    CounterRng rng(config.seed);
    tr.amplitude = amplitude_decide_sampled(tr.acceptance, tr.p_low, tr.p_high, rng);
  }
  tr.queries = tr.plan.queries();
  // High acceptance means weight on the zero phase, i.e. disconnected.
  tr.connected = !tr.amplitude.above;
  return tr;
}

double ExactInterval::lower() const { return int128_to_double(c) / pow3(exponent); }
double ExactInterval::upper() const { return int128_to_double(C) / pow3(exponent); }
double ExactInterval::delta() const { return int128_to_double(2 * c + C) / pow3(exponent + 1); }
double ExactInterval::phi() const { return int128_to_double(C - c) / pow3(exponent + 1); }

ExactInterval ExactInterval::updated(int decision) const {
  ExactInterval next;
  next.exponent = exponent + 1;
  if (decision == 0) {
    next.c = 3 * c;
    next.C = c + 2 * C;
  } else {
    next.c = 2 * c + C;
    next.C = 3 * C;
  }
  return next;
}

Alg2Result algorithm2_estimate(const LabeledMultigraph& g, const Input& x, const Alg2Config& config) {
  if (!g.is_unit_complete()) throw Error(ErrorCode::NotCompleteParent, "estimation needs a unit-weight complete parent");
  if (!(config.epsilon > 0.0 && config.epsilon < 1.0)) throw Error(ErrorCode::BadParameters, "epsilon must lie in (0, 1)");
  const std::size_t n = g.vertex_count();
  const double nd = static_cast<double>(n);
  const SpanProgram p = parent_program(g);
  p.check_input(x);

  Alg2Result res;
  const SubgraphView view = subgraph(g, x);
  res.lambda2 = laplacian(view).lambda2();
  const bool connected = view.is_connected();
  if (!connected) res.lambda2 = 0.0;
  const SpanUnitary su = build_unitary(p, x);
  SpectralProfile profile = spectral_profile(su);
  res.tau = profile.gap / kPi;
  res.bound = 0.75 * kPi * kPi * config.epsilon * res.lambda2;

  EigenDecomposition& decomp = profile.decomposition;
  attach_density(decomp, cayley_initial_state(complete_cayley_spec(n), g).reduced_density);

  const double tau_eff = connected ? res.tau : 1.0 / (nd * nd);
  const double raw_guard = 10.0 * std::ceil(std::log(2.0 / (tau_eff * config.epsilon)) / std::log(1.5));
  res.iteration_guard = static_cast<std::size_t>(std::clamp(raw_guard, 1.0, 75.0));

  const double eps_gpe = 1.0 / std::sqrt(2.0 * nd);
  const double p_low = 1.0 / (2.0 * nd);
  const double p_high = 1.0 / nd;
  std::size_t reps = 1;
  if (config.mode == RunMode::Sampled) {
    reps = static_cast<std::size_t>(std::ceil(4.0 * std::log(nd / config.epsilon)));
    if (reps % 2 == 0) ++reps;
  }
  const CounterRng root(config.seed);

  ExactInterval interval;
  res.status = Alg2Status::NonTermination;
  for (std::size_t iter = 1; iter <= res.iteration_guard; ++iter) {
    Alg2Iteration it;
    it.iter = iter;
    it.delta = interval.delta();
    it.phi = interval.phi();
    const GpeOutcome out = gpe(decomp, it.phi, eps_gpe, it.delta);
    it.p0 = out.p0;
    it.gpe_queries = out.plan.queries();
    it.repetitions = reps;
    double cost = 0.0;
    if (config.mode == RunMode::Exact) {
      const AmplitudeDecision d = amplitude_decide(out.p0, p_low, p_high);
      it.votes_for_zero = d.above ? 1 : 0;
      cost = d.cost;
    } else {
      CounterRng stream = root.split(iter);
      for (std::size_t r = 0; r < reps; ++r) {
        CounterRng sub = stream.split(r);
        const AmplitudeDecision d = amplitude_decide_sampled(out.p0, p_low, p_high, sub);
        if (d.above) ++it.votes_for_zero;
        cost = d.cost;
      }
    }
    it.decision = 2 * it.votes_for_zero > reps ? 0 : 1;
    it.amplitude_calls = reps;
    res.total_queries += static_cast<double>(it.gpe_queries) * cost * static_cast<double>(reps);
    interval = interval.updated(it.decision);
    it.c = interval.lower();
    it.C = interval.upper();
    res.log.push_back(it);

    if (interval.c == 0 && it.C < 1.0 / (nd * nd)) {
      res.status = Alg2Status::NotConnected;
      break;
    }
    if (interval.c > 0 && (it.C - it.c) <= 2.0 * config.epsilon * it.c) {
      res.status = Alg2Status::Converged;
      res.estimate = nd * std::pow(std::sin(kPi * (it.C + it.c) / 4.0), 2);
      break;
    }
  }
  return res;
}

}  // namespace stconn
