#include "cli.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "stconn/algorithms.hpp"
#include "stconn/complexity.hpp"
#include "stconn/electric.hpp"
#include "stconn/error.hpp"
#include "stconn/graph_io.hpp"
#include "stconn/series.hpp"
#include "stconn/spanprog.hpp"
#include "stconn/spectral.hpp"

namespace stconn::cli {

namespace {

constexpr std::size_t kMaxSweepVariables = 20;

Json value_json(const TwoTerminalValue& v) {
  if (v.is_infinite()) return "infinite";
  return v.value();
}

template <class T>
Json optional_json(const std::optional<T>& v) {
  if (!v) return nullptr;
  return *v;
}

std::string csv_number(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string csv_cell(const Json& v) {
  if (v.is_null()) return "";
  if (v.is_boolean()) return v.get<bool>() ? "1" : "0";
  if (v.is_number_integer() || v.is_number_unsigned()) return v.dump();
  if (v.is_number()) return csv_number(v.get<double>());
  if (v.is_string()) {
    const std::string s = v.get<std::string>();
    return s == "infinite" ? "inf" : s;
  }
  return v.dump();
}

// Flat objects become one header plus one row per record.
std::string to_csv(const Json& rows) {
  std::ostringstream out;
  if (rows.empty()) return "";
  bool first = true;
  for (const auto& [key, _] : rows.front().items()) {
    out << (first ? "" : ",") << key;
    first = false;
  }
  out << '\n';
  for (const Json& row : rows) {
    first = true;
    for (const auto& [_, v] : row.items()) {
      out << (first ? "" : ",") << csv_cell(v);
      first = false;
    }
    out << '\n';
  }
  return out.str();
}

std::string render(const Json& j, const std::string& format) {
  if (format == "csv") {
    if (j.is_array()) return to_csv(j);
    Json flat = Json::object();
    for (const auto& [k, v] : j.items()) {
      if (!v.is_structured()) flat[k] = v;
    }
    return to_csv(Json::array({flat}));
  }
  return j.dump(2) + "\n";
}

Json matrix_json(const Eigen::MatrixXd& m) {
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
    rows.push_back(row);
  }
  return rows;
}

Json vector_json(const std::vector<double>& v) { return Json(v); }

Json vector_json(const Eigen::VectorXd& v) { return Json(std::vector<double>(v.data(), v.data() + v.size())); }

LabeledMultigraph load(const RunConfig& cfg) {
  if (cfg.graph_path.empty()) throw Error(ErrorCode::BadInput, "--graph is required");
  return load_graph_file(cfg.graph_path);
}

Input input_of(const RunConfig& cfg, const LabeledMultigraph& g) {
  Input x = cfg.x ? parse_input(*cfg.x) : Input(g.variable_count(), 1);
  if (x.size() != g.variable_count()) {
    throw Error(ErrorCode::LengthMismatch, "bitstring has " + std::to_string(x.size()) + " bits, graph has " +
                                               std::to_string(g.variable_count()) + " variables");
  }
  return x;
}

std::pair<Vertex, Vertex> terminals(const RunConfig& cfg, const LabeledMultigraph& g) {
  const std::size_t n = g.vertex_count();
  if (n < 2) throw Error(ErrorCode::BadInput, "graph needs at least two vertices");
  const Vertex s = cfg.s.value_or(0);
  const Vertex t = cfg.t.value_or(n - 1);
  if (s >= n || t >= n) throw Error(ErrorCode::BadEndpoint, "terminal out of range");
  if (s == t) throw Error(ErrorCode::SameVertex, "s and t must differ");
  return {s, t};
}

RunMode run_mode(const RunConfig& cfg) {
  const RunMode m = parse_run_mode(cfg.mode);
  if (m == RunMode::Sampled && !cfg.seed) throw Error(ErrorCode::BadParameters, "--seed is required in sampled mode");
  return m;
}

// Tag mismatch counts as an infinite residual.
std::optional<double> residual(const TwoTerminalValue& measured, const TwoTerminalValue& expected) {
  if (measured.is_infinite() != expected.is_infinite()) return std::nullopt;
  if (measured.is_infinite()) return 0.0;
  return std::abs(measured.value() - expected.value());
}

Json residual_json(const std::optional<double>& r) {
  if (!r) return "infinite";
  return *r;
}

bool within(const std::optional<double>& r, double tol) { return r && *r <= tol; }

TwoTerminalValue scaled(const TwoTerminalValue& v, double f) {
  return v.is_infinite() ? v : TwoTerminalValue::finite(v.value() * f);
}

Json components_json(const SubgraphView& view) {
  Json out = Json::array();
  for (const auto& block : components(view).blocks) out.push_back(block);
  return out;
}

struct SweepRow {
  Json json;
  bool ok = true;
};

SweepRow sweep_row(const LabeledMultigraph& g, const SpanProgram& p, Vertex s, Vertex t, const Input& x, double tol) {
  const SubgraphView view = subgraph(g, x);
  const TwoTerminalValue r = effective_resistance(view, s, t);
  const TwoTerminalValue c = effective_capacitance(view, s, t);
  const TwoTerminalValue wp = positive_witness(p, x).size;
  const TwoTerminalValue wm = negative_witness(p, x).size;
  const auto res_plus = residual(wp, scaled(r, 0.5));
  const auto res_minus = residual(wm, scaled(c, 2.0));
  SweepRow row;
  row.json["x"] = format_input(x);
  row.json["kappa"] = view.component_count();
  row.json["st_connected"] = view.connected(s, t);
  row.json["R"] = value_json(r);
  row.json["C"] = value_json(c);
  row.json["w_plus"] = value_json(wp);
  row.json["w_minus"] = value_json(wm);
  row.json["residual_plus"] = residual_json(res_plus);
  row.json["residual_minus"] = residual_json(res_minus);
  row.ok = within(res_plus, tol) && within(res_minus, tol);
  return row;
}

std::optional<CayleyGraphSpec> cayley_from_flags(const RunConfig& cfg) {
  if (cfg.group.empty() && cfg.gens.empty()) return std::nullopt;
  if (cfg.group.empty() || cfg.gens.empty()) throw Error(ErrorCode::BadParameters, "--group and --gens go together");
  auto split = [](const std::string& s, char sep) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, sep)) out.push_back(item);
    return out;
  };
  auto to_size = [](const std::string& s) {
    try {
      std::size_t pos = 0;
      const unsigned long long v = std::stoull(s, &pos);
      if (pos != s.size()) throw std::invalid_argument(s);
      return static_cast<std::size_t>(v);
    } catch (const std::exception&) {
      throw Error(ErrorCode::BadParameters, "bad integer '" + s + "' in group description");
    }
  };
  CayleyGraphSpec spec;
  for (const auto& f : split(cfg.group, ',')) spec.factors.push_back(to_size(f));
  for (const auto& g : split(cfg.gens, ';')) {
    GroupElement e;
    for (const auto& c : split(g, ',')) e.push_back(to_size(c));
    spec.generators.push_back(e);
  }
  validate_cayley_spec(spec);
  return spec;
}

Json plan_json(const ZeroTestPlan& plan) {
  Json j;
  j["precision"] = plan.precision;
  j["eps"] = plan.eps;
  j["m"] = plan.m;
  j["repetitions"] = plan.repetitions;
  j["queries"] = plan.queries();
  return j;
}

Json delta_bound_json(const DeltaBoundReport& d) {
  Json j;
  j["gap"] = d.gap;
  j["bound"] = d.bound;
  j["slack"] = d.slack;
  j["holds"] = d.holds;
  j["corrected_bound"] = d.corrected_bound;
  j["corrected_slack"] = d.corrected_slack;
  j["corrected_holds"] = d.corrected_holds;
  return j;
}

Json szegedy_json(const SzegedyCheck& c) {
  Json j;
  j["measured"] = vector_json(c.measured);
  j["predicted"] = vector_json(c.predicted);
  j["counts_match"] = c.counts_match;
  j["max_deviation"] = c.max_deviation;
  return j;
}

// Row-major [A | tau], one matrix row per line.
void write_program_csv(const SpanProgram& p, const std::string& path) {
  std::ofstream f(path);
  if (!f) throw Error(ErrorCode::BadInput, "cannot write '" + path + "'");
  for (Eigen::Index i = 0; i < p.a.rows(); ++i) {
    for (Eigen::Index j = 0; j < p.a.cols(); ++j) f << csv_number(p.a(i, j)) << ',';
    f << csv_number(p.target(i)) << '\n';
  }
}

}  // namespace

CommandResult cmd_analyze(const RunConfig& cfg) {
  const LabeledMultigraph g = load(cfg);
  const Input x = input_of(cfg, g);
  const auto [s, t] = terminals(cfg, g);
  const SubgraphView view = subgraph(g, x);
  const LaplacianBundle lap = laplacian(view);
  const SpanProgram p = build_stconn_program(g, s, t);
  const WitnessReport w = witness_report(p, x);
  const TwoTerminalValue r = effective_resistance(view, s, t);
  const TwoTerminalValue c = effective_capacitance(view, s, t);
  const auto res_plus = residual(w.w_plus, scaled(r, 0.5));
  const auto res_minus = residual(w.w_minus, scaled(c, 2.0));

  Json j;
  j["n"] = g.vertex_count();
  j["edges"] = g.edge_count();
  j["x"] = format_input(x);
  j["s"] = s;
  j["t"] = t;
  j["kappa"] = view.component_count();
  j["components"] = components_json(view);
  j["lambda2"] = lap.lambda2();
  j["d_max"] = lap.d_max;
  j["d_avg"] = lap.d_avg;
  j["R"] = value_json(r);
  j["C"] = value_json(c);
  j["w_plus"] = value_json(w.w_plus);
  j["w_minus"] = value_json(w.w_minus);
  j["e_plus"] = optional_json(w.e_plus);
  j["w_tilde_plus"] = optional_json(w.w_tilde_plus);
  j["residual_plus"] = residual_json(res_plus);
  j["residual_minus"] = residual_json(res_minus);
  const bool ok = within(res_plus, cfg.tol) && within(res_minus, cfg.tol);
  j["identities_hold"] = ok;
  if (!cfg.dump_program.empty()) write_program_csv(p, cfg.dump_program);
  return {render(j, cfg.format), ok ? kOk : kIdentityViolation};
}

CommandResult cmd_sweep(const RunConfig& cfg) {
  const LabeledMultigraph g = load(cfg);
  const std::size_t nv = g.variable_count();
  if (nv > kMaxSweepVariables) {
    throw Error(ErrorCode::TooLarge, "sweep limited to " + std::to_string(kMaxSweepVariables) + " variables");
  }
  const auto [s, t] = terminals(cfg, g);
  const SpanProgram p = build_stconn_program(g, s, t);
  const std::size_t total = std::size_t{1} << nv;
  std::vector<SweepRow> rows(total);
  std::vector<std::string> failures(total);
  std::size_t workers = cfg.threads ? cfg.threads : std::max(1u, std::thread::hardware_concurrency());
  workers = std::min(workers, total);
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < total; i = next++) {
      try {
        rows[i] = sweep_row(g, p, s, t, input_from_index(i, nv), cfg.tol);
      } catch (const std::exception& e) {
        failures[i] = e.what();
      }
    }
  };
  std::vector<std::thread> pool;
  for (std::size_t k = 0; k < workers; ++k) pool.emplace_back(work);
  for (auto& th : pool) th.join();
  for (const auto& f : failures) {
    if (!f.empty()) throw std::runtime_error(f);
  }

  Json out = Json::array();
  bool ok = true;
  for (auto& row : rows) {
    ok = ok && row.ok;
    out.push_back(std::move(row.json));
  }
  return {cfg.format == "json" ? out.dump(2) + "\n" : to_csv(out), ok ? kOk : kIdentityViolation};
}

CommandResult cmd_spectrum(const RunConfig& cfg) {
  const LabeledMultigraph g = load(cfg);
  const Input x = input_of(cfg, g);
  const auto [s, t] = terminals(cfg, g);
  const SpanProgram p = build_stconn_program(g, s, t);
  const SpanUnitary su = build_unitary(p, x);
  const SpectralProfile prof = spectral_profile(su);
  const SubgraphView view = subgraph(g, x);
  const LaplacianBundle lap = laplacian(view);

  Json j;
  j["n"] = g.vertex_count();
  j["x"] = format_input(x);
  j["h_dim"] = p.h_dim;
  j["kappa"] = view.component_count();
  j["phases"] = vector_json(prof.phases);
  j["gap"] = prof.gap;
  j["gap_negated"] = prof.gap_negated;
  j["fixed_row_dim"] = prof.fixed_row_dim;
  j["discriminant_singular_values"] = vector_json(prof.discriminant_svals);
  j["lambda2"] = lap.lambda2();
  if (view.is_connected()) {
    j["delta_bound"] = delta_bound_json(check_delta_bound(prof, lap, laplacian(g)));
  } else {
    j["delta_bound"] = nullptr;
  }
  j["lambda2_from_gap"] = prof.complete_parent ? Json(lambda2_from_gap(prof, g.vertex_count())) : Json(nullptr);
  j["szegedy"] = szegedy_json(szegedy_check(su.proj_kernel, su.proj_available));
  j["szegedy_negated"] = szegedy_json(szegedy_check(su.proj_row, su.proj_available));
  j["row_gap_space_residual"] = optional_json(row_vector_in_gap_space_residual(su, prof));
  if (cfg.dump_matrix) {
    j["a"] = matrix_json(p.a);
    j["tau"] = vector_json(Eigen::VectorXd(p.target));
    j["unitary"] = matrix_json(su.u);
  }
  if (cfg.format == "csv") {
    Json rows = Json::array();
    const std::size_t count = std::max<std::size_t>(prof.phases.size(), static_cast<std::size_t>(prof.discriminant_svals.size()));
    for (std::size_t i = 0; i < count; ++i) {
      Json row;
      row["index"] = i;
      row["phase"] = i < prof.phases.size() ? Json(prof.phases[i]) : Json(nullptr);
      row["discriminant_sv"] = i < static_cast<std::size_t>(prof.discriminant_svals.size())
                                   ? Json(prof.discriminant_svals(static_cast<Eigen::Index>(i)))
                                   : Json(nullptr);
      rows.push_back(row);
    }
    return {to_csv(rows), kOk};
  }
  return {render(j, cfg.format), kOk};
}

CommandResult cmd_alg1(const RunConfig& cfg) {
  const LabeledMultigraph g = load(cfg);
  const Input x = input_of(cfg, g);
  if (!cfg.lambda) throw Error(ErrorCode::BadParameters, "--lambda is required");
  Alg1Config ac;
  ac.lambda_promise = *cfg.lambda;
  ac.kappa_promise = cfg.kappa;
  ac.basis = parse_basis_mode(cfg.basis);
  ac.mode = run_mode(cfg);
  ac.seed = cfg.seed.value_or(0);
  ac.cayley = cayley_from_flags(cfg);
  const Alg1Trace tr = algorithm1_decide(g, x, ac);
  const bool truth = tr.kappa == 1;

  Json j;
  j["x"] = format_input(x);
  j["basis"] = to_string(ac.basis);
  j["mode"] = to_string(ac.mode);
  j["decision"] = tr.connected ? "connected" : "disconnected";
  j["ground_truth"] = truth ? "connected" : "disconnected";
  j["agrees"] = tr.connected == truth;
  j["kappa"] = tr.kappa;
  j["lambda2"] = optional_json(tr.lambda2);
  j["overlap"] = tr.overlap;
  j["epsilon_lb"] = tr.epsilon_lb;
  j["acceptance"] = tr.acceptance;
  j["p_low"] = tr.p_low;
  j["p_high"] = tr.p_high;
  j["plan"] = plan_json(tr.plan);
  j["amplitude"] = {{"above", tr.amplitude.above},
                    {"cost", tr.amplitude.cost},
                    {"samples", tr.amplitude.samples},
                    {"frequency", tr.amplitude.frequency}};
  j["queries"] = tr.queries;
  const bool violation = ac.mode == RunMode::Exact && tr.connected != truth;
  return {render(j, cfg.format), violation ? kIdentityViolation : kOk};
}

CommandResult cmd_alg2(const RunConfig& cfg) {
  const LabeledMultigraph g = load(cfg);
  const Input x = input_of(cfg, g);
  Alg2Config ac;
  ac.epsilon = cfg.epsilon;
  ac.mode = run_mode(cfg);
  ac.seed = cfg.seed.value_or(0);
  const Alg2Result r = algorithm2_estimate(g, x, ac);

  Json trace = Json::array();
  for (const Alg2Iteration& it : r.log) {
    Json e;
    e["iter"] = it.iter;
    e["c"] = it.c;
    e["C"] = it.C;
    e["delta"] = it.delta;
    e["phi"] = it.phi;
    e["decision"] = it.decision;
    e["gpe_queries"] = it.gpe_queries;
    e["p0"] = it.p0;
    e["votes_for_zero"] = it.votes_for_zero;
    e["repetitions"] = it.repetitions;
    trace.push_back(e);
  }
  Json j;
  j["x"] = format_input(x);
  j["mode"] = to_string(ac.mode);
  j["epsilon"] = ac.epsilon;
  j["status"] = to_string(r.status);
  j["estimate"] = optional_json(r.estimate);
  j["lambda2"] = r.lambda2;
  j["tau"] = r.tau;
  j["bound"] = r.bound;
  std::optional<double> err;
  if (r.estimate) err = std::abs(*r.estimate - r.lambda2);
  j["abs_error"] = optional_json(err);
  j["within_bound"] = err ? Json(*err <= r.bound + 1e-12) : Json(nullptr);
  j["iteration_guard"] = r.iteration_guard;
  j["total_queries"] = r.total_queries;
  j["trace"] = trace;

  int code = kOk;
  if (r.status == Alg2Status::NonTermination) code = kIdentityViolation;
  if (ac.mode == RunMode::Exact && err && *err > r.bound + 1e-12) code = kIdentityViolation;
  if (cfg.format == "csv") return {to_csv(trace), code};
  return {render(j, cfg.format), code};
}

CommandResult cmd_series(const RunConfig& cfg) {
  const LabeledMultigraph g = load(cfg);
  const Input x = input_of(cfg, g);
  const SeriesGraph sg = build_series_graph(g);
  const SeriesWitnessReport r = series_witness_bounds(sg, g, x);

  Json j;
  j["x"] = format_input(x);
  j["series_vertices"] = sg.graph.vertex_count();
  j["series_edges"] = sg.graph.edge_count();
  j["copies"] = sg.copies.size();
  j["s"] = sg.s;
  j["t"] = sg.t;
  j["g_connected"] = r.g_connected;
  j["st_connected"] = r.st_connected;
  j["kappa"] = r.kappa;
  j["w_plus"] = value_json(r.w_plus);
  j["w_minus"] = value_json(r.w_minus);
  j["R_series"] = optional_json(r.r_series);
  j["R_avg"] = optional_json(r.r_avg);
  j["pair_sum"] = optional_json(r.pair_sum);
  j["kirchhoff_literal_residual"] = optional_json(r.kirchhoff_literal_residual);
  j["pair_sum_residual"] = optional_json(r.pair_sum_residual);
  j["C_series"] = optional_json(r.c_series);
  j["capacitance_bound"] = optional_json(r.capacitance_bound);
  j["cap_sum_residual"] = optional_json(r.cap_sum_residual);
  j["general_ratio"] = optional_json(r.general_ratio);
  const bool ok = r.checks_pass(cfg.tol);
  j["checks_pass"] = ok;
  return {render(j, cfg.format), ok ? kOk : kIdentityViolation};
}

CommandResult cmd_bounds(const RunConfig& cfg) {
  if (cfg.kind.empty()) throw Error(ErrorCode::BadParameters, "--kind is required");
  ComplexityInputs in;
  for (const auto& [k, v] : cfg.bound_params) in[k] = v;
  const ComplexityReport r = complexity_report(cfg.kind, in);
  Json j;
  j["tag"] = r.tag;
  j["formula"] = r.formula;
  j["value"] = r.value;
  j["unit_multipliers"] = Json(r.unit_multipliers);
  j["parameters"] = Json(r.parameters);
  j["extra"] = Json(r.extra);
  return {render(j, cfg.format), kOk};
}

CommandResult cmd_canonicalize(const RunConfig& cfg) {
  const LabeledMultigraph g = load(cfg);
  std::string text = canonical_graph_json(g);
  if (text.empty() || text.back() != '\n') text.push_back('\n');
  return {text, kOk};
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Span-program st-connectivity toolkit"};
  app.require_subcommand(1);
  RunConfig cfg;
  std::string x_opt;
  std::size_t s_opt = 0;
  std::size_t t_opt = 0;
  std::uint64_t seed_opt = 0;
  double lambda_opt = 0.0;
  std::map<std::string, double> bound_values;

  struct Sub {
    CLI::App* app;
    CLI::Option* x = nullptr;
    CLI::Option* s = nullptr;
    CLI::Option* t = nullptr;
    CLI::Option* seed = nullptr;
    CLI::Option* lambda = nullptr;
  };
  std::vector<Sub> subs;

  auto add = [&](const std::string& name, const std::string& help, bool terminals_flag, bool x_flag) {
    Sub sub{app.add_subcommand(name, help)};
    sub.app->add_option("--graph", cfg.graph_path, "Graph JSON file")->required();
    if (x_flag) sub.x = sub.app->add_option("--x", x_opt, "Input bitstring (default all ones)");
    if (terminals_flag) {
      sub.s = sub.app->add_option("--s", s_opt, "Source vertex (default 0)");
      sub.t = sub.app->add_option("--t", t_opt, "Sink vertex (default n-1)");
    }
    sub.app->add_option("--format", cfg.format, "Output format (sweep defaults to csv)")->check(CLI::IsMember({"json", "csv"}));
    sub.app->add_option("--tol", cfg.tol, "Identity tolerance");
    subs.push_back(sub);
    return sub.app;
  };

  CLI::App* analyze = add("analyze", "Electric quantities and witness sizes for one input", true, true);
  analyze->add_option("--dump-program", cfg.dump_program, "Write [A | tau] as CSV to this path");
  CLI::App* sweep = add("sweep", "All 2^N inputs with identity residuals", true, false);
  sweep->add_option("--threads", cfg.threads, "Worker threads (0: all cores)");
  CLI::App* spectrum = add("spectrum", "Eigenphases of U(P,x) and spectral checks", true, true);
  spectrum->add_flag("--matrix", cfg.dump_matrix, "Include A, tau and U in the JSON output");
  CLI::App* alg1 = add("alg1", "Spectral connectivity decision", false, true);
  alg1->add_option("--mode", cfg.mode)->check(CLI::IsMember({"exact", "sampled"}));
  subs.back().seed = alg1->add_option("--seed", seed_opt, "RNG seed");
  subs.back().lambda = alg1->add_option("--lambda", lambda_opt, "Promised lower bound on lambda2")->required();
  alg1->add_option("--kappa", cfg.kappa, "Promised component count for disconnected inputs");
  alg1->add_option("--basis", cfg.basis)->check(CLI::IsMember({"generic", "fourier", "cayley"}));
  alg1->add_option("--group", cfg.group, "Cayley group factors, e.g. 2,2,2");
  alg1->add_option("--gens", cfg.gens, "Cayley generators, e.g. 1,0,0;0,1,0;0,0,1");
  CLI::App* alg2 = add("alg2", "Algebraic connectivity estimation on a complete parent", false, true);
  alg2->add_option("--mode", cfg.mode)->check(CLI::IsMember({"exact", "sampled"}));
  subs.back().seed = alg2->add_option("--seed", seed_opt, "RNG seed");
  alg2->add_option("--epsilon", cfg.epsilon, "Relative precision");
  add("series", "Series-composition graph checks", false, true);
  add("canonicalize", "Emit canonical graph JSON", false, false);

  CLI::App* bounds = app.add_subcommand("bounds", "Instantiate a complexity bound");
  bounds->add_option("--kind", cfg.kind, "Bound tag")->required()->check(CLI::IsMember(complexity_tags()));
  bounds->add_option("--format", cfg.format)->check(CLI::IsMember({"json", "csv"}));
  const std::vector<std::pair<std::string, std::string>> bound_flags = {
      {"--n", "n"}, {"--kappa", "kappa"}, {"--lambda", "lambda"}, {"--lambda2", "lambda2"},
      {"--lambda2-G", "lambda2_G"}, {"--dmax", "d_max"}, {"--davg", "d_avg"}, {"--d", "d"},
      {"--R", "R"}, {"--epsilon", "epsilon"}, {"--C", "C"}, {"--longest-path", "longest_path"},
      {"--wplus", "W_plus"}, {"--wminus", "W_minus"}};
  for (const auto& [flag, key] : bound_flags) {
    bounds->add_option(flag, bound_values[key], key);
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    for (auto* sub : app.get_subcommands()) out << sub->help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "{\"error\":\"UsageError\",\"message\":" << Json(std::string(e.what())).dump() << "}\n";
    return kUsage;
  }

  CLI::App* chosen = app.get_subcommands().front();
  cfg.command = chosen->get_name();
  if (chosen == sweep && !sweep->get_option("--format")->count()) cfg.format = "csv";
  for (const Sub& sub : subs) {
    if (sub.app != chosen) continue;
    if (sub.x && sub.x->count()) cfg.x = x_opt;
    if (sub.s && sub.s->count()) cfg.s = s_opt;
    if (sub.t && sub.t->count()) cfg.t = t_opt;
    if (sub.seed && sub.seed->count()) cfg.seed = seed_opt;
    if (sub.lambda && sub.lambda->count()) cfg.lambda = lambda_opt;
  }
  if (chosen == bounds) {
    for (const auto& [flag, key] : bound_flags) {
      if (bounds->get_option(flag)->count()) cfg.bound_params.emplace_back(key, bound_values[key]);
    }
  }

  static const std::map<std::string, CommandResult (*)(const RunConfig&)> table = {
      {"analyze", cmd_analyze}, {"sweep", cmd_sweep},   {"spectrum", cmd_spectrum},
      {"alg1", cmd_alg1},       {"alg2", cmd_alg2},     {"series", cmd_series},
      {"bounds", cmd_bounds},   {"canonicalize", cmd_canonicalize}};
  try {
    const CommandResult r = table.at(cfg.command)(cfg);
    out << r.text;
    return r.exit_code;
  } catch (const Error& e) {
    const std::string name(error_name(e.code()));
    err << "{\"error\":" << Json(name).dump() << ",\"message\":" << Json(std::string(e.what())).dump() << "}\n";
    if (e.code() == ErrorCode::TooLarge) return kResourceGuard;
    if (e.code() == ErrorCode::IdentityViolation) return kIdentityViolation;
    return kUsage;
  } catch (const std::exception& e) {
    err << "{\"error\":\"Failure\",\"message\":" << Json(std::string(e.what())).dump() << "}\n";
    return kUsage;
  }
}

}  // namespace stconn::cli
