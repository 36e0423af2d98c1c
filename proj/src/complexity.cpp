#include "stconn/complexity.hpp"

#include <cmath>
#include <functional>

#include "stconn/error.hpp"

namespace stconn {

namespace {

class Params {
 public:
  Params(const std::string& tag, const ComplexityInputs& in, ComplexityReport& r) : tag_(tag), in_(in), r_(r) {}

  double get(const std::string& key) {
    auto it = in_.find(key);
    if (it == in_.end()) throw Error(ErrorCode::MissingParameter, "tag '" + tag_ + "' needs parameter '" + key + "'");
    if (!std::isfinite(it->second)) throw Error(ErrorCode::BadParameters, "parameter '" + key + "' must be finite");
    r_.parameters[key] = it->second;
    return it->second;
  }

  double positive(const std::string& key) {
    const double v = get(key);
    if (!(v > 0.0)) throw Error(ErrorCode::BadParameters, "parameter '" + key + "' must be positive");
    return v;
  }

 private:
  const std::string& tag_;
  const ComplexityInputs& in_;
  ComplexityReport& r_;
};

using Builder = std::function<void(Params&, ComplexityReport&)>;

const std::vector<std::pair<std::string, Builder>>& builders() {
  static const std::vector<std::pair<std::string, Builder>> table = {
      {"connectivity-algorithm",
       [](Params& p, ComplexityReport& r) {
         r.formula = "n sqrt(R / kappa)";
         r.value = p.positive("n") * std::sqrt(p.positive("R") / p.positive("kappa"));
         r.unit_multipliers["U"] = r.value;
       }},
      {"connectivity-algorithm-general",
       [](Params& p, ComplexityReport& r) {
         r.formula = "n^(3/4) sqrt(R d_max) / kappa^(1/4)";
         r.value = std::pow(p.positive("n"), 0.75) * std::sqrt(p.positive("R") * p.positive("d_max")) /
                   std::pow(p.positive("kappa"), 0.25);
         r.unit_multipliers["U"] = r.value;
       }},
      {"query",
       [](Params& p, ComplexityReport& r) {
         r.formula = "sqrt(n d_max / (kappa lambda))";
         r.value = std::sqrt(p.positive("n") * p.positive("d_max") / (p.positive("kappa") * p.positive("lambda")));
       }},
      {"any-G",
       [](Params& p, ComplexityReport& r) {
         r.formula = "sqrt(n d_avg / (kappa lambda2_G)) (S + sqrt(d_max / lambda) U)";
         const double outer = std::sqrt(p.positive("n") * p.positive("d_avg") / (p.positive("kappa") * p.positive("lambda2_G")));
         r.unit_multipliers["S"] = outer;
         r.unit_multipliers["U"] = outer * std::sqrt(p.positive("d_max") / p.positive("lambda"));
         r.value = r.unit_multipliers["S"] + r.unit_multipliers["U"];
       }},
      {"cayley",
       [](Params& p, ComplexityReport& r) {
         r.formula = "sqrt(n d / (kappa lambda)) U + sqrt(n d / (kappa lambda2_G)) L";
         const double nd = p.positive("n") * p.positive("d");
         const double kappa = p.positive("kappa");
         r.unit_multipliers["U"] = std::sqrt(nd / (kappa * p.positive("lambda")));
         r.unit_multipliers["L"] = std::sqrt(nd / (kappa * p.positive("lambda2_G")));
         r.value = r.unit_multipliers["U"] + r.unit_multipliers["L"];
       }},
      {"complete-graph",
       [](Params& p, ComplexityReport& r) {
         r.formula = "n / sqrt(kappa lambda)";
         r.value = p.positive("n") / std::sqrt(p.positive("kappa") * p.positive("lambda"));
         r.unit_multipliers["U"] = r.value;
       }},
      {"hypercube",
       [](Params& p, ComplexityReport& r) {
         r.formula = "sqrt(n log2(n) / (kappa lambda))";
         const double n = p.positive("n");
         r.extra["d"] = std::log2(n);
         r.value = std::sqrt(n * std::log2(n) / (p.positive("kappa") * p.positive("lambda")));
         r.unit_multipliers["U"] = r.value;
       }},
      {"connectivity-estimation",
       [](Params& p, ComplexityReport& r) {
         r.formula = "(1 / epsilon) n / sqrt(lambda2)";
         r.value = p.positive("n") / (p.positive("epsilon") * std::sqrt(p.positive("lambda2")));
         r.unit_multipliers["U"] = r.value;
       }},
      {"capacitance-estimation",
       [](Params& p, ComplexityReport& r) {
         r.formula = "epsilon^(-3/2) sqrt(C longest_path)";
         r.value = std::pow(p.positive("epsilon"), -1.5) * std::sqrt(p.positive("C") * p.positive("longest_path"));
         r.unit_multipliers["U"] = r.value;
       }},
      {"span-decision",
       [](Params& p, ComplexityReport& r) {
         r.formula = "sqrt(W_plus W_minus)";
         r.value = std::sqrt(p.positive("W_plus") * p.positive("W_minus"));
       }},
      {"compare",
       [](Params& p, ComplexityReport& r) {
         r.formula = "T1 = n sqrt(R / kappa), T2 = sqrt(n d_max) / sqrt(kappa lambda)";
         const double n = p.positive("n");
         const double kappa = p.positive("kappa");
         const double t1 = n * std::sqrt(p.positive("R") / kappa);
         const double t2 = std::sqrt(n * p.positive("d_max")) / std::sqrt(kappa * p.positive("lambda"));
         r.extra["T1"] = t1;
         r.extra["T2"] = t2;
         r.extra["T1_over_T2"] = t1 / t2;
         r.value = std::min(t1, t2);
       }},
  };
  return table;
}

}  // namespace

std::vector<std::string> complexity_tags() {
  std::vector<std::string> out;
  for (const auto& [tag, _] : builders()) out.push_back(tag);
  return out;
}

ComplexityReport complexity_report(const std::string& tag, const ComplexityInputs& inputs) {
  for (const auto& [name, build] : builders()) {
    if (name != tag) continue;
    ComplexityReport r;
    r.tag = tag;
    Params p(tag, inputs, r);
    build(p, r);
    return r;
  }
  throw Error(ErrorCode::BadParameters, "unknown complexity tag '" + tag + "'");
}

}  // namespace stconn
