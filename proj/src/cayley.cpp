#include "stconn/cayley.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <set>

#include "stconn/error.hpp"

namespace stconn {

std::size_t CayleyGraphSpec::order() const {
  std::size_t n = 1;
  for (std::size_t m : factors) n *= m;
  return n;
}

GroupElement CayleyGraphSpec::element(std::size_t id) const {
  GroupElement g(factors.size());
  for (std::size_t i = factors.size(); i-- > 0;) {
    g[i] = id % factors[i];
    id /= factors[i];
  }
  return g;
}

std::size_t CayleyGraphSpec::id(const GroupElement& g) const {
  std::size_t out = 0;
  for (std::size_t i = 0; i < factors.size(); ++i) out = out * factors[i] + g[i] % factors[i];
  return out;
}

CayleyGraphSpec complete_cayley_spec(std::size_t n) {
  CayleyGraphSpec spec;
  spec.factors = {n};
  for (std::size_t s = 1; s < n; ++s) spec.generators.push_back({s});
  return spec;
}

CayleyGraphSpec hypercube_cayley_spec(std::size_t d) {
  CayleyGraphSpec spec;
  spec.factors.assign(d, 2);
  for (std::size_t i = 0; i < d; ++i) {
    GroupElement e(d, 0);
    e[i] = 1;
    spec.generators.push_back(e);
  }
  return spec;
}

void validate_cayley_spec(const CayleyGraphSpec& spec) {
  if (spec.factors.empty()) throw Error(ErrorCode::BadInput, "group needs at least one factor");
  for (std::size_t m : spec.factors) {
    if (m < 1) throw Error(ErrorCode::BadInput, "group factors must be positive");
  }
  std::set<GroupElement> gens;
  for (const GroupElement& s : spec.generators) {
    if (s.size() != spec.factors.size()) throw Error(ErrorCode::BadInput, "generator has the wrong arity");
    bool identity = true;
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (s[i] >= spec.factors[i]) throw Error(ErrorCode::BadInput, "generator coordinate out of range");
      identity = identity && s[i] == 0;
    }
    if (identity) throw Error(ErrorCode::BadInput, "generating set contains the identity");
    if (!gens.insert(s).second) throw Error(ErrorCode::BadInput, "generating set has a repeated element");
  }
  for (const GroupElement& s : spec.generators) {
    GroupElement neg(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) neg[i] = (spec.factors[i] - s[i]) % spec.factors[i];
    if (!gens.count(neg)) throw Error(ErrorCode::AsymmetricGeneratingSet, "generating set is not closed under negation");
  }
}

LabeledMultigraph cayley_graph(const CayleyGraphSpec& spec) {
  validate_cayley_spec(spec);
  const std::size_t n = spec.order();
  GraphSpec gs;
  gs.n = n;
  std::size_t k = 0;
  for (std::size_t a = 0; a < n; ++a) {
    const GroupElement g = spec.element(a);
    for (const GroupElement& s : spec.generators) {
      GroupElement h(g.size());
      for (std::size_t i = 0; i < g.size(); ++i) h[i] = (g[i] + s[i]) % spec.factors[i];
      const std::size_t b = spec.id(h);
      if (a < b) {
        EdgeSpec es;
        es.u = a;
        es.v = b;
        es.label = "e" + std::to_string(k++);
        gs.edges.push_back(es);
      }
    }
  }
  return build_graph(gs);
}

std::complex<double> character(const CayleyGraphSpec& spec, const GroupElement& g, const GroupElement& h) {
  double angle = 0.0;
  for (std::size_t i = 0; i < spec.factors.size(); ++i) {
    const std::size_t m = spec.factors[i];
    angle += 2.0 * std::numbers::pi * static_cast<double>((g[i] * h[i]) % m) / static_cast<double>(m);
  }
  return std::polar(1.0, angle);
}

std::vector<double> cayley_spectrum(const CayleyGraphSpec& spec) {
  validate_cayley_spec(spec);
  const std::size_t n = spec.order();
  std::vector<double> out(n);
  for (std::size_t a = 0; a < n; ++a) {
    const GroupElement g = spec.element(a);
    std::complex<double> sum = 0.0;
    for (const GroupElement& s : spec.generators) sum += character(spec, g, s);
    if (std::abs(sum.imag()) > 1e-12) throw Error(ErrorCode::AsymmetricGeneratingSet, "character sum is not real");
    out[a] = static_cast<double>(spec.degree()) - sum.real();
  }
  return out;
}

Eigen::VectorXcd fourier_vector(const CayleyGraphSpec& spec, std::size_t g) {
  const std::size_t n = spec.order();
  const GroupElement ge = spec.element(g);
  Eigen::VectorXcd v(static_cast<Eigen::Index>(n));
  const double scale = 1.0 / std::sqrt(static_cast<double>(n));
  for (std::size_t h = 0; h < n; ++h) v(static_cast<Eigen::Index>(h)) = scale * character(spec, ge, spec.element(h));
  return v;
}

std::optional<CayleyGraphSpec> detect_cayley(const LabeledMultigraph& g) {
  const std::size_t n = g.vertex_count();
  if (n < 2 || !g.is_simple()) return std::nullopt;
  for (const Edge& e : g.edges()) {
    if (e.weight != 1.0) return std::nullopt;
  }
  if (g.edge_count() == n * (n - 1) / 2) return complete_cayley_spec(n);
  if ((n & (n - 1)) != 0) return std::nullopt;
  const std::size_t d = static_cast<std::size_t>(std::countr_zero(n));
  if (g.edge_count() != d * n / 2) return std::nullopt;
  for (const Edge& e : g.edges()) {
    if (std::popcount(e.u ^ e.v) != 1) return std::nullopt;
  }
  return hypercube_cayley_spec(d);
}

}  // namespace stconn
