#include "flagconn/metric.hpp"

#include <cmath>
#include <random>
#include <string>

#include "flagconn/errors.hpp"

namespace flagconn {

MetricSpec MetricSpec::normal(const RootSystem& rs, double value) {
  MetricSpec spec;
  for (const auto& r : rs.positive_roots()) spec.set(r, value);
  return spec;
}

MetricSpec MetricSpec::random(const RootSystem& rs, std::uint64_t seed, double lo, double hi) {
  std::mt19937_64 gen(seed);
  std::uniform_real_distribution<double> dist(lo, hi);
  MetricSpec spec;
  for (const auto& r : rs.positive_roots()) spec.set(r, dist(gen));
  return spec;
}

std::vector<double> resolve_coefficients(const RootSystem& rs, const MetricSpec& spec) {
  std::vector<double> out(rs.num_positive(), 0.0);
  std::vector<bool> seen(rs.num_positive(), false);
  for (const auto& [coords, c] : spec.entries()) {
    auto idx = rs.index_of(coords);
    if (!idx || !rs.is_positive_index(*idx)) {
      std::string label = "[";
      for (std::size_t i = 0; i < coords.size(); ++i) label += (i ? "," : "") + std::to_string(coords[i]);
      throw ConfigError("metric coefficient given for " + label + "], which is not a positive root");
    }
    if (!(c > 0.0) || !std::isfinite(c)) {
      throw ConfigError("metric coefficient for " + rs.root(*idx).str() + " must be positive, got " +
                        std::to_string(c));
    }
    out[*idx] = c;
    seen[*idx] = true;
  }
  for (std::size_t p = 0; p < seen.size(); ++p) {
    if (!seen[p]) throw ConfigError("missing metric coefficient for positive root " + rs.root(p).str());
  }
  return out;
}

MetricGram build_metric(const RootSystem& rs, const KillingForm& killing, const MetricSpec& spec) {
  MetricGram gram;
  gram.coefficients = resolve_coefficients(rs, spec);
  const std::size_t positive = rs.num_positive();
  gram.diagonal.resize(2 * positive);
  for (std::size_t p = 0; p < positive; ++p) {
    // (-B)(U, U) = (-B)(V, V) = 2 B(E_a, E_{-a})
    const double norm = 2.0 * static_cast<double>(killing.roots(p, p + positive));
    gram.diagonal[2 * p] = gram.coefficients[p] * norm;
    gram.diagonal[2 * p + 1] = gram.coefficients[p] * norm;
  }
  return gram;
}

double inner(const MetricGram& gram, const MVector& x, const MVector& y) {
  if (x.size() != gram.dim() || y.size() != gram.dim()) {
    throw DimensionError("inner: vectors of size " + std::to_string(x.size()) + " and " +
                         std::to_string(y.size()) + " against a metric of dimension " +
                         std::to_string(gram.dim()));
  }
  double total = 0.0;
  for (std::size_t k = 0; k < gram.dim(); ++k) total += gram.diagonal[k] * x[k] * y[k];
  return total;
}

}  // namespace flagconn
