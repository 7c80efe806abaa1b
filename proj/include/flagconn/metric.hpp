#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "flagconn/chevalley.hpp"
#include "flagconn/rootsys.hpp"

namespace flagconn {

/// Coefficients c_alpha > 0 of an invariant metric, one per positive root.
///
/// The modules m^alpha are pairwise inequivalent under Ad(T), so every
/// invariant metric is a positive combination of (-B) restricted to them and
/// is diagonal in MBasis; nothing more general can occur.
class MetricSpec {
 public:
  MetricSpec() = default;

  /// All coefficients equal: the normal (Killing) metric scaled by `value`.
  static MetricSpec normal(const RootSystem& rs, double value = 1.0);
  /// Seeded uniform draw of each c_alpha from [lo, hi], in positive-root order.
  static MetricSpec random(const RootSystem& rs, std::uint64_t seed, double lo = 0.5, double hi = 5.0);

  void set(const Root& alpha, double c) { coeffs_[alpha.coords()] = c; }
  const std::map<Coords, double>& entries() const { return coeffs_; }

 private:
  std::map<Coords, double> coeffs_;
};

/// Validates `spec` against R+ and returns c by positive-root index.
/// Throws ConfigError naming the first missing, extra or nonpositive entry.
std::vector<double> resolve_coefficients(const RootSystem& rs, const MetricSpec& spec);

/// Diagonal Gram matrix of g on MBasis: diagonal[k] = c_alpha * (-B)(e_k, e_k).
struct MetricGram {
  std::vector<double> diagonal;
  std::vector<double> coefficients;  // c by positive-root index

  std::size_t dim() const { return diagonal.size(); }
};

MetricGram build_metric(const RootSystem& rs, const KillingForm& killing, const MetricSpec& spec);

double inner(const MetricGram& gram, const MVector& x, const MVector& y);

}  // namespace flagconn
