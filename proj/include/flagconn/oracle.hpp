#pragma once

#include <optional>
#include <string>
#include <vector>

#include "flagconn/chevalley.hpp"
#include "flagconn/connection.hpp"
#include "flagconn/metric.hpp"
#include "flagconn/rootsys.hpp"

namespace flagconn {

inline constexpr double kDefaultTolerance = 1e-9;

/// Result of one verification check. `passed` iff max_residual <= threshold.
struct CheckReport {
  std::string check_name;
  double max_residual = 0.0;
  double threshold = kDefaultTolerance;
  bool passed = true;
  std::optional<std::vector<std::size_t>> witness;  // indices of the worst violation
};

CheckReport make_report(std::string name, double max_residual, double threshold,
                        std::optional<std::vector<std::size_t>> witness);

/// U(x, y) solved directly from 2 g(U, z) = g(x, [z, y]_m) + g([z, x]_m, y).
/// g is diagonal in MBasis, so coordinate k is
///   (g(x, [e_k, y]_m) + g([e_k, x]_m, y)) / (2 g_kk).
/// Uses only the bracket and the Gram matrix.
MVector u_oracle(const RootSystem& rs, const StructureConstants& sc, const MetricGram& gram, const MVector& x,
                 const MVector& y);
MVector u_oracle(const MBracketTable& table, const MetricGram& gram, const MVector& x, const MVector& y);

/// Max over basis pairs of |u_bilinear(e_i, e_j) - u_oracle(e_i, e_j)|.
CheckReport check_oracle_equivalence(const RootSystem& rs, const StructureConstants& sc, const MetricSpec& spec,
                                     double threshold = kDefaultTolerance);

/// Max over i, j, k of |T(i,j,k) - T(j,i,k) - [e_i, e_j]_m^k|.
CheckReport check_torsion(const ConnectionTensor& tensor, const MBracketTable& table,
                          double threshold = kDefaultTolerance);
CheckReport check_torsion(const ConnectionTensor& tensor, const RootSystem& rs, const StructureConstants& sc,
                          double threshold = kDefaultTolerance);

/// Max over i, j, k of |g(nabla_{e_i} e_j, e_k) + g(e_j, nabla_{e_i} e_k)|.
CheckReport check_metric_compat(const ConnectionTensor& tensor, const MetricGram& gram,
                                double threshold = kDefaultTolerance);

/// For every ordered pair of roots alpha != +-beta, counts the candidates
/// among (alpha,beta), (beta,alpha), (-alpha,-beta), (-beta,-alpha) with
/// |a1| < a2; residual is max |count - 1|.
CheckReport check_lemma2(const RootSystem& rs);

}  // namespace flagconn
