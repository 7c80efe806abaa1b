#pragma once

#include <complex>
#include <utility>
#include <vector>

#include "flagconn/chevalley.hpp"
#include "flagconn/metric.hpp"
#include "flagconn/rootsys.hpp"

namespace flagconn {

/// Components of the Levi-Civita connection at the base point:
/// nabla_{e_i} e_j = sum_k at(i, j, k) e_k over MBasis.
class ConnectionTensor {
 public:
  ConnectionTensor() = default;
  ConnectionTensor(MBasis basis, std::vector<double> data);

  std::size_t dim() const { return basis_.dim(); }
  const MBasis& basis() const { return basis_; }
  double at(std::size_t i, std::size_t j, std::size_t k) const { return data_[(i * dim() + j) * dim() + k]; }
  double& at(std::size_t i, std::size_t j, std::size_t k) { return data_[(i * dim() + j) * dim() + k]; }
  const std::vector<double>& data() const { return data_; }
  /// nabla_{e_i} e_j.
  MVector column(std::size_t i, std::size_t j) const;

 private:
  MBasis basis_;
  std::vector<double> data_;
};

/// The unique (a1, a2) among (alpha, beta), (beta, alpha), (-alpha, -beta),
/// (-beta, -alpha) with |a1| < a2. Throws UndefinedPairError for alpha = +-beta.
std::pair<Root, Root> canonical_pair(const RootSystem& rs, const Root& alpha, const Root& beta);

/// U(X_gamma, Y_delta) for X_gamma = x_coeff E_gamma, Y_delta = y_coeff E_delta:
/// (c_|gamma| - c_|delta|) / (2 c_|gamma+delta|) [Y_delta, X_gamma] when
/// gamma + delta is a root, zero otherwise (including delta = -gamma).
LieElement u_root_pair(const RootSystem& rs, const StructureConstants& sc, const MetricSpec& spec,
                       std::complex<double> x_coeff, std::complex<double> y_coeff, const Root& gamma,
                       const Root& delta);

/// Z_alpha^beta = [Y_beta, X_alpha] + [X_beta, Y_alpha] + [Y_-beta, X_-alpha] + [X_-beta, Y_-alpha],
/// projected to m, where X_gamma is the g^gamma component of x.
MVector z_term(const RootSystem& rs, const StructureConstants& sc, const MVector& x, const MVector& y,
               const Root& alpha, const Root& beta);

/// Closed-form U(x, y) over pairs of positive roots:
///   sum_{alpha < beta, alpha + beta in R+} (c_alpha - c_beta) / (2 c_{alpha+beta}) Z_alpha^beta
/// + sum_{beta - alpha in R+}               (c_alpha - c_beta) / (2 c_{beta-alpha}) Z_{-alpha}^beta
MVector u_bilinear(const RootSystem& rs, const StructureConstants& sc, const MetricSpec& spec,
                   const MVector& x, const MVector& y);
/// Same, with coefficients already resolved by positive-root index.
MVector u_bilinear(const RootSystem& rs, const StructureConstants& sc, const std::vector<double>& coeffs,
                   const MVector& x, const MVector& y);

/// nabla_x y = 1/2 [x, y]_m + U(x, y).
MVector nabla(const RootSystem& rs, const StructureConstants& sc, const MetricSpec& spec, const MVector& x,
              const MVector& y);

ConnectionTensor assemble_tensor(const RootSystem& rs, const StructureConstants& sc, const MetricSpec& spec);

}  // namespace flagconn
