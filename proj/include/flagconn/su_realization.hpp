#pragma once

#include <array>
#include <map>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "flagconn/chevalley.hpp"
#include "flagconn/metric.hpp"
#include "flagconn/rootsys.hpp"

namespace flagconn::su {

/// (n+1) x (n+1) complex matrix; elements of su(n+1) are anti-Hermitian and traceless.
using SuElement = Eigen::MatrixXcd;

/// eps_i - eps_j with 1-based indices, i != j; positive iff i < j.
struct EpsRoot {
  int i = 1;
  int j = 2;

  bool is_positive() const { return i < j; }
  friend auto operator<=>(const EpsRoot&, const EpsRoot&) = default;
};

/// Positive eps-roots of A_n in ascending lexicographic order of their
/// simple-root coordinates (the rootsys order).
std::vector<EpsRoot> positive_eps_roots(int n);

/// eps_i - eps_j = alpha_i + ... + alpha_{j-1} for i < j (negated for i > j).
Root eps_to_simple(int n, EpsRoot r);
EpsRoot simple_to_eps(int n, const Root& r);

/// For each positive eps-root (order of positive_eps_roots) the pair
/// e_ij - e_ji, i (e_ij + e_ji).
std::vector<SuElement> su_m_basis(int n);

bool is_su_element(const SuElement& x, double tolerance = 1e-12);

/// Killing form of su(n+1): 2 (n+1) trace(XY), real part.
double su_killing(int n, const SuElement& x, const SuElement& y);
/// trace(ad X ad Y) evaluated on gl(n+1); equals the Killing form on traceless matrices.
double su_killing_ad_trace(int n, const SuElement& x, const SuElement& y);

SuElement commutator(const SuElement& x, const SuElement& y);

/// Coordinates over su_m_basis -> matrix, and back (diagonal dropped).
SuElement to_matrix(int n, const MVector& x);
MVector from_matrix(int n, const SuElement& x);

/// [x, y]_m in su_m_basis coordinates.
MVector bracket_m(int n, const MVector& x, const MVector& y);

/// Metric coefficients keyed by positive eps-roots.
class EpsMetric {
 public:
  EpsMetric() = default;
  void set(EpsRoot r, double c);
  double c(int i, int j) const;
  const std::map<EpsRoot, double>& entries() const { return coeffs_; }

 private:
  std::map<EpsRoot, double> coeffs_;
};

EpsMetric to_eps_metric(int n, const MetricSpec& spec);

/// U(x, y) for SU(n+1)/T as three sums over i < j < k of
/// coefficient * ([X_a, Y_b] + [Y_a, X_b])_m on the modules m^{eps_i - eps_j}.
/// x, y and the result are in su_m_basis coordinates. Requires n >= 2.
MVector u_sun(int n, const EpsMetric& metric, const MVector& x, const MVector& y);

/// Coefficients (c3-c2)/(2c1), (c3-c1)/(2c2), (c2-c1)/(2c3) of the SU(3) formula,
/// with labels alpha_1 = eps_1-eps_2, alpha_2 = eps_1-eps_3, alpha_3 = eps_2-eps_3.
std::array<double, 3> su3_coefficients(double c1, double c2, double c3);

/// U(x, y) on SU(3)/T with the labels of su3_coefficients; x, y in su_m_basis(2) coordinates.
MVector u_su3(double c1, double c2, double c3, const MVector& x, const MVector& y);

/// Diagonal identification of the abstract MBasis of A_n with su_m_basis(n):
/// abstract e_k corresponds to factor[k] times matrix e_k. Signs come from
/// matching brackets along simple-root chains, magnitudes from Killing norms.
struct BasisAlignment {
  int n = 0;
  std::vector<int> root_sign;   // by positive-root index, E_alpha -> sign * e_ij
  std::vector<double> factor;   // by MBasis index

  MVector to_matrix_coords(const MVector& abstract) const;
  MVector to_abstract_coords(const MVector& matrix) const;
};

BasisAlignment align_basis(const RootSystem& rs, const StructureConstants& sc, const KillingForm& killing);

/// Image of a Chevalley-basis element under the alignment: h_j -> e_jj - e_{j+1,j+1},
/// E_alpha -> sign e_ij, E_{-alpha} -> sign e_ji.
SuElement chevalley_to_matrix(const RootSystem& rs, const BasisAlignment& align, const LieElement& x);

/// Max entrywise |image([a, b]) - [image(a), image(b)]| over all pairs of
/// Chevalley basis elements and over all pairs of MBasis elements.
double bracket_table_residual(const RootSystem& rs, const StructureConstants& sc, const BasisAlignment& align);

/// Max |ad-trace - 2(n+1) trace(XY)| over pairs of su_m_basis elements.
double killing_identity_residual(int n);

}  // namespace flagconn::su
