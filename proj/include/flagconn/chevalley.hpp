#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "flagconn/rootsys.hpp"

namespace flagconn {

/// Exact Gaussian integer, used for brackets of Chevalley and compact-form
/// basis elements.
struct GaussianInt {
  std::int64_t re = 0;
  std::int64_t im = 0;

  friend bool operator==(const GaussianInt&, const GaussianInt&) = default;
  GaussianInt& operator+=(const GaussianInt& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  GaussianInt& operator-=(const GaussianInt& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  friend GaussianInt operator+(GaussianInt a, const GaussianInt& b) { return a += b; }
  friend GaussianInt operator-(GaussianInt a, const GaussianInt& b) { return a -= b; }
  friend GaussianInt operator-(const GaussianInt& a) { return {-a.re, -a.im}; }
  friend GaussianInt operator*(const GaussianInt& a, const GaussianInt& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend GaussianInt operator*(const GaussianInt& a, std::int64_t k) { return {a.re * k, a.im * k}; }
};

inline std::complex<double> to_complex(const GaussianInt& z) {
  return {static_cast<double>(z.re), static_cast<double>(z.im)};
}

/// Element of the complexified Lie algebra in the Chevalley basis: a Cartan
/// part over the simple coroots h_1..h_l and one coefficient per root,
/// stored densely by RootSystem root index.
template <class Scalar>
struct BasicLieElement {
  std::vector<Scalar> cartan;
  std::vector<Scalar> roots;

  static BasicLieElement zero(const RootSystem& rs) {
    return {std::vector<Scalar>(rs.rank()), std::vector<Scalar>(rs.num_roots())};
  }
  static BasicLieElement root_vector(const RootSystem& rs, std::size_t root_index,
                                     Scalar coeff = Scalar{1}) {
    auto x = zero(rs);
    x.roots[root_index] = coeff;
    return x;
  }

  BasicLieElement& operator+=(const BasicLieElement& o) {
    for (std::size_t i = 0; i < cartan.size(); ++i) cartan[i] += o.cartan[i];
    for (std::size_t i = 0; i < roots.size(); ++i) roots[i] += o.roots[i];
    return *this;
  }
  BasicLieElement& operator-=(const BasicLieElement& o) {
    for (std::size_t i = 0; i < cartan.size(); ++i) cartan[i] -= o.cartan[i];
    for (std::size_t i = 0; i < roots.size(); ++i) roots[i] -= o.roots[i];
    return *this;
  }
  friend BasicLieElement operator+(BasicLieElement a, const BasicLieElement& b) { return a += b; }
  friend BasicLieElement operator-(BasicLieElement a, const BasicLieElement& b) { return a -= b; }
  friend BasicLieElement operator*(BasicLieElement a, const Scalar& s) {
    for (auto& c : a.cartan) c = c * s;
    for (auto& c : a.roots) c = c * s;
    return a;
  }
  friend bool operator==(const BasicLieElement&, const BasicLieElement&) = default;
};

using LieElement = BasicLieElement<std::complex<double>>;
using ExactLieElement = BasicLieElement<GaussianInt>;

LieElement to_complex(const ExactLieElement& x);

/// Chevalley structure constants: [E_a, E_b] = N_{a,b} E_{a+b},
/// [E_a, E_{-a}] = H_a, [h_i, E_a] = <a, alpha_i^vee> E_a.
///
/// Signs are fixed by N_{xi,zeta} = p + 1 > 0 on extraspecial pairs, where
/// the extraspecial pair of a positive root rho is the pair xi < zeta of
/// positive roots with xi + zeta = rho and xi lexicographically smallest.
/// The remaining signs follow from N_{-a,-b} = -N_{a,b} and the usual
/// three- and four-term identities.
class StructureConstants {
 public:
  int rank() const { return rank_; }
  std::size_t num_roots() const { return num_roots_; }

  /// N_{a,b} by root index; 0 when a + b is not a root.
  int n(std::size_t a, std::size_t b) const { return n_[a * num_roots_ + b]; }
  /// alpha(H_i) for simple coroot i and root index a.
  int cartan_action(int i, std::size_t a) const { return cartan_action_[i * num_roots_ + a]; }
  /// Root index of a + b, or -1.
  int sum_index(std::size_t a, std::size_t b) const { return sum_[a * num_roots_ + b]; }
  /// H_a = [E_a, E_{-a}] written over the simple coroots.
  const std::vector<int>& coroot(std::size_t a) const { return coroots_[a]; }

 private:
  friend StructureConstants chevalley_constants(const RootSystem& rs);

  int rank_ = 0;
  std::size_t num_roots_ = 0;
  std::vector<int> n_;
  std::vector<int> sum_;
  std::vector<int> cartan_action_;
  std::vector<std::vector<int>> coroots_;
};

StructureConstants chevalley_constants(const RootSystem& rs);

/// N_{alpha,beta} for roots given by coordinates; 0 when alpha + beta is not a root.
int structure_constant(const RootSystem& rs, const StructureConstants& sc, const Root& alpha,
                       const Root& beta);

template <class Scalar>
BasicLieElement<Scalar> bracket(const StructureConstants& sc, const BasicLieElement<Scalar>& x,
                                const BasicLieElement<Scalar>& y);

/// Killing form on the Chevalley basis, ordered h_1..h_l then E_a by root index.
class KillingForm {
 public:
  std::size_t dim() const { return dim_; }
  int rank() const { return rank_; }
  std::int64_t at(std::size_t i, std::size_t j) const { return table_[i * dim_ + j]; }
  /// B(E_a, E_b) by root index.
  std::int64_t roots(std::size_t a, std::size_t b) const { return at(rank_ + a, rank_ + b); }

  std::complex<double> operator()(const LieElement& x, const LieElement& y) const;
  std::complex<double> operator()(const ExactLieElement& x, const ExactLieElement& y) const;

 private:
  friend KillingForm killing_gram(const RootSystem& rs, const StructureConstants& sc);

  std::size_t dim_ = 0;
  int rank_ = 0;
  std::vector<std::int64_t> table_;
};

/// B(x, y) = trace(ad x ad y), computed from the adjoint action.
KillingForm killing_gram(const RootSystem& rs, const StructureConstants& sc);

enum class MKind { U, V };

/// Real basis of the reductive complement m of the compact real form:
/// for each positive root alpha (ascending lexicographic order)
///   U_alpha = E_alpha - E_{-alpha},  V_alpha = i (E_alpha + E_{-alpha}).
/// Flat index of (p, kind) is 2p for U and 2p + 1 for V.
class MBasis {
 public:
  struct Entry {
    std::size_t positive_index;
    MKind kind;
  };

  std::size_t dim() const { return entries_.size(); }
  const Entry& entry(std::size_t k) const { return entries_[k]; }
  const std::vector<Entry>& entries() const { return entries_; }
  static std::size_t index(std::size_t positive_index, MKind kind) {
    return 2 * positive_index + (kind == MKind::V ? 1 : 0);
  }

  ExactLieElement expand_exact(const RootSystem& rs, std::size_t k) const;
  LieElement expand(const RootSystem& rs, std::size_t k) const;

 private:
  friend MBasis build_m_basis(const RootSystem& rs);
  std::vector<Entry> entries_;
};

MBasis build_m_basis(const RootSystem& rs);

/// Real coordinates over MBasis.
class MVector {
 public:
  MVector() = default;
  explicit MVector(std::size_t dim) : coeffs_(dim, 0.0) {}
  explicit MVector(std::vector<double> coeffs) : coeffs_(std::move(coeffs)) {}

  static MVector unit(std::size_t dim, std::size_t k) {
    MVector v(dim);
    v[k] = 1.0;
    return v;
  }

  std::size_t size() const { return coeffs_.size(); }
  double operator[](std::size_t k) const { return coeffs_[k]; }
  double& operator[](std::size_t k) { return coeffs_[k]; }
  const std::vector<double>& coeffs() const { return coeffs_; }

  MVector& operator+=(const MVector& o);
  MVector& operator-=(const MVector& o);
  MVector& operator*=(double s);
  friend MVector operator+(MVector a, const MVector& b) { return a += b; }
  friend MVector operator-(MVector a, const MVector& b) { return a -= b; }
  friend MVector operator*(MVector a, double s) { return a *= s; }
  friend MVector operator*(double s, MVector a) { return a *= s; }

  double max_abs() const;

 private:
  std::vector<double> coeffs_;
};

double max_abs_diff(const MVector& a, const MVector& b);

/// MVector -> complexified element (zero Cartan part).
LieElement to_lie(const RootSystem& rs, const MVector& x);

/// Drops the Cartan part and rewrites the root part over MBasis. Throws
/// RepresentationError when the root part violates the reality condition
/// coeff(E_{-a}) = -conj(coeff(E_a)) by more than `tolerance`.
MVector project_m(const RootSystem& rs, const LieElement& x, double tolerance = 1e-9);

std::complex<double> project_root_space(const RootSystem& rs, const LieElement& x, const Root& gamma);

/// [x, y]_m for x, y in m, computed through the complex bracket.
MVector bracket_m(const RootSystem& rs, const StructureConstants& sc, const MVector& x,
                  const MVector& y);

/// Structure constants of m under [., .]_m: table(i, j, k) is the k-th
/// coordinate of [e_i, e_j]_m. Entries are integers.
class MBracketTable {
 public:
  std::size_t dim() const { return dim_; }
  double operator()(std::size_t i, std::size_t j, std::size_t k) const {
    return data_[(i * dim_ + j) * dim_ + k];
  }
  MVector bracket(const MVector& x, const MVector& y) const;
  /// Coordinates of [e_i, e_j]_m.
  MVector basis_bracket(std::size_t i, std::size_t j) const;

 private:
  friend MBracketTable m_bracket_table(const RootSystem& rs, const StructureConstants& sc);
  std::size_t dim_ = 0;
  std::vector<double> data_;
};

MBracketTable m_bracket_table(const RootSystem& rs, const StructureConstants& sc);

}  // namespace flagconn
