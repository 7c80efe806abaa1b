#include "flagconn/su_realization.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numeric>

#include "flagconn/errors.hpp"

namespace flagconn::su {

namespace {

using cd = std::complex<double>;

void require_order(int n) {
  if (n < 1) throw DomainError("su(n+1) needs n >= 1, got " + std::to_string(n));
}

void require_eps(int n, EpsRoot r) {
  if (r.i < 1 || r.j < 1 || r.i > n + 1 || r.j > n + 1 || r.i == r.j) {
    throw DomainError("invalid eps-root indices (" + std::to_string(r.i) + ", " + std::to_string(r.j) +
                      ") for A_" + std::to_string(n));
  }
}

SuElement unit(int n, int i, int j) {
  SuElement m = SuElement::Zero(n + 1, n + 1);
  m(i - 1, j - 1) = 1.0;
  return m;
}

// Block of x on m^{eps_i - eps_j} as a matrix (entries (i,j) and (j,i) only).
SuElement block(int n, const SuElement& x, int i, int j) {
  SuElement m = SuElement::Zero(n + 1, n + 1);
  m(i - 1, j - 1) = x(i - 1, j - 1);
  m(j - 1, i - 1) = x(j - 1, i - 1);
  return m;
}

// ([A_a, B_b] + [B_a, A_b])_m with blocks taken from full matrices.
SuElement sym_bracket(int n, const SuElement& x, const SuElement& y, EpsRoot a, EpsRoot b) {
  const SuElement xa = block(n, x, a.i, a.j);
  const SuElement xb = block(n, x, b.i, b.j);
  const SuElement ya = block(n, y, a.i, a.j);
  const SuElement yb = block(n, y, b.i, b.j);
  return commutator(xa, yb) + commutator(ya, xb);
}

void require_dim(int n, const MVector& x) {
  const auto dim = static_cast<std::size_t>(n * (n + 1));
  if (x.size() != dim) {
    throw DimensionError("su(" + std::to_string(n + 1) + ") m-vector needs " + std::to_string(dim) +
                         " coordinates, got " + std::to_string(x.size()));
  }
}

}  // namespace

std::vector<EpsRoot> positive_eps_roots(int n) {
  require_order(n);
  std::vector<EpsRoot> out;
  for (int i = 1; i <= n + 1; ++i) {
    for (int j = i + 1; j <= n + 1; ++j) out.push_back({i, j});
  }
  // ascending: larger i first, then smaller j
  std::sort(out.begin(), out.end(), [](EpsRoot a, EpsRoot b) {
    if (a.i != b.i) return a.i > b.i;
    return a.j < b.j;
  });
  return out;
}

Root eps_to_simple(int n, EpsRoot r) {
  require_order(n);
  require_eps(n, r);
  Coords c(n, 0);
  const int lo = std::min(r.i, r.j);
  const int hi = std::max(r.i, r.j);
  const int sign = r.i < r.j ? 1 : -1;
  for (int k = lo; k < hi; ++k) c[k - 1] = sign;
  return Root(std::move(c));
}

EpsRoot simple_to_eps(int n, const Root& r) {
  require_order(n);
  if (r.size() != static_cast<std::size_t>(n)) throw DimensionError("simple_to_eps: root length mismatch");
  int first = -1;
  int last = -1;
  for (int k = 0; k < n; ++k) {
    if (r[k] == 0) continue;
    if (std::abs(r[k]) != 1 || (last >= 0 && last != k - 1)) {
      throw DomainError(r.str() + " is not a root of A_" + std::to_string(n));
    }
    if (first < 0) first = k;
    last = k;
  }
  const int i = first + 1;
  const int j = last + 2;
  return r.is_positive() ? EpsRoot{i, j} : EpsRoot{j, i};
}

std::vector<SuElement> su_m_basis(int n) {
  std::vector<SuElement> out;
  const cd im(0.0, 1.0);
  for (const auto& r : positive_eps_roots(n)) {
    out.push_back(unit(n, r.i, r.j) - unit(n, r.j, r.i));
    out.push_back(im * (unit(n, r.i, r.j) + unit(n, r.j, r.i)));
  }
  return out;
}

bool is_su_element(const SuElement& x, double tolerance) {
  if (x.rows() != x.cols()) return false;
  return (x + x.adjoint()).cwiseAbs().maxCoeff() <= tolerance && std::abs(x.trace()) <= tolerance;
}

SuElement commutator(const SuElement& x, const SuElement& y) { return x * y - y * x; }

double su_killing(int n, const SuElement& x, const SuElement& y) {
  return (2.0 * (n + 1) * (x * y).trace()).real();
}

double su_killing_ad_trace(int n, const SuElement& x, const SuElement& y) {
  // ad on gl(n+1) with the matrix-unit basis; coefficient of e_ab in Z is Z(a,b).
  const int d = n + 1;
  cd total = 0.0;
  for (int a = 0; a < d; ++a) {
    for (int b = 0; b < d; ++b) {
      SuElement e = SuElement::Zero(d, d);
      e(a, b) = 1.0;
      total += commutator(x, commutator(y, e))(a, b);
    }
  }
  return total.real();
}

SuElement to_matrix(int n, const MVector& x) {
  require_dim(n, x);
  SuElement m = SuElement::Zero(n + 1, n + 1);
  const auto roots = positive_eps_roots(n);
  for (std::size_t p = 0; p < roots.size(); ++p) {
    const double u = x[2 * p];
    const double v = x[2 * p + 1];
    m(roots[p].i - 1, roots[p].j - 1) = cd(u, v);
    m(roots[p].j - 1, roots[p].i - 1) = cd(-u, v);
  }
  return m;
}

MVector from_matrix(int n, const SuElement& x) {
  const auto roots = positive_eps_roots(n);
  MVector out(2 * roots.size());
  for (std::size_t p = 0; p < roots.size(); ++p) {
    const cd plus = x(roots[p].i - 1, roots[p].j - 1);
    const cd minus = x(roots[p].j - 1, roots[p].i - 1);
    out[2 * p] = 0.5 * (plus.real() - minus.real());
    out[2 * p + 1] = 0.5 * (plus.imag() + minus.imag());
  }
  return out;
}

MVector bracket_m(int n, const MVector& x, const MVector& y) {
  return from_matrix(n, commutator(to_matrix(n, x), to_matrix(n, y)));
}

void EpsMetric::set(EpsRoot r, double c) {
  if (!r.is_positive()) r = {r.j, r.i};
  coeffs_[r] = c;
}

double EpsMetric::c(int i, int j) const {
  auto it = coeffs_.find(EpsRoot{std::min(i, j), std::max(i, j)});
  if (it == coeffs_.end()) {
    throw ConfigError("missing coefficient for eps_" + std::to_string(i) + " - eps_" + std::to_string(j));
  }
  return it->second;
}

EpsMetric to_eps_metric(int n, const MetricSpec& spec) {
  EpsMetric out;
  for (const auto& [coords, c] : spec.entries()) out.set(simple_to_eps(n, Root(coords)), c);
  return out;
}

MVector u_sun(int n, const EpsMetric& metric, const MVector& x, const MVector& y) {
  if (n < 2) throw DomainError("u_sun needs n >= 2, got " + std::to_string(n));
  require_dim(n, x);
  require_dim(n, y);
  const SuElement xm = to_matrix(n, x);
  const SuElement ym = to_matrix(n, y);
  SuElement total = SuElement::Zero(n + 1, n + 1);
  for (int i = 1; i <= n + 1; ++i) {
    for (int j = i + 1; j <= n + 1; ++j) {
      for (int k = j + 1; k <= n + 1; ++k) {
        const double cij = metric.c(i, j);
        const double cjk = metric.c(j, k);
        const double cik = metric.c(i, k);
        total += (cjk - cij) / (2.0 * cik) * sym_bracket(n, xm, ym, {i, j}, {j, k});
        total += (cij - cik) / (2.0 * cjk) * sym_bracket(n, xm, ym, {i, k}, {i, j});
        total += (cjk - cik) / (2.0 * cij) * sym_bracket(n, xm, ym, {i, k}, {j, k});
      }
    }
  }
  return from_matrix(n, total);
}

std::array<double, 3> su3_coefficients(double c1, double c2, double c3) {
  if (!(c1 > 0.0) || !(c2 > 0.0) || !(c3 > 0.0)) throw ConfigError("SU(3) metric coefficients must be positive");
  return {(c3 - c2) / (2.0 * c1), (c3 - c1) / (2.0 * c2), (c2 - c1) / (2.0 * c3)};
}

MVector u_su3(double c1, double c2, double c3, const MVector& x, const MVector& y) {
  const auto k = su3_coefficients(c1, c2, c3);
  require_dim(2, x);
  require_dim(2, y);
  const SuElement xm = to_matrix(2, x);
  const SuElement ym = to_matrix(2, y);
  const SuElement x1 = block(2, xm, 1, 2), x2 = block(2, xm, 1, 3), x3 = block(2, xm, 2, 3);
  const SuElement y1 = block(2, ym, 1, 2), y2 = block(2, ym, 1, 3), y3 = block(2, ym, 2, 3);
  const SuElement u = k[0] * (commutator(x2, y3) + commutator(y2, x3)) +
                      k[1] * (commutator(x1, y3) + commutator(y1, x3)) +
                      k[2] * (commutator(x1, y2) + commutator(y1, x2));
  return from_matrix(2, u);
}

MVector BasisAlignment::to_matrix_coords(const MVector& abstract) const {
  if (abstract.size() != factor.size()) throw DimensionError("alignment: dimension mismatch");
  MVector out(abstract.size());
  for (std::size_t k = 0; k < factor.size(); ++k) out[k] = factor[k] * abstract[k];
  return out;
}

MVector BasisAlignment::to_abstract_coords(const MVector& matrix) const {
  if (matrix.size() != factor.size()) throw DimensionError("alignment: dimension mismatch");
  MVector out(matrix.size());
  for (std::size_t k = 0; k < factor.size(); ++k) out[k] = matrix[k] / factor[k];
  return out;
}

BasisAlignment align_basis(const RootSystem& rs, const StructureConstants& sc, const KillingForm& killing) {
  if (rs.family() != Family::A) throw DomainError("basis alignment is only defined for family A");
  const int n = rs.rank();
  const std::size_t positive = rs.num_positive();
  const auto eps = positive_eps_roots(n);
  for (std::size_t p = 0; p < positive; ++p) {
    if (!(eps_to_simple(n, eps[p]) == rs.root(p))) throw std::logic_error("eps-root order differs from rootsys order");
  }

  BasisAlignment align;
  align.n = n;
  align.root_sign.assign(positive, 0);
  std::vector<std::size_t> order(positive);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return rs.root(a).height() < rs.root(b).height(); });
  for (std::size_t p : order) {
    const Root& alpha = rs.root(p);
    if (alpha.height() == 1) {
      align.root_sign[p] = 1;
      continue;
    }
    // alpha = beta + alpha_i with beta positive: [E_beta, E_{alpha_i}] = N E_alpha
    for (int i = 0; i < n; ++i) {
      Coords c = alpha.coords();
      c[i] -= 1;
      auto beta = rs.index_of(c);
      if (!beta) continue;
      Coords simple(n, 0);
      simple[i] = 1;
      const std::size_t s = *rs.index_of(simple);
      const int nbs = sc.n(*beta, s);
      const EpsRoot eb = eps[*beta];
      const SuElement m = commutator(align.root_sign[*beta] * unit(n, eb.i, eb.j), unit(n, i + 1, i + 2));
      const double kappa = m(eps[p].i - 1, eps[p].j - 1).real();
      align.root_sign[p] = static_cast<int>(std::lround(kappa / nbs));
      break;
    }
    if (std::abs(align.root_sign[p]) != 1) throw std::logic_error("basis alignment: sign not determined");
  }

  const auto basis = su_m_basis(n);
  const MBasis mbasis = build_m_basis(rs);
  align.factor.resize(2 * positive);
  for (std::size_t k = 0; k < mbasis.dim(); ++k) {
    const auto e = mbasis.expand(rs, k);
    const double abstract_norm = killing(e, e).real();
    const double matrix_norm = su_killing(n, basis[k], basis[k]);
    align.factor[k] = align.root_sign[mbasis.entry(k).positive_index] * std::sqrt(abstract_norm / matrix_norm);
  }
  return align;
}

SuElement chevalley_to_matrix(const RootSystem& rs, const BasisAlignment& align, const LieElement& x) {
  const int n = rs.rank();
  const std::size_t positive = rs.num_positive();
  const auto eps = positive_eps_roots(n);
  SuElement m = SuElement::Zero(n + 1, n + 1);
  for (int j = 0; j < n; ++j) {
    m(j, j) += x.cartan[j];
    m(j + 1, j + 1) -= x.cartan[j];
  }
  for (std::size_t p = 0; p < positive; ++p) {
    const double scale = std::abs(align.factor[2 * p]);
    const double s = align.root_sign[p] * scale;
    m(eps[p].i - 1, eps[p].j - 1) += s * x.roots[p];
    m(eps[p].j - 1, eps[p].i - 1) += s * x.roots[p + positive];
  }
  return m;
}

double bracket_table_residual(const RootSystem& rs, const StructureConstants& sc, const BasisAlignment& align) {
  const int l = rs.rank();
  std::vector<LieElement> elems;
  for (int i = 0; i < l; ++i) {
    auto h = LieElement::zero(rs);
    h.cartan[i] = 1.0;
    elems.push_back(h);
  }
  for (std::size_t a = 0; a < rs.num_roots(); ++a) elems.push_back(LieElement::root_vector(rs, a));
  const MBasis mbasis = build_m_basis(rs);
  for (std::size_t k = 0; k < mbasis.dim(); ++k) elems.push_back(mbasis.expand(rs, k));

  double worst = 0.0;
  for (const auto& a : elems) {
    const SuElement ma = chevalley_to_matrix(rs, align, a);
    for (const auto& b : elems) {
      const SuElement lhs = chevalley_to_matrix(rs, align, bracket(sc, a, b));
      const SuElement rhs = commutator(ma, chevalley_to_matrix(rs, align, b));
      worst = std::max(worst, (lhs - rhs).cwiseAbs().maxCoeff());
    }
  }
  return worst;
}

double killing_identity_residual(int n) {
  const auto basis = su_m_basis(n);
  double worst = 0.0;
  for (const auto& a : basis) {
    for (const auto& b : basis) {
      worst = std::max(worst, std::abs(su_killing_ad_trace(n, a, b) - su_killing(n, a, b)));
    }
  }
  return worst;
}

}  // namespace flagconn::su
