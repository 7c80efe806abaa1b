#include "flagconn/connection.hpp"

#include <compare>

#include "flagconn/errors.hpp"

namespace flagconn {

ConnectionTensor::ConnectionTensor(MBasis basis, std::vector<double> data)
    : basis_(std::move(basis)), data_(std::move(data)) {
  const std::size_t n = basis_.dim();
  if (data_.size() != n * n * n) {
    throw DimensionError("ConnectionTensor: expected " + std::to_string(n * n * n) + " entries, got " +
                         std::to_string(data_.size()));
  }
}

MVector ConnectionTensor::column(std::size_t i, std::size_t j) const {
  const std::size_t n = dim();
  const double* row = &data_[(i * n + j) * n];
  return MVector(std::vector<double>(row, row + n));
}

std::pair<Root, Root> canonical_pair(const RootSystem& rs, const Root& alpha, const Root& beta) {
  rs.require_index(alpha);
  rs.require_index(beta);
  if (alpha == beta || alpha == -beta) {
    throw UndefinedPairError("canonical_pair: alpha = +-beta (" + alpha.str() + ", " + beta.str() + ")");
  }
  Root a1 = alpha;
  Root a2 = beta;
  if (!a2.is_positive()) {
    a1 = -a1;
    a2 = -a2;
  }
  if (lex_compare(rs, a1, a2) != std::strong_ordering::less) std::swap(a1, a2);
  if (lex_compare(rs, a1, -a2) == std::strong_ordering::greater) return {a1, a2};
  return {-a2, -a1};
}

namespace {

// Accumulates root-space coefficients of brackets between the root
// components of two m-vectors; Cartan parts never reach m and are dropped.
class ComponentBrackets {
 public:
  ComponentBrackets(const RootSystem& rs, const StructureConstants& sc, const MVector& x, const MVector& y)
      : rs_(rs), sc_(sc), x_(to_lie(rs, x)), y_(to_lie(rs, y)), acc_(LieElement::zero(rs)) {}

  // coeff * Z_a^b, roots by index.
  void add_z(std::size_t a, std::size_t b, double coeff) {
    const std::size_t na = rs_.negate_index(a);
    const std::size_t nb = rs_.negate_index(b);
    add(y_, b, x_, a, coeff);
    add(x_, b, y_, a, coeff);
    add(y_, nb, x_, na, coeff);
    add(x_, nb, y_, na, coeff);
  }

  MVector result() const { return project_m(rs_, acc_); }

 private:
  // coeff * [P_i E_i, Q_j E_j]
  void add(const LieElement& p, std::size_t i, const LieElement& q, std::size_t j, double coeff) {
    const int s = sc_.sum_index(i, j);
    if (s < 0) return;
    acc_.roots[static_cast<std::size_t>(s)] += coeff * static_cast<double>(sc_.n(i, j)) * p.roots[i] * q.roots[j];
  }

  const RootSystem& rs_;
  const StructureConstants& sc_;
  LieElement x_;
  LieElement y_;
  LieElement acc_;
};

void require_dim(const RootSystem& rs, const MVector& v) {
  if (v.size() != 2 * rs.num_positive()) {
    throw DimensionError("MVector has " + std::to_string(v.size()) + " coordinates, expected " +
                         std::to_string(2 * rs.num_positive()));
  }
}

}  // namespace

LieElement u_root_pair(const RootSystem& rs, const StructureConstants& sc, const MetricSpec& spec,
                       std::complex<double> x_coeff, std::complex<double> y_coeff, const Root& gamma,
                       const Root& delta) {
  const std::size_t g = rs.require_index(gamma);
  const std::size_t d = rs.require_index(delta);
  auto out = LieElement::zero(rs);
  const int s = sc.sum_index(g, d);
  if (s < 0) return out;
  const auto c = resolve_coefficients(rs, spec);
  const double coeff = (c[rs.abs_index(g)] - c[rs.abs_index(d)]) / (2.0 * c[rs.abs_index(static_cast<std::size_t>(s))]);
  // [Y_delta, X_gamma] = y x N_{delta,gamma} E_{gamma+delta}
  out.roots[static_cast<std::size_t>(s)] = coeff * static_cast<double>(sc.n(d, g)) * y_coeff * x_coeff;
  return out;
}

MVector z_term(const RootSystem& rs, const StructureConstants& sc, const MVector& x, const MVector& y,
               const Root& alpha, const Root& beta) {
  require_dim(rs, x);
  require_dim(rs, y);
  ComponentBrackets acc(rs, sc, x, y);
  acc.add_z(rs.require_index(alpha), rs.require_index(beta), 1.0);
  return acc.result();
}

MVector u_bilinear(const RootSystem& rs, const StructureConstants& sc, const std::vector<double>& c,
                   const MVector& x, const MVector& y) {
  require_dim(rs, x);
  require_dim(rs, y);
  if (c.size() != rs.num_positive()) throw DimensionError("u_bilinear: coefficient count mismatch");
  const std::size_t positive = rs.num_positive();
  ComponentBrackets acc(rs, sc, x, y);
  for (std::size_t a = 0; a < positive; ++a) {
    for (std::size_t b = 0; b < positive; ++b) {
      if (c[a] == c[b]) continue;
      // positive indices are in ascending lexicographic order
      if (a < b) {
        if (auto s = rs.sum_index(a, b)) acc.add_z(a, b, (c[a] - c[b]) / (2.0 * c[*s]));
      }
      if (auto d = rs.sum_index(b, rs.negate_index(a)); d && rs.is_positive_index(*d)) {
        acc.add_z(rs.negate_index(a), b, (c[a] - c[b]) / (2.0 * c[*d]));
      }
    }
  }
  return acc.result();
}

MVector u_bilinear(const RootSystem& rs, const StructureConstants& sc, const MetricSpec& spec,
                   const MVector& x, const MVector& y) {
  return u_bilinear(rs, sc, resolve_coefficients(rs, spec), x, y);
}

MVector nabla(const RootSystem& rs, const StructureConstants& sc, const MetricSpec& spec, const MVector& x,
              const MVector& y) {
  return 0.5 * bracket_m(rs, sc, x, y) + u_bilinear(rs, sc, spec, x, y);
}

ConnectionTensor assemble_tensor(const RootSystem& rs, const StructureConstants& sc, const MetricSpec& spec) {
  const auto c = resolve_coefficients(rs, spec);
  const MBracketTable table = m_bracket_table(rs, sc);
  MBasis basis = build_m_basis(rs);
  const std::size_t n = basis.dim();
  std::vector<double> data(n * n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    const MVector ei = MVector::unit(n, i);
    for (std::size_t j = 0; j < n; ++j) {
      const MVector u = u_bilinear(rs, sc, c, ei, MVector::unit(n, j));
      for (std::size_t k = 0; k < n; ++k) data[(i * n + j) * n + k] = 0.5 * table(i, j, k) + u[k];
    }
  }
  return ConnectionTensor(std::move(basis), std::move(data));
}

}  // namespace flagconn
