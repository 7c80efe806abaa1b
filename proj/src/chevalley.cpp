#include "flagconn/chevalley.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>
#include <type_traits>

#include "flagconn/errors.hpp"

namespace flagconn {

LieElement to_complex(const ExactLieElement& x) {
  LieElement out;
  out.cartan.reserve(x.cartan.size());
  out.roots.reserve(x.roots.size());
  for (const auto& c : x.cartan) out.cartan.push_back(to_complex(c));
  for (const auto& c : x.roots) out.roots.push_back(to_complex(c));
  return out;
}

namespace {

// Exact a / b; throws when the division leaves a remainder.
int exact_div(long long a, long long b, const char* what) {
  if (b == 0 || a % b != 0) {
    throw std::logic_error(std::string("non-integral Chevalley constant in ") + what);
  }
  return static_cast<int>(a / b);
}

class ConstantSolver {
 public:
  explicit ConstantSolver(const RootSystem& rs)
      : rs_(rs), count_(rs.num_roots()), positive_(rs.num_positive()), pos_(count_ * count_, 0) {}

  void solve() {
    std::vector<std::size_t> order(positive_);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      return rs_.root(a).height() < rs_.root(b).height();
    });
    for (std::size_t rho : order) {
      // Special pairs (a, b), a < b positive, a + b = rho. Ascending a, so the
      // first pair found is extraspecial.
      bool have_extra = false;
      std::size_t xi = 0;
      std::size_t zeta = 0;
      for (std::size_t a = 0; a < positive_; ++a) {
        for (std::size_t b = a + 1; b < positive_; ++b) {
          auto s = rs_.sum_index(a, b);
          if (!s || *s != rho) continue;
          if (!have_extra) {
            have_extra = true;
            xi = a;
            zeta = b;
            set_positive(a, b, string_below(a, b) + 1);
          } else {
            set_positive(a, b, from_extraspecial(a, b, xi, zeta, rho));
          }
        }
      }
    }
  }

  // N_{a,b} for arbitrary roots, from the positive-pair table.
  int n(std::size_t a, std::size_t b) const {
    auto g = rs_.sum_index(a, b);
    if (!g) return 0;
    const bool pa = rs_.is_positive_index(a);
    const bool pb = rs_.is_positive_index(b);
    if (pa && pb) return pos_[a * count_ + b];
    if (!pa && !pb) return -n(rs_.negate_index(a), rs_.negate_index(b));
    if (!pa) return -n(b, a);
    // a > 0 > b. With a + b + (-g) = 0:
    //   N_{a,b} / (g,g) = N_{b,-g} / (a,a) = N_{-g,a} / (b,b)
    const long long gg = rs_.norm(*g);
    if (rs_.is_positive_index(*g)) {
      return exact_div(gg * n(b, rs_.negate_index(*g)), rs_.norm(a), "three-term relation");
    }
    return exact_div(gg * n(rs_.negate_index(*g), a), rs_.norm(b), "three-term relation");
  }

  int string_below(std::size_t alpha, std::size_t beta) const {
    const Root& a = rs_.root(alpha);
    Coords probe = rs_.root(beta).coords();
    int p = 0;
    while (true) {
      for (std::size_t i = 0; i < probe.size(); ++i) probe[i] -= a[i];
      if (!rs_.contains(probe)) return p;
      ++p;
    }
  }

 private:
  void set_positive(std::size_t a, std::size_t b, int value) {
    pos_[a * count_ + b] = value;
    pos_[b * count_ + a] = -value;
  }

  // Four-term relation on (a, b, -xi, -zeta):
  //   N_{a,b} N_{-xi,-zeta} / (rho,rho) + N_{b,-xi} N_{a,-zeta} / (b-xi,b-xi)
  //     + N_{-xi,a} N_{b,-zeta} / (a-xi,a-xi) = 0
  int from_extraspecial(std::size_t a, std::size_t b, std::size_t xi, std::size_t zeta,
                        std::size_t rho) const {
    const std::size_t mxi = rs_.negate_index(xi);
    const std::size_t mzeta = rs_.negate_index(zeta);
    long long t1_num = 0;
    long long t1_den = 1;
    if (auto s = rs_.sum_index(b, mxi)) {
      t1_num = static_cast<long long>(n(b, mxi)) * n(a, mzeta);
      t1_den = rs_.norm(*s);
    }
    long long t2_num = 0;
    long long t2_den = 1;
    if (auto s = rs_.sum_index(a, mxi)) {
      t2_num = static_cast<long long>(n(mxi, a)) * n(b, mzeta);
      t2_den = rs_.norm(*s);
    }
    const long long n_extra = pos_[xi * count_ + zeta];
    const long long num = rs_.norm(rho) * (t1_num * t2_den + t2_num * t1_den);
    const long long den = n_extra * t1_den * t2_den;
    const int value = exact_div(num, den, "four-term relation");
    if (std::abs(value) != string_below(a, b) + 1) {
      throw std::logic_error("Chevalley constant magnitude check failed");
    }
    return value;
  }

  const RootSystem& rs_;
  std::size_t count_;
  std::size_t positive_;
  std::vector<int> pos_;
};

template <class Scalar>
bool is_zero(const Scalar& s) {
  return s == Scalar{};
}

inline std::complex<double> to_complex_any(const GaussianInt& z) { return to_complex(z); }
inline std::complex<double> to_complex_any(const std::complex<double>& z) { return z; }

template <class Scalar>
Scalar scalar(int v) {
  if constexpr (std::is_same_v<Scalar, GaussianInt>) {
    return GaussianInt{v, 0};
  } else {
    return Scalar(v);
  }
}

}  // namespace

StructureConstants chevalley_constants(const RootSystem& rs) {
  const std::size_t count = rs.num_roots();
  const int l = rs.rank();
  ConstantSolver solver(rs);
  solver.solve();

  StructureConstants sc;
  sc.rank_ = l;
  sc.num_roots_ = count;
  sc.n_.assign(count * count, 0);
  sc.sum_.assign(count * count, -1);
  for (std::size_t a = 0; a < count; ++a) {
    for (std::size_t b = 0; b < count; ++b) {
      sc.n_[a * count + b] = solver.n(a, b);
      if (auto s = rs.sum_index(a, b)) sc.sum_[a * count + b] = static_cast<int>(*s);
    }
  }
  sc.cartan_action_.assign(static_cast<std::size_t>(l) * count, 0);
  for (int i = 0; i < l; ++i) {
    for (std::size_t a = 0; a < count; ++a) {
      sc.cartan_action_[i * count + a] = rs.pairing(rs.root(a).coords(), i);
    }
  }
  // alpha^vee = sum_j b_j (|alpha_j|^2 / |alpha|^2) alpha_j^vee
  sc.coroots_.resize(count);
  for (std::size_t a = 0; a < count; ++a) {
    const Root& r = rs.root(a);
    auto& h = sc.coroots_[a];
    h.resize(l);
    for (int j = 0; j < l; ++j) {
      h[j] = exact_div(static_cast<long long>(r[j]) * rs.simple_norms()[j], rs.norm(a), "coroot");
    }
  }
  return sc;
}

int structure_constant(const RootSystem& rs, const StructureConstants& sc, const Root& alpha,
                       const Root& beta) {
  return sc.n(rs.require_index(alpha), rs.require_index(beta));
}

template <class Scalar>
BasicLieElement<Scalar> bracket(const StructureConstants& sc, const BasicLieElement<Scalar>& x,
                                const BasicLieElement<Scalar>& y) {
  const std::size_t count = sc.num_roots();
  const int l = sc.rank();
  if (x.roots.size() != count || y.roots.size() != count || x.cartan.size() != static_cast<std::size_t>(l) ||
      y.cartan.size() != static_cast<std::size_t>(l)) {
    throw DimensionError("bracket: element dimensions do not match the structure constants");
  }
  const std::size_t positive = count / 2;
  BasicLieElement<Scalar> out{std::vector<Scalar>(l), std::vector<Scalar>(count)};
  for (std::size_t a = 0; a < count; ++a) {
    if (is_zero(x.roots[a])) continue;
    for (std::size_t b = 0; b < count; ++b) {
      if (is_zero(y.roots[b])) continue;
      const Scalar prod = x.roots[a] * y.roots[b];
      const std::size_t neg_a = a < positive ? a + positive : a - positive;
      if (b == neg_a) {
        const auto& h = sc.coroot(a);
        for (int j = 0; j < l; ++j) out.cartan[j] += prod * scalar<Scalar>(h[j]);
        continue;
      }
      const int nab = sc.n(a, b);
      if (nab == 0) continue;
      out.roots[static_cast<std::size_t>(sc.sum_index(a, b))] += prod * scalar<Scalar>(nab);
    }
  }
  for (std::size_t g = 0; g < count; ++g) {
    Scalar weight{};
    for (int i = 0; i < l; ++i) {
      const int act = sc.cartan_action(i, g);
      if (act == 0) continue;
      weight += (x.cartan[i] * y.roots[g] - y.cartan[i] * x.roots[g]) * scalar<Scalar>(act);
    }
    out.roots[g] += weight;
  }
  return out;
}


template ExactLieElement bracket(const StructureConstants&, const ExactLieElement&, const ExactLieElement&);
template LieElement bracket(const StructureConstants&, const LieElement&, const LieElement&);

namespace {

template <class Element>
std::complex<double> killing_eval(const KillingForm& kf, const Element& x, const Element& y) {
  const int l = kf.rank();
  auto coeff = [l](const Element& e, std::size_t i) {
    return i < static_cast<std::size_t>(l) ? to_complex_any(e.cartan[i]) : to_complex_any(e.roots[i - l]);
  };
  std::complex<double> total{};
  for (std::size_t i = 0; i < kf.dim(); ++i) {
    const auto xi = coeff(x, i);
    if (xi == std::complex<double>{}) continue;
    for (std::size_t j = 0; j < kf.dim(); ++j) {
      const auto b = kf.at(i, j);
      if (b == 0) continue;
      total += xi * coeff(y, j) * static_cast<double>(b);
    }
  }
  return total;
}

}  // namespace

std::complex<double> KillingForm::operator()(const LieElement& x, const LieElement& y) const {
  return killing_eval(*this, x, y);
}

std::complex<double> KillingForm::operator()(const ExactLieElement& x, const ExactLieElement& y) const {
  return killing_eval(*this, x, y);
}

KillingForm killing_gram(const RootSystem& rs, const StructureConstants& sc) {
  const int l = rs.rank();
  const std::size_t count = rs.num_roots();
  const std::size_t dim = l + count;

  auto basis = [&](std::size_t i) {
    auto e = ExactLieElement::zero(rs);
    if (i < static_cast<std::size_t>(l)) {
      e.cartan[i] = GaussianInt{1, 0};
    } else {
      e.roots[i - l] = GaussianInt{1, 0};
    }
    return e;
  };
  // ad[i] is the dim x dim integer matrix of ad(basis_i), row-major (row = output coordinate).
  std::vector<std::vector<std::int64_t>> ad(dim, std::vector<std::int64_t>(dim * dim, 0));
  for (std::size_t i = 0; i < dim; ++i) {
    const auto bi = basis(i);
    for (std::size_t c = 0; c < dim; ++c) {
      const auto out = bracket(sc, bi, basis(c));
      for (std::size_t r = 0; r < dim; ++r) {
        const GaussianInt& v = r < static_cast<std::size_t>(l) ? out.cartan[r] : out.roots[r - l];
        ad[i][r * dim + c] = v.re;
      }
    }
  }
  KillingForm kf;
  kf.dim_ = dim;
  kf.rank_ = l;
  kf.table_.assign(dim * dim, 0);
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = i; j < dim; ++j) {
      std::int64_t tr = 0;
      for (std::size_t r = 0; r < dim; ++r) {
        for (std::size_t c = 0; c < dim; ++c) tr += ad[i][r * dim + c] * ad[j][c * dim + r];
      }
      kf.table_[i * dim + j] = tr;
      kf.table_[j * dim + i] = tr;
    }
  }
  return kf;
}

MBasis build_m_basis(const RootSystem& rs) {
  MBasis basis;
  for (std::size_t p = 0; p < rs.num_positive(); ++p) {
    basis.entries_.push_back({p, MKind::U});
    basis.entries_.push_back({p, MKind::V});
  }
  return basis;
}

ExactLieElement MBasis::expand_exact(const RootSystem& rs, std::size_t k) const {
  const Entry& e = entries_.at(k);
  auto x = ExactLieElement::zero(rs);
  const std::size_t neg = rs.negate_index(e.positive_index);
  if (e.kind == MKind::U) {
    x.roots[e.positive_index] = {1, 0};
    x.roots[neg] = {-1, 0};
  } else {
    x.roots[e.positive_index] = {0, 1};
    x.roots[neg] = {0, 1};
  }
  return x;
}

LieElement MBasis::expand(const RootSystem& rs, std::size_t k) const {
  return to_complex(expand_exact(rs, k));
}

MVector& MVector::operator+=(const MVector& o) {
  if (o.size() != size()) throw DimensionError("MVector size mismatch");
  for (std::size_t k = 0; k < size(); ++k) coeffs_[k] += o.coeffs_[k];
  return *this;
}

MVector& MVector::operator-=(const MVector& o) {
  if (o.size() != size()) throw DimensionError("MVector size mismatch");
  for (std::size_t k = 0; k < size(); ++k) coeffs_[k] -= o.coeffs_[k];
  return *this;
}

MVector& MVector::operator*=(double s) {
  for (auto& c : coeffs_) c *= s;
  return *this;
}

double MVector::max_abs() const {
  double m = 0.0;
  for (double c : coeffs_) m = std::max(m, std::abs(c));
  return m;
}

double max_abs_diff(const MVector& a, const MVector& b) {
  if (a.size() != b.size()) throw DimensionError("MVector size mismatch");
  double m = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) m = std::max(m, std::abs(a[k] - b[k]));
  return m;
}

LieElement to_lie(const RootSystem& rs, const MVector& x) {
  const std::size_t positive = rs.num_positive();
  if (x.size() != 2 * positive) {
    throw DimensionError("MVector has " + std::to_string(x.size()) + " coordinates, expected " +
                         std::to_string(2 * positive));
  }
  auto out = LieElement::zero(rs);
  for (std::size_t p = 0; p < positive; ++p) {
    const double u = x[2 * p];
    const double v = x[2 * p + 1];
    out.roots[p] = {u, v};
    out.roots[p + positive] = {-u, v};
  }
  return out;
}

MVector project_m(const RootSystem& rs, const LieElement& x, double tolerance) {
  const std::size_t positive = rs.num_positive();
  if (x.roots.size() != rs.num_roots()) throw DimensionError("project_m: element dimension mismatch");
  MVector out(2 * positive);
  for (std::size_t p = 0; p < positive; ++p) {
    const auto plus = x.roots[p];
    const auto minus = x.roots[p + positive];
    if (std::abs(minus + std::conj(plus)) > tolerance) {
      throw RepresentationError("element is not in the compact real form at root " + rs.root(p).str());
    }
    out[2 * p] = 0.5 * (plus.real() - minus.real());
    out[2 * p + 1] = 0.5 * (plus.imag() + minus.imag());
  }
  return out;
}

std::complex<double> project_root_space(const RootSystem& rs, const LieElement& x, const Root& gamma) {
  return x.roots.at(rs.require_index(gamma));
}

MVector bracket_m(const RootSystem& rs, const StructureConstants& sc, const MVector& x, const MVector& y) {
  return project_m(rs, bracket(sc, to_lie(rs, x), to_lie(rs, y)));
}

MVector MBracketTable::bracket(const MVector& x, const MVector& y) const {
  if (x.size() != dim_ || y.size() != dim_) throw DimensionError("MBracketTable: dimension mismatch");
  MVector out(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    if (x[i] == 0.0) continue;
    for (std::size_t j = 0; j < dim_; ++j) {
      const double w = x[i] * y[j];
      if (w == 0.0) continue;
      const double* row = &data_[(i * dim_ + j) * dim_];
      for (std::size_t k = 0; k < dim_; ++k) out[k] += w * row[k];
    }
  }
  return out;
}

MVector MBracketTable::basis_bracket(std::size_t i, std::size_t j) const {
  const double* row = &data_[(i * dim_ + j) * dim_];
  return MVector(std::vector<double>(row, row + dim_));
}

MBracketTable m_bracket_table(const RootSystem& rs, const StructureConstants& sc) {
  const MBasis basis = build_m_basis(rs);
  const std::size_t dim = basis.dim();
  const std::size_t positive = rs.num_positive();
  std::vector<ExactLieElement> expanded;
  for (std::size_t k = 0; k < dim; ++k) expanded.push_back(basis.expand_exact(rs, k));

  MBracketTable table;
  table.dim_ = dim;
  table.data_.assign(dim * dim * dim, 0.0);
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = 0; j < dim; ++j) {
      const auto z = bracket(sc, expanded[i], expanded[j]);
      for (std::size_t p = 0; p < positive; ++p) {
        const GaussianInt plus = z.roots[p];
        const GaussianInt minus = z.roots[p + positive];
        if (minus.re != -plus.re || minus.im != plus.im) {
          throw std::logic_error("bracket of compact-form basis elements left the real form");
        }
        table.data_[(i * dim + j) * dim + 2 * p] = static_cast<double>(plus.re);
        table.data_[(i * dim + j) * dim + 2 * p + 1] = static_cast<double>(plus.im);
      }
    }
  }
  return table;
}

}  // namespace flagconn
