#include "flagconn/oracle.hpp"

#include <cmath>
#include <compare>

#include "flagconn/errors.hpp"

namespace flagconn {

CheckReport make_report(std::string name, double max_residual, double threshold,
                        std::optional<std::vector<std::size_t>> witness) {
  CheckReport r;
  r.check_name = std::move(name);
  r.max_residual = max_residual;
  r.threshold = threshold;
  r.passed = max_residual <= threshold;
  r.witness = std::move(witness);
  return r;
}

MVector u_oracle(const MBracketTable& table, const MetricGram& gram, const MVector& x, const MVector& y) {
  const std::size_t n = table.dim();
  if (gram.dim() != n || x.size() != n || y.size() != n) throw DimensionError("u_oracle: dimension mismatch");
  MVector out(n);
  for (std::size_t k = 0; k < n; ++k) {
    const MVector ek = MVector::unit(n, k);
    const double rhs = inner(gram, x, table.bracket(ek, y)) + inner(gram, table.bracket(ek, x), y);
    out[k] = rhs / (2.0 * gram.diagonal[k]);
  }
  return out;
}

MVector u_oracle(const RootSystem& rs, const StructureConstants& sc, const MetricGram& gram, const MVector& x,
                 const MVector& y) {
  const std::size_t n = 2 * rs.num_positive();
  if (gram.dim() != n || x.size() != n || y.size() != n) throw DimensionError("u_oracle: dimension mismatch");
  MVector out(n);
  for (std::size_t k = 0; k < n; ++k) {
    const MVector ek = MVector::unit(n, k);
    const double rhs = inner(gram, x, bracket_m(rs, sc, ek, y)) + inner(gram, bracket_m(rs, sc, ek, x), y);
    out[k] = rhs / (2.0 * gram.diagonal[k]);
  }
  return out;
}

CheckReport check_oracle_equivalence(const RootSystem& rs, const StructureConstants& sc, const MetricSpec& spec,
                                     double threshold) {
  const auto coeffs = resolve_coefficients(rs, spec);
  const MetricGram gram = build_metric(rs, killing_gram(rs, sc), spec);
  const MBracketTable table = m_bracket_table(rs, sc);
  const std::size_t n = table.dim();
  double worst = 0.0;
  std::optional<std::vector<std::size_t>> witness;
  for (std::size_t i = 0; i < n; ++i) {
    const MVector ei = MVector::unit(n, i);
    for (std::size_t j = 0; j < n; ++j) {
      const MVector ej = MVector::unit(n, j);
      const MVector closed = u_bilinear(rs, sc, coeffs, ei, ej);
      const MVector brute = u_oracle(table, gram, ei, ej);
      for (std::size_t k = 0; k < n; ++k) {
        const double r = std::abs(closed[k] - brute[k]);
        if (r > worst) {
          worst = r;
          witness = std::vector<std::size_t>{i, j, k};
        }
      }
    }
  }
  return make_report("oracle", worst, threshold, witness);
}

CheckReport check_torsion(const ConnectionTensor& tensor, const MBracketTable& table, double threshold) {
  const std::size_t n = tensor.dim();
  if (table.dim() != n) throw DimensionError("check_torsion: tensor and bracket table differ in dimension");
  double worst = 0.0;
  std::optional<std::vector<std::size_t>> witness;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        const double r = std::abs(tensor.at(i, j, k) - tensor.at(j, i, k) - table(i, j, k));
        if (r > worst) {
          worst = r;
          witness = std::vector<std::size_t>{i, j, k};
        }
      }
    }
  }
  return make_report("torsion", worst, threshold, witness);
}

CheckReport check_torsion(const ConnectionTensor& tensor, const RootSystem& rs, const StructureConstants& sc,
                          double threshold) {
  return check_torsion(tensor, m_bracket_table(rs, sc), threshold);
}

CheckReport check_metric_compat(const ConnectionTensor& tensor, const MetricGram& gram, double threshold) {
  const std::size_t n = tensor.dim();
  if (gram.dim() != n) throw DimensionError("check_metric_compat: tensor and metric differ in dimension");
  double worst = 0.0;
  std::optional<std::vector<std::size_t>> witness;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        // g diagonal: g(nabla_i e_j, e_k) = T(i,j,k) g_kk
        const double r = std::abs(tensor.at(i, j, k) * gram.diagonal[k] + gram.diagonal[j] * tensor.at(i, k, j));
        if (r > worst) {
          worst = r;
          witness = std::vector<std::size_t>{i, j, k};
        }
      }
    }
  }
  return make_report("metric", worst, threshold, witness);
}

CheckReport check_lemma2(const RootSystem& rs) {
  const auto& roots = rs.roots();
  auto below = [&](const Root& a1, const Root& a2) {
    return lex_compare(rs, abs_root(rs, a1), a2) == std::strong_ordering::less;
  };
  double worst = 0.0;
  std::optional<std::vector<std::size_t>> witness;
  for (std::size_t a = 0; a < roots.size(); ++a) {
    for (std::size_t b = 0; b < roots.size(); ++b) {
      const Root& alpha = roots[a];
      const Root& beta = roots[b];
      if (alpha == beta || alpha == -beta) continue;
      const int count = int(below(alpha, beta)) + int(below(beta, alpha)) + int(below(-alpha, -beta)) +
                        int(below(-beta, -alpha));
      const double r = std::abs(count - 1);
      if (r > worst) {
        worst = r;
        witness = std::vector<std::size_t>{a, b};
      }
    }
  }
  return make_report("lemma2", worst, 0.0, witness);
}

}  // namespace flagconn
