// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <limits>
#include <random>
#include <string>

#include "flagconn/connection.hpp"
#include "flagconn/job.hpp"
#include "flagconn/oracle.hpp"
#include "flagconn/su_realization.hpp"
#include "support.hpp"

using namespace flagconn;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

int failures = 0;

void report(bool ok, const char* name, const std::string& detail) {
  std::printf("%s %-28s %s\n", ok ? "PASS" : "FAIL", name, detail.c_str());
  std::fflush(stdout);
  if (!ok) ++failures;
}

std::string fmt(const char* f, double a, double b = 0.0, double c = 0.0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, f, a, b, c);
  return buf;
}

constexpr int kSeeds = 5;

void closed_form_vs_oracle() {
  const auto t0 = Clock::now();
  double worst = 0.0;
  for (auto [f, l] : support::sweep_systems()) {
    const auto rs = build_root_system(f, l);
    const auto sc = chevalley_constants(rs);
    for (int s = 0; s < kSeeds; ++s)
      worst = std::max(worst, check_oracle_equivalence(rs, sc, MetricSpec::random(rs, s)).max_residual);
  }
  const double dt = seconds_since(t0);
  report(worst <= 1e-9 && dt < 30.0, "closed-form-vs-oracle", fmt("max_residual=%.3g elapsed=%.2fs", worst, dt));
}

void levi_civita_properties() {
  double torsion = 0.0, metric = 0.0;
  bool control_caught = true;
  std::mt19937_64 rng(2024);
  for (auto [f, l] : support::sweep_systems()) {
    const auto rs = build_root_system(f, l);
    const auto sc = chevalley_constants(rs);
    const auto kf = killing_gram(rs, sc);
    const auto table = m_bracket_table(rs, sc);
    for (int s = 0; s < kSeeds; ++s) {
      const auto spec = MetricSpec::random(rs, s);
      const auto gram = build_metric(rs, kf, spec);
      auto t = assemble_tensor(rs, sc, spec);
      torsion = std::max(torsion, check_torsion(t, table).max_residual);
      metric = std::max(metric, check_metric_compat(t, gram).max_residual);

      // Torsion cannot see a diagonal entry (i, i, k); metric compatibility can,
      // so the control asks that the pair of checks rejects the tensor.
      std::uniform_int_distribution<std::size_t> pick(0, t.dim() - 1);
      t.at(pick(rng), pick(rng), pick(rng)) += 0.1;
      control_caught = control_caught && (!check_torsion(t, table).passed || !check_metric_compat(t, gram).passed);
    }
  }
  report(torsion <= 1e-9 && metric <= 1e-9 && control_caught, "levi-civita-properties",
         fmt("torsion=%.3g metric=%.3g", torsion, metric) + (control_caught ? " perturbation=rejected"
                                                                             : " perturbation=ACCEPTED"));
}

void root_pair_zero_off_roots() {
  const auto rs = build_root_system(Family::A, 3);
  const auto sc = chevalley_constants(rs);
  const auto spec = MetricSpec::random(rs, 3);
  const auto zero = LieElement::zero(rs);
  std::mt19937_64 rng(77);
  int pairs = 0, nonzero = 0;
  for (const auto& g : rs.roots()) {
    for (const auto& d : rs.roots()) {
      if (root_sum(rs, g, d)) continue;
      ++pairs;
      const auto u = u_root_pair(rs, sc, spec, support::random_complex(rng), support::random_complex(rng), g, d);
      if (!(u == zero)) ++nonzero;
    }
  }
  report(nonzero == 0 && pairs > 0, "root-pair-zero-off-roots",
         fmt("pairs=%g nonzero=%g", double(pairs), double(nonzero)));
}

void normal_metric_u_vanishes() {
  double worst = 0.0;
  for (auto [f, l] : support::sweep_systems()) {
    const auto rs = build_root_system(f, l);
    const auto sc = chevalley_constants(rs);
    const auto table = m_bracket_table(rs, sc);
    for (double c : {1.0, 2.75}) {
      const auto t = assemble_tensor(rs, sc, MetricSpec::normal(rs, c));
      const std::size_t n = t.dim();
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          for (std::size_t k = 0; k < n; ++k) worst = std::max(worst, std::abs(t.at(i, j, k) - 0.5 * table(i, j, k)));
    }
  }
  report(worst <= 1e-12, "normal-metric-u-vanishes", fmt("max_abs_u=%.3g", worst));
}

void lemma2_unique_candidate() {
  const auto a3 = check_lemma2(build_root_system(Family::A, 3));
  const auto b3 = check_lemma2(build_root_system(Family::B, 3));
  report(a3.passed && b3.passed, "lemma2-unique-candidate",
         fmt("A3_max_deviation=%g B3_max_deviation=%g", a3.max_residual, b3.max_residual));
}

void su_cross_check() {
  double vs_closed = 0.0, vs_oracle = 0.0;
  std::mt19937_64 rng(99);
  for (int n : {2, 3}) {
    const auto rs = build_root_system(Family::A, n);
    const auto sc = chevalley_constants(rs);
    const auto kf = killing_gram(rs, sc);
    const auto align = su::align_basis(rs, sc, kf);
    const auto table = m_bracket_table(rs, sc);
    const std::size_t dim = table.dim();
    for (int s = 0; s < kSeeds; ++s) {
      const auto spec = MetricSpec::random(rs, s);
      const auto coeffs = resolve_coefficients(rs, spec);
      const auto em = su::to_eps_metric(n, spec);
      const auto gram = build_metric(rs, kf, spec);
      auto compare = [&](const MVector& x, const MVector& y) {
        const auto got =
            align.to_abstract_coords(su::u_sun(n, em, align.to_matrix_coords(x), align.to_matrix_coords(y)));
        vs_closed = std::max(vs_closed, max_abs_diff(got, u_bilinear(rs, sc, coeffs, x, y)));
        vs_oracle = std::max(vs_oracle, max_abs_diff(got, u_oracle(table, gram, x, y)));
      };
      for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j) compare(MVector::unit(dim, i), MVector::unit(dim, j));
      for (int t = 0; t < 10; ++t) compare(support::random_mvector(rng, dim), support::random_mvector(rng, dim));
    }
  }

  const auto c = su::su3_coefficients(1.0, 2.0, 3.0);
  const double coeff_err =
      std::max({std::abs(c[0] - 0.5), std::abs(c[1] - 0.5), std::abs(c[2] - 1.0 / 6.0)});

  double su3_vs_sun = 0.0;
  std::uniform_real_distribution<double> cdist(0.5, 5.0);
  for (int t = 0; t < 20; ++t) {
    const double c1 = cdist(rng), c2 = cdist(rng), c3 = cdist(rng);
    su::EpsMetric em;
    em.set({1, 2}, c1);
    em.set({1, 3}, c2);
    em.set({2, 3}, c3);
    const auto x = support::random_mvector(rng, 6), y = support::random_mvector(rng, 6);
    su3_vs_sun = std::max(su3_vs_sun, max_abs_diff(su::u_su3(c1, c2, c3, x, y), su::u_sun(2, em, x, y)));
  }
  const double eps = std::numeric_limits<double>::epsilon();
  const bool ok = vs_closed <= 1e-9 && vs_oracle <= 1e-9 && coeff_err <= eps && su3_vs_sun <= 16 * eps;
  report(ok, "su-cross-check",
         fmt("u_sun_vs_closed=%.3g u_sun_vs_oracle=%.3g", vs_closed, vs_oracle) +
             fmt(" su3_coeff_err=%.3g u_su3_vs_u_sun=%.3g", coeff_err, su3_vs_sun));
}

void brackets_and_jacobi() {
  double table_residual = 0.0;
  for (int n : {2, 3}) {
    const auto rs = build_root_system(Family::A, n);
    const auto sc = chevalley_constants(rs);
    table_residual = std::max(table_residual, su::bracket_table_residual(rs, sc, su::align_basis(rs, sc, killing_gram(rs, sc))));
  }

  long long triples = 0, violations = 0;
  for (auto [f, l] : support::small_systems()) {
    const auto rs = build_root_system(f, l);
    const auto sc = chevalley_constants(rs);
    std::vector<ExactLieElement> basis;
    for (int i = 0; i < rs.rank(); ++i) {
      auto h = ExactLieElement::zero(rs);
      h.cartan[i] = {1, 0};
      basis.push_back(h);
    }
    for (std::size_t a = 0; a < rs.num_roots(); ++a) basis.push_back(ExactLieElement::root_vector(rs, a, {1, 0}));
    const auto zero = ExactLieElement::zero(rs);
    for (const auto& x : basis)
      for (const auto& y : basis)
        for (const auto& z : basis) {
          ++triples;
          const auto j = bracket(sc, x, bracket(sc, y, z)) + bracket(sc, y, bracket(sc, z, x)) +
                         bracket(sc, z, bracket(sc, x, y));
          if (!(j == zero)) ++violations;
        }
  }
  report(table_residual <= 1e-12 && violations == 0, "brackets-and-jacobi",
         fmt("su_table_residual=%.3g jacobi_triples=%g violations=%g", table_residual, double(triples),
             double(violations)));
}

void a3_pipeline_time() {
  const auto t0 = Clock::now();
  JobConfig cfg;
  cfg.family = "A";
  cfg.rank = 3;
  cfg.source = CoefficientSource::Random;
  cfg.seed = 1;
  const auto result = execute(cfg);
  const auto doc = render_json(result);
  const double dt = seconds_since(t0);
  report(result.all_passed() && dt < 10.0 && !doc.empty(), "a3-pipeline-time",
         fmt("checks=%g elapsed=%.3fs", double(result.reports.size()), dt));
}

}  // namespace

int main() {
  closed_form_vs_oracle();
  levi_civita_properties();
  root_pair_zero_off_roots();
  normal_metric_u_vanishes();
  lemma2_unique_candidate();
  su_cross_check();
  brackets_and_jacobi();
  a3_pipeline_time();
  return failures == 0 ? 0 : 1;
}
