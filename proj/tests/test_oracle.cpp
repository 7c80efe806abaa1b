#include <doctest.h>

#include <random>

#include "flagconn/errors.hpp"
#include "flagconn/oracle.hpp"
#include "support.hpp"

using namespace flagconn;

TEST_CASE("oracle: normal metric, diagonal arguments, symmetry") {
  std::mt19937_64 rng(41);
  for (auto [f, l] : support::sweep_systems()) {
    const auto rs = build_root_system(f, l);
    const auto sc = chevalley_constants(rs);
    const auto kf = killing_gram(rs, sc);
    const auto table = m_bracket_table(rs, sc);
    const std::size_t n = table.dim();
    const auto normal = build_metric(rs, kf, MetricSpec::normal(rs, 0.7));
    const auto g = build_metric(rs, kf, MetricSpec::random(rs, 9));
    const auto x = support::random_mvector(rng, n), y = support::random_mvector(rng, n);
    CHECK(u_oracle(table, normal, x, y).max_abs() <= 1e-12);
    for (std::size_t k = 0; k < n; ++k) {
      const auto e = MVector::unit(n, k);
      CHECK(u_oracle(table, g, e, e).max_abs() <= 1e-15);
    }
    const auto uxy = u_oracle(table, g, x, y);
    CHECK(max_abs_diff(uxy, u_oracle(table, g, y, x)) <= 1e-13);
    CHECK(max_abs_diff(uxy, u_oracle(rs, sc, g, x, y)) <= 1e-13);
  }
}

TEST_CASE("closed form agrees with the oracle") {
  for (auto [f, l] : {std::pair{Family::A, 2}, {Family::A, 3}, {Family::B, 2}}) {
    const auto rs = build_root_system(f, l);
    const auto sc = chevalley_constants(rs);
    for (std::uint64_t seed = 0; seed < 3; ++seed) {
      const auto r = check_oracle_equivalence(rs, sc, MetricSpec::random(rs, seed));
      CHECK(r.check_name == "oracle");
      CHECK(r.passed);
      CHECK(r.max_residual <= 1e-12);
    }
  }
}

TEST_CASE("torsion and metric checks pass on assembled tensors and catch a perturbation") {
  const auto rs = build_root_system(Family::A, 2);
  const auto sc = chevalley_constants(rs);
  const auto table = m_bracket_table(rs, sc);
  const auto kf = killing_gram(rs, sc);
  for (const auto& spec : {MetricSpec::normal(rs), MetricSpec::random(rs, 5)}) {
    auto t = assemble_tensor(rs, sc, spec);
    const auto gram = build_metric(rs, kf, spec);
    CHECK(check_torsion(t, table).passed);
    CHECK(check_torsion(t, rs, sc).passed);
    CHECK(check_metric_compat(t, gram).passed);

    t.at(1, 3, 4) += 0.1;
    const auto tor = check_torsion(t, table);
    const auto met = check_metric_compat(t, gram);
    CHECK_FALSE(tor.passed);
    CHECK_FALSE(met.passed);
    CHECK(tor.max_residual == doctest::Approx(0.1));
    REQUIRE(tor.witness.has_value());
    CHECK(tor.witness->size() == 3);
  }
  const auto b2 = build_root_system(Family::B, 2);
  const auto tb = assemble_tensor(b2, chevalley_constants(b2), MetricSpec::normal(b2));
  CHECK_THROWS_AS(check_torsion(tb, table), DimensionError);
}

TEST_CASE("lemma2 candidate count") {
  for (auto [f, l] : support::small_systems()) {
    if (l > 3) continue;
    const auto r = check_lemma2(build_root_system(f, l));
    CHECK(r.passed);
    CHECK(r.max_residual == 0.0);
    CHECK(r.threshold == 0.0);
  }
}

TEST_CASE("oracle dimension errors") {
  const auto rs = build_root_system(Family::A, 2);
  const auto sc = chevalley_constants(rs);
  const auto g = build_metric(rs, killing_gram(rs, sc), MetricSpec::normal(rs));
  CHECK_THROWS_AS(u_oracle(rs, sc, g, MVector(6), MVector(3)), DimensionError);
  CHECK_THROWS_AS(u_oracle(m_bracket_table(rs, sc), g, MVector(4), MVector(4)), DimensionError);
}
