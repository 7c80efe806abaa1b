#include <doctest.h>

#include <cmath>
#include <random>

#include "flagconn/errors.hpp"
#include "flagconn/metric.hpp"
#include "support.hpp"

using namespace flagconn;

TEST_CASE("normal metric on A2 is -B on m") {
  const auto rs = build_root_system(Family::A, 2);
  const auto kf = killing_gram(rs, chevalley_constants(rs));
  const auto g = build_metric(rs, kf, MetricSpec::normal(rs));
  // -B(U, U) = 2 B(E_a, E_-a) = 12 for su(3)
  for (double d : g.diagonal) CHECK(d == 12.0);
  CHECK(inner(g, MVector::unit(6, 0), MVector::unit(6, 1)) == 0.0);
}

TEST_CASE("scaling one coefficient scales exactly its two basis entries") {
  const auto rs = build_root_system(Family::B, 3);
  const auto kf = killing_gram(rs, chevalley_constants(rs));
  const auto base = build_metric(rs, kf, MetricSpec::normal(rs));
  MetricSpec spec = MetricSpec::normal(rs);
  spec.set(rs.positive_roots()[4], 3.5);
  const auto g = build_metric(rs, kf, spec);
  for (std::size_t k = 0; k < g.dim(); ++k) {
    const double factor = (k / 2 == 4) ? 3.5 : 1.0;
    CHECK(g.diagonal[k] == doctest::Approx(factor * base.diagonal[k]).epsilon(1e-15));
  }
}

TEST_CASE("inner product: symmetry, positivity, Cauchy-Schwarz") {
  std::mt19937_64 rng(17);
  for (auto [f, l] : support::sweep_systems()) {
    const auto rs = build_root_system(f, l);
    const auto kf = killing_gram(rs, chevalley_constants(rs));
    for (std::uint64_t seed = 0; seed < 3; ++seed) {
      const auto g = build_metric(rs, kf, MetricSpec::random(rs, seed));
      for (double d : g.diagonal) CHECK(d > 0.0);
      for (int t = 0; t < 10; ++t) {
        const auto x = support::random_mvector(rng, g.dim()), y = support::random_mvector(rng, g.dim());
        const double xy = inner(g, x, y);
        CHECK(xy == doctest::Approx(inner(g, y, x)));
        CHECK(inner(g, x, x) > 0.0);
        CHECK(xy * xy <= inner(g, x, x) * inner(g, y, y) * (1 + 1e-12));
      }
    }
  }
}

TEST_CASE("random metrics are seeded and in range") {
  const auto rs = build_root_system(Family::D, 4);
  const auto a = resolve_coefficients(rs, MetricSpec::random(rs, 42));
  const auto b = resolve_coefficients(rs, MetricSpec::random(rs, 42));
  const auto c = resolve_coefficients(rs, MetricSpec::random(rs, 43));
  CHECK(a == b);
  CHECK(a != c);
  for (double v : a) {
    CHECK(v >= 0.5);
    CHECK(v <= 5.0);
  }
}

TEST_CASE("metric error paths") {
  const auto rs = build_root_system(Family::A, 2);
  const auto kf = killing_gram(rs, chevalley_constants(rs));

  MetricSpec missing;
  missing.set(Root({1, 0}), 1.0);
  missing.set(Root({0, 1}), 1.0);
  CHECK_THROWS_WITH_AS(resolve_coefficients(rs, missing), doctest::Contains("[1,1]"), ConfigError);

  MetricSpec negative = MetricSpec::normal(rs);
  negative.set(Root({1, 1}), -2.0);
  CHECK_THROWS_AS(build_metric(rs, kf, negative), ConfigError);
  MetricSpec zero = MetricSpec::normal(rs);
  zero.set(Root({0, 1}), 0.0);
  CHECK_THROWS_AS(resolve_coefficients(rs, zero), ConfigError);

  MetricSpec extra = MetricSpec::normal(rs);
  extra.set(Root({-1, 0}), 1.0);
  CHECK_THROWS_AS(resolve_coefficients(rs, extra), ConfigError);

  const auto g = build_metric(rs, kf, MetricSpec::normal(rs));
  CHECK_THROWS_AS(inner(g, MVector(6), MVector(4)), DimensionError);
}
