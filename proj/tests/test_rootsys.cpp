#include <doctest.h>

#include <algorithm>
#include <set>

#include "flagconn/errors.hpp"
#include "flagconn/rootsys.hpp"
#include "support.hpp"

using namespace flagconn;

namespace {

// Independent generation: orbit of the simple roots under the simple
// reflections s_i(b) = b - <b, alpha_i^vee> alpha_i, with the Cartan matrix
// written out by hand.
std::set<Coords> weyl_orbit(const std::vector<std::vector<int>>& cartan) {
  const int l = int(cartan.size());
  std::set<Coords> seen;
  std::vector<Coords> todo;
  for (int i = 0; i < l; ++i) {
    Coords e(l, 0);
    e[i] = 1;
    todo.push_back(e);
  }
  while (!todo.empty()) {
    Coords b = todo.back();
    todo.pop_back();
    if (!seen.insert(b).second) continue;
    for (int i = 0; i < l; ++i) {
      int pairing = 0;
      for (int j = 0; j < l; ++j) pairing += b[j] * cartan[i][j];
      Coords s = b;
      s[i] -= pairing;
      todo.push_back(s);
    }
  }
  return seen;
}

std::vector<std::vector<int>> hand_cartan(Family f, int l) {
  std::vector<std::vector<int>> a(l, std::vector<int>(l, 0));
  for (int i = 0; i < l; ++i) a[i][i] = 2;
  for (int i = 0; i + 1 < l; ++i) a[i][i + 1] = a[i + 1][i] = -1;
  if (f == Family::B) a[l - 1][l - 2] = -2;  // <alpha_{l-1}, alpha_l^vee>
  if (f == Family::C) a[l - 2][l - 1] = -2;
  if (f == Family::D) {
    a[l - 2][l - 1] = a[l - 1][l - 2] = 0;
    a[l - 3][l - 1] = a[l - 1][l - 3] = -1;
  }
  return a;
}

}  // namespace

TEST_CASE("small systems have the listed roots") {
  const auto a1 = build_root_system(Family::A, 1);
  CHECK(a1.num_positive() == 1);
  CHECK(a1.num_roots() == 2);

  const auto a2 = build_root_system(Family::A, 2);
  REQUIRE(a2.num_positive() == 3);
  CHECK(a2.positive_roots()[0] == Root({0, 1}));
  CHECK(a2.positive_roots()[1] == Root({1, 0}));
  CHECK(a2.positive_roots()[2] == Root({1, 1}));

  const auto b2 = build_root_system(Family::B, 2);
  CHECK(b2.num_positive() == 4);
  CHECK(b2.contains(Coords{1, 2}));
  CHECK_FALSE(b2.contains(Coords{2, 1}));
  const auto c2 = build_root_system(Family::C, 2);
  CHECK(c2.contains(Coords{2, 1}));
  CHECK_FALSE(c2.contains(Coords{1, 2}));
}

TEST_CASE("closure agrees with the Weyl orbit and the standard counts") {
  for (auto [f, l] : support::small_systems()) {
    CAPTURE(to_string(f));
    CAPTURE(l);
    const auto rs = build_root_system(f, l);
    CHECK(rs.cartan() == hand_cartan(f, l));
    std::set<Coords> got;
    for (const auto& r : rs.roots()) got.insert(r.coords());
    CHECK(got == weyl_orbit(hand_cartan(f, l)));
    const std::size_t expect = f == Family::A ? l * (l + 1) / 2 : f == Family::D ? l * (l - 1) : l * l;
    CHECK(rs.num_positive() == expect);
    CHECK(expected_positive_count(f, l) == expect);
  }
}

TEST_CASE("positive roots are in ascending lexicographic order and indices are consistent") {
  for (auto [f, l] : support::small_systems()) {
    const auto rs = build_root_system(f, l);
    const auto& pos = rs.positive_roots();
    for (std::size_t p = 0; p + 1 < pos.size(); ++p)
      CHECK(lex_compare(rs, pos[p], pos[p + 1]) == std::strong_ordering::less);
    for (std::size_t p = 0; p < rs.num_positive(); ++p) {
      CHECK(rs.root(rs.num_positive() + p) == -rs.root(p));
      CHECK(rs.negate_index(p) == rs.num_positive() + p);
      CHECK(rs.abs_index(rs.num_positive() + p) == p);
    }
    for (std::size_t i = 0; i < rs.num_roots(); ++i) CHECK(rs.index_of(rs.root(i)) == i);
  }
}

TEST_CASE("lex_compare examples") {
  const auto a2 = build_root_system(Family::A, 2);
  const Root a1({1, 0}), a2r({0, 1}), s({1, 1});
  CHECK(lex_compare(a2, a1, s) == std::strong_ordering::less);
  CHECK(lex_compare(a2, a2r, a1) == std::strong_ordering::less);
  CHECK(lex_compare(a2, -a1, a2r) == std::strong_ordering::less);
  CHECK(lex_compare(a2, s, s) == std::strong_ordering::equal);
}

TEST_CASE("lex order is a strict total order compatible with positivity of differences") {
  for (auto [f, l] : support::small_systems()) {
    if (l > 3) continue;
    const auto rs = build_root_system(f, l);
    const auto& R = rs.roots();
    for (const auto& g : R) {
      for (const auto& d : R) {
        const auto gd = lex_compare(rs, g, d);
        CHECK(lex_compare(rs, d, g) == 0 <=> gd);
        CHECK((gd == 0) == (g == d));
        for (const auto& e : R)
          if (gd < 0 && lex_compare(rs, d, e) < 0) CHECK(lex_compare(rs, g, e) < 0);
        Coords diff(l);
        for (int i = 0; i < l; ++i) diff[i] = g[i] - d[i];
        if (rs.contains(diff)) CHECK((gd > 0) == Root(diff).is_positive());
      }
    }
  }
}

TEST_CASE("abs_root and root_sum") {
  const auto a2 = build_root_system(Family::A, 2);
  CHECK(abs_root(a2, Root({-1, -1})) == Root({1, 1}));
  CHECK(abs_root(a2, Root({0, 1})) == Root({0, 1}));
  CHECK(root_sum(a2, Root({1, 0}), Root({0, 1})) == Root({1, 1}));
  CHECK_FALSE(root_sum(a2, Root({1, 0}), Root({1, 0})).has_value());
  CHECK_FALSE(root_sum(a2, Root({1, 0}), Root({-1, 0})).has_value());
  CHECK_FALSE(root_sum(a2, Root({1, 1}), Root({1, 0})).has_value());

  for (auto [f, l] : support::small_systems()) {
    const auto rs = build_root_system(f, l);
    for (const auto& g : rs.roots()) {
      CHECK(abs_root(rs, g).is_positive());
      CHECK((abs_root(rs, g) == g || abs_root(rs, g) == -g));
      for (const auto& d : rs.roots()) CHECK(root_sum(rs, g, d) == root_sum(rs, d, g));
    }
  }
}

TEST_CASE("rootsys error paths") {
  CHECK_THROWS_AS(build_root_system(Family::A, 0), ConfigError);
  CHECK_THROWS_AS(build_root_system(Family::B, 1), ConfigError);
  CHECK_THROWS_AS(build_root_system(Family::C, 1), ConfigError);
  CHECK_THROWS_AS(build_root_system(Family::D, 2), ConfigError);
  CHECK_THROWS_AS(parse_family("G"), ConfigError);
  CHECK_THROWS_AS(Root({1, -1}), DomainError);
  CHECK_THROWS_AS(Root({0, 0}), DomainError);
  const auto a2 = build_root_system(Family::A, 2);
  const Coords three{1, 0, 0};
  const Coords two{1, 0};
  CHECK_THROWS_AS(lex_compare(a2, three, two), DimensionError);
  CHECK_THROWS_AS(abs_root(a2, Root({2, 0})), DomainError);
  CHECK_THROWS_AS(root_sum(a2, Root({1, 0, 0}), Root({1, 0})), DimensionError);
}
