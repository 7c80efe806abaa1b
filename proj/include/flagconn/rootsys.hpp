#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace flagconn {

enum class Family { A, B, C, D };

Family parse_family(const std::string& label);
std::string to_string(Family family);

/// Lattice point written over the simple roots.
using Coords = std::vector<int>;

/// A root written over the simple-root basis. Coordinates are nonzero and
/// sign-coherent (all >= 0 or all <= 0).
class Root {
 public:
  explicit Root(Coords coords);

  const Coords& coords() const { return coords_; }
  std::size_t size() const { return coords_.size(); }
  int operator[](std::size_t i) const { return coords_[i]; }

  bool is_positive() const;
  int height() const;

  Root operator-() const;

  friend bool operator==(const Root&, const Root&) = default;

  std::string str() const;

 private:
  Coords coords_;
};

/// Reduced root system of classical type with Bourbaki numbering of the
/// simple roots. Immutable once built.
///
/// Roots carry a dense index: positive roots occupy 0..P-1 in ascending
/// lexicographic order, and the negative of positive root p is P + p.
class RootSystem {
 public:
  Family family() const { return family_; }
  int rank() const { return rank_; }

  /// Cartan matrix, cartan()[i][j] = <alpha_j, alpha_i^vee>.
  const std::vector<std::vector<int>>& cartan() const { return cartan_; }
  /// Squared lengths of the simple roots in the Euclidean realization listed in rootsys.cpp.
  const std::vector<int>& simple_norms() const { return simple_norms_; }

  std::vector<Root> simple_roots() const;
  const std::vector<Root>& positive_roots() const { return positive_; }
  const std::vector<Root>& roots() const { return all_; }

  std::size_t num_positive() const { return positive_.size(); }
  std::size_t num_roots() const { return all_.size(); }

  const Root& root(std::size_t index) const { return all_[index]; }
  std::optional<std::size_t> index_of(std::span<const int> coords) const;
  std::optional<std::size_t> index_of(const Root& r) const { return index_of(r.coords()); }
  /// Like index_of but throws DomainError for a vector that is not a root.
  std::size_t require_index(const Root& r) const;
  bool contains(std::span<const int> coords) const { return index_of(coords).has_value(); }

  bool is_positive_index(std::size_t index) const { return index < positive_.size(); }
  std::size_t negate_index(std::size_t index) const;
  std::size_t abs_index(std::size_t index) const;

  /// Index of root(a) + root(b) when that sum is a root.
  std::optional<std::size_t> sum_index(std::size_t a, std::size_t b) const;

  /// Invariant symmetric form (alpha, beta), scaled so that every value is an integer.
  int inner(std::span<const int> a, std::span<const int> b) const;
  int norm(std::size_t index) const { return norms_[index]; }

  /// <beta, alpha_i^vee>, the eigenvalue of the simple coroot h_i on E_beta.
  int pairing(std::span<const int> beta, int simple) const;

 private:
  friend RootSystem build_root_system(Family family, int rank);

  Family family_{};
  int rank_{};
  std::vector<std::vector<int>> cartan_;
  std::vector<int> simple_norms_;
  std::vector<Root> positive_;
  std::vector<Root> all_;
  std::vector<int> norms_;
  std::map<Coords, std::size_t> lookup_;
  std::vector<int> sum_table_;  // (2P)^2, -1 when absent
};

/// Generates the system by closure from the simple roots, using root-string
/// lengths read off the Cartan matrix.
RootSystem build_root_system(Family family, int rank);

/// Positive root count for the family: A_l l(l+1)/2, B_l and C_l l^2, D_l l(l-1).
std::size_t expected_positive_count(Family family, int rank);

/// Lexicographic order on the root lattice: gamma > delta iff the first
/// nonzero coordinate of gamma - delta is positive.
std::strong_ordering lex_compare(const RootSystem& rs, std::span<const int> gamma,
                                 std::span<const int> delta);
std::strong_ordering lex_compare(const RootSystem& rs, const Root& gamma, const Root& delta);

/// |gamma|: gamma if positive, else -gamma.
Root abs_root(const RootSystem& rs, const Root& gamma);

/// alpha + beta when the sum is a root, otherwise empty.
std::optional<Root> root_sum(const RootSystem& rs, const Root& alpha, const Root& beta);

}  // namespace flagconn
