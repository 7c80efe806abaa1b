#include "flagconn/rootsys.hpp"

#include <algorithm>
#include <sstream>

#include "flagconn/errors.hpp"

namespace flagconn {

Family parse_family(const std::string& label) {
  if (label == "A" || label == "a") return Family::A;
  if (label == "B" || label == "b") return Family::B;
  if (label == "C" || label == "c") return Family::C;
  if (label == "D" || label == "d") return Family::D;
  throw ConfigError("unsupported root family '" + label + "' (expected A, B, C or D)");
}

std::string to_string(Family family) {
  switch (family) {
    case Family::A: return "A";
    case Family::B: return "B";
    case Family::C: return "C";
    case Family::D: return "D";
  }
  return "?";
}

Root::Root(Coords coords) : coords_(std::move(coords)) {
  bool any_pos = false;
  bool any_neg = false;
  for (int c : coords_) {
    any_pos |= c > 0;
    any_neg |= c < 0;
  }
  if (!any_pos && !any_neg) throw DomainError("the zero vector is not a root");
  if (any_pos && any_neg) throw DomainError("root coordinates must share one sign: " + str());
}

bool Root::is_positive() const {
  return std::any_of(coords_.begin(), coords_.end(), [](int c) { return c > 0; });
}

int Root::height() const {
  int h = 0;
  for (int c : coords_) h += c;
  return h;
}

Root Root::operator-() const {
  Coords neg(coords_.size());
  std::transform(coords_.begin(), coords_.end(), neg.begin(), [](int c) { return -c; });
  return Root(std::move(neg));
}

std::string Root::str() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < coords_.size(); ++i) os << (i ? "," : "") << coords_[i];
  os << ']';
  return os.str();
}

namespace {

struct SimpleData {
  std::vector<std::vector<int>> cartan;
  std::vector<int> norms;
};

int minimum_rank(Family family) {
  switch (family) {
    case Family::A: return 1;
    case Family::B:
    case Family::C: return 2;
    case Family::D: return 3;
  }
  return 1;
}

// Simple roots realized as
//   A_l: e_i - e_{i+1}
//   B_l: e_i - e_{i+1} (i < l), e_l
//   C_l: e_i - e_{i+1} (i < l), 2 e_l
//   D_l: e_i - e_{i+1} (i < l), e_{l-1} + e_l
// Squared lengths follow from the Euclidean form on that realization.
SimpleData simple_data(Family family, int l) {
  SimpleData d;
  d.cartan.assign(l, std::vector<int>(l, 0));
  d.norms.assign(l, 2);
  for (int i = 0; i < l; ++i) d.cartan[i][i] = 2;
  for (int i = 0; i + 1 < l; ++i) {
    d.cartan[i][i + 1] = -1;
    d.cartan[i + 1][i] = -1;
  }
  switch (family) {
    case Family::A: break;
    case Family::B:
      d.norms[l - 1] = 1;
      d.cartan[l - 2][l - 1] = -1;
      d.cartan[l - 1][l - 2] = -2;
      break;
    case Family::C:
      d.norms[l - 1] = 4;
      d.cartan[l - 2][l - 1] = -2;
      d.cartan[l - 1][l - 2] = -1;
      break;
    case Family::D:
      d.cartan[l - 2][l - 1] = 0;
      d.cartan[l - 1][l - 2] = 0;
      d.cartan[l - 3][l - 1] = -1;
      d.cartan[l - 1][l - 3] = -1;
      break;
  }
  return d;
}

}  // namespace

std::size_t expected_positive_count(Family family, int rank) {
  const auto l = static_cast<std::size_t>(rank);
  switch (family) {
    case Family::A: return l * (l + 1) / 2;
    case Family::B:
    case Family::C: return l * l;
    case Family::D: return l * (l - 1);
  }
  return 0;
}

RootSystem build_root_system(Family family, int rank) {
  if (rank < minimum_rank(family)) {
    throw ConfigError("rank " + std::to_string(rank) + " is below the minimum " +
                      std::to_string(minimum_rank(family)) + " for family " + to_string(family));
  }
  RootSystem rs;
  rs.family_ = family;
  rs.rank_ = rank;
  auto data = simple_data(family, rank);
  rs.cartan_ = std::move(data.cartan);
  rs.simple_norms_ = std::move(data.norms);

  // Closure by height layers. For a positive root beta and simple alpha_i,
  // the alpha_i-string through beta is beta - p alpha_i, ..., beta + q alpha_i
  // with p - q = <beta, alpha_i^vee>; p is read from the roots already found.
  std::map<Coords, int> found;
  std::vector<Coords> layer;
  for (int i = 0; i < rank; ++i) {
    Coords c(rank, 0);
    c[i] = 1;
    layer.push_back(c);
    found.emplace(c, 1);
  }
  std::vector<Coords> positives = layer;
  while (!layer.empty()) {
    std::vector<Coords> next;
    for (const auto& beta : layer) {
      for (int i = 0; i < rank; ++i) {
        int p = 0;
        Coords probe = beta;
        while (true) {
          probe[i] -= 1;
          if (!found.count(probe)) break;
          ++p;
        }
        const int q = p - rs.pairing(beta, i);
        if (q <= 0) continue;
        Coords up = beta;
        up[i] += 1;
        if (found.emplace(up, 1).second) next.push_back(up);
      }
    }
    positives.insert(positives.end(), next.begin(), next.end());
    layer = std::move(next);
  }
  std::sort(positives.begin(), positives.end());

  const std::size_t count = positives.size();
  for (const auto& c : positives) rs.positive_.emplace_back(c);
  rs.all_ = rs.positive_;
  for (const auto& r : rs.positive_) rs.all_.push_back(-r);
  for (std::size_t k = 0; k < rs.all_.size(); ++k) {
    rs.lookup_.emplace(rs.all_[k].coords(), k);
    rs.norms_.push_back(rs.inner(rs.all_[k].coords(), rs.all_[k].coords()));
  }

  const std::size_t n = rs.all_.size();
  rs.sum_table_.assign(n * n, -1);
  Coords sum(rank);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      for (int i = 0; i < rank; ++i) sum[i] = rs.all_[a][i] + rs.all_[b][i];
      if (auto idx = rs.index_of(sum)) rs.sum_table_[a * n + b] = static_cast<int>(*idx);
    }
  }
  if (count != expected_positive_count(family, rank)) {
    throw std::logic_error("root closure produced " + std::to_string(count) +
                           " positive roots for " + to_string(family) + std::to_string(rank));
  }
  return rs;
}

std::vector<Root> RootSystem::simple_roots() const {
  std::vector<Root> out;
  for (int i = 0; i < rank_; ++i) {
    Coords c(rank_, 0);
    c[i] = 1;
    out.emplace_back(std::move(c));
  }
  return out;
}

std::optional<std::size_t> RootSystem::index_of(std::span<const int> coords) const {
  if (coords.size() != static_cast<std::size_t>(rank_)) return std::nullopt;
  auto it = lookup_.find(Coords(coords.begin(), coords.end()));
  if (it == lookup_.end()) return std::nullopt;
  return it->second;
}

std::size_t RootSystem::require_index(const Root& r) const {
  if (r.size() != static_cast<std::size_t>(rank_)) {
    throw DimensionError("root " + r.str() + " has length " + std::to_string(r.size()) +
                         ", expected " + std::to_string(rank_));
  }
  auto idx = index_of(r);
  if (!idx) throw DomainError(r.str() + " is not a root of " + to_string(family_) + std::to_string(rank_));
  return *idx;
}

std::size_t RootSystem::negate_index(std::size_t index) const {
  const std::size_t p = positive_.size();
  return index < p ? index + p : index - p;
}

std::size_t RootSystem::abs_index(std::size_t index) const {
  const std::size_t p = positive_.size();
  return index < p ? index : index - p;
}

std::optional<std::size_t> RootSystem::sum_index(std::size_t a, std::size_t b) const {
  const int s = sum_table_[a * all_.size() + b];
  if (s < 0) return std::nullopt;
  return static_cast<std::size_t>(s);
}

int RootSystem::inner(std::span<const int> a, std::span<const int> b) const {
  int total = 0;
  for (int i = 0; i < rank_; ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; j < rank_; ++j) {
      // (alpha_i, alpha_j) = A_ij |alpha_i|^2 / 2
      total += a[i] * b[j] * cartan_[i][j] * simple_norms_[i] / 2;
    }
  }
  return total;
}

int RootSystem::pairing(std::span<const int> beta, int simple) const {
  int total = 0;
  for (int j = 0; j < rank_; ++j) total += beta[j] * cartan_[simple][j];
  return total;
}

std::strong_ordering lex_compare(const RootSystem& rs, std::span<const int> gamma,
                                 std::span<const int> delta) {
  const auto l = static_cast<std::size_t>(rs.rank());
  if (gamma.size() != l || delta.size() != l) {
    throw DimensionError("lex_compare: coordinate length mismatch (rank " + std::to_string(l) + ")");
  }
  for (std::size_t i = 0; i < l; ++i) {
    if (gamma[i] != delta[i]) return gamma[i] <=> delta[i];
  }
  return std::strong_ordering::equal;
}

std::strong_ordering lex_compare(const RootSystem& rs, const Root& gamma, const Root& delta) {
  return lex_compare(rs, std::span<const int>(gamma.coords()), std::span<const int>(delta.coords()));
}

Root abs_root(const RootSystem& rs, const Root& gamma) {
  const std::size_t idx = rs.require_index(gamma);
  return rs.root(rs.abs_index(idx));
}

std::optional<Root> root_sum(const RootSystem& rs, const Root& alpha, const Root& beta) {
  auto s = rs.sum_index(rs.require_index(alpha), rs.require_index(beta));
  if (!s) return std::nullopt;
  return rs.root(*s);
}

}  // namespace flagconn
