#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace specrep {

/// Integer partition, doubling as a Young diagram. Parts are stored weakly
/// decreasing with no trailing zeros; the empty partition is the unique
/// partition of 0.
class Partition {
public:
  Partition() = default;

  explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (parts_[i] < 1)
        throw std::invalid_argument("partition parts must be positive");
      if (i > 0 && parts_[i] > parts_[i - 1])
        throw std::invalid_argument("partition parts must be weakly decreasing");
      n_ += parts_[i];
    }
  }

  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  /// Builds a partition from an unordered multiset of positive integers.
  static Partition from_multiset(std::vector<int> parts) {
    std::sort(parts.begin(), parts.end(), std::greater<>());
    return Partition(std::move(parts));
  }

  const std::vector<int>& parts() const noexcept { return parts_; }
  int size() const noexcept { return n_; }
  int length() const noexcept { return static_cast<int>(parts_.size()); }
  bool empty() const noexcept { return parts_.empty(); }

  /// Row length with 1-based row index; zero beyond the last row.
  int row(int i) const noexcept {
    return (i >= 1 && i <= length()) ? parts_[static_cast<std::size_t>(i - 1)] : 0;
  }

  auto operator<=>(const Partition& other) const = default;
  bool operator==(const Partition& other) const = default;

  std::string to_string() const {
    std::string out;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (i) out += ',';
      out += std::to_string(parts_[i]);
    }
    return out;
  }

private:
  std::vector<int> parts_;
  int n_ = 0;
};

inline std::ostream& operator<<(std::ostream& os, const Partition& p) {
  return os << '(' << p.to_string() << ')';
}

/// Parses "4,3,2". An empty string (or "0") is the empty partition. With
/// `sort` the input is read as a multiset.
inline Partition parse_partition(std::string_view text, bool sort = false) {
  std::vector<int> parts;
  if (text.empty() || text == "0" || text == "()") return Partition{};
  std::string token;
  std::istringstream in{std::string(text)};
  while (std::getline(in, token, ',')) {
    std::size_t used = 0;
    int value = 0;
    try {
      value = std::stoi(token, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("malformed partition '" + std::string(text) + "'");
    }
    if (used != token.size() || value < 1)
      throw std::invalid_argument("malformed partition '" + std::string(text) + "'");
    parts.push_back(value);
  }
  return sort ? Partition::from_multiset(std::move(parts)) : Partition(std::move(parts));
}

inline Partition conjugate(const Partition& lambda) {
  std::vector<int> cols(static_cast<std::size_t>(lambda.row(1)), 0);
  for (int part : lambda.parts())
    for (int j = 0; j < part; ++j) ++cols[static_cast<std::size_t>(j)];
  return Partition(std::move(cols));
}

/// Removable corners as 1-based (row, col), first corner (longest row) first.
inline std::vector<std::pair<int, int>> corners(const Partition& lambda) {
  if (lambda.empty()) throw std::invalid_argument("no corners");
  std::vector<std::pair<int, int>> out;
  for (int i = 1; i <= lambda.length(); ++i)
    if (lambda.row(i) > lambda.row(i + 1)) out.emplace_back(i, lambda.row(i));
  return out;
}

inline Partition remove_cell(const Partition& lambda, int row) {
  std::vector<int> parts = lambda.parts();
  auto& part = parts.at(static_cast<std::size_t>(row - 1));
  --part;
  if (part == 0) parts.erase(parts.begin() + (row - 1));
  return Partition(std::move(parts));
}

/// True iff nu_i <= lambda_i for every i.
inline bool contains(const Partition& nu, const Partition& lambda) {
  if (nu.length() > lambda.length()) return false;
  for (int i = 1; i <= nu.length(); ++i)
    if (nu.row(i) > lambda.row(i)) return false;
  return true;
}

/// Principal hook lengths a_i = lambda_i + lambda'_i - 2i + 1.
inline std::vector<int> diagonal_hooks(const Partition& lambda) {
  const Partition conj = conjugate(lambda);
  std::vector<int> hooks;
  for (int i = 1; lambda.row(i) >= i; ++i)
    hooks.push_back(lambda.row(i) + conj.row(i) - 2 * i + 1);
  return hooks;
}

inline bool is_self_conjugate(const Partition& lambda) { return conjugate(lambda) == lambda; }

/// All partitions of n in reverse lexicographic order.
inline std::vector<Partition> partitions_of(int n) {
  if (n < 0) throw std::invalid_argument("partitions_of: negative n");
  std::vector<Partition> out;
  std::vector<int> current;
  auto rec = [&](auto&& self, int remaining, int max_part) -> void {
    if (remaining == 0) {
      out.emplace_back(current);
      return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
      current.push_back(p);
      self(self, remaining - p, p);
      current.pop_back();
    }
  };
  rec(rec, n, n);
  return out;
}

/// Number of standard Young tableaux, by the hook length formula.
inline std::int64_t dimension(const Partition& lambda) {
  if (lambda.size() > 30) throw std::overflow_error("dimension: n too large");
  const Partition conj = conjugate(lambda);
  unsigned __int128 fact = 1, hooks = 1;
  for (int k = 2; k <= lambda.size(); ++k) fact *= static_cast<unsigned>(k);
  for (int i = 1; i <= lambda.length(); ++i)
    for (int j = 1; j <= lambda.row(i); ++j)
      hooks *= static_cast<unsigned>(lambda.row(i) - j + conj.row(j) - i + 1);
  return static_cast<std::int64_t>(fact / hooks);
}

inline std::int64_t gcd64(std::int64_t a, std::int64_t b) { return std::gcd(a, b); }
inline std::int64_t lcm64(std::int64_t a, std::int64_t b) { return std::lcm(a, b); }

/// Cycle type of a permutation of {1..n}: a partition of n whose parts are the
/// cycle lengths, fixed points included.
class CycleType {
public:
  CycleType() = default;
  explicit CycleType(Partition mu) : mu_(std::move(mu)) {
    for (int part : mu_.parts()) {
      order_ = lcm64(order_, part);
      if (part % 2 == 0) sign_ = -sign_;
    }
  }
  CycleType(std::initializer_list<int> parts) : CycleType(Partition::from_multiset(parts)) {}

  const Partition& partition() const noexcept { return mu_; }
  const std::vector<int>& parts() const noexcept { return mu_.parts(); }
  int n() const noexcept { return mu_.size(); }
  int order() const noexcept { return static_cast<int>(order_); }
  int sign() const noexcept { return sign_; }
  bool is_even() const noexcept { return sign_ == 1; }

  /// Odd, pairwise distinct parts: the S_n class splits in A_n.
  bool splits_in_alternating() const {
    const auto& p = mu_.parts();
    for (std::size_t i = 0; i < p.size(); ++i) {
      if (p[i] % 2 == 0) return false;
      if (i > 0 && p[i] == p[i - 1]) return false;
    }
    return true;
  }

  /// Number of permutations with this cycle type: n! / prod(c_i * m_i!).
  std::int64_t class_size() const {
    std::int64_t fact = 1;
    for (int k = 2; k <= n(); ++k) fact *= k;
    std::int64_t denom = 1;
    const auto& p = mu_.parts();
    for (std::size_t i = 0; i < p.size();) {
      std::size_t j = i;
      while (j < p.size() && p[j] == p[i]) ++j;
      for (std::size_t k = 1; k <= j - i; ++k) denom *= p[i] * static_cast<std::int64_t>(k);
      i = j;
    }
    return fact / denom;
  }

  std::string to_string() const { return mu_.to_string(); }

  auto operator<=>(const CycleType& other) const { return mu_ <=> other.mu_; }
  bool operator==(const CycleType& other) const { return mu_ == other.mu_; }

private:
  Partition mu_;
  std::int64_t order_ = 1;
  int sign_ = 1;
};

inline std::ostream& operator<<(std::ostream& os, const CycleType& c) { return os << c.partition(); }

/// Cycle type of sigma^i: a part r yields gcd(r, i) cycles of length r / gcd(r, i).
inline CycleType power_cycle_type(const CycleType& mu, std::int64_t i) {
  if (i < 0) throw std::invalid_argument("power_cycle_type: negative exponent");
  std::vector<int> parts;
  for (int r : mu.parts()) {
    const int g = static_cast<int>(std::gcd(static_cast<std::int64_t>(r), i));
    for (int k = 0; k < g; ++k) parts.push_back(r / g);
  }
  return CycleType(Partition::from_multiset(std::move(parts)));
}

inline std::vector<CycleType> cycle_types_of(int n) {
  std::vector<CycleType> out;
  for (auto& p : partitions_of(n)) out.emplace_back(std::move(p));
  return out;
}

/// Skew diagram [outer / inner].
class SkewShape {
public:
  using Cell = std::pair<int, int>;

  SkewShape(Partition outer, Partition inner) : outer_(std::move(outer)), inner_(std::move(inner)) {
    if (!contains(inner_, outer_))
      throw std::invalid_argument("skew shape: inner partition does not fit in outer");
    for (int i = 1; i <= outer_.length(); ++i)
      for (int j = inner_.row(i) + 1; j <= outer_.row(i); ++j) cells_.emplace_back(i, j);
  }
  explicit SkewShape(Partition outer) : SkewShape(std::move(outer), Partition{}) {}

  const Partition& outer() const noexcept { return outer_; }
  const Partition& inner() const noexcept { return inner_; }
  /// Cells in row-major order, 1-based.
  const std::vector<Cell>& cells() const noexcept { return cells_; }
  int size() const noexcept { return static_cast<int>(cells_.size()); }

  bool contains_cell(int r, int c) const {
    return r >= 1 && c >= 1 && c <= outer_.row(r) && c > inner_.row(r);
  }

  std::string to_string() const { return "(" + outer_.to_string() + ")/(" + inner_.to_string() + ")"; }

private:
  Partition outer_;
  Partition inner_;
  std::vector<Cell> cells_;
};

} // namespace specrep
