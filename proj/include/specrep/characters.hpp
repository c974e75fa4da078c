#pragma once

#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "json.hpp"
#include "specrep/cyclotomic.hpp"
#include "specrep/partitions.hpp"

namespace specrep {

// ---------------------------------------------------------------------------
// Murnaghan-Nakayama
// ---------------------------------------------------------------------------

namespace detail {

struct CharacterMemo {
  std::shared_mutex mutex;
  std::unordered_map<std::string, std::int64_t> values;
};

inline CharacterMemo& character_memo() {
  static CharacterMemo memo;
  return memo;
}

inline std::string character_key(const std::vector<int>& lambda, const std::vector<int>& mu) {
  std::string key;
  for (std::size_t i = 0; i < lambda.size(); ++i) {
    if (i) key += ',';
    key += std::to_string(lambda[i]);
  }
  key += '|';
  for (std::size_t i = 0; i < mu.size(); ++i) {
    if (i) key += ',';
    key += std::to_string(mu[i]);
  }
  return key;
}

/// mu is weakly decreasing; the largest part is stripped first so that the
/// memo is shared by every class with the same tail.
inline std::int64_t mn_recursive(const std::vector<int>& lambda, const std::vector<int>& mu) {
  if (mu.empty()) return lambda.empty() ? 1 : 0;
  auto& memo = character_memo();
  const std::string key = character_key(lambda, mu);
  {
    std::shared_lock lock(memo.mutex);
    if (auto it = memo.values.find(key); it != memo.values.end()) return it->second;
  }

  const int r = mu.front();
  const std::vector<int> rest(mu.begin() + 1, mu.end());
  const int len = static_cast<int>(lambda.size());
  // First-column hook lengths (beta numbers) of lambda, strictly decreasing.
  std::vector<int> beta(lambda.size());
  for (int i = 0; i < len; ++i) beta[static_cast<std::size_t>(i)] = lambda[static_cast<std::size_t>(i)] + len - 1 - i;

  std::int64_t total = 0;
  for (int i = 0; i < len; ++i) {
    const int b = beta[static_cast<std::size_t>(i)];
    const int target = b - r;
    if (target < 0) continue;
    bool occupied = false;
    int between = 0;
    for (int j = 0; j < len; ++j) {
      const int bj = beta[static_cast<std::size_t>(j)];
      if (bj == target) occupied = true;
      if (bj > target && bj < b) ++between;
    }
    if (occupied) continue;
    std::vector<int> next = beta;
    next[static_cast<std::size_t>(i)] = target;
    std::sort(next.begin(), next.end(), std::greater<>());
    std::vector<int> smaller;
    for (int j = 0; j < len; ++j) {
      const int part = next[static_cast<std::size_t>(j)] - (len - 1 - j);
      if (part > 0) smaller.push_back(part);
    }
    const std::int64_t value = mn_recursive(smaller, rest);
    total += (between % 2 == 0) ? value : -value;
  }

  std::unique_lock lock(memo.mutex);
  memo.values.emplace(key, total);
  return total;
}

} // namespace detail

/// chi^lambda on the class of cycle type mu.
inline std::int64_t mn_character(const Partition& lambda, const CycleType& mu) {
  if (lambda.size() != mu.n())
    throw std::invalid_argument("mn_character: |lambda| = " + std::to_string(lambda.size()) +
                                " but mu is a partition of " + std::to_string(mu.n()));
  return detail::mn_recursive(lambda.parts(), mu.parts());
}

/// chi^{lambda'}(mu) computed as sgn(mu) * chi^lambda(mu).
inline std::int64_t conjugate_twist(const Partition& lambda, const CycleType& mu) {
  return mu.sign() * mn_character(lambda, mu);
}

inline void clear_character_memo() {
  auto& memo = detail::character_memo();
  std::unique_lock lock(memo.mutex);
  memo.values.clear();
}

inline std::size_t character_memo_size() {
  auto& memo = detail::character_memo();
  std::shared_lock lock(memo.mutex);
  return memo.values.size();
}

// ---------------------------------------------------------------------------
// Character table cache on disk
// ---------------------------------------------------------------------------

inline constexpr std::string_view kCharacterCacheFormat = "specrep-characters-v1";

inline std::filesystem::path character_cache_file(const std::filesystem::path& dir, int n) {
  return dir / ("characters-n" + std::to_string(n) + ".v1.json");
}

/// Flag value if given, else $SPECREP_CACHE_DIR, else none.
inline std::optional<std::filesystem::path> character_cache_dir(const std::optional<std::string>& flag) {
  if (flag && !flag->empty()) return std::filesystem::path(*flag);
  if (const char* env = std::getenv("SPECREP_CACHE_DIR"); env && *env) return std::filesystem::path(env);
  return std::nullopt;
}

/// Writes the full S_n character table as "lambda|mu" -> value.
inline std::filesystem::path save_character_cache(const std::filesystem::path& dir, int n) {
  nlohmann::json values = nlohmann::json::object();
  for (const auto& lambda : partitions_of(n))
    for (const auto& mu : cycle_types_of(n))
      values[detail::character_key(lambda.parts(), mu.parts())] = mn_character(lambda, mu);
  nlohmann::json doc;
  doc["format"] = kCharacterCacheFormat;
  doc["n"] = n;
  doc["values"] = std::move(values);
  std::filesystem::create_directories(dir);
  const auto path = character_cache_file(dir, n);
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write character cache " + path.string());
  out << doc.dump(1) << '\n';
  return path;
}

/// Seeds the memo from disk. Missing, unreadable or foreign-format files are
/// ignored; returns whether anything was loaded.
inline bool load_character_cache(const std::filesystem::path& dir, int n) {
  const auto path = character_cache_file(dir, n);
  std::ifstream in(path);
  if (!in) return false;
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception&) {
    return false;
  }
  if (!doc.is_object() || doc.value("format", "") != kCharacterCacheFormat || doc.value("n", -1) != n) return false;
  auto& memo = detail::character_memo();
  std::unique_lock lock(memo.mutex);
  for (const auto& [key, value] : doc.at("values").items()) memo.values.emplace(key, value.get<std::int64_t>());
  return true;
}

// ---------------------------------------------------------------------------
// Permutations and split classes
// ---------------------------------------------------------------------------

/// Permutation of {1..n} in one-line notation.
class Permutation {
public:
  explicit Permutation(std::vector<int> images) : images_(std::move(images)) {
    std::vector<bool> seen(images_.size() + 1, false);
    for (int v : images_) {
      if (v < 1 || v > static_cast<int>(images_.size()) || seen[static_cast<std::size_t>(v)])
        throw std::invalid_argument("Permutation: not a bijection of {1..n}");
      seen[static_cast<std::size_t>(v)] = true;
    }
  }

  static Permutation identity(int n) {
    std::vector<int> images(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) images[static_cast<std::size_t>(i)] = i + 1;
    return Permutation(std::move(images));
  }

  static Permutation from_cycles(int n, const std::vector<std::vector<int>>& cycles) {
    std::vector<int> images(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) images[static_cast<std::size_t>(i)] = i + 1;
    for (const auto& cyc : cycles)
      for (std::size_t k = 0; k < cyc.size(); ++k)
        images.at(static_cast<std::size_t>(cyc[k] - 1)) = cyc[(k + 1) % cyc.size()];
    return Permutation(std::move(images));
  }

  int degree() const noexcept { return static_cast<int>(images_.size()); }
  int operator()(int x) const { return images_.at(static_cast<std::size_t>(x - 1)); }
  const std::vector<int>& images() const noexcept { return images_; }

  /// (a * b)(x) = a(b(x)).
  friend Permutation operator*(const Permutation& a, const Permutation& b) {
    std::vector<int> images(b.images_.size());
    for (std::size_t i = 0; i < images.size(); ++i) images[i] = a(b.images_[i]);
    return Permutation(std::move(images));
  }

  Permutation inverse() const {
    std::vector<int> images(images_.size());
    for (std::size_t i = 0; i < images_.size(); ++i) images[static_cast<std::size_t>(images_[i] - 1)] = static_cast<int>(i) + 1;
    return Permutation(std::move(images));
  }

  Permutation power(std::int64_t k) const {
    if (k < 0) return inverse().power(-k);
    Permutation result = identity(degree()), base = *this;
    while (k) {
      if (k & 1) result = result * base;
      base = base * base;
      k >>= 1;
    }
    return result;
  }

  /// tau * this * tau^-1.
  Permutation conjugated_by(const Permutation& tau) const { return tau * *this * tau.inverse(); }

  /// Cycles (fixed points included), each starting at its smallest point,
  /// ordered by that point.
  std::vector<std::vector<int>> cycles() const {
    std::vector<std::vector<int>> out;
    std::vector<bool> seen(images_.size() + 1, false);
    for (int start = 1; start <= degree(); ++start) {
      if (seen[static_cast<std::size_t>(start)]) continue;
      std::vector<int> cyc;
      for (int x = start; !seen[static_cast<std::size_t>(x)]; x = (*this)(x)) {
        seen[static_cast<std::size_t>(x)] = true;
        cyc.push_back(x);
      }
      out.push_back(std::move(cyc));
    }
    return out;
  }

  CycleType cycle_type() const {
    std::vector<int> lengths;
    for (const auto& c : cycles()) lengths.push_back(static_cast<int>(c.size()));
    return CycleType(Partition::from_multiset(std::move(lengths)));
  }

  int sign() const { return cycle_type().sign(); }

  bool operator==(const Permutation& other) const = default;

  std::string to_string() const {
    std::string out;
    for (const auto& c : cycles()) {
      out += '(';
      for (std::size_t k = 0; k < c.size(); ++k) out += (k ? "," : "") + std::to_string(c[k]);
      out += ')';
    }
    return out;
  }

private:
  std::vector<int> images_;
};

enum class SplitSign { plus, minus };

inline char sign_char(SplitSign s) { return s == SplitSign::plus ? '+' : '-'; }
inline SplitSign flip(SplitSign s) { return s == SplitSign::plus ? SplitSign::minus : SplitSign::plus; }

/// Conjugacy class of A_n: an even cycle type, with a sign when it splits.
struct AnClass {
  CycleType mu;
  std::optional<SplitSign> split;

  AnClass(CycleType type, std::optional<SplitSign> s = std::nullopt) : mu(std::move(type)), split(s) {
    if (!mu.is_even()) throw std::invalid_argument("AnClass: cycle type " + mu.to_string() + " is odd");
    if (split && !mu.splits_in_alternating())
      throw std::invalid_argument("AnClass: cycle type " + mu.to_string() + " does not split in A_n");
  }

  std::string to_string() const { return mu.to_string() + (split ? std::string(1, sign_char(*split)) : ""); }
  bool operator==(const AnClass& other) const = default;
};

/// Irreducible character of A_n: chi_lambda (lambda != lambda') or
/// chi_lambda^{+/-} (lambda = lambda').
struct AnCharLabel {
  Partition lambda;
  std::optional<SplitSign> split;

  AnCharLabel(Partition l, std::optional<SplitSign> s = std::nullopt) : lambda(std::move(l)), split(s) {
    if (is_self_conjugate(lambda) != split.has_value())
      throw std::invalid_argument(split ? "AnCharLabel: split sign on non-self-conjugate " + lambda.to_string()
                                        : "AnCharLabel: self-conjugate " + lambda.to_string() + " needs a split sign");
  }

  std::string to_string() const { return lambda.to_string() + (split ? std::string(1, sign_char(*split)) : ""); }
  bool operator==(const AnCharLabel& other) const = default;
};

/// The representative (1..a_1)(a_1+1..a_1+a_2)... of the class mu^+.
inline Permutation canonical_split_permutation(const CycleType& mu) {
  if (!mu.splits_in_alternating())
    throw std::invalid_argument("canonical_split_permutation: " + mu.to_string() + " has no split class");
  std::vector<std::vector<int>> cycles;
  int next = 1;
  for (int part : mu.parts()) {
    std::vector<int> cyc;
    for (int k = 0; k < part; ++k) cyc.push_back(next++);
    cycles.push_back(std::move(cyc));
  }
  return Permutation::from_cycles(mu.n(), cycles);
}

/// Resolves mu^+ versus mu^-: conjugate pi onto the canonical element by
/// aligning cycles; the class is + iff the conjugator is even. Cycle lengths
/// are distinct, so the alignment is unique up to rotating each cycle, and
/// those rotations are even.
inline AnClass split_class_of(const Permutation& pi) {
  const CycleType type = pi.cycle_type();
  if (!type.splits_in_alternating())
    throw std::invalid_argument("split_class_of: cycle type " + type.to_string() + " does not split in A_n");
  const Permutation canonical = canonical_split_permutation(type);
  auto by_length = [](std::vector<std::vector<int>> cs) {
    std::stable_sort(cs.begin(), cs.end(), [](const auto& a, const auto& b) { return a.size() > b.size(); });
    return cs;
  };
  const auto source = by_length(pi.cycles());
  const auto target = by_length(canonical.cycles());
  std::vector<int> tau(static_cast<std::size_t>(pi.degree()));
  for (std::size_t c = 0; c < source.size(); ++c)
    for (std::size_t k = 0; k < source[c].size(); ++k) tau[static_cast<std::size_t>(source[c][k] - 1)] = target[c][k];
  const int sgn = Permutation(std::move(tau)).sign();
  return AnClass(type, sgn == 1 ? SplitSign::plus : SplitSign::minus);
}

/// A concrete element of the class: the canonical element for mu^+ (or for
/// unsplit classes), its conjugate by (1,2) for mu^-.
inline Permutation class_representative(const AnClass& cls) {
  std::vector<std::vector<int>> cycles;
  int next = 1;
  for (int part : cls.mu.parts()) {
    std::vector<int> cyc;
    for (int k = 0; k < part; ++k) cyc.push_back(next++);
    cycles.push_back(std::move(cyc));
  }
  Permutation rep = Permutation::from_cycles(cls.mu.n(), cycles);
  if (cls.split == SplitSign::minus) rep = rep.conjugated_by(Permutation::from_cycles(cls.mu.n(), {{1, 2}}));
  return rep;
}

// ---------------------------------------------------------------------------
// Quadratic irrationalities
// ---------------------------------------------------------------------------

struct CyclotomicSqrt {
  CyclotomicElement value;
  int conductor;
};

/// Splits d = s^2 * d0 with d0 squarefree (sign kept on d0).
inline std::pair<std::int64_t, std::int64_t> squarefree_decomposition(std::int64_t d) {
  std::int64_t s = 1, d0 = d < 0 ? -1 : 1;
  std::int64_t m = d < 0 ? -d : d;
  for (std::int64_t p = 2; p * p <= m; ++p) {
    while (m % (p * p) == 0) {
      m /= p * p;
      s *= p;
    }
    if (m % p == 0) {
      m /= p;
      d0 *= p;
    }
  }
  d0 *= m;
  return {s, d0};
}

/// Exact square root of d inside a cyclotomic field: the positive real root
/// for d > 0, i times the positive real root of |d| for d < 0. Built from
/// quadratic Gauss sums g_p = sum_t zeta_p^{t^2}, which equal sqrt(p) for
/// p = 1 mod 4 and i*sqrt(p) for p = 3 mod 4.
inline CyclotomicSqrt sqrt_as_cyclotomic(std::int64_t d) {
  if (d == 0) throw std::invalid_argument("sqrt_as_cyclotomic: d must be nonzero");
  const auto [s, d0] = squarefree_decomposition(d);
  if (d0 == 1) return {CyclotomicElement::rational(Rational(static_cast<long>(s))), 1};

  CyclotomicElement x = CyclotomicElement::rational(Rational(static_cast<long>(s)));
  int i_power = 0;  // x == i^i_power * s * sqrt(|d0|) so far
  std::int64_t m = d0 < 0 ? -d0 : d0;
  if (m % 2 == 0) {
    // sqrt(2) = zeta_8 + zeta_8^7
    x = x * (CyclotomicElement::zeta(8, 1) + CyclotomicElement::zeta(8, 7));
    m /= 2;
  }
  for (std::int64_t p = 3; p <= m; p += 2) {
    if (m % p != 0) continue;
    m /= p;
    std::vector<Rational> raw(static_cast<std::size_t>(p));
    for (std::int64_t t = 0; t < p; ++t) raw[static_cast<std::size_t>((t * t) % p)] += 1;
    x = x * CyclotomicElement::from_coefficients(std::move(raw), static_cast<int>(p));
    if (p % 4 == 3) ++i_power;
  }
  const int want = d < 0 ? 1 : 0;
  switch (((want - i_power) % 4 + 4) % 4) {
    case 1: x = x * CyclotomicElement::zeta(4, 1); break;
    case 2: x = x.scaled(Rational(-1)); break;
    case 3: x = x * CyclotomicElement::zeta(4, 3); break;
    default: break;
  }
  return {x, x.conductor()};
}

/// r + s * sqrt(d), with d squarefree whenever s != 0.
struct CharacterValue {
  Rational rational_part;
  Rational surd_coefficient;
  std::int64_t radicand = 1;

  static CharacterValue integer(std::int64_t v) { return {Rational(static_cast<long>(v)), Rational(0), 1}; }

  /// r + s * sqrt(d), canonicalized.
  static CharacterValue make(Rational r, Rational s, std::int64_t d) {
    if (s == 0 || d == 0) return {std::move(r), Rational(0), 1};
    const auto [root, d0] = squarefree_decomposition(d);
    s *= static_cast<long>(root);
    if (d0 == 1) return {r + s, Rational(0), 1};
    return {std::move(r), std::move(s), d0};
  }

  bool is_rational() const { return surd_coefficient == 0; }

  CyclotomicElement to_cyclotomic() const {
    CyclotomicElement out = CyclotomicElement::rational(rational_part);
    if (!is_rational()) out = out + sqrt_as_cyclotomic(radicand).value.scaled(surd_coefficient);
    return out;
  }

  std::string to_string() const {
    if (is_rational()) return rational_part.get_str();
    std::string out = rational_part == 0 ? "" : rational_part.get_str();
    const Rational a = abs(surd_coefficient);
    out += surd_coefficient < 0 ? "-" : (out.empty() ? "" : "+");
    if (a != 1) out += a.get_str() + "*";
    return out + "sqrt(" + std::to_string(radicand) + ")";
  }

  bool operator==(const CharacterValue& other) const = default;
};

inline bool same_parts(const CycleType& mu, const std::vector<int>& parts) { return mu.parts() == parts; }

/// Value of an irreducible character of A_n on an A_n class.
inline CharacterValue an_character_value(const AnCharLabel& chi, const AnClass& cls) {
  const int n = chi.lambda.size();
  if (n != cls.mu.n())
    throw std::invalid_argument("an_character_value: character of degree " + std::to_string(n) +
                                " evaluated on a class of S_" + std::to_string(cls.mu.n()));
  const std::int64_t full = mn_character(chi.lambda, cls.mu);
  if (!chi.split) return CharacterValue::integer(full);
  const std::vector<int> hooks = diagonal_hooks(chi.lambda);
  if (!same_parts(cls.mu, hooks)) return CharacterValue::make(make_rational(static_cast<long>(full), 2), Rational(0), 1);
  if (!cls.split)
    throw std::invalid_argument("an_character_value: class " + cls.mu.to_string() + " needs a split sign");
  const int k = static_cast<int>(hooks.size());
  const int eps = ((n - k) / 2) % 2 == 0 ? 1 : -1;
  std::int64_t product = eps;
  for (int a : hooks) product *= a;
  const bool plus_branch = *chi.split == *cls.split;
  return CharacterValue::make(make_rational(eps, 2), make_rational(plus_branch ? 1 : -1, 2), product);
}

/// Splits "2,2+" into ("2,2", plus). Accepts '+', '-' and U+2212.
inline std::pair<std::string, std::optional<SplitSign>> split_sign_suffix(std::string_view text) {
  constexpr std::string_view unicode_minus = "\xE2\x88\x92";
  if (text.size() >= unicode_minus.size() && text.substr(text.size() - unicode_minus.size()) == unicode_minus)
    return {std::string(text.substr(0, text.size() - unicode_minus.size())), SplitSign::minus};
  if (!text.empty() && text.back() == '+') return {std::string(text.substr(0, text.size() - 1)), SplitSign::plus};
  if (!text.empty() && text.back() == '-') return {std::string(text.substr(0, text.size() - 1)), SplitSign::minus};
  return {std::string(text), std::nullopt};
}

} // namespace specrep
