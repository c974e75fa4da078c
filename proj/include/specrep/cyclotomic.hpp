#pragma once

#include <gmpxx.h>

#include "json.hpp"

#include <algorithm>
#include <cstdint>
#include <mutex>
#include <numeric>
#include <optional>
#include <shared_mutex>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace specrep {

using Rational = mpq_class;
using BigInt = mpz_class;

/// num / den in lowest terms (mpq_class does not canonicalize on construction).
inline Rational make_rational(long num, long den = 1) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

/// Dense integer polynomial, coefficient of x^k at index k.
using IntPoly = std::vector<std::int64_t>;

inline int poly_degree(const IntPoly& p) {
  for (int k = static_cast<int>(p.size()) - 1; k >= 0; --k)
    if (p[static_cast<std::size_t>(k)] != 0) return k;
  return -1;
}

inline IntPoly poly_trim(IntPoly p) {
  p.resize(static_cast<std::size_t>(poly_degree(p) + 1));
  return p;
}

inline IntPoly poly_mul(const IntPoly& a, const IntPoly& b) {
  if (a.empty() || b.empty()) return {};
  IntPoly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return poly_trim(std::move(out));
}

/// Exact division by a monic divisor. Throws if the remainder is nonzero.
inline IntPoly poly_div_exact(IntPoly num, const IntPoly& den) {
  const int dd = poly_degree(den);
  if (dd < 0 || den[static_cast<std::size_t>(dd)] != 1)
    throw std::invalid_argument("poly_div_exact: divisor must be monic");
  const int nd = poly_degree(num);
  if (nd < dd) {
    if (nd >= 0) throw std::domain_error("poly_div_exact: nonzero remainder");
    return {};
  }
  IntPoly quot(static_cast<std::size_t>(nd - dd + 1), 0);
  for (int k = nd; k >= dd; --k) {
    const std::int64_t c = num[static_cast<std::size_t>(k)];
    if (c == 0) continue;
    quot[static_cast<std::size_t>(k - dd)] = c;
    for (int j = 0; j <= dd; ++j) num[static_cast<std::size_t>(k - dd + j)] -= c * den[static_cast<std::size_t>(j)];
  }
  if (poly_degree(num) >= 0) throw std::domain_error("poly_div_exact: nonzero remainder");
  return quot;
}

inline std::vector<int> divisors(int n) {
  std::vector<int> out;
  for (int d = 1; d <= n; ++d)
    if (n % d == 0) out.push_back(d);
  return out;
}

inline int euler_phi(int n) {
  int count = 0;
  for (int k = 1; k <= n; ++k)
    if (std::gcd(k, n) == 1) ++count;
  return count;
}

namespace detail {

struct CyclotomicPolyCache {
  std::shared_mutex mutex;
  std::unordered_map<int, IntPoly> table;
};

inline CyclotomicPolyCache& cyclotomic_poly_cache() {
  static CyclotomicPolyCache cache;
  return cache;
}

} // namespace detail

/// Phi_N, obtained by dividing x^N - 1 by Phi_d for every proper divisor d.
inline IntPoly cyclotomic_polynomial(int N) {
  if (N < 1) throw std::invalid_argument("cyclotomic_polynomial: N must be positive");
  auto& cache = detail::cyclotomic_poly_cache();
  {
    std::shared_lock lock(cache.mutex);
    if (auto it = cache.table.find(N); it != cache.table.end()) return it->second;
  }
  IntPoly result(static_cast<std::size_t>(N + 1), 0);
  result[0] = -1;
  result[static_cast<std::size_t>(N)] = 1;
  for (int d : divisors(N))
    if (d < N) result = poly_div_exact(std::move(result), cyclotomic_polynomial(d));
  std::unique_lock lock(cache.mutex);
  cache.table.emplace(N, result);
  return result;
}

/// Element of Q(zeta_N), stored as N rational coefficients on powers of
/// zeta_N and kept reduced modulo Phi_N (entries at index >= phi(N) vanish).
class CyclotomicElement {
public:
  CyclotomicElement() : CyclotomicElement(1) {}
  explicit CyclotomicElement(int conductor)
      : conductor_(conductor), coeffs_(static_cast<std::size_t>(check_conductor(conductor))) {}

  static CyclotomicElement rational(const Rational& value, int conductor = 1) {
    CyclotomicElement out(conductor);
    out.coeffs_[0] = value;
    return out;
  }

  /// zeta_N^k.
  static CyclotomicElement zeta(int conductor, std::int64_t k) {
    CyclotomicElement out(conductor);
    std::vector<Rational> raw(static_cast<std::size_t>(conductor));
    raw[static_cast<std::size_t>(mod(k, conductor))] = 1;
    out.coeffs_ = reduce(std::move(raw), conductor);
    return out;
  }

  /// Builds an element from arbitrary coefficients on zeta_N^j (j < N).
  static CyclotomicElement from_coefficients(std::vector<Rational> raw, int conductor) {
    if (static_cast<int>(raw.size()) != conductor)
      throw std::invalid_argument("from_coefficients: length must equal conductor");
    CyclotomicElement out(conductor);
    out.coeffs_ = reduce(std::move(raw), conductor);
    return out;
  }

  int conductor() const noexcept { return conductor_; }
  const std::vector<Rational>& coefficients() const noexcept { return coeffs_; }

  bool is_zero() const {
    for (const auto& c : coeffs_)
      if (c != 0) return false;
    return true;
  }

  /// Same number written over Q(zeta_M), using zeta_N = zeta_M^(M/N).
  CyclotomicElement embed(int M) const {
    if (M < 1 || M % conductor_ != 0)
      throw std::invalid_argument("embed: conductor " + std::to_string(conductor_) +
                                  " does not divide " + std::to_string(M));
    if (M == conductor_) return *this;
    const int step = M / conductor_;
    std::vector<Rational> raw(static_cast<std::size_t>(M));
    for (int j = 0; j < conductor_; ++j) raw[static_cast<std::size_t>(j * step)] = coeffs_[static_cast<std::size_t>(j)];
    CyclotomicElement out(M);
    out.coeffs_ = reduce(std::move(raw), M);
    return out;
  }

  std::optional<Rational> as_rational() const {
    for (std::size_t j = 1; j < coeffs_.size(); ++j)
      if (coeffs_[j] != 0) return std::nullopt;
    return coeffs_[0];
  }

  friend CyclotomicElement operator+(const CyclotomicElement& a, const CyclotomicElement& b) {
    const int M = std::lcm(a.conductor_, b.conductor_);
    CyclotomicElement x = a.embed(M), y = b.embed(M);
    for (std::size_t j = 0; j < x.coeffs_.size(); ++j) x.coeffs_[j] += y.coeffs_[j];
    return x;
  }

  friend CyclotomicElement operator-(const CyclotomicElement& a, const CyclotomicElement& b) {
    return a + b.scaled(Rational(-1));
  }

  friend CyclotomicElement operator*(const CyclotomicElement& a, const CyclotomicElement& b) {
    const int M = std::lcm(a.conductor_, b.conductor_);
    const CyclotomicElement x = a.embed(M), y = b.embed(M);
    std::vector<Rational> raw(static_cast<std::size_t>(M));
    for (int i = 0; i < M; ++i) {
      const Rational& xi = x.coeffs_[static_cast<std::size_t>(i)];
      if (xi == 0) continue;
      for (int j = 0; j < M; ++j) {
        const Rational& yj = y.coeffs_[static_cast<std::size_t>(j)];
        if (yj != 0) raw[static_cast<std::size_t>((i + j) % M)] += xi * yj;
      }
    }
    CyclotomicElement out(M);
    out.coeffs_ = reduce(std::move(raw), M);
    return out;
  }

  CyclotomicElement scaled(const Rational& s) const {
    CyclotomicElement out = *this;
    for (auto& c : out.coeffs_) c *= s;
    return out;
  }

  /// Multiplication by zeta_N^k; a rotation of the unreduced coefficients.
  CyclotomicElement times_zeta(std::int64_t k) const {
    std::vector<Rational> raw(static_cast<std::size_t>(conductor_));
    const int shift = mod(k, conductor_);
    for (int j = 0; j < conductor_; ++j)
      raw[static_cast<std::size_t>((j + shift) % conductor_)] = coeffs_[static_cast<std::size_t>(j)];
    CyclotomicElement out(conductor_);
    out.coeffs_ = reduce(std::move(raw), conductor_);
    return out;
  }

  /// Equality at the common conductor lcm(N, M).
  friend bool operator==(const CyclotomicElement& a, const CyclotomicElement& b) {
    const int M = std::lcm(a.conductor_, b.conductor_);
    return a.embed(M).coeffs_ == b.embed(M).coeffs_;
  }

  std::string to_string() const {
    std::string out;
    for (std::size_t j = 0; j < coeffs_.size(); ++j) {
      const Rational& c = coeffs_[j];
      if (c == 0) continue;
      std::string term = c.get_str();
      if (j > 0) term = (c == 1 ? std::string() : (c == -1 ? std::string("-") : term + "*")) + "z" + std::to_string(conductor_) + "^" + std::to_string(j);
      if (!out.empty() && term[0] != '-') out += "+";
      out += term;
    }
    return out.empty() ? "0" : out;
  }

  /// Reduces a length-N coefficient vector modulo Phi_N.
  static std::vector<Rational> reduce(std::vector<Rational> raw, int N) {
    const IntPoly phi = cyclotomic_polynomial(N);
    const int deg = static_cast<int>(phi.size()) - 1;
    for (int k = N - 1; k >= deg; --k) {
      Rational& c = raw[static_cast<std::size_t>(k)];
      if (c == 0) continue;
      const Rational lead = c;
      for (int j = 0; j <= deg; ++j) {
        const std::int64_t p = phi[static_cast<std::size_t>(j)];
        if (p != 0) raw[static_cast<std::size_t>(k - deg + j)] -= lead * p;
      }
    }
    return raw;
  }

private:
  static int check_conductor(int N) {
    if (N < 1) throw std::invalid_argument("cyclotomic conductor must be positive");
    return N;
  }
  static int mod(std::int64_t k, int N) {
    const std::int64_t r = k % N;
    return static_cast<int>(r < 0 ? r + N : r);
  }

  int conductor_;
  std::vector<Rational> coeffs_;
};

/// Multiplicative order class of residue e modulo o: o / gcd(e, o).
inline int residue_order(int e, int o) { return o / std::gcd(e, o); }

/// Closed under e -> u*e for every unit u modulo o.
inline bool is_galois_stable(const std::vector<int>& exponents, int o) {
  std::vector<bool> in(static_cast<std::size_t>(o), false);
  for (int e : exponents) in[static_cast<std::size_t>(e)] = true;
  for (int e : exponents)
    for (int u = 1; u < o; ++u)
      if (std::gcd(u, o) == 1 && !in[static_cast<std::size_t>((static_cast<std::int64_t>(u) * e) % o)]) return false;
  return true;
}

/// Decomposes a monic integer polynomial into cyclotomic factors. Returns the
/// sorted multiset of indices d with Phi_d dividing p, or nullopt when p is
/// not a product of cyclotomic polynomials.
inline std::optional<std::vector<int>> cyclotomic_factorization(IntPoly p) {
  p = poly_trim(std::move(p));
  std::vector<int> factors;
  const int deg = poly_degree(p);
  if (deg < 0 || p.back() != 1) return std::nullopt;
  // phi(d) >= sqrt(d / 2), so phi(d) <= deg bounds d by 2 * deg^2.
  for (int d = 1; d <= 2 * deg * deg + 2 && poly_degree(p) > 0; ++d) {
    const IntPoly phi = cyclotomic_polynomial(d);
    while (poly_degree(p) >= poly_degree(phi)) {
      try {
        p = poly_div_exact(p, phi);
      } catch (const std::domain_error&) {
        break;
      }
      factors.push_back(d);
    }
  }
  if (poly_degree(p) != 0 || p[0] != 1) return std::nullopt;
  return factors;
}

/// x^o - 1 divided by a monic integer polynomial, as a cyclotomic factor
/// multiset. Used to turn quotient forms like (x^6-1)/(x^2-x+1) into data.
inline std::optional<std::vector<int>> quotient_factorization(int o, const IntPoly& denominator) {
  auto den = cyclotomic_factorization(denominator);
  if (!den) return std::nullopt;
  std::vector<int> factors = divisors(o);
  for (int d : *den) {
    auto it = std::find(factors.begin(), factors.end(), d);
    if (it == factors.end()) return std::nullopt;
    factors.erase(it);
  }
  return factors;
}

/// Compact rendering, highest degree first: "x^2-x+1".
inline std::string poly_to_string(const IntPoly& p) {
  std::string out;
  for (int k = poly_degree(p); k >= 0; --k) {
    const std::int64_t c = p[static_cast<std::size_t>(k)];
    if (c == 0) continue;
    const std::int64_t a = c < 0 ? -c : c;
    if (!out.empty() || c < 0) out += c < 0 ? "-" : "+";
    if (k == 0 || a != 1) out += std::to_string(a);
    if (k >= 1) out += "x";
    if (k >= 2) out += "^" + std::to_string(k);
  }
  return out.empty() ? "0" : out;
}

/// Minimal polynomial prod_{e in E} (x - zeta_o^e) of a diagonalizable matrix
/// of finite order o.
class MinPoly {
public:
  MinPoly(int order, std::vector<int> exponents) : order_(order) {
    if (order < 1) throw std::invalid_argument("MinPoly: order must be positive");
    for (int& e : exponents) e = ((e % order) + order) % order;
    std::sort(exponents.begin(), exponents.end());
    exponents.erase(std::unique(exponents.begin(), exponents.end()), exponents.end());
    if (exponents.empty()) throw std::invalid_argument("MinPoly: empty exponent set");
    exponents_ = std::move(exponents);
    if (is_galois_stable(exponents_, order_)) {
      std::vector<int> factors;
      for (int d : divisors(order_))
        if (std::binary_search(exponents_.begin(), exponents_.end(), (order_ / d) % order_)) factors.push_back(d);
      factors_ = std::move(factors);
    }
  }

  int order() const noexcept { return order_; }
  const std::vector<int>& exponents() const noexcept { return exponents_; }
  int degree() const noexcept { return static_cast<int>(exponents_.size()); }
  bool rational() const noexcept { return factors_.has_value(); }
  bool is_full() const noexcept { return degree() == order_; }

  /// Cyclotomic indices d with Phi_d | p; present iff E is Galois-stable.
  const std::optional<std::vector<int>>& cyclotomic_factors() const noexcept { return factors_; }

  /// Integer coefficients; only defined for Galois-stable exponent sets.
  IntPoly expanded() const {
    if (!factors_) throw std::logic_error("MinPoly: not defined over the rationals");
    IntPoly out{1};
    for (int d : *factors_) out = poly_mul(out, cyclotomic_polynomial(d));
    return out;
  }

  /// Exponents not in E, i.e. the roots of (x^o - 1) / p(x).
  std::vector<int> removed_exponents() const {
    std::vector<int> out;
    for (int e = 0; e < order_; ++e)
      if (!std::binary_search(exponents_.begin(), exponents_.end(), e)) out.push_back(e);
    return out;
  }

  std::string display() const { return factors_ ? display_rational() : display_roots(); }

  bool operator==(const MinPoly& other) const {
    return order_ == other.order_ && exponents_ == other.exponents_;
  }

private:
  static std::string spaced_linear(const IntPoly& p) {
    // x - 1 / x + 1 print with spaces when they stand alone.
    return p[0] < 0 ? "x - " + std::to_string(-p[0]) : "x + " + std::to_string(p[0]);
  }

  std::string display_rational() const {
    const std::vector<int>& kept = *factors_;
    std::vector<int> removed;
    for (int d : divisors(order_))
      if (!std::binary_search(kept.begin(), kept.end(), d)) removed.push_back(d);
    const int removed_degree = order_ - degree();
    if (removed.empty()) {
      if (order_ == 1) return "x - 1";
      return "x^" + std::to_string(order_) + "-1";
    }
    // Low degree reads best expanded: x^2+x+1 rather than (x^3-1)/(x-1).
    if (degree() <= 2) {
      const IntPoly p = expanded();
      return poly_degree(p) == 1 ? spaced_linear(p) : poly_to_string(p);
    }
    if (removed_degree < degree()) {
      IntPoly den{1};
      for (int d : removed) den = poly_mul(den, cyclotomic_polynomial(d));
      return "(x^" + std::to_string(order_) + "-1)/(" + poly_to_string(den) + ")";
    }
    // Product form: greedily peel x^m - 1 blocks, then lone Phi_d factors.
    std::vector<int> remaining = kept;
    std::vector<IntPoly> blocks;
    auto covered = [&](int m) {
      for (int d : divisors(m))
        if (!std::binary_search(remaining.begin(), remaining.end(), d)) return false;
      return true;
    };
    while (!remaining.empty()) {
      int best = 0;
      for (int m : remaining)
        if (covered(m)) best = std::max(best, m);
      IntPoly block;
      if (best > 0) {
        block.assign(static_cast<std::size_t>(best + 1), 0);
        block[0] = -1;
        block[static_cast<std::size_t>(best)] = 1;
        for (int d : divisors(best)) remaining.erase(std::find(remaining.begin(), remaining.end(), d));
      } else {
        block = cyclotomic_polynomial(remaining.front());
        remaining.erase(remaining.begin());
      }
      blocks.push_back(std::move(block));
    }
    if (blocks.size() == 1)
      return poly_degree(blocks[0]) == 1 ? spaced_linear(blocks[0]) : poly_to_string(blocks[0]);
    std::string out;
    for (const auto& b : blocks) out += "(" + poly_to_string(b) + ")";
    return out;
  }

  std::string display_roots() const {
    const std::string sym = order_ == 3 ? "w" : "eta";
    auto linear = [&](int e) {
      if (e == 0) return std::string("x - 1");
      return "x - " + sym + (e == 1 ? std::string() : "^" + std::to_string(e));
    };
    auto product = [&](const std::vector<int>& es) {
      if (es.size() == 1) return linear(es.front());
      std::string out;
      for (int e : es) out += "(" + linear(e) + ")";
      return out;
    };
    const std::vector<int> removed = removed_exponents();
    std::string body;
    if (exponents_.size() <= removed.size()) {
      body = product(exponents_);
    } else {
      body = "(x^" + std::to_string(order_) + "-1)/";
      body += "(" + product(removed) + ")";
    }
    return body + " where " + sym + " = zeta_" + std::to_string(order_);
  }

  int order_;
  std::vector<int> exponents_;
  std::optional<std::vector<int>> factors_;
};

inline nlohmann::json to_json(const MinPoly& p) {
  nlohmann::json j;
  j["order"] = p.order();
  j["exponents"] = p.exponents();
  j["cyclotomic_factors"] = p.cyclotomic_factors() ? nlohmann::json(*p.cyclotomic_factors()) : nlohmann::json(nullptr);
  j["display"] = p.display();
  return j;
}

} // namespace specrep
