#pragma once

// Independent reference computations used only by the tests. Nothing here
// calls the code path it is used to check.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "specrep/specrep.hpp"

namespace specrep::oracle {

/// p(n) from Euler's pentagonal number recurrence.
inline std::int64_t partition_count(int n) {
  std::vector<std::int64_t> p(static_cast<std::size_t>(n + 1), 0);
  p[0] = 1;
  for (int m = 1; m <= n; ++m) {
    std::int64_t sum = 0;
    for (int k = 1;; ++k) {
      const int g1 = k * (3 * k - 1) / 2, g2 = k * (3 * k + 1) / 2;
      if (g1 > m) break;
      const int sign = (k % 2 == 1) ? 1 : -1;
      sum += sign * p[static_cast<std::size_t>(m - g1)];
      if (g2 <= m) sum += sign * p[static_cast<std::size_t>(m - g2)];
    }
    p[static_cast<std::size_t>(m)] = sum;
  }
  return p[static_cast<std::size_t>(n)];
}

/// Transpose by counting cells column by column.
inline Partition conjugate_by_columns(const Partition& lambda) {
  std::vector<int> cols;
  for (int c = 1;; ++c) {
    int count = 0;
    for (int part : lambda.parts())
      if (part >= c) ++count;
    if (count == 0) break;
    cols.push_back(count);
  }
  return Partition(cols);
}

inline int mobius(int n) {
  int result = 1;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    n /= p;
    if (n % p == 0) return 0;
    result = -result;
  }
  if (n > 1) result = -result;
  return result;
}

/// Phi_N = prod_{d | N} (x^d - 1)^{mobius(N/d)}.
inline IntPoly cyclotomic_by_mobius(int N) {
  IntPoly num{1}, den{1};
  for (int d = 1; d <= N; ++d) {
    if (N % d) continue;
    IntPoly f(static_cast<std::size_t>(d + 1), 0);
    f[0] = -1;
    f[static_cast<std::size_t>(d)] = 1;
    const int mu = mobius(N / d);
    if (mu == 1) num = poly_mul(num, f);
    if (mu == -1) den = poly_mul(den, f);
  }
  // den is x^d - 1 products: not monic-negative; normalize to monic.
  return poly_div_exact(num, den);
}

/// c^lambda_{mu,nu} as <chi^lambda restricted to S_m x S_k, chi^mu x chi^nu>,
/// summed over class pairs with explicit class sizes.
inline std::int64_t lr_by_characters(const Partition& lambda, const Partition& mu, const Partition& nu) {
  const int m = mu.size(), k = nu.size();
  if (m + k != lambda.size()) return 0;
  Rational total = 0;
  for (const auto& alpha : cycle_types_of(m))
    for (const auto& beta : cycle_types_of(k)) {
      std::vector<int> joined = alpha.parts();
      joined.insert(joined.end(), beta.parts().begin(), beta.parts().end());
      const CycleType both(Partition::from_multiset(joined));
      total += Rational(static_cast<long>(alpha.class_size() * beta.class_size())) *
               static_cast<long>(mn_character(lambda, both) * mn_character(mu, alpha) * mn_character(nu, beta));
    }
  std::int64_t order = 1;
  for (int i = 2; i <= m; ++i) order *= i;
  for (int i = 2; i <= k; ++i) order *= i;
  total /= static_cast<long>(order);
  return total.get_num().get_si();
}

/// Uniform random permutation of {1..n}.
inline Permutation random_permutation(int n, std::mt19937& rng) {
  std::vector<int> images(static_cast<std::size_t>(n));
  std::iota(images.begin(), images.end(), 1);
  std::shuffle(images.begin(), images.end(), rng);
  return Permutation(images);
}

inline Permutation random_even_permutation(int n, std::mt19937& rng) {
  Permutation p = random_permutation(n, rng);
  if (p.sign() == -1) p = Permutation::from_cycles(n, {{1, 2}}) * p;
  return p;
}

/// Ramanujan-free check of the identity Phi_N(zeta_N) = 0: evaluate the
/// polynomial at zeta_N inside Q(zeta_N) term by term.
inline CyclotomicElement evaluate_at_zeta(const IntPoly& p, int N) {
  CyclotomicElement acc(N);
  for (std::size_t k = 0; k < p.size(); ++k)
    if (p[k] != 0) acc = acc + CyclotomicElement::zeta(N, static_cast<std::int64_t>(k)).scaled(Rational(static_cast<long>(p[k])));
  return acc;
}

} // namespace specrep::oracle

namespace specrep::oracle {

/// Every skew shape with m cells up to the moves that preserve LR data:
/// translation, and deleting empty rows or columns between components.
/// Shapes are normalized so each row 1..k and each column 1..lambda_1 is
/// occupied; row lengths run over compositions of m, offsets over all
/// admissible values.
inline std::vector<SkewShape> normalized_skew_shapes(int m) {
  std::vector<SkewShape> out;
  std::vector<int> len, off;  // bottom row first
  auto emit = [&] {
    const std::size_t k = len.size();
    std::vector<int> outer(k), inner(k);
    for (std::size_t i = 0; i < k; ++i) {
      inner[k - 1 - i] = off[i];
      outer[k - 1 - i] = off[i] + len[i];
    }
    std::vector<bool> used(static_cast<std::size_t>(outer[0] + 1), false);
    for (std::size_t i = 0; i < k; ++i)
      for (int c = inner[i] + 1; c <= outer[i]; ++c) used[static_cast<std::size_t>(c)] = true;
    for (int c = 1; c <= outer[0]; ++c)
      if (!used[static_cast<std::size_t>(c)]) return;
    std::vector<int> inner_trim;
    for (int v : inner)
      if (v > 0) inner_trim.push_back(v);
    out.emplace_back(Partition(outer), Partition(inner_trim));
  };
  auto rec = [&](auto&& self, int remaining) -> void {
    if (remaining == 0) {
      emit();
      return;
    }
    for (int l = 1; l <= remaining; ++l) {
      // Row above: offset >= offset below, end >= end below.
      const int lo = len.empty() ? 0 : std::max(off.back(), off.back() + len.back() - l);
      // A gap between this row's start and the end of the row below would be
      // an empty column: higher rows start further right, lower ones end earlier.
      const int hi = len.empty() ? 0 : off.back() + len.back();
      for (int o = lo; o <= hi; ++o) {
        len.push_back(l);
        off.push_back(o);
        self(self, remaining - l);
        len.pop_back();
        off.pop_back();
      }
    }
  };
  rec(rec, m);
  return out;
}

} // namespace specrep::oracle
