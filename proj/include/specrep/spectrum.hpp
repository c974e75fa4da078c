#pragma once

#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "json.hpp"
#include "specrep/characters.hpp"
#include "specrep/cyclotomic.hpp"
#include "specrep/lr.hpp"
#include "specrep/partitions.hpp"

namespace specrep {

/// Raised when an exact eigenspace dimension comes out non-integral or
/// negative. Always indicates an arithmetic or convention bug.
struct InternalConsistencyError : std::logic_error {
  using std::logic_error::logic_error;
};

/// Eigenvalues {zeta_o^e : e in exponents}, optionally with multiplicities.
struct SpectrumSet {
  int order = 1;
  std::vector<int> exponents;
  std::optional<std::map<int, std::int64_t>> multiplicities;

  static SpectrumSet from_exponents(int order, std::vector<int> exps) {
    for (int& e : exps) e = ((e % order) + order) % order;
    std::sort(exps.begin(), exps.end());
    exps.erase(std::unique(exps.begin(), exps.end()), exps.end());
    return SpectrumSet{order, std::move(exps), std::nullopt};
  }

  static SpectrumSet from_multiplicities(int order, std::map<int, std::int64_t> mult) {
    SpectrumSet s{order, {}, std::map<int, std::int64_t>{}};
    for (const auto& [e, m] : mult)
      if (m > 0) {
        s.exponents.push_back(e);
        (*s.multiplicities)[e] = m;
      }
    return s;
  }

  bool is_full() const { return static_cast<int>(exponents.size()) == order; }
  bool contains(int e) const { return std::binary_search(exponents.begin(), exponents.end(), ((e % order) + order) % order); }

  std::int64_t total_multiplicity() const {
    std::int64_t sum = 0;
    if (multiplicities)
      for (const auto& [e, m] : *multiplicities) sum += m;
    return sum;
  }

  /// Exponent sets only; multiplicities are not compared.
  bool same_set(const SpectrumSet& other) const { return order == other.order && exponents == other.exponents; }

  std::string exponents_string(char sep = ',') const {
    std::string out = "{";
    for (std::size_t k = 0; k < exponents.size(); ++k) out += (k ? std::string(1, sep) : "") + std::to_string(exponents[k]);
    return out + "}";
  }
};

inline nlohmann::json to_json(const SpectrumSet& s) {
  nlohmann::json j;
  j["order"] = s.order;
  j["exponents"] = s.exponents;
  if (s.multiplicities) {
    nlohmann::json m = nlohmann::json::object();
    for (const auto& [e, k] : *s.multiplicities) m[std::to_string(e)] = k;
    j["multiplicities"] = m;
  } else {
    j["multiplicities"] = nullptr;
  }
  return j;
}

using CharacterSpec = std::variant<Partition, AnCharLabel>;
using ClassSpec = std::variant<CycleType, AnClass>;

inline const CycleType& cycle_type_of(const ClassSpec& cls) {
  return std::holds_alternative<CycleType>(cls) ? std::get<CycleType>(cls) : std::get<AnClass>(cls).mu;
}

inline const Partition& partition_of(const CharacterSpec& chi) {
  return std::holds_alternative<Partition>(chi) ? std::get<Partition>(chi) : std::get<AnCharLabel>(chi).lambda;
}

/// Character values chi(sigma^i), i = 0..o-1, all written over one common
/// cyclotomic field.
struct PowerValues {
  int order;
  int conductor;
  std::vector<CyclotomicElement> values;
};

inline PowerValues character_on_powers(const CharacterSpec& chi, const ClassSpec& cls) {
  const CycleType& mu = cycle_type_of(cls);
  const Partition& lambda = partition_of(chi);
  if (lambda.size() != mu.n())
    throw std::invalid_argument("character of degree " + std::to_string(lambda.size()) + " evaluated on class " +
                                mu.to_string());
  const int o = mu.order();
  std::vector<CyclotomicElement> values;
  values.reserve(static_cast<std::size_t>(o));

  if (std::holds_alternative<Partition>(chi)) {
    for (int i = 0; i < o; ++i)
      values.push_back(CyclotomicElement::rational(make_rational(static_cast<long>(mn_character(lambda, power_cycle_type(mu, i))))));
  } else {
    const AnCharLabel& label = std::get<AnCharLabel>(chi);
    const AnClass an_cls = std::holds_alternative<AnClass>(cls) ? std::get<AnClass>(cls) : AnClass(mu);
    const std::vector<int> hooks = label.split ? diagonal_hooks(lambda) : std::vector<int>{};
    std::optional<Permutation> rep;
    for (int i = 0; i < o; ++i) {
      const CycleType power = power_cycle_type(mu, i);
      CharacterValue v;
      if (label.split && power.parts() == hooks) {
        // Only here does the A_n class of sigma^i matter.
        if (!rep) {
          if (!an_cls.split)
            throw std::invalid_argument("class " + mu.to_string() + " needs a split sign for character " + label.to_string());
          rep = class_representative(an_cls);
        }
        v = an_character_value(label, split_class_of(rep->power(i)));
      } else {
        v = an_character_value(label, AnClass(power));
      }
      values.push_back(v.to_cyclotomic());
    }
  }

  int N = o;
  for (const auto& v : values) N = std::lcm(N, v.conductor());
  for (auto& v : values) v = v.embed(N);
  return PowerValues{o, N, std::move(values)};
}

/// m_e = (1/o) sum_i chi(sigma^i) zeta_o^{-ie}. Terms are rotated into one
/// unreduced coefficient vector and reduced modulo Phi_N once.
inline std::int64_t multiplicity_from_powers(const PowerValues& pv, int e) {
  const int o = pv.order, N = pv.conductor, step = N / o;
  std::vector<Rational> raw(static_cast<std::size_t>(N));
  for (int i = 0; i < o; ++i) {
    const auto& coeffs = pv.values[static_cast<std::size_t>(i)].coefficients();
    const std::int64_t residue = ((-static_cast<std::int64_t>(i) * e) % o + o) % o;
    const int shift = static_cast<int>(residue * step);
    for (int j = 0; j < N; ++j) {
      const Rational& c = coeffs[static_cast<std::size_t>(j)];
      if (c != 0) raw[static_cast<std::size_t>((j + shift) % N)] += c;
    }
  }
  const auto sum = CyclotomicElement::from_coefficients(std::move(raw), N).as_rational();
  if (!sum) throw InternalConsistencyError("eigenspace dimension is not rational");
  const Rational m = *sum / o;
  if (m.get_den() != 1 || m < 0)
    throw InternalConsistencyError("eigenspace dimension " + m.get_str() + " is not a nonnegative integer");
  return m.get_num().get_si();
}

inline int normalized_exponent(int e, int o) { return ((e % o) + o) % o; }

/// Dimension of the zeta_o^e eigenspace of rho(sigma), o = o(sigma).
inline std::int64_t eigenvalue_multiplicity(const CharacterSpec& chi, const ClassSpec& cls, int e) {
  const PowerValues pv = character_on_powers(chi, cls);
  return multiplicity_from_powers(pv, normalized_exponent(e, pv.order));
}

/// Full eigenvalue multiplicity map from the inner products <chi|_H, psi_eta>.
inline SpectrumSet spectrum_oracle(const CharacterSpec& chi, const ClassSpec& cls) {
  const PowerValues pv = character_on_powers(chi, cls);
  std::map<int, std::int64_t> mult;
  for (int e = 0; e < pv.order; ++e) mult[e] = multiplicity_from_powers(pv, e);
  return SpectrumSet::from_multiplicities(pv.order, std::move(mult));
}

namespace detail {

inline std::vector<int> spectrum_via_lr_rec(const Partition& lambda, const CycleType& mu,
                                            std::map<std::pair<Partition, Partition>, std::vector<int>>& memo) {
  const auto key = std::make_pair(lambda, mu.partition());
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  std::vector<int> result;
  if (mu.parts().size() <= 1) {
    result = spectrum_oracle(lambda, mu).exponents;
  } else {
    const int r = mu.parts().front();
    const CycleType rest(Partition(std::vector<int>(mu.parts().begin() + 1, mu.parts().end())));
    const CycleType cycle{r};
    const int o = mu.order(), o1 = rest.order();
    std::vector<bool> hit(static_cast<std::size_t>(o), false);
    for (const auto& nu : partitions_of(rest.n())) {
      if (!contains(nu, lambda)) continue;
      const std::vector<int> left = spectrum_via_lr_rec(nu, rest, memo);
      for (const auto& gamma : lr_set(SkewShape(lambda, nu))) {
        const std::vector<int> right = spectrum_via_lr_rec(gamma, cycle, memo);
        for (int e1 : left)
          for (int e2 : right) hit[static_cast<std::size_t>((e1 * (o / o1) + e2 * (o / r)) % o)] = true;
      }
    }
    for (int e = 0; e < o; ++e)
      if (hit[static_cast<std::size_t>(e)]) result.push_back(e);
  }
  memo.emplace(key, result);
  return result;
}

} // namespace detail

/// Exponent set via the LR restriction to S_{n-r} x S_r, peeling the largest
/// cycle each step. Single-cycle classes fall back to the oracle.
inline SpectrumSet spectrum_via_lr(const Partition& lambda, const CycleType& mu) {
  if (lambda.size() != mu.n())
    throw std::invalid_argument("spectrum_via_lr: |lambda| = " + std::to_string(lambda.size()) + " but mu is a partition of " +
                                std::to_string(mu.n()));
  std::map<std::pair<Partition, Partition>, std::vector<int>> memo;
  return SpectrumSet::from_exponents(mu.order(), detail::spectrum_via_lr_rec(lambda, mu, memo));
}

/// Spectrum of sigma in the standard representation (n-1,1), with
/// multiplicities: k-1 for eigenvalue 1, #{i : eta^{n_i} = 1} otherwise.
inline SpectrumSet standard_rep_spectrum(const CycleType& mu) {
  if (mu.n() < 2) throw std::invalid_argument("standard_rep_spectrum: n must be at least 2");
  const int o = mu.order();
  const auto k = static_cast<std::int64_t>(mu.parts().size());
  std::map<int, std::int64_t> mult;
  mult[0] = k - 1;
  for (int e = 1; e < o; ++e) {
    std::int64_t count = 0;
    for (int part : mu.parts())
      if ((static_cast<std::int64_t>(e) * part) % o == 0) ++count;
    mult[e] = count;
  }
  return SpectrumSet::from_multiplicities(o, std::move(mult));
}

inline MinPoly min_poly_from_spectrum(const SpectrumSet& s) {
  if (s.exponents.empty()) throw std::invalid_argument("min_poly_from_spectrum: empty spectrum");
  return MinPoly(s.order, s.exponents);
}

} // namespace specrep
