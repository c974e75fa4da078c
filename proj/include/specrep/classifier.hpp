#pragma once

#include <atomic>
#include <bit>
#include <chrono>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "json.hpp"
#include "specrep/characters.hpp"
#include "specrep/cyclotomic.hpp"
#include "specrep/partitions.hpp"
#include "specrep/spectrum.hpp"

namespace specrep {

enum class CaseTag {
  SN_i, SN_ii, SN_iii, SN_iv, SN_v, SN_vi, SN_vii, SN_viii, SN_ix, SN_x, SN_xi, SN_full,
  AN_i, AN_ii, AN_iii, AN_iv, AN_v, AN_vi, AN_vii, AN_viii, AN_ix, AN_x, AN_full,
};

inline std::string to_string(CaseTag tag) {
  static const char* names[] = {"SN_i",  "SN_ii",  "SN_iii", "SN_iv",  "SN_v",   "SN_vi",   "SN_vii", "SN_viii",
                                "SN_ix", "SN_x",   "SN_xi",  "SN_full", "AN_i",  "AN_ii",   "AN_iii", "AN_iv",
                                "AN_v",  "AN_vi",  "AN_vii", "AN_viii", "AN_ix", "AN_x",    "AN_full"};
  return names[static_cast<int>(tag)];
}

/// The roman numeral (or "full") without the group prefix.
inline std::string case_label(CaseTag tag) { return to_string(tag).substr(3); }

inline bool is_full_tag(CaseTag tag) { return tag == CaseTag::SN_full || tag == CaseTag::AN_full; }

struct ClassifiedResult {
  CaseTag case_tag;
  SpectrumSet spectrum;
  MinPoly minpoly;

  ClassifiedResult(CaseTag tag, SpectrumSet s)
      : case_tag(tag), spectrum(std::move(s)), minpoly(spectrum.order, spectrum.exponents) {}
};

inline std::vector<int> full_exponents(int o) {
  std::vector<int> e(static_cast<std::size_t>(o));
  std::iota(e.begin(), e.end(), 0);
  return e;
}

inline std::vector<int> all_but(int o, std::vector<int> removed) {
  std::vector<int> out;
  for (auto& r : removed) r = ((r % o) + o) % o;
  for (int e = 0; e < o; ++e)
    if (std::find(removed.begin(), removed.end(), e) == removed.end()) out.push_back(e);
  return out;
}

/// A(mu, t): exponents of all products eta_1 ... eta_t with eta_j^{mu_{i_j}} = 1,
/// parts of mu reusable. Iterated sumset starting from {0}.
inline SpectrumSet sp_formula_A(const CycleType& mu, int t) {
  if (t < 0) throw std::invalid_argument("sp_formula_A: t must be nonnegative");
  const int o = mu.order();
  std::vector<bool> unit(static_cast<std::size_t>(o), false);
  for (int part : mu.parts())
    for (int e = 0; e < o; e += o / part) unit[static_cast<std::size_t>(e)] = true;
  std::vector<bool> acc(static_cast<std::size_t>(o), false);
  acc[0] = true;
  for (int step = 0; step < t; ++step) {
    std::vector<bool> next(static_cast<std::size_t>(o), false);
    for (int a = 0; a < o; ++a)
      if (acc[static_cast<std::size_t>(a)])
        for (int b = 0; b < o; ++b)
          if (unit[static_cast<std::size_t>(b)]) next[static_cast<std::size_t>((a + b) % o)] = true;
    if (next == acc) break;  // 0 is in the unit set, so the sumset only grows
    acc = std::move(next);
  }
  std::vector<int> exps;
  for (int e = 0; e < o; ++e)
    if (acc[static_cast<std::size_t>(e)]) exps.push_back(e);
  return SpectrumSet::from_exponents(o, std::move(exps));
}

/// True iff some t elements of mu (values, repetition allowed) have lcm equal
/// to o(mu). Then the "no t elements" hypothesis of items (i)/(ii) fails.
inline bool lcm_condition_fails(const CycleType& mu, int t) {
  const int o = mu.order();
  if (o == 1) return true;
  if (t <= 0) return false;
  std::vector<int> values = mu.parts();
  values.erase(std::unique(values.begin(), values.end()), values.end());
  const std::size_t k = values.size();
  int best = static_cast<int>(k) + 1;
  for (std::uint32_t mask = 1; mask < (1u << k); ++mask) {
    std::int64_t l = 1;
    for (std::size_t i = 0; i < k; ++i)
      if (mask & (1u << i)) l = std::lcm(l, static_cast<std::int64_t>(values[i]));
    if (l == o) best = std::min(best, std::popcount(mask));
  }
  return best <= t;
}

namespace detail {

inline Partition make_partition(std::vector<int> parts) { return Partition::from_multiset(std::move(parts)); }

/// (head, 1^{ones})
inline Partition hook_shape(std::vector<int> head, int ones) {
  for (int i = 0; i < ones; ++i) head.push_back(1);
  return make_partition(std::move(head));
}

struct Exceptional {
  CaseTag tag;
  std::vector<int> exponents;
};

/// Items (iii)-(xi) of the S_n classification, matched on exact (lambda, mu).
inline std::optional<Exceptional> exceptional_sn(const Partition& lambda, const CycleType& mu) {
  const int n = lambda.size(), o = mu.order();
  const Partition& m = mu.partition();
  if (n >= 3 && lambda == hook_shape({n - 1}, 1) && m == Partition{n})
    return Exceptional{CaseTag::SN_iii, all_but(o, {0})};
  if (n >= 4 && lambda == hook_shape({2}, n - 2) && m == Partition{n})
    return Exceptional{CaseTag::SN_iv, all_but(o, {n % 2 == 0 ? n / 2 : 0})};
  if (n >= 5 && n % 2 == 1 && m == make_partition({n - 2, 2})) {
    if (lambda == hook_shape({2, 2}, n - 4)) return Exceptional{CaseTag::SN_v, all_but(o, {0})};
    if (lambda == make_partition({n - 2, 2})) return Exceptional{CaseTag::SN_vi, all_but(o, {o / 2})};
  }
  if (lambda == Partition{2, 2}) {
    if (m == Partition{4}) return Exceptional{CaseTag::SN_vii, {0, 2}};
    if (m == Partition{3, 1}) return Exceptional{CaseTag::SN_vii, {1, 2}};
    if (m == Partition{2, 2}) return Exceptional{CaseTag::SN_vii, {0}};
  }
  if (m == Partition{6}) {
    if (lambda == Partition{3, 3}) return Exceptional{CaseTag::SN_viii, {0, 1, 3, 5}};
    if (lambda == Partition{2, 2, 2}) return Exceptional{CaseTag::SN_ix, {0, 2, 3, 4}};
  }
  static const std::vector<std::pair<Partition, Partition>> item_x = {
      {Partition{2, 2, 2}, Partition{3, 2, 1}},
      {Partition{4, 4}, Partition{5, 3}},
      {Partition{2, 2, 2, 2}, Partition{5, 3}},
      {Partition{2, 2, 2, 2, 2}, Partition{5, 3, 2}},
  };
  static const std::vector<std::pair<Partition, Partition>> item_xi = {
      {Partition{3, 3}, Partition{3, 2, 1}},
      {Partition{5, 5}, Partition{5, 3, 2}},
  };
  for (const auto& [l, c] : item_x)
    if (lambda == l && m == c) return Exceptional{CaseTag::SN_x, all_but(o, {0})};
  for (const auto& [l, c] : item_xi)
    if (lambda == l && m == c) return Exceptional{CaseTag::SN_xi, all_but(o, {o / 2})};
  return std::nullopt;
}

inline std::vector<int> shifted(const SpectrumSet& s, int shift) {
  std::vector<int> out;
  for (int e : s.exponents) out.push_back((e + shift) % s.order);
  std::sort(out.begin(), out.end());
  return out;
}

} // namespace detail

/// Closed-form eigenvalue set of rho_lambda(sigma), sigma of cycle type mu.
inline ClassifiedResult classify_sn(const Partition& lambda, const CycleType& mu) {
  const int n = lambda.size();
  if (n != mu.n())
    throw std::invalid_argument("classify_sn: |lambda| = " + std::to_string(n) + " but mu is a partition of " +
                                std::to_string(mu.n()));
  if (n < 2) throw std::invalid_argument("classify_sn: n must be at least 2");
  const int o = mu.order();
  const int sign_shift = mu.sign() == -1 ? o / 2 : 0;

  if (auto ex = detail::exceptional_sn(lambda, mu))
    return ClassifiedResult(ex->tag, SpectrumSet::from_exponents(o, std::move(ex->exponents)));

  // Trivial and sign characters: A(mu, 0) = {0}, shifted by sgn for (1^n).
  if (lambda == Partition{n}) {
    return ClassifiedResult(o == 1 ? CaseTag::SN_full : CaseTag::SN_i, SpectrumSet::from_exponents(o, {0}));
  }
  if (lambda.length() == n) {
    return ClassifiedResult(o == 1 ? CaseTag::SN_full : CaseTag::SN_ii, SpectrumSet::from_exponents(o, {sign_shift}));
  }

  const int t1 = n - lambda.row(1);
  const int t2 = n - conjugate(lambda).row(1);
  const bool item_i = !lcm_condition_fails(mu, t1);
  const bool item_ii = !lcm_condition_fails(mu, t2);
  if (item_i) {
    SpectrumSet s = sp_formula_A(mu, t1);
    if (item_ii && detail::shifted(sp_formula_A(mu, t2), sign_shift) != s.exponents)
      throw std::logic_error("classify_sn: items (i) and (ii) disagree for lambda=" + lambda.to_string() +
                             ", mu=" + mu.to_string());
    return ClassifiedResult(CaseTag::SN_i, std::move(s));
  }
  if (item_ii)
    return ClassifiedResult(CaseTag::SN_ii, SpectrumSet::from_exponents(o, detail::shifted(sp_formula_A(mu, t2), sign_shift)));
  return ClassifiedResult(CaseTag::SN_full, SpectrumSet::from_exponents(o, full_exponents(o)));
}

/// lambda or lambda', whichever has the longer first row (ties broken by
/// reverse lexicographic order). Both label the same A_n character.
inline Partition normalize_an_partition(const Partition& lambda) {
  const Partition conj = conjugate(lambda);
  if (conj.row(1) > lambda.row(1) || (conj.row(1) == lambda.row(1) && conj > lambda)) return conj;
  return lambda;
}

/// Closed-form eigenvalue set for an irreducible character of A_n.
inline ClassifiedResult classify_an(const AnCharLabel& chi, const AnClass& cls) {
  const int n = chi.lambda.size();
  if (n != cls.mu.n())
    throw std::invalid_argument("classify_an: character of degree " + std::to_string(n) + " evaluated on class " +
                                cls.to_string());
  if (n < 3) throw std::invalid_argument("classify_an: n must be at least 3");
  const Partition lambda = normalize_an_partition(chi.lambda);
  if (lambda == Partition{n}) throw std::invalid_argument("classify_an: trivial character");
  const CycleType& mu = cls.mu;
  const int o = mu.order();

  const bool split_case = chi.split && mu.parts() == diagonal_hooks(lambda);
  if (!split_case) {
    // Every chi(sigma^i) is chi^lambda(sigma^i) / d, so the S_n answer carries over.
    ClassifiedResult r = classify_sn(lambda, mu);
    CaseTag tag;
    switch (r.case_tag) {
      case CaseTag::SN_full: tag = CaseTag::AN_full; break;
      case CaseTag::SN_i:
      case CaseTag::SN_ii: tag = CaseTag::AN_i; break;
      case CaseTag::SN_iii: tag = CaseTag::AN_ii; break;
      case CaseTag::SN_x: tag = CaseTag::AN_iii; break;
      case CaseTag::SN_vii: tag = CaseTag::AN_viii; break;
      default:
        throw std::logic_error("classify_an: S_n case " + to_string(r.case_tag) + " cannot occur for an even class");
    }
    r.spectrum.multiplicities.reset();
    return ClassifiedResult(tag, std::move(r.spectrum));
  }

  if (!cls.split) throw std::invalid_argument("classify_an: class " + mu.to_string() + " needs a split sign");
  const bool same = *chi.split == *cls.split;
  auto result = [&](CaseTag tag, std::vector<int> exps) {
    return ClassifiedResult(tag, SpectrumSet::from_exponents(o, std::move(exps)));
  };
  // eta = zeta_5 and omega = zeta_3.
  if (n == 5 && lambda == Partition{3, 1, 1})
    return same ? result(CaseTag::AN_iv, {0, 1, 4}) : result(CaseTag::AN_v, {0, 2, 3});
  if (n == 4 && lambda == Partition{2, 2})
    return same ? result(CaseTag::AN_vi, {1}) : result(CaseTag::AN_vii, {2});
  if (n == 3 && lambda == Partition{2, 1})
    return same ? result(CaseTag::AN_ix, {1}) : result(CaseTag::AN_x, {2});

  const int t = n - lambda.row(1);
  if (!lcm_condition_fails(mu, t)) return ClassifiedResult(CaseTag::AN_i, sp_formula_A(mu, t));
  return result(CaseTag::AN_full, full_exponents(o));
}

/// sigma a product of m disjoint r-cycles in S_n; the known closed form for
/// its minimal polynomial in rho_lambda.
inline MinPoly cycle_power_case(const Partition& lambda, int r, int m, int n) {
  if (r < 2 || m < 1 || r * m > n) throw std::invalid_argument("cycle_power_case: need r >= 2, m >= 1, rm <= n");
  if (lambda.size() != n) throw std::invalid_argument("cycle_power_case: lambda is not a partition of n");
  if (lambda == Partition{n}) throw std::invalid_argument("cycle_power_case: trivial representation");
  if (r == n && m == 1) {
    if (lambda == detail::hook_shape({n - 1}, 1)) return MinPoly(n, all_but(n, {0}));
    if (lambda == detail::hook_shape({2}, n - 2)) return MinPoly(n, all_but(n, {n % 2 == 0 ? n / 2 : 0}));
    if (n == 6 && lambda == Partition{3, 3}) return MinPoly(6, {0, 1, 3, 5});
    if (n == 6 && lambda == Partition{2, 2, 2}) return MinPoly(6, {0, 2, 3, 4});
  }
  if (n == 4 && lambda == Partition{2, 2}) {
    if (r == 4 && m == 1) return MinPoly(4, {0, 2});
    if (r == 3 && m == 1) return MinPoly(3, {1, 2});
    if (r == 2 && m == 2) return MinPoly(2, {0});
  }
  if (lambda.length() == n) {
    const bool odd = (m * (r - 1)) % 2 == 1;
    return MinPoly(r, {odd ? r / 2 : 0});
  }
  return MinPoly(r, full_exponents(r));
}

/// (r, m) when mu = (r^m, 1^{n-rm}) with r >= 2.
inline std::optional<std::pair<int, int>> as_cycle_power(const CycleType& mu) {
  int r = 0, m = 0;
  for (int part : mu.parts()) {
    if (part == 1) continue;
    if (r != 0 && part != r) return std::nullopt;
    r = part;
    ++m;
  }
  if (r == 0) return std::nullopt;
  return std::make_pair(r, m);
}

// ---------------------------------------------------------------------------
// Enumeration of A_n labels and classes
// ---------------------------------------------------------------------------

/// One label per irreducible character of A_n, in partition order; the
/// trivial character is skipped unless asked for.
inline std::vector<AnCharLabel> an_character_labels(int n, bool include_trivial = false) {
  std::vector<AnCharLabel> out;
  for (const auto& lambda : partitions_of(n)) {
    if (normalize_an_partition(lambda) != lambda) continue;
    if (!include_trivial && lambda == Partition{n}) continue;
    if (is_self_conjugate(lambda)) {
      out.emplace_back(lambda, SplitSign::plus);
      out.emplace_back(lambda, SplitSign::minus);
    } else {
      out.emplace_back(lambda);
    }
  }
  return out;
}

inline std::vector<AnClass> an_classes(int n) {
  std::vector<AnClass> out;
  for (const auto& mu : cycle_types_of(n)) {
    if (!mu.is_even()) continue;
    if (mu.splits_in_alternating()) {
      out.emplace_back(mu, SplitSign::plus);
      out.emplace_back(mu, SplitSign::minus);
    } else {
      out.emplace_back(mu);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Verification sweep
// ---------------------------------------------------------------------------

enum class Group { S, A };

inline std::string to_string(Group g) { return g == Group::S ? "S" : "A"; }

struct Mismatch {
  std::string character;
  std::string cls;
  std::string case_tag;
  std::vector<int> classifier;
  std::vector<int> oracle;
  std::string error;
};

struct VerifyEntry {
  int n = 0;
  std::int64_t pairs_checked = 0;
  std::vector<Mismatch> mismatches;
  std::map<std::string, std::int64_t> case_histogram;
  std::int64_t elapsed_ms = 0;
};

struct VerifyReport {
  Group group = Group::S;
  int n_max = 0;
  int workers = 1;
  std::vector<VerifyEntry> entries;

  std::size_t mismatch_count() const {
    std::size_t total = 0;
    for (const auto& e : entries) total += e.mismatches.size();
    return total;
  }
};

/// Runs f(i) for i in [0, count) on `workers` threads.
template <class F>
void parallel_for(std::size_t count, int workers, F&& f) {
  if (workers <= 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) f(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  for (int w = 0; w < workers; ++w)
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) f(i);
    });
  for (auto& t : pool) t.join();
}

/// Compares the classifier against the oracle for every (character, class)
/// pair at each n. Mismatches are report content, never exceptions.
inline VerifyReport verify_range(int n_max, Group group, int workers = 1, int n_min = 0) {
  VerifyReport report{group, n_max, workers, {}};
  const int start = std::max(n_min, group == Group::S ? 2 : 3);
  for (int n = start; n <= n_max; ++n) {
    const auto t0 = std::chrono::steady_clock::now();
    std::vector<std::pair<CharacterSpec, ClassSpec>> tasks;
    if (group == Group::S) {
      for (const auto& lambda : partitions_of(n))
        for (const auto& mu : cycle_types_of(n)) tasks.emplace_back(lambda, mu);
    } else {
      for (const auto& chi : an_character_labels(n))
        for (const auto& cls : an_classes(n)) tasks.emplace_back(chi, cls);
    }

    struct Outcome {
      std::string tag;
      std::optional<Mismatch> mismatch;
    };
    std::vector<Outcome> outcomes(tasks.size());
    parallel_for(tasks.size(), workers, [&](std::size_t i) {
      const auto& [chi, cls] = tasks[i];
      const std::string chi_str = std::holds_alternative<Partition>(chi) ? std::get<Partition>(chi).to_string()
                                                                         : std::get<AnCharLabel>(chi).to_string();
      const std::string cls_str = std::holds_alternative<CycleType>(cls) ? std::get<CycleType>(cls).to_string()
                                                                         : std::get<AnClass>(cls).to_string();
      try {
        const ClassifiedResult r = group == Group::S
                                       ? classify_sn(std::get<Partition>(chi), std::get<CycleType>(cls))
                                       : classify_an(std::get<AnCharLabel>(chi), std::get<AnClass>(cls));
        const SpectrumSet oracle = spectrum_oracle(chi, cls);
        outcomes[i].tag = to_string(r.case_tag);
        if (!r.spectrum.same_set(oracle) || is_full_tag(r.case_tag) != oracle.is_full())
          outcomes[i].mismatch = Mismatch{chi_str, cls_str, outcomes[i].tag, r.spectrum.exponents, oracle.exponents, ""};
      } catch (const std::exception& ex) {
        outcomes[i].tag = "error";
        outcomes[i].mismatch = Mismatch{chi_str, cls_str, "error", {}, {}, ex.what()};
      }
    });

    VerifyEntry entry;
    entry.n = n;
    entry.pairs_checked = static_cast<std::int64_t>(tasks.size());
    for (auto& o : outcomes) {
      ++entry.case_histogram[o.tag];
      if (o.mismatch) entry.mismatches.push_back(std::move(*o.mismatch));
    }
    entry.elapsed_ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0).count();
    report.entries.push_back(std::move(entry));
  }
  return report;
}

inline nlohmann::json to_json(const VerifyEntry& e) {
  nlohmann::json mismatches = nlohmann::json::array();
  for (const auto& m : e.mismatches) {
    nlohmann::json j{{"character", m.character}, {"class", m.cls}, {"case", m.case_tag},
                     {"classifier", m.classifier}, {"oracle", m.oracle}};
    if (!m.error.empty()) j["error"] = m.error;
    mismatches.push_back(std::move(j));
  }
  nlohmann::json hist = nlohmann::json::object();
  for (const auto& [tag, count] : e.case_histogram) hist[tag] = count;
  return {{"n", e.n},
          {"pairs_checked", e.pairs_checked},
          {"mismatches", std::move(mismatches)},
          {"case_histogram", std::move(hist)},
          {"elapsed_ms", e.elapsed_ms}};
}

inline nlohmann::json to_json(const VerifyReport& r) {
  nlohmann::json results = nlohmann::json::array();
  for (const auto& e : r.entries) results.push_back(to_json(e));
  return {{"group", to_string(r.group)}, {"n_max", r.n_max}, {"workers", r.workers}, {"results", std::move(results)}};
}

} // namespace specrep
