#include <gtest/gtest.h>

#include "oracles.hpp"

using namespace specrep;

TEST(Multiplicity, Examples) {
  EXPECT_EQ(eigenvalue_multiplicity(Partition{6, 1}, CycleType{3, 2, 2}, 0), 2);
  for (const auto& mu : cycle_types_of(6)) EXPECT_EQ(eigenvalue_multiplicity(Partition{6}, mu, 0), 1);
  EXPECT_EQ(eigenvalue_multiplicity(Partition{2, 2}, CycleType{3, 1}, 0), 0);
}

TEST(Multiplicity, TotalsEqualDimension) {
  for (int n = 2; n <= 8; ++n)
    for (const auto& l : partitions_of(n))
      for (const auto& mu : cycle_types_of(n)) EXPECT_EQ(spectrum_oracle(l, mu).total_multiplicity(), dimension(l));
}

TEST(Multiplicity, AlternatingTotalsEqualDimension) {
  for (int n = 3; n <= 8; ++n)
    for (const auto& chi : an_character_labels(n, true))
      for (const auto& cls : an_classes(n)) {
        const std::int64_t dim = dimension(chi.lambda) / (chi.split ? 2 : 1);
        EXPECT_EQ(spectrum_oracle(chi, cls).total_multiplicity(), dim) << chi.to_string() << " " << cls.to_string();
      }
}

TEST(Oracle, WorkedExamples) {
  const auto s = spectrum_oracle(Partition{4, 1}, CycleType{5});
  EXPECT_EQ(s.exponents, (std::vector<int>{1, 2, 3, 4}));
  for (int e = 1; e <= 4; ++e) EXPECT_EQ(s.multiplicities->at(e), 1);
  EXPECT_EQ(spectrum_oracle(AnCharLabel(Partition{3, 1, 1}, SplitSign::plus), AnClass(CycleType{5}, SplitSign::plus)).exponents,
            (std::vector<int>{0, 1, 4}));
  // (n-2,2) on (n-2,2) for odd n misses only -1.
  EXPECT_EQ(spectrum_oracle(Partition{3, 2}, CycleType{3, 2}).exponents, (std::vector<int>{0, 1, 2, 4, 5}));
}

TEST(Oracle, RejectsBadInput) {
  EXPECT_THROW(spectrum_oracle(Partition{3, 1}, CycleType{3, 2}), std::invalid_argument);
  EXPECT_THROW(spectrum_oracle(AnCharLabel(Partition{2, 2}, SplitSign::plus), AnClass(CycleType{3, 1})), std::invalid_argument);
}

TEST(Oracle, SignTwistNegatesSpectrumOnOddClasses) {
  for (int n = 2; n <= 8; ++n)
    for (const auto& l : partitions_of(n))
      for (const auto& mu : cycle_types_of(n)) {
        const auto a = spectrum_oracle(l, mu), b = spectrum_oracle(conjugate(l), mu);
        const int shift = mu.is_even() ? 0 : mu.order() / 2;
        std::vector<int> moved;
        for (int e : a.exponents) moved.push_back((e + shift) % mu.order());
        std::sort(moved.begin(), moved.end());
        EXPECT_EQ(moved, b.exponents);
      }
}

TEST(LrPath, Examples) {
  EXPECT_EQ(spectrum_via_lr(Partition{4, 1}, CycleType{5}).exponents, (std::vector<int>{1, 2, 3, 4}));
  EXPECT_EQ(spectrum_via_lr(Partition{5, 2}, CycleType{5, 2}).exponents, all_but(10, {5}));
  EXPECT_TRUE(spectrum_via_lr(Partition{6, 1}, CycleType{3, 2, 2}).same_set(spectrum_oracle(Partition{6, 1}, CycleType{3, 2, 2})));
  EXPECT_THROW(spectrum_via_lr(Partition{3}, CycleType{2, 2}), std::invalid_argument);
}

TEST(LrPath, AgreesWithOracle) {
  for (int n = 2; n <= 8; ++n)
    for (const auto& l : partitions_of(n))
      for (const auto& mu : cycle_types_of(n))
        EXPECT_TRUE(spectrum_via_lr(l, mu).same_set(spectrum_oracle(l, mu))) << l << " on " << mu;
}

TEST(StandardRep, Examples) {
  const auto s = standard_rep_spectrum(CycleType{3, 2, 2});
  EXPECT_EQ(s.exponents, (std::vector<int>{0, 2, 3, 4}));
  EXPECT_EQ(*s.multiplicities, (std::map<int, std::int64_t>{{0, 2}, {2, 1}, {3, 2}, {4, 1}}));
  EXPECT_EQ(standard_rep_spectrum(CycleType{6}).exponents, (std::vector<int>{1, 2, 3, 4, 5}));
  const auto id = standard_rep_spectrum(CycleType{1, 1, 1});
  EXPECT_EQ(*id.multiplicities, (std::map<int, std::int64_t>{{0, 2}}));
}

TEST(StandardRep, MatchesOracleWithMultiplicities) {
  for (int n = 2; n <= 10; ++n)
    for (const auto& mu : cycle_types_of(n)) {
      const auto a = standard_rep_spectrum(mu), b = spectrum_oracle(Partition{n - 1, 1}, mu);
      EXPECT_EQ(*a.multiplicities, *b.multiplicities) << mu;
    }
}

TEST(MinPolyFromSpectrum, Examples) {
  EXPECT_EQ(min_poly_from_spectrum(SpectrumSet::from_exponents(6, full_exponents(6))).cyclotomic_factors(),
            (std::vector<int>{1, 2, 3, 6}));
  // Phi_6 removed leaves exponents {0,2,3,4}; dropping only e=3 removes Phi_2.
  const auto p = min_poly_from_spectrum(SpectrumSet::from_exponents(6, {0, 2, 3, 4}));
  EXPECT_EQ(p.display(), "(x^6-1)/(x^2-x+1)");
  EXPECT_EQ(p.cyclotomic_factors(), (std::vector<int>{1, 2, 3}));
  const auto r = min_poly_from_spectrum(SpectrumSet::from_exponents(6, {0, 1, 2, 4, 5}));
  EXPECT_EQ(r.display(), "(x^6-1)/(x+1)");
  EXPECT_EQ(r.cyclotomic_factors(), (std::vector<int>{1, 3, 6}));
  const auto q = min_poly_from_spectrum(SpectrumSet::from_exponents(5, {0, 1, 4}));
  EXPECT_FALSE(q.cyclotomic_factors());
  EXPECT_EQ(q.exponents(), (std::vector<int>{0, 1, 4}));
  EXPECT_THROW(min_poly_from_spectrum(SpectrumSet::from_exponents(5, {})), std::invalid_argument);
}

TEST(Json, SpectrumAndMinPolySchemas) {
  const auto s = spectrum_oracle(Partition{4, 1}, CycleType{5});
  const auto j = to_json(s);
  EXPECT_EQ(j["order"], 5);
  EXPECT_EQ(j["multiplicities"]["1"], 1);
  const auto m = to_json(min_poly_from_spectrum(s));
  EXPECT_EQ(m["display"], "(x^5-1)/(x-1)");
  EXPECT_EQ(m["cyclotomic_factors"], nlohmann::json({5}));
  EXPECT_TRUE(to_json(MinPoly(5, {0, 1, 4}))["cyclotomic_factors"].is_null());
}
