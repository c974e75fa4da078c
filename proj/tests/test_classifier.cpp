#include <gtest/gtest.h>

#include "oracles.hpp"

using namespace specrep;

TEST(FormulaA, Examples) {
  EXPECT_EQ(sp_formula_A(CycleType{3, 2, 2}, 1).exponents, (std::vector<int>{0, 2, 3, 4}));
  for (const auto& mu : cycle_types_of(6)) EXPECT_EQ(sp_formula_A(mu, 0).exponents, (std::vector<int>{0}));
  EXPECT_TRUE(sp_formula_A(CycleType{3, 2}, 3).is_full());
}

TEST(LcmCondition, Examples) {
  EXPECT_TRUE(lcm_condition_fails(CycleType{5}, 1));
  EXPECT_FALSE(lcm_condition_fails(CycleType{2, 2, 3}, 1));
  // Selection with repetition: {3,2,2} has lcm 6 even though mu has 2 parts.
  EXPECT_TRUE(lcm_condition_fails(CycleType{3, 2}, 3));
  EXPECT_TRUE(lcm_condition_fails(CycleType{3, 2}, 2));
  EXPECT_FALSE(lcm_condition_fails(CycleType{3, 2}, 1));
}

TEST(ClassifySn, Examples) {
  auto r = classify_sn(Partition{4, 1}, CycleType{5});
  EXPECT_EQ(r.case_tag, CaseTag::SN_iii);
  EXPECT_EQ(r.minpoly.display(), "(x^5-1)/(x-1)");
  r = classify_sn(Partition{2, 1, 1, 1, 1}, CycleType{6});
  EXPECT_EQ(r.case_tag, CaseTag::SN_iv);
  EXPECT_EQ(r.minpoly.display(), "(x^6-1)/(x+1)");
  r = classify_sn(Partition{6, 1}, CycleType{3, 2, 2});
  EXPECT_EQ(r.case_tag, CaseTag::SN_i);
  EXPECT_EQ(r.spectrum.exponents, (std::vector<int>{0, 2, 3, 4}));
  EXPECT_EQ(r.minpoly.expanded(), poly_mul(IntPoly{-1, 0, 1}, IntPoly{1, 1, 1}));
  r = classify_sn(Partition{2, 2}, CycleType{2, 2});
  EXPECT_EQ(r.case_tag, CaseTag::SN_vii);
  EXPECT_EQ(r.minpoly.display(), "x - 1");
  EXPECT_THROW(classify_sn(Partition{2, 2}, CycleType{3, 2}), std::invalid_argument);
}

// The discriminating instance for how "t elements" is read: t = 3 exceeds the
// number of parts, yet the spectrum is not full.
TEST(ClassifySn, RepetitionReadingRegression) {
  const Partition lambda{2, 2, 1};
  const CycleType mu{5};
  EXPECT_TRUE(spectrum_oracle(lambda, mu).is_full());
  EXPECT_TRUE(lcm_condition_fails(mu, 5 - lambda.row(1)));
  EXPECT_EQ(classify_sn(lambda, mu).case_tag, CaseTag::SN_full);
}

TEST(ClassifyAn, Examples) {
  auto r = classify_an(AnCharLabel(Partition{4, 1}), AnClass(CycleType{5}, SplitSign::plus));
  EXPECT_EQ(r.case_tag, CaseTag::AN_ii);
  EXPECT_EQ(r.minpoly.display(), "(x^5-1)/(x-1)");
  r = classify_an(AnCharLabel(Partition{2, 2}, SplitSign::plus), AnClass(CycleType{3, 1}, SplitSign::minus));
  EXPECT_EQ(r.case_tag, CaseTag::AN_vii);
  EXPECT_EQ(r.minpoly.display(), "x - w^2 where w = zeta_3");
  r = classify_an(AnCharLabel(Partition{4, 4}), AnClass(CycleType{5, 3}, SplitSign::plus));
  EXPECT_EQ(r.case_tag, CaseTag::AN_iii);
  EXPECT_EQ(r.minpoly.display(), "(x^15-1)/(x-1)");
  r = classify_an(AnCharLabel(Partition{2, 2}, SplitSign::plus), AnClass(CycleType{2, 2}));
  EXPECT_EQ(r.case_tag, CaseTag::AN_viii);
  EXPECT_EQ(r.minpoly.display(), "x - 1");
  // lambda and lambda' name the same character.
  EXPECT_EQ(classify_an(AnCharLabel(Partition{2, 1, 1, 1}), AnClass(CycleType{5}, SplitSign::minus)).case_tag, CaseTag::AN_ii);
  EXPECT_THROW(classify_an(AnCharLabel(Partition{5}), AnClass(CycleType{5}, SplitSign::plus)), std::invalid_argument);
}

TEST(CyclePowerCase, Examples) {
  EXPECT_EQ(cycle_power_case(Partition{5, 1}, 6, 1, 6).display(), "(x^6-1)/(x-1)");
  EXPECT_EQ(cycle_power_case(Partition{3, 3}, 6, 1, 6).display(), "(x^6-1)/(x^2+x+1)");
  EXPECT_EQ(cycle_power_case(Partition{2, 2}, 3, 1, 4).display(), "x^2+x+1");
  EXPECT_THROW(cycle_power_case(Partition{3, 1}, 3, 2, 4), std::invalid_argument);
}

TEST(CyclePowerCase, AgreesWithClassifierAndOracle) {
  for (int n = 3; n <= 9; ++n)
    for (const auto& mu : cycle_types_of(n)) {
      const auto rm = as_cycle_power(mu);
      if (!rm) continue;
      for (const auto& l : partitions_of(n)) {
        if (l == Partition{n}) continue;
        const MinPoly p = cycle_power_case(l, rm->first, rm->second, n);
        EXPECT_EQ(p, classify_sn(l, mu).minpoly) << l << " " << mu;
        EXPECT_EQ(p.exponents(), spectrum_oracle(l, mu).exponents) << l << " " << mu;
      }
    }
}

TEST(Enumeration, AlternatingLabelsAndClasses) {
  EXPECT_EQ(an_character_labels(4).size(), 3u);  // (3,1), (2,2)+, (2,2)-
  EXPECT_EQ(an_classes(4).size(), 4u);           // 1, (2,2), (3,1)+, (3,1)-
  EXPECT_EQ(an_character_labels(5, true).size(), an_classes(5).size());
}

TEST(VerifyRange, SmallSweeps) {
  auto r = verify_range(2, Group::S);
  ASSERT_EQ(r.entries.size(), 1u);
  EXPECT_EQ(r.entries[0].pairs_checked, 4);
  EXPECT_EQ(r.mismatch_count(), 0u);
  r = verify_range(8, Group::S, 2);
  EXPECT_EQ(r.mismatch_count(), 0u);
  EXPECT_EQ(r.entries.back().pairs_checked, 22 * 22);
  EXPECT_EQ(verify_range(8, Group::A, 2).mismatch_count(), 0u);
}

TEST(VerifyRange, ReportIsDeterministicApartFromTiming) {
  auto a = to_json(verify_range(6, Group::A, 1)), b = to_json(verify_range(6, Group::A, 3));
  for (auto* j : {&a, &b})
    for (auto& e : (*j)["results"]) e.erase("elapsed_ms");
  a.erase("workers");
  b.erase("workers");
  EXPECT_EQ(a, b);
  EXPECT_EQ(a["results"][0]["n"], 3);
}
