#include <gtest/gtest.h>

#include "cliffqt/cliffqt.hpp"
#include "test_util.hpp"

using namespace cliffqt;
using namespace cliffqt::verify;

TEST(NaiveProduct, Examples) {
  auto r = naive_blade_product(Blade::from_indices({1, 2}), Blade::from_indices({1, 3}),
                               Signature(3, 0));
  EXPECT_EQ(r.sign, -1);
  EXPECT_EQ(r.blade, Blade::from_indices({2, 3}));
  r = naive_blade_product(Blade::generator(1), Blade::generator(1), Signature(0, 1));
  EXPECT_EQ(r.sign, -1);
  EXPECT_EQ(r.blade, Blade::identity());
  r = naive_blade_product(Blade::from_indices({1, 2, 3}), Blade::from_indices({1, 2, 3}),
                          Signature(3, 0));
  EXPECT_EQ(r.sign, -1);
  EXPECT_EQ(r.blade, Blade::identity());
}

TEST(NaiveProduct, SweepAtN6) {
  const auto sweep = oracle_sweep(6);
  EXPECT_EQ(sweep.discrepancies, 0u);
  EXPECT_TRUE(sweep.passed());
  // Σ_{n ≤ 6} (n + 1) · 4^n pairs.
  std::uint64_t expected = 0;
  for (int n = 1; n <= 6; ++n) expected += static_cast<std::uint64_t>(n + 1) << (2 * n);
  EXPECT_EQ(sweep.pairs_checked, expected);
}

TEST(Signatures, Enumeration) {
  const auto sigs = signatures_up_to(3);
  EXPECT_EQ(sigs.size(), 2u + 3u + 4u);
  EXPECT_EQ(sigs.front(), Signature(1, 0));
  EXPECT_THROW(oracle_sweep(9), UsageError);
  EXPECT_THROW(derive_tables(0), UsageError);
  EXPECT_THROW(derive_tables(9), UsageError);
}

TEST(DeriveTables, MaxN5MatchesHardCoded) {
  const auto reports = derive_tables(5);
  for (const auto& r : reports) {
    EXPECT_TRUE(r.passed()) << to_json(r).dump();
    EXPECT_EQ(r.unwitnessed, 0);
    EXPECT_EQ(r.signatures.size(), 20u);
  }
  EXPECT_EQ(reports[0].op, Bracket::Commutator);
  EXPECT_EQ(reports[0].derived[0][1], TypeSet::of({3}));
  for (int k = 0; k < 4; ++k) EXPECT_EQ(reports[1].derived[k][k], TypeSet::of({0}));
}

TEST(DeriveTables, CorruptedEntryListedWithWitnesses) {
  auto broken = ClosureTables::hard_coded();
  broken.anticommutator[2][3] = MainType::T2;
  const auto reports = derive_tables(5, broken);
  EXPECT_TRUE(reports[0].passed());
  ASSERT_EQ(reports[1].mismatches.size(), 1u);
  const auto& m = reports[1].mismatches[0];
  EXPECT_EQ(m.lhs, MainType::T2);
  EXPECT_EQ(m.rhs, MainType::T3);
  EXPECT_EQ(m.expected, TypeSet::of({2}));
  EXPECT_EQ(m.derived, TypeSet::of({1}));
  ASSERT_FALSE(m.witnesses.empty());
  for (const auto& w : m.witnesses) {
    EXPECT_EQ(w.lhs.rank() % 4, 2);
    EXPECT_EQ(w.rhs.rank() % 4, 3);
    const auto u = ExactMultivector::blade(w.sig, Field::Real, w.lhs);
    const auto v = ExactMultivector::blade(w.sig, Field::Real, w.rhs);
    EXPECT_EQ(classify_by_rank(anticommutator(u, v)), w.result);
    EXPECT_FALSE(w.result.subset_of(m.expected));
  }
}

TEST(QuaternionConditions, BothBrackets) {
  using MT = MainType;
  const auto anti = check_quaternion_conditions(Bracket::Anticommutator,
                                                {MT::T0, MT::T1, MT::T2, MT::T3}, 5);
  const auto comm =
      check_quaternion_conditions(Bracket::Commutator, {MT::T2, MT::T3, MT::T0, MT::T1}, 5);
  ASSERT_EQ(anti.size(), 16u);
  ASSERT_EQ(comm.size(), 16u);
  for (const auto* list : {&anti, &comm})
    for (const auto& c : *list) {
      EXPECT_EQ(c.violations, 0u);
      EXPECT_GT(c.pairs_checked, 0u);
    }
  // E∘I ∈ I, J∘K ∈ I, ... with the commutator roles (E,I,J,K) = (2̄,3̄,0̄,1̄).
  EXPECT_EQ(comm[1].lhs, MT::T2);
  EXPECT_EQ(comm[1].rhs, MT::T3);
  EXPECT_EQ(comm[1].target, MT::T3);
  // Wrong roles must produce violations.
  const auto wrong =
      check_quaternion_conditions(Bracket::Commutator, {MT::T0, MT::T1, MT::T2, MT::T3}, 4);
  std::uint64_t violations = 0;
  for (const auto& c : wrong) violations += c.violations;
  EXPECT_GT(violations, 0u);
}

TEST(DimensionAudit, Examples) {
  const auto four = dimension_audit(Signature(4, 0));
  EXPECT_TRUE(four.passed());
  EXPECT_EQ(four.type_dims, (std::array<std::uint64_t, 4>{2, 4, 6, 4}));
  const auto one = dimension_audit(Signature(1, 0));
  EXPECT_EQ(one.type_dims, (std::array<std::uint64_t, 4>{1, 1, 0, 0}));
  const auto six = dimension_audit(Signature(3, 3));
  EXPECT_EQ(six.type_dims[0] + six.type_dims[1] + six.type_dims[2] + six.type_dims[3], 64u);
  EXPECT_EQ(six.even, 32u);
  EXPECT_EQ(six.odd, 32u);
}

TEST(DimensionAudit, AllSignaturesUpTo12) {
  for (int n = 1; n <= 12; ++n)
    for (int p = 0; p <= n; ++p) EXPECT_TRUE(dimension_audit(Signature(p, n - p)).passed());
}

TEST(DimensionAudit, AgreesWithBladeCount) {
  for (int n = 1; n <= 10; ++n) {
    std::array<std::uint64_t, 4> counted{};
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) ++counted[Blade{m}.rank() % 4];
    EXPECT_EQ(dimension_audit(Signature(n, 0)).type_dims, counted);
  }
}

TEST(Json, TableReportShape) {
  const auto j = to_json(derive_tables(3)[0]);
  EXPECT_EQ(j["op"], "commutator");
  EXPECT_EQ(j["derived"].size(), 4u);
  EXPECT_TRUE(j["passed"].get<bool>());
  EXPECT_EQ(j["signatures"].size(), 9u);
}
