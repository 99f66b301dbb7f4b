#include <gtest/gtest.h>

#include "generators.hpp"
#include "haga/errors.hpp"
#include "haga/verifier.hpp"

namespace haga {
namespace {

TEST(Verify, OrdinaryCasesPassEverything) {
  for (const auto& [d, e] : std::vector<std::pair<Rat, Rat>>{
           {1, 3}, {2, 1}, {2, 3}, {2, -1}, {7, Rat(5, 3)}, {Rat(3, 2), Rat(-9, 4)}}) {
    const VerificationReport r = verify(build(d, e));
    ASSERT_EQ(r.results.size(), kAllChecks.size());
    EXPECT_EQ(r.count(CheckStatus::Pass), 16) << d << " " << e;
    for (std::size_t i = 0; i < kAllChecks.size(); ++i) EXPECT_EQ(r.results[i].id, kAllChecks[i]);
  }
}

TEST(Verify, DegenerateCasesSkipProperTriangleChecks) {
  for (const Rat& e : {Rat(1), Rat(0)}) {
    const VerificationReport r = verify(build(1, e));
    EXPECT_FALSE(r.any_fail());
    EXPECT_EQ(r.count(CheckStatus::NotApplicable), 3);
    EXPECT_EQ(r.result(CheckId::SET_INEXCIRCLES).status, CheckStatus::NotApplicable);
    EXPECT_EQ(r.result(CheckId::T2_2_HANSEN_AEF).status, CheckStatus::NotApplicable);
    EXPECT_EQ(r.result(CheckId::T6_TANGENT_PERP).status, CheckStatus::NotApplicable);
    EXPECT_EQ(r.result(CheckId::T4_2_SUM).status, CheckStatus::Pass);
  }
}

TEST(Verify, CaseH2) {
  const VerificationReport r = verify(build(1, 2));
  EXPECT_EQ(r.kind, HagaCase::H2);
  EXPECT_FALSE(r.any_fail());
  EXPECT_EQ(r.count(CheckStatus::NotApplicable), 15);
  EXPECT_EQ(r.result(CheckId::T3_2_HAGA).note, "case h2: F does not exist");
}

TEST(Verify, PerturbedFoldedCornerFails) {
  HagaConfig cfg = build(2, 1);
  cfg.B_prime.x += Rat(1, 1000);
  const VerificationReport r = verify(cfg);
  const CheckResult& tangent = r.result(CheckId::P3_1_TANGENT);
  EXPECT_EQ(tangent.status, CheckStatus::Fail);
  ASSERT_TRUE(tangent.witness.has_value());
  EXPECT_FALSE(tangent.witness->is_zero());
  for (const CheckResult& c : r.results) {
    if (c.status == CheckStatus::Fail) {
      EXPECT_FALSE(c.note.empty()) << to_string(c.id);
    }
  }
}

TEST(VerifyProperty, SingleCoordinatePerturbationIsDetected) {
  testing::Gen gen(51);
  for (int i = 0; i < 60; ++i) {
    const Rat d = gen.positive(20, 5);
    Rat e = gen.rational(60, 7);
    if (e == Rat(2) * d) continue;
    HagaConfig cfg = build(d, e);
    const Rat delta = gen.nonzero(5, 97);
    switch (gen.integer(0, 7)) {
      case 0: cfg.B_prime.x += delta; break;
      case 1: cfg.B_prime.y += delta; break;
      case 2: cfg.F->x += delta; break;
      case 3: cfg.F->y += delta; break;
      case 4: cfg.G->x += delta; break;
      case 5: cfg.G->y += delta; break;
      case 6: cfg.H->x += delta; break;
      default: cfg.H->y += delta; break;
    }
    EXPECT_TRUE(verify(cfg).any_fail()) << d << " " << e;
  }
}

TEST(Sweep, CoversAllCasesInOrder) {
  const std::vector<Rat> es = {-3, Rat(-1, 2), 0, Rat(1, 3), Rat(1, 2), 1, Rat(3, 2), 2,
                               Rat(5, 2), 3};
  const auto reports = sweep(1, es);
  ASSERT_EQ(reports.size(), es.size());
  for (std::size_t i = 0; i < es.size(); ++i) {
    EXPECT_EQ(reports[i].e, es[i]);
    EXPECT_FALSE(reports[i].any_fail());
  }
  const auto cover = case_coverage(reports);
  EXPECT_EQ(cover, std::set<HagaCase>(kAllCases.begin(), kAllCases.end()));
}

TEST(Sweep, EmptyAndInvalid) {
  EXPECT_TRUE(sweep(1, {}).empty());
  EXPECT_TRUE(case_coverage({}).empty());
  const std::vector<Rat> es = {1};
  EXPECT_THROW(sweep(0, es), GeometryError);
}

TEST(Sweep, AgreesWithSequentialVerify) {
  testing::Gen gen(52);
  std::vector<Rat> es;
  for (int i = 0; i < 40; ++i) es.push_back(gen.rational(40, 9));
  const auto reports = sweep(Rat(5, 3), es);
  for (std::size_t i = 0; i < es.size(); ++i) {
    const VerificationReport one = verify(build(Rat(5, 3), es[i]));
    EXPECT_EQ(reports[i].kind, one.kind);
    EXPECT_EQ(reports[i].count(CheckStatus::Pass), one.count(CheckStatus::Pass));
  }
}

TEST(Sweep, SquareFromTriangleAndSingleCoverage) {
  const std::vector<Rat> es = {3};
  const auto reports = sweep(6, es);
  ASSERT_EQ(reports.size(), 1u);
  EXPECT_EQ(reports[0].kind, HagaCase::H5);
  EXPECT_EQ(reports[0].count(CheckStatus::Pass), 16);
  const std::vector<VerificationReport> one = {verify(build(2, 1))};
  EXPECT_EQ(case_coverage(one), std::set<HagaCase>{HagaCase::H5});
}

}  // namespace
}  // namespace haga
