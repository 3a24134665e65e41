#include <gtest/gtest.h>

#include "calex/covering.hpp"
#include "support/oracles.hpp"

using namespace calex;
using calex::testing::Rng;
using calex::testing::braid_presentation;
using calex::testing::uniform;

namespace {

LaurentPoly P(const char* s) { return parse_poly(s); }

CPresentation sextic() {
  CPresentation p = braid_presentation(3);
  p.hurwitz_degree = 6;
  return p;
}

const NamedCheck* find_check(const CoveringReport& r, const std::string& prefix) {
  for (const auto& c : r.checks) {
    if (c.name.rfind(prefix, 0) == 0) return &c;
  }
  return nullptr;
}

bool mentions(const std::vector<std::string>& v, const std::string& needle) {
  return std::any_of(v.begin(), v.end(), [&](const std::string& s) { return s.find(needle) != std::string::npos; });
}

}  // namespace

TEST(Covering, Settings) {
  for (const auto s : {CoveringSetting::KnotBranched, CoveringSetting::KnotUnbranched, CoveringSetting::Hurwitz}) {
    EXPECT_EQ(parse_setting(to_string(s)), s);
  }
  EXPECT_THROW(parse_setting("branched"), Error);
}

TEST(Covering, UnitRootCount) {
  EXPECT_EQ(unit_root_count(P("t^2 - t + 1"), 6), 2);
  EXPECT_EQ(unit_root_count(P("t^2 - t + 1"), 12), 2);
  EXPECT_EQ(unit_root_count(P("t^2 - t + 1"), 4), 0);
  EXPECT_EQ(unit_root_count(cyclotomic(6) * cyclotomic(12), 12), 6);
  EXPECT_EQ(unit_root_count(P("t^-1 - 1 + t"), 6), 2);
  EXPECT_FALSE(unit_root_count(P("3t - 2"), 2).has_value());
  EXPECT_FALSE(unit_root_count(cyclotomic(6) * cyclotomic(6), 6).has_value());
  EXPECT_FALSE(unit_root_count(LaurentPoly(), 6).has_value());
  EXPECT_EQ(unit_root_count(LaurentPoly(1), 6), 0);
}

TEST(Covering, TrefoilDoubleCover) {
  const CoveringReport r = covering_homology(braid_presentation(3), 2, CoveringSetting::KnotBranched);
  EXPECT_EQ(r.fingerprint.group.invariant_factors, std::vector<BigInt>{3});
  EXPECT_EQ(r.rational_b1, 0u);
  EXPECT_FALSE(r.extra_Z_summand);
  EXPECT_EQ(r.alexander, P("t^2 - t + 1"));
  EXPECT_TRUE(r.caveats.empty());
  EXPECT_FALSE(r.declared_degree.has_value());
  EXPECT_TRUE(r.all_checks_passed());
  ASSERT_NE(find_check(r, "(t-1)"), nullptr);
  ASSERT_NE(find_check(r, "b1 equals"), nullptr);

  const CoveringReport u = covering_homology(braid_presentation(3), 2, CoveringSetting::KnotUnbranched);
  EXPECT_TRUE(u.extra_Z_summand);
  EXPECT_EQ(u.rational_b1, 0u);
}

TEST(Covering, TrefoilSixfoldCoverHasBettiNumberTwo) {
  const CoveringReport r = covering_homology(braid_presentation(3), 6, CoveringSetting::KnotBranched);
  EXPECT_EQ(r.rational_b1, 2u);
  EXPECT_EQ(r.fingerprint.charpoly, P("t^2 - t + 1"));
  EXPECT_TRUE(find_check(r, "b1 equals")->passed);
}

TEST(Covering, SexticCurve) {
  const CoveringReport r5 = covering_homology(sextic(), 5, CoveringSetting::Hurwitz);
  EXPECT_TRUE(r5.module.group.is_trivial());
  EXPECT_EQ(r5.declared_degree, 6);
  const NamedCheck* coprime = find_check(r5, "k coprime to m");
  ASSERT_NE(coprime, nullptr);
  EXPECT_TRUE(coprime->passed);
  EXPECT_NE(coprime->name.find("conditional on declared degree 6"), std::string::npos);
  EXPECT_TRUE(r5.all_checks_passed());
  EXPECT_EQ(r5.caveats.size(), 2u);

  const CoveringReport r2 = covering_homology(sextic(), 2, CoveringSetting::Hurwitz);
  EXPECT_EQ(r2.caveats.size(), 3u);
  EXPECT_TRUE(mentions(r2.caveats, "known instance"));
  EXPECT_TRUE(mentions(r2.caveats, "proper quotient"));
  EXPECT_TRUE(find_check(r2, "k = 2 predicts")->passed);
  EXPECT_TRUE(find_check(r2, "k a prime power")->passed);
  EXPECT_TRUE(r2.all_checks_passed());

  const CoveringReport r6 = covering_homology(sextic(), 6, CoveringSetting::Hurwitz);
  EXPECT_EQ(r6.rational_b1, 2u);
  EXPECT_TRUE(find_check(r6, "t^m acts")->passed);
  EXPECT_TRUE(find_check(r6, "b1 is even")->passed);
  EXPECT_EQ(find_check(r6, "k coprime"), nullptr);
  EXPECT_TRUE(r6.all_checks_passed());
}

TEST(Covering, WrongDeclaredDegreeIsRefuted) {
  CPresentation p = braid_presentation(3);
  p.hurwitz_degree = 4;
  const CoveringReport r6 = covering_homology(p, 6, CoveringSetting::Hurwitz);
  const NamedCheck* unip = find_check(r6, "t^m acts");
  ASSERT_NE(unip, nullptr);
  EXPECT_FALSE(unip->passed);
  EXPECT_NE(unip->detail.find("refuted"), std::string::npos);

  const CoveringReport r3 = covering_homology(p, 3, CoveringSetting::Hurwitz);
  EXPECT_FALSE(find_check(r3, "k coprime")->passed);
  EXPECT_FALSE(r3.all_checks_passed());
}

TEST(Covering, HurwitzChecksNeedADeclaredDegree) {
  const CoveringReport r = covering_homology(braid_presentation(3), 6, CoveringSetting::Hurwitz);
  EXPECT_EQ(find_check(r, "t^m acts"), nullptr);
  EXPECT_EQ(r.caveats.size(), 2u);
}

TEST(Covering, Errors) {
  CPresentation free;
  free.generators = 2;
  try {
    covering_homology(free, 2, CoveringSetting::KnotBranched);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotIrreducible);
  }
  EXPECT_THROW(covering_homology(braid_presentation(3), 0, CoveringSetting::KnotBranched), Error);
  try {
    covering_homology(braid_presentation(3), 100, CoveringSetting::KnotBranched, 50);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::ExpansionTooLarge);
  }
}

// Properties on seeded random inputs.

TEST(CoveringProperty, IrreducibleGroupsPassUnconditionalChecks) {
  Rng rng(51);
  for (int n = 0; n < 150; ++n) {
    const CPresentation p = calex::testing::random_irreducible(rng, 3, 2, 5);
    const std::int64_t k = uniform(rng, 1, 6);
    const CoveringReport r = covering_homology(p, k, CoveringSetting::KnotBranched);
    EXPECT_TRUE(r.module.t1_invertible) << to_cg(p) << " k=" << k;
    EXPECT_TRUE(r.all_checks_passed()) << to_cg(p) << " k=" << k;
  }
}

TEST(CoveringProperty, CyclotomicModulesMatchRootCount) {
  Rng rng(52);
  const std::vector<std::int64_t> admissible = {6, 10, 12, 14, 15, 18, 20, 21};
  for (int n = 0; n < 60; ++n) {
    RealizationData nf;
    nf.m = 1;
    LaurentPoly f(1);
    for (const auto d : admissible) {
      if (uniform(rng, 0, 3) == 0) f = f * cyclotomic(d);
    }
    nf.f = {f};
    const std::int64_t k = uniform(rng, 1, 24);
    const CoveringReport r = covering_homology(realize(nf), k, CoveringSetting::KnotBranched, 1 << 14);
    const auto roots = unit_root_count(r.alexander, k);
    ASSERT_TRUE(roots.has_value()) << to_string(f);
    EXPECT_EQ(static_cast<std::int64_t>(r.rational_b1), *roots) << to_string(f) << " k=" << k;
  }
}

TEST(CoveringProperty, RealizedHurwitzDegreeIsUnipotent) {
  Rng rng(53);
  for (int n = 0; n < 60; ++n) {
    const RealizationData nf = calex::testing::random_normal_form(rng, 2, 2, 1, 2);
    const std::int64_t h = uniform(rng, 1, 3);
    const CPresentation p = realize(nf, h);
    const std::int64_t k = uniform(rng, 1, 6);
    const CoveringReport r = covering_homology(p, k, CoveringSetting::Hurwitz);
    EXPECT_EQ(r.declared_degree, h * (nf.m + 1));
    EXPECT_TRUE(find_check(r, "t^m acts")->passed) << to_cg(p) << " k=" << k;
  }
}
