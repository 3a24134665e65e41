#include <gtest/gtest.h>

#include "calex/laurent.hpp"
#include "support/oracles.hpp"

using namespace calex;
using calex::testing::Rng;
using calex::testing::random_poly;

namespace {

LaurentPoly P(const char* s) { return parse_poly(s); }

}  // namespace

TEST(Laurent, Arithmetic) {
  EXPECT_EQ((P("t - 1") * P("t + 1")), P("t^2 - 1"));
  EXPECT_EQ(P("1 - t") * LaurentPoly(-2) + LaurentPoly(1), P("2t - 1"));
  EXPECT_EQ(P("t^-1") * P("t"), LaurentPoly(1));
  EXPECT_TRUE((P("t^3 + 2") - P("t^3 + 2")).is_zero());
  EXPECT_EQ(-P("t - 1"), P("1 - t"));
}

TEST(Laurent, NoZeroCoefficientsStored) {
  const LaurentPoly p = P("t^2 + t") - P("t");
  EXPECT_EQ(p.term_count(), 1u);
  EXPECT_TRUE(LaurentPoly(0).is_zero());
  EXPECT_EQ(LaurentPoly::from_coefficients({BigInt(0), BigInt(1), BigInt(0)}).term_count(), 1u);
}

TEST(Laurent, BigCoefficients) {
  const LaurentPoly p = pow(P("3t - 2"), 40);
  EXPECT_EQ(p.leading_coefficient(), ipow(BigInt(3), 40));
  EXPECT_EQ(eval_at(p, 1), 1);
}

TEST(Laurent, EvalAt) {
  EXPECT_EQ(eval_at(P("t^2 - t + 1"), 1), 1);
  for (int m = 0; m < 10; ++m) {
    EXPECT_EQ(eval_at(LaurentPoly::monomial(m + 1, 1) - LaurentPoly(m), 1), 1);
  }
  EXPECT_EQ(eval_at(P("t^2 + 3"), 0), 3);
  EXPECT_EQ(eval_at(P("t^-1 + 1"), -1), 0);
  EXPECT_EQ(eval_at(P("2t^-1 + 1"), 2), 2);
  EXPECT_THROW(eval_at(P("t^-1 + 1"), 2), Error);  // 3/2 is not an integer
}

TEST(Laurent, EvalAtZeroWithNegativeExponentFails) {
  try {
    eval_at(P("t^-1 + 1"), 0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::ZeroAtNegativeExponent);
  }
}

TEST(Laurent, NormalizeUnit) {
  EXPECT_EQ(normalize_unit(P("-t^-1 + 1")), P("t - 1"));
  EXPECT_EQ(normalize_unit(P("2t - 1")), P("2t - 1"));
  EXPECT_TRUE(normalize_unit(LaurentPoly()).is_zero());
  EXPECT_EQ(normalize_unit(P("-3t^5")), LaurentPoly(3));
}

TEST(Laurent, Gcd) {
  EXPECT_EQ(gcd_primitive(P("t^2 - 1"), P("t^3 - 1")), P("t - 1"));
  EXPECT_EQ(gcd_primitive(LaurentPoly(2), P("4t")), LaurentPoly(2));
  EXPECT_EQ(gcd_primitive(P("-t^2 + t^3"), LaurentPoly()), normalize_unit(P("-t^2 + t^3")));
  EXPECT_TRUE(gcd_primitive(LaurentPoly(), LaurentPoly()).is_zero());
  EXPECT_EQ(gcd_primitive(P("6t - 6"), P("4t^2 - 4")), P("2t - 2"));
}

TEST(Laurent, SplitUnipotent) {
  EXPECT_TRUE(split_unipotent(LaurentPoly(1)).is_zero());
  EXPECT_EQ(split_unipotent(P("2t - 1")), LaurentPoly(-2));
  EXPECT_EQ(split_unipotent(P("t^2 - t + 1")), P("-t"));
  for (const char* bad : {"2t", "t^-1", "t + 1"}) {
    try {
      split_unipotent(P(bad));
      FAIL() << bad;
    } catch (const Error& e) {
      EXPECT_EQ(e.kind(), ErrorKind::NotUnipotentSplit);
    }
  }
}

TEST(Laurent, Cyclotomic) {
  EXPECT_EQ(cyclotomic(1), P("t - 1"));
  EXPECT_EQ(cyclotomic(2), P("t + 1"));
  EXPECT_EQ(eval_at(cyclotomic(2), 1), 2);
  EXPECT_EQ(cyclotomic(6), P("t^2 - t + 1"));
  EXPECT_EQ(cyclotomic(12), P("t^4 - t^2 + 1"));
  for (std::int64_t p : {2, 3, 5, 7}) {
    for (std::int64_t q = p; q <= 50; q *= p) EXPECT_EQ(eval_at(cyclotomic(q), 1), p);
  }
}

TEST(Laurent, CyclotomicProductIsTNMinusOne) {
  for (std::int64_t N = 1; N <= 30; ++N) {
    LaurentPoly prod(1);
    for (std::int64_t d = 1; d <= N; ++d) {
      if (N % d == 0) prod = prod * cyclotomic(d);
    }
    EXPECT_EQ(prod, LaurentPoly::t(N) - LaurentPoly(1)) << N;
  }
}

TEST(Laurent, UnipotentAdmissible) {
  EXPECT_TRUE(unipotent_admissible(P("t^2 - t + 1")).ok);
  const auto r1 = unipotent_admissible(P("t - 1"));
  EXPECT_FALSE(r1.ok);
  EXPECT_NE(std::find(r1.violated.begin(), r1.violated.end(), "v"), r1.violated.end());
  const auto r3 = unipotent_admissible(P("t^2 + t + 1"));
  EXPECT_FALSE(r3.ok);
  EXPECT_NE(std::find(r3.violated.begin(), r3.violated.end(), "iii"), r3.violated.end());
  EXPECT_NE(std::find(r3.violated.begin(), r3.violated.end(), "iv"), r3.violated.end());
  EXPECT_TRUE(unipotent_admissible(cyclotomic(6) * cyclotomic(12)).ok);
  const auto sq = unipotent_admissible(cyclotomic(6) * cyclotomic(6));
  EXPECT_FALSE(sq.ok);
  EXPECT_NE(std::find(sq.violated.begin(), sq.violated.end(), "ii"), sq.violated.end());
  EXPECT_FALSE(unipotent_admissible(P("3t - 2")).ok);
}

TEST(Laurent, ReduceModCyclic) {
  EXPECT_EQ(reduce_mod_cyclic(P("t^3"), 2), (std::vector<BigInt>{0, 1}));
  EXPECT_EQ(reduce_mod_cyclic(P("t^2 - t + 1"), 2), (std::vector<BigInt>{2, -1}));
  EXPECT_EQ(reduce_mod_cyclic(P("t^-1"), 3), (std::vector<BigInt>{0, 0, 1}));
  EXPECT_EQ(reduce_mod_cyclic(P("5t^7"), 1), (std::vector<BigInt>{5}));
}

TEST(Laurent, ParseAndPrint) {
  EXPECT_EQ(to_string(P("t^2 - t + 1")), "t^2 - t + 1");
  EXPECT_EQ(to_string(P("3t - 2")), "3t - 2");
  EXPECT_EQ(to_string(P("t^-1 + 1")), "1 + t^-1");
  EXPECT_EQ(to_string(P("-t^-2 + 3t^-1")), "3t^-1 - t^-2");
  EXPECT_EQ(P(" - t ^ 2+2t^-3 "), LaurentPoly::monomial(-1, 2) + LaurentPoly::monomial(2, -3));
  EXPECT_EQ(to_string(LaurentPoly()), "0");
  EXPECT_EQ(to_string(P("-t")), "-t");
  for (const char* bad : {"", "t^", "2x", "t^^2", "3 +", "t^1.5"}) {
    try {
      P(bad);
      FAIL() << bad;
    } catch (const Error& e) {
      EXPECT_EQ(e.kind(), ErrorKind::PolySyntax) << bad;
    }
  }
}

// Properties on seeded random inputs.

TEST(LaurentProperty, PrintParseRoundTrip) {
  Rng rng(1);
  for (int i = 0; i < 300; ++i) {
    const LaurentPoly p = random_poly(rng, 5, 20, true);
    EXPECT_EQ(P(to_string(p).c_str()), p);
  }
}

TEST(LaurentProperty, NormalizeUnitIsMultiplicative) {
  Rng rng(2);
  for (int i = 0; i < 200; ++i) {
    const LaurentPoly p = random_poly(rng, 3, 5, true);
    const LaurentPoly q = random_poly(rng, 3, 5, true);
    EXPECT_EQ(normalize_unit(p * q), normalize_unit(normalize_unit(p) * normalize_unit(q)));
  }
}

TEST(LaurentProperty, GcdDividesBoth) {
  Rng rng(3);
  for (int i = 0; i < 200; ++i) {
    const LaurentPoly c = random_poly(rng, 2, 3);
    const LaurentPoly p = random_poly(rng, 3, 4) * c;
    const LaurentPoly q = random_poly(rng, 3, 4) * c;
    const LaurentPoly g = gcd_primitive(p, q);
    if (p.is_zero() && q.is_zero()) continue;
    EXPECT_TRUE(divides(g, p) && divides(g, q));
    if (!c.is_zero()) EXPECT_TRUE(divides(normalize_unit(c), g));
  }
}

TEST(LaurentProperty, SplitUnipotentInverse) {
  Rng rng(4);
  const LaurentPoly one_minus_t = P("1 - t");
  for (int i = 0; i < 200; ++i) {
    const LaurentPoly f = one_minus_t * random_poly(rng, 5, 6) + LaurentPoly(1);
    EXPECT_EQ(one_minus_t * split_unipotent(f) + LaurentPoly(1), f);
  }
}

TEST(LaurentProperty, ReduceModCyclicIsRingHomomorphism) {
  Rng rng(5);
  for (int i = 0; i < 200; ++i) {
    const std::int64_t k = calex::testing::uniform(rng, 1, 7);
    const LaurentPoly p = random_poly(rng, 4, 5, true);
    const LaurentPoly q = random_poly(rng, 4, 5, true);
    const auto a = reduce_mod_cyclic(p, k), b = reduce_mod_cyclic(q, k);
    std::vector<BigInt> conv(static_cast<std::size_t>(k));
    for (std::int64_t x = 0; x < k; ++x) {
      for (std::int64_t y = 0; y < k; ++y) conv[static_cast<std::size_t>((x + y) % k)] += a[x] * b[y];
    }
    EXPECT_EQ(reduce_mod_cyclic(p * q, k), conv);
  }
}
