#include <gtest/gtest.h>

#include "calex/word.hpp"
#include "support/oracles.hpp"

using namespace calex;
using calex::testing::Rng;

namespace {

Word W(const char* s) { return parse_word(s); }
LaurentPoly P(const char* s) { return parse_poly(s); }

}  // namespace

TEST(Word, Parse) {
  EXPECT_EQ(W("x1 x2^-1").letters(), (std::vector<Letter>{{1, 1}, {2, -1}}));
  EXPECT_TRUE(W("x1 x1^-1").empty());
  EXPECT_EQ(W("x2^2 x1^-1 x2^-1").letters(), (std::vector<Letter>{{2, 1}, {2, 1}, {1, -1}, {2, -1}}));
  EXPECT_EQ(W("x2^-3").letters(), (std::vector<Letter>(3, Letter{2, -1})));
  EXPECT_TRUE(W(".").empty());
  EXPECT_EQ(W("x1x2"), W("x1 x2"));
}

TEST(Word, ParseErrors) {
  for (const char* bad : {"", "y1", "x0", "x1^0", "x1^", ". x1", "x"}) {
    try {
      W(bad);
      FAIL() << bad;
    } catch (const Error& e) {
      EXPECT_EQ(e.kind(), ErrorKind::WordSyntax) << bad;
      EXPECT_NE(std::string(e.what()).find("character"), std::string::npos);
    }
  }
}

TEST(Word, PrintCollapsesPowers) {
  EXPECT_EQ(to_string(W("x2 x2 x1^-1 x2^-1")), "x2^2 x1^-1 x2^-1");
  EXPECT_EQ(to_string(Word()), ".");
  EXPECT_EQ(to_string(W("x10^-2")), "x10^-2");
}

TEST(Word, Compose) {
  EXPECT_EQ(invert(W("x1 x2")), W("x2^-1 x1^-1"));
  EXPECT_EQ(conjugate(W("x1"), W("x2")), W("x2^-1 x1 x2"));
  EXPECT_EQ(power(W("x2 x1^-1"), 2), W("x2 x1^-1 x2 x1^-1"));
  EXPECT_EQ(power(W("x2 x1^-1"), -1), W("x1 x2^-1"));
  EXPECT_TRUE(power(W("x1"), 0).empty());
  EXPECT_TRUE((W("x1 x2") * W("x2^-1 x1^-1")).empty());
}

TEST(Word, ExponentSum) {
  EXPECT_EQ(exponent_sum(W("x1 x2 x1 x2^-1 x1^-1 x2^-1")), 0);
  EXPECT_EQ(exponent_sum(W("x1 x2")), 2);
  EXPECT_EQ(exponent_sum(Word()), 0);
}

TEST(Word, FoxNu) {
  EXPECT_EQ(fox_nu(W("x1 x2 x1 x2^-1 x1^-1 x2^-1"), 1), P("1 + t^2 - t"));
  EXPECT_EQ(fox_nu(W("x1^-1"), 1), P("-t^-1"));
  EXPECT_TRUE(fox_nu(W("x2 x3"), 1).is_zero());
  for (int m = 1; m <= 5; ++m) {
    const Word u = W("x1^-1 x2");
    const Word r = power(u, m) * W("x1") * power(u, -m) * W("x2^-1");
    EXPECT_EQ(fox_nu(r, 1), LaurentPoly::monomial(-m, -1) + LaurentPoly(m + 1)) << m;
  }
}

TEST(Word, AsCRelation) {
  const auto c = as_c_relation(W("x1 x2 x1 x2^-1 x1^-1 x2^-1"));
  EXPECT_EQ(c.j, 1);
  EXPECT_EQ(c.l, 2);
  EXPECT_EQ(c.w, W("x1 x2"));
  const auto d = as_c_relation(W("x1 x3 x1^-1 x3^-1"));
  EXPECT_EQ(d.j, 3);
  EXPECT_EQ(d.l, 3);
  EXPECT_EQ(d.w, W("x1"));
  for (const char* bad : {"x1 x2", "x1 x2 x1^-1 x2", "x1^2 x2^-2"}) {
    try {
      as_c_relation(W(bad));
      FAIL() << bad;
    } catch (const Error& e) {
      EXPECT_EQ(e.kind(), ErrorKind::NotConjugationRelator);
    }
  }
}

TEST(Word, AsCRelationUnderRotation) {
  // x2^-1 w x1 w^-1 rotated: trailing slot is not the last letter.
  const auto c = as_c_relation(W("x2^-1 x3 x1 x3^-1"));
  const Word rebuilt = c.w * Word::generator(c.j) * c.w.inverse() * Word::generator(c.l, -1);
  EXPECT_EQ(c.l, 2);
  EXPECT_EQ(c.j, 1);
  EXPECT_EQ(rebuilt, W("x3 x1 x3^-1 x2^-1"));
}

TEST(Word, WOfPoly) {
  EXPECT_EQ(w_of_poly(LaurentPoly(1), 1, 2), W("x1 x2^-1"));
  EXPECT_EQ(w_of_poly(LaurentPoly(-2), 1, 2), power(W("x2 x1^-1"), 2));
  EXPECT_EQ(w_of_poly(P("t"), 1, 2), W("x2 x1 x2^-2"));
  EXPECT_THROW(w_of_poly(P("t^-1"), 1, 2), Error);
}

TEST(Word, ROfPoly) {
  EXPECT_EQ(r_of_poly(LaurentPoly(1), 1, 2), W("x1 x2^-1"));
  EXPECT_EQ(r_of_poly(P("2t - 1"), 1, 2), power(W("x2 x1^-1"), 2) * W("x1") * power(W("x1 x2^-1"), 2) * W("x2^-1"));
  EXPECT_EQ(fox_nu(r_of_poly(P("t^2 - t + 1"), 1, 2), 1), P("t^2 - t + 1"));
  try {
    r_of_poly(P("t + 1"), 1, 2);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotUnipotentSplit);
  }
}

TEST(Word, ROfVector) {
  EXPECT_TRUE(r_of_vector({LaurentPoly(), LaurentPoly()}).empty());
  const Word r = r_of_vector({LaurentPoly(1)});
  EXPECT_EQ(r, W("x1 x2^-1 x2 x2 x1^-1 x2^-1"));
  EXPECT_EQ(fox_nu(r, 1), P("1 - t"));
  const Word r2 = r_of_vector({P("t"), LaurentPoly()});
  EXPECT_EQ(fox_nu(r2, 1), P("t - t^2"));
  EXPECT_TRUE(fox_nu(r2, 2).is_zero());
}

// Properties on seeded random inputs.

TEST(WordProperty, FoxProductRule) {
  Rng rng(11);
  for (int n = 0; n < 300; ++n) {
    const Word u = calex::testing::random_word(rng, 4, 10);
    const Word v = calex::testing::random_word(rng, 4, 10);
    for (int i = 1; i <= 4; ++i) {
      EXPECT_EQ(fox_nu(u * v, i), fox_nu(u, i) + LaurentPoly::t(exponent_sum(u)) * fox_nu(v, i));
      EXPECT_EQ(fox_nu(u.inverse(), i), -(LaurentPoly::t(-exponent_sum(u)) * fox_nu(u, i)));
    }
  }
}

TEST(WordProperty, ParsePrintRoundTrip) {
  Rng rng(12);
  for (int n = 0; n < 300; ++n) {
    const Word w = calex::testing::random_word(rng, 12, 15);
    EXPECT_EQ(W(to_string(w).c_str()), w);
  }
}

TEST(WordProperty, FreelyReduced) {
  Rng rng(13);
  for (int n = 0; n < 300; ++n) {
    const auto& ls = calex::testing::random_word(rng, 3, 20).letters();
    for (std::size_t i = 1; i < ls.size(); ++i) EXPECT_FALSE(ls[i] == ls[i - 1].inverse());
  }
}

TEST(WordProperty, AsCRelationReexpands) {
  Rng rng(14);
  for (int n = 0; n < 300; ++n) {
    const Word w = calex::testing::random_word(rng, 4, 8);
    const int j = static_cast<int>(calex::testing::uniform(rng, 1, 4));
    const int l = static_cast<int>(calex::testing::uniform(rng, 1, 4));
    const Word r = w * Word::generator(j) * w.inverse() * Word::generator(l, -1);
    if (r.empty()) continue;
    const auto c = as_c_relation(r);
    const Word rebuilt = c.w * Word::generator(c.j) * c.w.inverse() * Word::generator(c.l, -1);
    // rebuilt is a cyclic rotation of r, hence conjugate: compare via rotation index
    std::vector<Letter> rot(r.letters().begin() + static_cast<long>(c.rotation), r.letters().end());
    rot.insert(rot.end(), r.letters().begin(), r.letters().begin() + static_cast<long>(c.rotation));
    EXPECT_EQ(rebuilt, Word::from_letters(rot));
    EXPECT_EQ(exponent_sum(r), 0);
  }
}

TEST(WordProperty, RandomROfPoly) {
  Rng rng(15);
  const LaurentPoly one_minus_t = P("1 - t");
  for (int n = 0; n < 200; ++n) {
    const LaurentPoly f = one_minus_t * calex::testing::random_poly(rng, 5, 5) + LaurentPoly(1);
    EXPECT_EQ(fox_nu(r_of_poly(f, 1, 2), 1), f);
  }
}
