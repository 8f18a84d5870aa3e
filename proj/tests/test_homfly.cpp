#include <gtest/gtest.h>

#include "kch/homfly.hpp"
#include "kch/qbinom.hpp"
#include "support.hpp"

using namespace kch;

namespace {

LaurentPoly qp(int e) { return q_power(qg_table(), e); }
LaurentPoly lone() { return LaurentPoly::constant(qg_table(), 1); }
HeckeElem T(int n, int i, int sign = 1) { return HeckeElem::generator(n, i, sign); }

BraidWord with_letter(const BraidWord& b, std::size_t i, int letter) {
  BraidWord r = b;
  if (letter == 0) r.letters.erase(r.letters.begin() + static_cast<long>(i));
  else r.letters[i] = letter;
  return r;
}

}  // namespace

TEST(Hecke, Quadratic) {
  HeckeElem sq = T(2, 1) * T(2, 1);
  HeckeElem expected = (qp(-1) - qp(1)) * T(2, 1) + HeckeElem::identity(2);
  EXPECT_EQ(sq, expected);
  EXPECT_EQ(hecke_mul(HeckeElem::identity(3), T(3, 2)), T(3, 2));
  EXPECT_EQ(T(3, 1) - T(3, 1, -1), (qp(-1) - qp(1)) * HeckeElem::identity(3));
}

TEST(Hecke, BraidAndFarCommutation) {
  for (int n = 3; n <= 4; ++n) {
    for (int i = 1; i < n; ++i) {
      EXPECT_EQ(T(n, i) * T(n, i, -1), HeckeElem::identity(n));
      if (i + 1 < n) EXPECT_EQ(T(n, i) * T(n, i + 1) * T(n, i), T(n, i + 1) * T(n, i) * T(n, i + 1));
      for (int j = i + 2; j < n; ++j) EXPECT_EQ(T(n, i) * T(n, j), T(n, j) * T(n, i));
    }
  }
}

TEST(Hecke, ProductIsAssociative) {
  std::mt19937 rng(43);
  for (int trial = 0; trial < 10; ++trial) {
    HeckeElem a = HeckeElem::from_braid(test::random_word(rng, 4, 1, 4));
    HeckeElem b = HeckeElem::from_braid(test::random_word(rng, 4, 1, 4));
    HeckeElem c = HeckeElem::from_braid(test::random_word(rng, 4, 1, 4));
    EXPECT_EQ((a * b) * c, a * (b * c));
  }
}

TEST(Hecke, ReducedWordsGiveBasisElements) {
  HeckeElem x = T(3, 1) * T(3, 2);
  ASSERT_EQ(x.terms().size(), 1u);
  EXPECT_EQ(x.terms().begin()->second, lone());
  EXPECT_EQ(x.to_string(), "T[2,3,1]");
}

TEST(Hecke, TraceBasics) {
  auto tr = trace_coefficients(HeckeElem::identity(3));
  ASSERT_EQ(tr.size(), 1u);
  EXPECT_EQ(tr[0], lone());
  auto t1 = trace_coefficients(T(3, 2));
  ASSERT_EQ(t1.size(), 2u);
  EXPECT_TRUE(t1[0].is_zero());
  EXPECT_EQ(t1[1], lone());
}

TEST(Hecke, TraceIsCentral) {
  std::mt19937 rng(47);
  for (int trial = 0; trial < 10; ++trial) {
    HeckeElem a = HeckeElem::from_braid(test::random_word(rng, 3, 1, 4));
    HeckeElem b = HeckeElem::from_braid(test::random_word(rng, 3, 1, 4));
    EXPECT_EQ(trace_coefficients(a * b), trace_coefficients(b * a));
  }
}

TEST(Homfly, UnknotAndUnlink) {
  RatFunc delta = homfly_delta();
  EXPECT_EQ(delta, qbinom_formal(0, 1));
  EXPECT_EQ(homflypt(BraidWord(1, {})), delta);
  EXPECT_EQ(homflypt(BraidWord(2, {})), delta * delta);
  EXPECT_EQ(homflypt(BraidWord(2, {1})), delta);
  EXPECT_EQ(homflypt(BraidWord(2, {-1})), delta);
  EXPECT_EQ(homflypt(BraidWord(3, {1, -2, 2, -1})), delta * delta * delta);
}

TEST(Homfly, TrefoilMatchesSkeinOracle) {
  BraidWord t(2, {1, 1, 1});
  auto oracle = skein_framed(t);
  ASSERT_TRUE(oracle.has_value());
  EXPECT_EQ(homflypt_framed(t), *oracle);
  EXPECT_EQ(homflypt(t).to_string(),
            "(q^3*g^-1 - q^3*g^-3 - q*g^-3 + q^-1*g^-1 + q*g^-5 - q^-1*g^-3)/(q^2 - 1)");
}

TEST(Homfly, TraceMatchesSkeinOracleOnRandomWords) {
  std::mt19937 rng(53);
  for (int trial = 0; trial < 20; ++trial) {
    BraidWord b = test::random_word(rng, 2 + trial % 2, 0, 6);
    auto oracle = skein_framed(b);
    ASSERT_TRUE(oracle.has_value()) << b.to_string();
    EXPECT_EQ(homflypt_framed(b), *oracle) << b.to_string();
  }
}

TEST(Homfly, MirrorSwapsG) {
  BraidWord t(2, {1, 1, 1}), m(2, {-1, -1, -1});
  RatFunc p = homflypt(t);
  const auto& tab = qg_table();
  RatFunc swapped = p.substitute({{tab->index("g"), RatFunc(LaurentPoly::variable(tab, "g", -1))},
                                  {tab->index("q"), RatFunc(qp(-1))}});
  EXPECT_EQ(homflypt(m), swapped);
}

TEST(Homfly, MarkovInvariance) {
  std::mt19937 rng(59);
  for (int trial = 0; trial < 20; ++trial) {
    int n = 1 + trial % 3;
    BraidWord b = test::random_word(rng, n, 0, 5);
    RatFunc p = homflypt(b);
    BraidWord w = test::random_word(rng, std::max(n, 2), 1, 3);
    if (w.strands <= b.strands) EXPECT_EQ(homflypt(conjugate(b, w)), p) << b.to_string();
    EXPECT_EQ(homflypt(stabilize(b, 1)), p) << b.to_string();
    EXPECT_EQ(homflypt(stabilize(b, -1)), p) << b.to_string();
  }
}

TEST(Homfly, FramedSkeinTriple) {
  std::mt19937 rng(61);
  RatFunc z(qp(-1) - qp(1));
  for (int trial = 0; trial < 20; ++trial) {
    BraidWord b = test::random_word(rng, 2 + trial % 2, 1, 5);
    std::uniform_int_distribution<std::size_t> pos(0, b.letters.size() - 1);
    std::size_t i = pos(rng);
    int k = std::abs(b.letters[i]);
    RatFunc plus = homflypt_framed(with_letter(b, i, k));
    RatFunc minus = homflypt_framed(with_letter(b, i, -k));
    RatFunc zero = homflypt_framed(with_letter(b, i, 0));
    EXPECT_EQ(plus - minus, z * zero) << b.to_string() << " at " << i;
  }
}

TEST(Homfly, ZeroFramedSkeinTriple) {
  std::mt19937 rng(67);
  RatFunc z(qp(-1) - qp(1));
  RatFunc mg(-LaurentPoly::variable(qg_table(), "g"));
  for (int trial = 0; trial < 20; ++trial) {
    BraidWord b = test::random_word(rng, 2 + trial % 2, 1, 5);
    std::uniform_int_distribution<std::size_t> pos(0, b.letters.size() - 1);
    std::size_t i = pos(rng);
    int k = std::abs(b.letters[i]);
    RatFunc plus = homflypt(with_letter(b, i, k));
    RatFunc minus = homflypt(with_letter(b, i, -k));
    RatFunc zero = homflypt(with_letter(b, i, 0));
    EXPECT_EQ(mg * plus - mg.pow(-1) * minus, z * zero) << b.to_string() << " at " << i;
  }
}

TEST(Homfly, SkeinOracleGivesUpPastDepth) {
  EXPECT_FALSE(skein_framed(BraidWord(3, {1, 1, 2, 1, 1, 2, -1, 2}), 2).has_value());
}

TEST(ColoredUnknot, Values) {
  ColoredSeq f = colored_unknot();
  const auto& t = qg_table();
  EXPECT_EQ(f(0), RatFunc::constant(t, 1));
  EXPECT_EQ(f(1), homfly_delta());
  EXPECT_TRUE(f(-1).is_zero());
  EXPECT_EQ(f(2).substitute({{t->index("g"), RatFunc(qp(4))}}), RatFunc(qbinom_int(4, 2)));
  EXPECT_THROW(colored_unknot(2), StructuralError);
}

TEST(ColoredUnknot, Recursion) {
  ColoredSeq f = colored_unknot();
  const auto& t = qg_table();
  for (int N = 1; N <= 6; ++N) {
    for (int k = 1; k <= 8; ++k) {
      auto at = [&](int j) { return f(j).substitute({{t->index("g"), RatFunc(qp(N))}}); };
      RatFunc lhs = at(k) * RatFunc(qp(k) - qp(-k));
      RatFunc rhs = RatFunc(qp(N - k + 1) - qp(-N + k - 1)) * at(k - 1);
      EXPECT_EQ(lhs, rhs) << "N=" << N << " k=" << k;
      EXPECT_EQ(at(k), RatFunc(qbinom_int(N, k))) << "N=" << N << " k=" << k;
    }
  }
}
