#include <gtest/gtest.h>

#include "kch/ngalg.hpp"
#include "support.hpp"

using namespace kch;

namespace {

AugMatrix mat(const AugRing& r, std::initializer_list<std::initializer_list<LaurentPoly>> rows) {
  AugMatrix m(r, static_cast<int>(rows.size()));
  int i = 0;
  for (const auto& row : rows) {
    int j = 0;
    for (const auto& x : row) m(i, j++) = x;
    ++i;
  }
  return m;
}

// Same map on every a-variable.
bool same_map(const AugRing& ring, const AlgebraMap& f, const AlgebraMap& h) {
  for (int i = 0; i < ring.strands(); ++i) {
    for (int j = 0; j < ring.strands(); ++j) {
      if (i != j && !(f(ring.a_poly(i, j)) == h(ring.a_poly(i, j)))) return false;
    }
  }
  return true;
}

}  // namespace

TEST(Phi, GeneratorImages) {
  AugRing r2(2, 1);
  EXPECT_EQ(phi_gen(r2, 1, 1)(r2.a_poly(0, 1)), -r2.a_poly(1, 0));

  AugRing r3(3, 1);
  EXPECT_EQ(phi_gen(r3, 1, 1)(r3.a_poly(0, 2)), r3.a_poly(1, 2) - r3.a_poly(1, 0) * r3.a_poly(0, 2));
  EXPECT_EQ(phi_gen(r3, 2, 1)(r3.a_poly(0, 2)), r3.a_poly(0, 1));
}

TEST(Phi, EmptyWordIsIdentity) {
  AugRing r(3, 1);
  EXPECT_TRUE(same_map(r, phi_word(r, BraidWord(3, {})), AlgebraMap::identity(r)));
}

TEST(Phi, InversesCancel) {
  for (int n = 2; n <= 4; ++n) {
    AugRing r(n, 1);
    for (int k = 1; k < n; ++k) {
      EXPECT_TRUE(same_map(r, phi_gen(r, k, 1).compose(phi_gen(r, k, -1)), AlgebraMap::identity(r))) << n << " " << k;
      EXPECT_TRUE(same_map(r, phi_gen(r, k, -1).compose(phi_gen(r, k, 1)), AlgebraMap::identity(r))) << n << " " << k;
    }
  }
}

TEST(Phi, BraidRelations) {
  for (int n = 3; n <= 4; ++n) {
    AugRing r(n, 1);
    for (int i = 1; i < n; ++i) {
      for (int j = 1; j < n; ++j) {
        if (std::abs(i - j) >= 2) {
          EXPECT_TRUE(same_map(r, phi_word(r, BraidWord(n, {i, j})), phi_word(r, BraidWord(n, {j, i}))));
        }
      }
      if (i + 1 < n) {
        EXPECT_TRUE(same_map(r, phi_word(r, BraidWord(n, {i, i + 1, i})), phi_word(r, BraidWord(n, {i + 1, i, i + 1}))));
        EXPECT_TRUE(same_map(r, phi_word(r, BraidWord(n, {-i, -(i + 1), -i})),
                             phi_word(r, BraidWord(n, {-(i + 1), -i, -(i + 1)}))));
      }
    }
  }
}

TEST(Phi, WordIsComposite) {
  std::mt19937 rng(4);
  for (int trial = 0; trial < 20; ++trial) {
    int n = 2 + trial % 3;
    AugRing r(n, 1);
    BraidWord b1 = test::random_word(rng, n, 0, 3), b2 = test::random_word(rng, n, 0, 3);
    EXPECT_TRUE(same_map(r, phi_word(r, concat(b1, b2)), phi_word(r, b1).compose(phi_word(r, b2))));
  }
}

TEST(PhiMatrices, Examples) {
  AugRing r(2, 1);
  LaurentPoly one = r.constant(1), zero = r.zero();
  EXPECT_EQ(phiL(r, BraidWord(2, {1})), mat(r, {{-r.a_poly(1, 0), one}, {one, zero}}));
  EXPECT_EQ(phiL(r, BraidWord(2, {})), AugMatrix::identity(r, 2));
  EXPECT_EQ(phiL(r, BraidWord(2, {1, 1})),
            mat(r, {{one - r.a_poly(0, 1) * r.a_poly(1, 0), r.a_poly(0, 1)}, {-r.a_poly(1, 0), one}}));
}

TEST(PhiMatrices, CompositionRuleOnRandomSplits) {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 50; ++trial) {
    int n = 2 + trial % 3;
    AugRing r(n, 1);
    BraidWord b = test::random_word(rng, n, 1, 6);
    std::uniform_int_distribution<std::size_t> cut(0, b.letters.size());
    std::size_t c = cut(rng);
    BraidWord b1(n, {b.letters.begin(), b.letters.begin() + static_cast<long>(c)});
    BraidWord b2(n, {b.letters.begin() + static_cast<long>(c), b.letters.end()});
    AlgebraMap f1 = phi_word(r, b1);
    EXPECT_EQ(phiL(r, b), f1(phiL(r, b2)) * phiL(r, b1)) << b.to_string() << " cut " << c;
    EXPECT_EQ(phiR(r, b), phiR(r, b1) * f1(phiR(r, b2))) << b.to_string() << " cut " << c;
  }
}

TEST(PhiMatrices, WordTimesInverseIsIdentity) {
  std::mt19937 rng(19);
  for (int trial = 0; trial < 20; ++trial) {
    int n = 2 + trial % 3;
    AugRing r(n, 1);
    BraidWord b = test::random_word(rng, n, 1, 4);
    BraidWord bb = concat(b, inverse(b));
    EXPECT_EQ(phiL(r, bb), AugMatrix::identity(r, n)) << b.to_string();
    EXPECT_EQ(phiR(r, bb), AugMatrix::identity(r, n)) << b.to_string();
  }
}

TEST(PhiMatrices, MasterIdentity) {
  std::mt19937 rng(23);
  for (int trial = 0; trial < 25; ++trial) {
    int n = 1 + trial % 4;
    BraidWord b = test::random_word(rng, n, 0, 6);
    AugRing r(n, 1);
    ClosureInfo cl = test::single_nu(closure(b));
    AugMatrix A = build_A(r, cl);
    EXPECT_EQ(phi_word(r, b)(A), phiL(r, b) * A * phiR(r, b)) << b.to_string();
  }
}

TEST(Matrices, OneStrand) {
  BraidWord u(1, {});
  ClosureInfo cl = closure(u);
  AugRing r(1, 1);
  EXPECT_EQ(build_A(r, cl)(0, 0), r.constant(1) - r.nu_poly(0, -2));
  EXPECT_EQ(build_Ahat(r, cl)(0, 0), r.g_poly() * r.nu_poly(0, -2) - r.g_poly(-1));
  EXPECT_EQ(build_LambdaPrime(r, cl)(0, 0), r.lambda_poly(0, -1));
}

TEST(Matrices, TwoStrandKnot) {
  BraidWord t(2, {1, 1, 1});
  ClosureInfo cl = closure(t);
  AugRing r(2, 1);
  LaurentPoly d = r.constant(1) - r.nu_poly(0, -2);
  EXPECT_EQ(build_A(r, cl), mat(r, {{d, r.a_poly(0, 1)}, {-r.nu_poly(0, -2) * r.a_poly(1, 0), d}}));
  AugMatrix lp = build_LambdaPrime(r, cl);
  EXPECT_EQ(lp(0, 0), r.lambda_poly(0, -1) * r.nu_poly(0, -6) * r.minus_g_pow(3));
  EXPECT_EQ(lp(1, 1), r.constant(1));
  EXPECT_EQ(lp * build_LambdaPrime_inverse(r, cl), AugMatrix::identity(r, 2));
}

TEST(Matrices, HopfLambdaPrime) {
  ClosureInfo cl = closure(BraidWord(2, {1, 1}));
  AugRing r(2, 2);
  AugMatrix lp = build_LambdaPrime(r, cl);
  EXPECT_EQ(lp(0, 0), r.lambda_poly(0, -1));
  EXPECT_EQ(lp(1, 1), r.lambda_poly(1, -1));
}

TEST(Psi, Examples) {
  {
    ClosureInfo cl = closure(BraidWord(2, {1, 1, 1}));
    AugRing r(2, 1);
    AlgebraMap p = psi(r, cl);
    EXPECT_EQ(p(r.a_poly(0, 1)), r.minus_g_pow(-1) * r.a_poly(0, 1));
    EXPECT_EQ(p(r.a_poly(1, 0)), r.minus_g_pow(1) * r.a_poly(1, 0));
  }
  {
    ClosureInfo cl = closure(BraidWord(2, {1, 1}));
    AugRing r(2, 2);
    EXPECT_EQ(psi(r, cl)(r.a_poly(0, 1)), r.nu_poly(0) * r.nu_poly(1, -1) * r.a_poly(0, 1));
  }
}

TEST(Psi, ConjugatesPhiMatrices) {
  std::mt19937 rng(29);
  for (int trial = 0; trial < 10; ++trial) {
    BraidWord b = test::random_knot_word(rng, 2 + trial % 3, 1, 6);
    ClosureInfo cl = closure(b);
    AugRing r(b.strands, 1);
    AlgebraMap p = psi(r, cl);
    AugMatrix L = phiL(r, b), R = phiR(r, b);
    EXPECT_EQ(p(L), build_D_beta(r, cl) * L * build_D(r, cl, -1)) << b.to_string();
    EXPECT_EQ(p(R), build_D(r, cl) * R * build_D_beta(r, cl, -1)) << b.to_string();
  }
}

TEST(Psi, FlippedSignFailsOnTrefoil) {
  BraidWord b(2, {1, 1, 1});
  ClosureInfo cl = closure(b);
  AugRing r(2, 1);
  Conventions flipped;
  flipped.psi_sign = 1;
  AugMatrix L = phiL(r, b);
  EXPECT_FALSE(psi(r, cl, flipped)(L) == build_D_beta(r, cl) * L * build_D(r, cl, -1));
}

TEST(Relations, Unknot) {
  Presentation p = relations(BraidWord(1, {}));
  ASSERT_EQ(p.generators.size(), 1u);
  const VarTablePtr& t = p.vars;
  auto v = [&](const char* n, int e = 1) { return LaurentPoly::variable(t, n, e); };
  LaurentPoly expected = v("g") * v("nu", -2) - v("g", -1) - v("L", -1) + v("L", -1) * v("nu", -2);
  EXPECT_EQ(p.generators[0], expected);
  EXPECT_TRUE(p.eliminate.empty());
}

TEST(Relations, Counts) {
  Presentation t = relations(BraidWord(2, {1, 1, 1}));
  EXPECT_EQ(t.generators.size(), 8u);
  EXPECT_EQ(t.eliminate.size(), 2u);
  EXPECT_EQ(t.components, 1);

  Presentation h = relations(BraidWord(2, {1, 1}));
  EXPECT_EQ(h.generators.size(), 8u);
  EXPECT_EQ(h.components, 2);
  for (const char* name : {"nu1", "nu2", "L1", "L2", "a12", "a21", "g"}) EXPECT_TRUE(h.vars->find(name)) << name;
}

TEST(Relations, LabelsMatchGenerators) {
  Presentation t = relations(BraidWord(3, {1, -2, 1, -2}));
  ASSERT_EQ(t.labels.size(), t.generators.size());
  for (const auto& l : t.labels) EXPECT_TRUE(l.rfind("CH2[", 0) == 0 || l.rfind("CH3[", 0) == 0) << l;
  RelationOptions with;
  with.include_ch1 = true;
  EXPECT_GT(relations(BraidWord(3, {1, -2, 1, -2}), with).generators.size(), t.generators.size());
}

TEST(Import, MuLambdaU) {
  auto src = VarTable::laurent({"mu", "lambda", "U"});
  auto dst = VarTable::laurent({"nu", "L", "g"});
  auto s = [&](const char* n, int e = 1) { return LaurentPoly::variable(src, n, e); };
  auto d = [&](const char* n, int e = 1) { return LaurentPoly::variable(dst, n, e); };
  EXPECT_EQ(from_mu_lambda_U(s("U") - s("mu"), dst), d("g", -2) - d("nu", -2));
  EXPECT_EQ(from_mu_lambda_U(s("lambda") * (LaurentPoly::constant(src, 1) - s("mu")), dst),
            -(d("g", -1) * d("L", -1)) * (LaurentPoly::constant(dst, 1) - d("nu", -2)));
}
