#include <gtest/gtest.h>

#include "kch/error.hpp"
#include "kch/poly.hpp"
#include "kch/qbinom.hpp"
#include "kch/ratfunc.hpp"
#include "support.hpp"

using namespace kch;

namespace {

VarTablePtr ngt() { return VarTable::laurent({"nu", "L", "g"}); }

LaurentPoly var(const VarTablePtr& t, const char* name, int e = 1) { return LaurentPoly::variable(t, name, e); }
LaurentPoly one(const VarTablePtr& t) { return LaurentPoly::constant(t, 1); }

Rational at_q1(const LaurentPoly& p) {
  auto v = p.specialize(p.vars()->index("q"), 1);
  return v.constant_term();
}

}  // namespace

TEST(LaurentPoly, Cancellation) {
  auto t = ngt();
  LaurentPoly p = (var(t, "nu") - var(t, "nu", -1)) + var(t, "nu", -1);
  EXPECT_EQ(p, var(t, "nu"));
  EXPECT_EQ(p.size(), 1u);
}

TEST(LaurentPoly, DifferenceOfSquares) {
  auto t = ngt();
  LaurentPoly p = (var(t, "g") - var(t, "g", -1)) * (var(t, "g") + var(t, "g", -1));
  EXPECT_EQ(p, var(t, "g", 2) - var(t, "g", -2));
  EXPECT_EQ(p.to_string(), "g^2 - g^-2");
}

TEST(LaurentPoly, ZeroAbsorbs) {
  auto t = ngt();
  std::mt19937 rng(7);
  for (int i = 0; i < 20; ++i) {
    EXPECT_TRUE((LaurentPoly(t) * test::random_poly(rng, t)).is_zero());
  }
}

TEST(LaurentPoly, MismatchedTablesThrow) {
  auto a = VarTable::laurent({"x"});
  auto b = VarTable::laurent({"y"});
  EXPECT_THROW(var(a, "x") + var(b, "y"), StructuralError);
  EXPECT_THROW(var(a, "x") * var(b, "y"), StructuralError);
}

TEST(LaurentPoly, NegativeExponentOnPolynomialVariableRejected) {
  auto t = VarTable::make({{"a12", false}, {"g", true}});
  EXPECT_THROW(LaurentPoly::variable(t, "a12", -1), StructuralError);
  EXPECT_NO_THROW(LaurentPoly::variable(t, "g", -1));
}

TEST(LaurentPoly, RingAxioms) {
  auto t = VarTable::make({{"a", false}, {"nu", true}, {"g", true}});
  std::mt19937 rng(11);
  for (int i = 0; i < 50; ++i) {
    auto x = test::random_poly(rng, t), y = test::random_poly(rng, t), z = test::random_poly(rng, t);
    EXPECT_EQ((x * y) * z, x * (y * z));
    EXPECT_EQ((x + y) + z, x + (y + z));
    EXPECT_EQ(x * y, y * x);
    EXPECT_EQ(x + y, y + x);
    EXPECT_EQ(x * (y + z), x * y + x * z);
    EXPECT_TRUE((x - x).is_zero());
    EXPECT_EQ(-(-x), x);
  }
}

TEST(LaurentPoly, SubstituteIsHomomorphism) {
  auto t = ngt();
  std::mt19937 rng(3);
  const std::size_t nu = t->index("nu"), g = t->index("g");
  std::map<std::size_t, RatFunc> images{{nu, RatFunc(var(t, "g") + var(t, "L", 2), var(t, "L") - 3 * var(t, "g"))},
                                        {g, RatFunc(var(t, "nu", -1))}};
  for (int i = 0; i < 20; ++i) {
    auto p = test::random_poly(rng, t, 3), r = test::random_poly(rng, t, 3);
    EXPECT_EQ(RatFunc(p * r).substitute(images), RatFunc(p).substitute(images) * RatFunc(r).substitute(images));
  }
}

TEST(LaurentPoly, IdentitySubstitution) {
  auto t = ngt();
  std::mt19937 rng(5);
  auto p = test::random_poly(rng, t);
  EXPECT_EQ(RatFunc(p).substitute({}), RatFunc(p));
}

TEST(LaurentPoly, SubstitutionThroughZeroDenominatorThrows) {
  auto t = VarTable::laurent({"x", "y"});
  RatFunc f(var(t, "x"), var(t, "x") - var(t, "y"));
  EXPECT_THROW(f.substitute({{t->index("x"), RatFunc(var(t, "y"))}}), DivisionError);
}

TEST(LaurentPoly, ClearDenominatorsOnlyShiftsUnits) {
  auto t = VarTable::make({{"a", false}, {"nu", true}});
  LaurentPoly p = var(t, "a") * var(t, "nu", -2) + var(t, "nu");
  LaurentPoly c = clear_denominators(p);
  EXPECT_EQ(c, var(t, "a") + var(t, "nu", 3));
}

TEST(LaurentPoly, ExactDivide) {
  auto t = VarTable::laurent({"q"});
  LaurentPoly d = var(t, "q") - var(t, "q", -1);
  LaurentPoly p = d * (var(t, "q", 2) + one(t));
  ASSERT_TRUE(p.exact_divide(d).has_value());
  EXPECT_EQ(*p.exact_divide(d), var(t, "q", 2) + LaurentPoly::constant(t, 1));
  EXPECT_FALSE((p + LaurentPoly::constant(t, 1)).exact_divide(d).has_value());
}

TEST(RatFunc, CrossMultiplicationEquality) {
  auto t = VarTable::laurent({"q"});
  LaurentPoly q = var(t, "q");
  RatFunc a(q * q - one(t), q - one(t));
  EXPECT_EQ(a, RatFunc(q + one(t)));
  EXPECT_EQ(RatFunc(q) / RatFunc(q), RatFunc::constant(t, 1));
  EXPECT_THROW(RatFunc(q) / RatFunc(t), DivisionError);
}

TEST(RatFunc, SpecializeCancelsRemovablePoles) {
  auto t = VarTable::laurent({"q", "g"});
  LaurentPoly q = var(t, "q");
  RatFunc f(q * q - one(t), q - one(t));
  EXPECT_EQ(f.specialize(t->index("q"), 1), RatFunc::constant(t, 2));
  EXPECT_THROW(RatFunc(var(t, "g"), q - one(t)).specialize(t->index("q"), 1), PoleError);
}

TEST(QBinom, Examples) {
  auto t = qg_table();
  LaurentPoly q = var(t, "q");
  EXPECT_EQ(qbinom_int(5, 0), LaurentPoly::constant(t, 1));
  EXPECT_EQ(qbinom_int(2, 1), q + var(t, "q", -1));
  EXPECT_EQ(qbinom_int(4, 2), var(t, "q", 4) + var(t, "q", 2) + LaurentPoly::constant(t, 2) + var(t, "q", -2) + var(t, "q", -4));
  EXPECT_TRUE(qbinom_int(3, -1).is_zero());
  EXPECT_TRUE(qbinom_int(3, 4).is_zero());
}

TEST(QBinom, Symmetry) {
  auto t = qg_table();
  const std::size_t qi = t->index("q");
  for (int n = 0; n <= 12; ++n) {
    for (int k = 0; k <= n; ++k) {
      EXPECT_EQ(qbinom_int(n, k), qbinom_int(n, n - k));
      std::vector<std::optional<LaurentPoly>> inv(t->size());
      inv[qi] = var(t, "q", -1);
      EXPECT_EQ(qbinom_int(n, k).substitute(inv), qbinom_int(n, k)) << "q <-> q^-1 at " << n << "," << k;
    }
  }
}

TEST(QBinom, Pascal) {
  for (int n = 1; n <= 12; ++n) {
    for (int k = 0; k <= n; ++k) {
      LaurentPoly rhs = q_power(qg_table(), k) * qbinom_int(n - 1, k) + q_power(qg_table(), k - n) * qbinom_int(n - 1, k - 1);
      EXPECT_EQ(qbinom_int(n, k), rhs) << n << "," << k;
    }
  }
}

TEST(QBinom, ClassicalLimit) {
  for (int n = 0; n <= 12; ++n) {
    Integer c = 1;
    for (int k = 0; k <= n; ++k) {
      EXPECT_EQ(at_q1(qbinom_int(n, k)), Rational(c)) << n << "," << k;
      c = c * (n - k) / (k + 1);
    }
  }
}

TEST(QBinom, FormalExamples) {
  auto t = qg_table();
  EXPECT_EQ(qbinom_formal(3, 0), RatFunc::constant(t, 1));
  EXPECT_EQ(qbinom_formal(0, 1), RatFunc(var(t, "g") - var(t, "g", -1), var(t, "q") - var(t, "q", -1)));
  RatFunc at = qbinom_formal(1, 1).substitute({{t->index("g"), RatFunc(var(t, "q", 3))}});
  EXPECT_EQ(at, RatFunc(qbinom_int(2, 1)));
}

TEST(QBinom, FormalMatchesInteger) {
  auto t = qg_table();
  for (int n = 0; n <= 10; ++n) {
    for (int a = 0; a <= n; ++a) {
      for (int b = 0; a + b <= n; ++b) {
        RatFunc at = qbinom_formal(a, b).substitute({{t->index("g"), RatFunc(q_power(t, n))}});
        EXPECT_EQ(at, RatFunc(qbinom_int(n - a, b))) << "a=" << a << " b=" << b << " n=" << n;
      }
    }
  }
}
