#include "kch/qbinom.hpp"

namespace kch {

const VarTablePtr& qg_table() {
  static const VarTablePtr table = VarTable::laurent({"q", "g"});
  return table;
}

LaurentPoly q_power(const VarTablePtr& vars, int e) { return LaurentPoly::variable(vars, "q", e); }

namespace {

// q^m - q^-m
LaurentPoly q_diff(const VarTablePtr& vars, int m) { return q_power(vars, m) - q_power(vars, -m); }

}  // namespace

LaurentPoly qbinom_int(const VarTablePtr& vars, int n, int k) {
  if (k < 0 || k > n || n < 0) return LaurentPoly(vars);
  k = std::min(k, n - k);
  LaurentPoly num = LaurentPoly::constant(vars, 1);
  LaurentPoly den = LaurentPoly::constant(vars, 1);
  for (int i = 0; i < k; ++i) {
    num *= q_diff(vars, n - i);
    den *= q_diff(vars, i + 1);
  }
  auto quotient = num.exact_divide(den);
  if (!quotient) throw StructuralError("Gaussian binomial did not divide exactly");
  return *quotient;
}

LaurentPoly qbinom_int(int n, int k) { return qbinom_int(qg_table(), n, k); }

RatFunc qbinom_formal(const VarTablePtr& vars, int a, int b) {
  if (b < 0) throw StructuralError("qbinom_formal requires b >= 0");
  LaurentPoly g = LaurentPoly::variable(vars, "g");
  LaurentPoly g_inv = LaurentPoly::variable(vars, "g", -1);
  LaurentPoly num = LaurentPoly::constant(vars, 1);
  LaurentPoly den = LaurentPoly::constant(vars, 1);
  for (int i = 0; i < b; ++i) {
    num *= g * q_power(vars, -a - i) - g_inv * q_power(vars, a + i);
    den *= q_diff(vars, i + 1);
  }
  return RatFunc(std::move(num), std::move(den));
}

RatFunc qbinom_formal(int a, int b) { return qbinom_formal(qg_table(), a, b); }

}  // namespace kch
