#pragma once

#include <complex>
#include <map>
#include <string>

#include "kch/poly.hpp"

namespace kch {

/// Quotient of two Laurent polynomials on a common table.
///
/// Normal form: the denominator's leading coefficient is 1 and monomial
/// denominators are folded into the numerator. No gcd is taken, so equality
/// is decided by cross-multiplication.
class RatFunc {
 public:
  explicit RatFunc(VarTablePtr vars);
  RatFunc(LaurentPoly num);  // NOLINT(google-explicit-constructor)
  RatFunc(LaurentPoly num, LaurentPoly den);

  static RatFunc constant(VarTablePtr vars, const Rational& c);

  const LaurentPoly& num() const { return num_; }
  const LaurentPoly& den() const { return den_; }
  const VarTablePtr& vars() const { return num_.vars(); }

  bool is_zero() const { return num_.is_zero(); }
  /// True when the denominator is 1.
  bool is_polynomial() const;
  /// The numerator if the denominator is 1 or divides it exactly.
  std::optional<LaurentPoly> as_polynomial() const;

  RatFunc operator-() const;
  RatFunc& operator+=(const RatFunc& o);
  RatFunc& operator-=(const RatFunc& o);
  RatFunc& operator*=(const RatFunc& o);
  RatFunc& operator/=(const RatFunc& o);
  friend RatFunc operator+(RatFunc a, const RatFunc& b) { return a += b; }
  friend RatFunc operator-(RatFunc a, const RatFunc& b) { return a -= b; }
  friend RatFunc operator*(RatFunc a, const RatFunc& b) { return a *= b; }
  friend RatFunc operator/(RatFunc a, const RatFunc& b) { return a /= b; }

  RatFunc pow(int e) const;

  /// Cross-multiplication equality.
  bool operator==(const RatFunc& o) const;

  /// Divide numerator and denominator by (x_v - value) as long as both vanish
  /// at x_v = value.
  RatFunc cancel_root(std::size_t v, const Rational& value) const;
  /// Divide out the denominator when it divides the numerator exactly.
  RatFunc reduced() const;

  /// Evaluate one variable. Raises PoleError when the denominator vanishes
  /// after cancelling common roots at that point.
  RatFunc specialize(std::size_t v, const Rational& value) const;
  /// Ring homomorphism sending variable i to images[i] (if present).
  RatFunc substitute(const std::map<std::size_t, RatFunc>& images) const;

  RatFunc rebased(const VarTablePtr& target) const;
  std::complex<double> evaluate(std::span<const std::complex<double>> point) const;

  std::string to_string() const;

 private:
  void normalize();

  LaurentPoly num_;
  LaurentPoly den_;
};

std::ostream& operator<<(std::ostream& os, const RatFunc& f);

/// Substitute variables of `p` by rational functions. Variables without an
/// entry are kept. A denominator that becomes zero raises DivisionError.
RatFunc substitute(const LaurentPoly& p, const std::map<std::size_t, RatFunc>& images);

}  // namespace kch
