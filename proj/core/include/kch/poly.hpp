#pragma once

// Exact multivariate Laurent polynomials over Q.
//
// Every polynomial references a VarTable; arithmetic between polynomials on
// different tables is a StructuralError. Variables flagged non-invertible may
// only carry non-negative exponents.

#include <complex>
#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "kch/error.hpp"

namespace kch {

using Rational = mpq_class;
using Integer = mpz_class;

class VarTable {
 public:
  struct Var {
    std::string name;
    bool invertible = true;
    bool operator==(const Var&) const = default;
  };

  explicit VarTable(std::vector<Var> vars);

  static std::shared_ptr<const VarTable> make(std::vector<Var> vars);
  /// All variables invertible.
  static std::shared_ptr<const VarTable> laurent(const std::vector<std::string>& names);

  std::size_t size() const { return vars_.size(); }
  const Var& operator[](std::size_t i) const { return vars_[i]; }
  const std::vector<Var>& vars() const { return vars_; }

  std::optional<std::size_t> find(std::string_view name) const;
  /// Like find() but throws StructuralError for unknown names.
  std::size_t index(std::string_view name) const;

  bool operator==(const VarTable& other) const { return vars_ == other.vars_; }

 private:
  std::vector<Var> vars_;
};

using VarTablePtr = std::shared_ptr<const VarTable>;

/// True when both pointers denote the same table or structurally equal tables.
bool same_table(const VarTablePtr& a, const VarTablePtr& b);

using Exponent = std::vector<int>;

/// Graded lexicographic order on exponent vectors. Used for the canonical
/// term order inside LaurentPoly; the largest term is the leading term.
struct GrlexLess {
  bool operator()(const Exponent& a, const Exponent& b) const;
};

class RatFunc;

class LaurentPoly {
 public:
  using TermMap = std::map<Exponent, Rational, GrlexLess>;

  /// The zero polynomial on `vars`.
  explicit LaurentPoly(VarTablePtr vars);

  static LaurentPoly constant(VarTablePtr vars, const Rational& c);
  static LaurentPoly monomial(VarTablePtr vars, Exponent exp, const Rational& c = 1);
  static LaurentPoly variable(VarTablePtr vars, std::string_view name, int power = 1);
  static LaurentPoly variable(VarTablePtr vars, std::size_t index, int power = 1);

  const VarTablePtr& vars() const { return vars_; }
  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool is_monomial() const { return terms_.size() == 1; }
  /// The constant term (zero if absent).
  Rational constant_term() const;
  Rational coefficient(const Exponent& exp) const;

  /// Leading term under GrlexLess. Throws on zero.
  const std::pair<const Exponent, Rational>& leading_term() const;
  const Rational& leading_coefficient() const { return leading_term().second; }

  /// Per-variable minimum / maximum exponent over all terms (zeros when empty).
  Exponent min_exponents() const;
  Exponent max_exponents() const;
  /// True when some term has a nonzero exponent on variable `v`.
  bool involves(std::size_t v) const;
  int total_degree() const;

  void add_term(const Exponent& exp, const Rational& c);

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o);
  LaurentPoly& operator*=(const Rational& c);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator*(LaurentPoly a, const Rational& c) { return a *= c; }
  friend LaurentPoly operator*(const Rational& c, LaurentPoly a) { return a *= c; }

  /// Non-negative powers for any polynomial, negative powers for monomials only.
  LaurentPoly pow(int e) const;
  /// Multiply by the monomial x^shift.
  LaurentPoly shifted(const Exponent& shift) const;
  /// Exact quotient if `d` divides this polynomial in the Laurent ring.
  std::optional<LaurentPoly> exact_divide(const LaurentPoly& d) const;

  LaurentPoly derivative(std::size_t v) const;

  /// Evaluate one variable at a rational value. Negative exponents at zero
  /// raise DivisionError.
  LaurentPoly specialize(std::size_t v, const Rational& value) const;

  /// Ring homomorphism that sends variable i to images[i] when present and
  /// fixes it otherwise. Images of variables appearing with negative
  /// exponents must be monomials.
  LaurentPoly substitute(const std::vector<std::optional<LaurentPoly>>& images) const;

  /// Same polynomial on another table, matching variables by name. Variables
  /// that do not occur in the polynomial need not exist in the target.
  LaurentPoly rebased(const VarTablePtr& target) const;

  std::complex<double> evaluate(std::span<const std::complex<double>> point) const;

  /// Human-readable form, e.g. "g*nu^-2 - g^-1".
  std::string to_string() const;

  bool operator==(const LaurentPoly& o) const;

 private:
  void check_same(const LaurentPoly& o) const;
  void check_exponent(const Exponent& e) const;

  VarTablePtr vars_;
  TermMap terms_;
};

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p);

/// Multiply by the monomial unit that makes every exponent non-negative and
/// at least one exponent zero in each invertible variable.
LaurentPoly clear_denominators(const LaurentPoly& p);

/// Divide out the rational content and make the leading coefficient positive.
LaurentPoly primitive_part(const LaurentPoly& p);

}  // namespace kch
