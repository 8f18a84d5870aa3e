#pragma once

// The quantum torus on nu_1..nu_r, L_1..L_r over Q(q)[g^±], its action on
// sequences Z^r -> Q(q, g), and the classical limit q -> 1.
//
// Elements are kept normal ordered (all nu's left of all L's). The single
// convention constant c = torus_sign fixes L_i nu_i = q^c nu_i L_i. With the
// action nu_i f(k) = q^{k_i} f(k) and L_i f(k) = f(k - e_i), composition of
// operators forces c = -1.

#include <functional>
#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "kch/poly.hpp"
#include "kch/ratfunc.hpp"

namespace kch {

class TorusElem {
 public:
  /// (nu exponents, L exponents)
  using Key = std::pair<std::vector<int>, std::vector<int>>;

  /// The zero element of rank r. Coefficients live on qg_table().
  explicit TorusElem(int rank, int torus_sign = -1);

  static TorusElem scalar(int rank, const RatFunc& c, int torus_sign = -1);
  static TorusElem nu(int rank, int i, int power = 1, int torus_sign = -1);
  static TorusElem lambda(int rank, int i, int power = 1, int torus_sign = -1);

  int rank() const { return rank_; }
  int torus_sign() const { return sign_; }
  const std::map<Key, RatFunc>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  /// Adds c * nu^a L^b (already normal ordered).
  void add_term(const std::vector<int>& nu_exp, const std::vector<int>& l_exp, const RatFunc& c);

  TorusElem operator-() const;
  TorusElem& operator+=(const TorusElem& o);
  TorusElem& operator-=(const TorusElem& o);
  friend TorusElem operator+(TorusElem a, const TorusElem& b) { return a += b; }
  friend TorusElem operator-(TorusElem a, const TorusElem& b) { return a -= b; }
  friend TorusElem operator*(const TorusElem& a, const TorusElem& b);
  friend TorusElem operator*(const RatFunc& c, const TorusElem& a);

  /// Non-negative powers, or negative powers of a single term.
  TorusElem pow(int e) const;

  bool operator==(const TorusElem& o) const;

  /// E.g. "nu - nu^-1 + (q^-1*g^-1)*nu*L - (q*g)*nu^-1*L".
  std::string to_string() const;

 private:
  void check(const TorusElem& o) const;

  int rank_;
  int sign_;
  std::map<Key, RatFunc> terms_;
};

/// Normal-ordered product: (nu^a L^b)(nu^c L^d) = q^{sign * b.c} nu^{a+c} L^{b+d}.
TorusElem torus_mul(const TorusElem& a, const TorusElem& b);

/// A sequence Z^r -> Q(q, g). Evaluations are memoized behind a mutex, so a
/// shared sequence can be evaluated concurrently; the callback must be pure.
class ColoredSeq {
 public:
  using Fn = std::function<RatFunc(const std::vector<int>&)>;

  ColoredSeq(int rank, Fn fn);

  int rank() const { return rank_; }
  RatFunc operator()(const std::vector<int>& k) const;
  RatFunc operator()(int k) const { return (*this)(std::vector<int>{k}); }

 private:
  struct Memo;
  int rank_;
  Fn fn_;
  std::shared_ptr<Memo> memo_;
};

/// Finitely supported sequence with the given values (zero elsewhere).
ColoredSeq finite_sequence(int rank, std::map<std::vector<int>, RatFunc> values);
/// The constant sequence.
ColoredSeq constant_sequence(int rank, const RatFunc& c);

/// (c nu^a L^b f)(k) = c * q^{a.k} * f(k - b), coefficients read at the outer index k.
ColoredSeq act(const TorusElem& a, const ColoredSeq& f);

/// Parses an operator literal such as "nu - nu^-1 - L*(g*nu^-1 - g^-1*nu)".
/// Identifiers: q, g, and nu, L (rank 1) or nu1.., L1.. (any rank).
/// Products are taken in the written order; nothing is commuted implicitly.
TorusElem parse_operator(std::string_view text, int rank = 1, int torus_sign = -1);

/// The operator nu - nu^-1 - L*(g*nu^-1 - g^-1*nu), read as a product in the
/// quantum torus. With torus_sign = -1 it annihilates k -> [N choose k].
TorusElem unknot_operator(int torus_sign = -1);

/// Variables of the commutative limit: nu, L, g (rank 1) or nu1.., L1.., g.
VarTablePtr classical_table(int rank);

/// q -> 1 in every coefficient. Throws PoleError naming the offending term.
LaurentPoly classical_limit(const TorusElem& a);

struct AnnihilationFailure {
  std::vector<int> k;
  int N;
  std::string value;
};

struct AnnihilationReport {
  bool all_zero = true;
  std::size_t points = 0;
  std::vector<AnnihilationFailure> failures;
};

/// Checks act(a, f)(k) = 0 exactly, with g = q^N, for every k in the box
/// [lo, hi] (per coordinate) and every N in [n_lo, n_hi].
AnnihilationReport annihilates(const TorusElem& a, const ColoredSeq& f, const std::vector<int>& lo,
                               const std::vector<int>& hi, int n_lo, int n_hi);

}  // namespace kch
