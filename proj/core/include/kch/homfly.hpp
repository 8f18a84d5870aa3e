#pragma once

// The Hecke algebra H_n with T_i^2 = (q^-1 - q) T_i + 1, its Ocneanu trace,
// and the HOMFLYPT invariant of braid closures in the variables q and g.
//
// The framed invariant F(b) = delta^n tr(b) with delta = (g - g^-1)/(q - q^-1)
// and trace parameter z = -g/delta picks up a factor -g per positive kink and
// satisfies F(L+) - F(L-) = (q^-1 - q) F(L0). The zero-framed invariant is
// P(b) = (-g)^{-wr(b)} F(b); it is Markov invariant and satisfies
// -g P(L+) + g^-1 P(L-) = (q^-1 - q) P(L0).

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "kch/braid.hpp"
#include "kch/poly.hpp"
#include "kch/qtorus.hpp"
#include "kch/ratfunc.hpp"

namespace kch {

class HeckeElem {
 public:
  /// One-line notation, 0-based: w[i] is the image of i.
  using Perm = std::vector<int>;

  /// The zero element of H_n.
  explicit HeckeElem(int strands);

  static HeckeElem identity(int strands);
  static HeckeElem basis(Perm w);
  /// T_i^sign with i 1-based as in braid words.
  static HeckeElem generator(int strands, int i, int sign = 1);
  /// Product of the letters' generators in word order.
  static HeckeElem from_braid(const BraidWord& b);

  int strands() const { return n_; }
  /// Coefficients are Laurent polynomials in q on qg_table().
  const std::map<Perm, LaurentPoly>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const Perm& w, const LaurentPoly& c);
  /// this * T_i^sign, i 0-based.
  HeckeElem times_generator(int i, int sign = 1) const;

  HeckeElem operator-() const;
  HeckeElem& operator+=(const HeckeElem& o);
  HeckeElem& operator-=(const HeckeElem& o);
  friend HeckeElem operator+(HeckeElem a, const HeckeElem& b) { return a += b; }
  friend HeckeElem operator-(HeckeElem a, const HeckeElem& b) { return a -= b; }
  friend HeckeElem operator*(const HeckeElem& a, const HeckeElem& b);
  friend HeckeElem operator*(const LaurentPoly& c, const HeckeElem& a);

  bool operator==(const HeckeElem& o) const { return n_ == o.n_ && terms_ == o.terms_; }

  /// E.g. "(q^-1 - q)*T[2,1] + T[1,2]" with 1-based one-line notation.
  std::string to_string() const;

 private:
  int n_;
  std::map<Perm, LaurentPoly> terms_;
};

HeckeElem hecke_mul(const HeckeElem& a, const HeckeElem& b);

/// Ocneanu trace as a polynomial in z: entry j is the coefficient of z^j
/// (a Laurent polynomial in q). Normalized by tr(1) = 1.
std::vector<LaurentPoly> trace_coefficients(const HeckeElem& x);

/// (g - g^-1)/(q - q^-1)
RatFunc homfly_delta();

/// Framed invariant F of the closure (blackboard framing).
RatFunc homflypt_framed(const BraidWord& b);
/// Zero-framed HOMFLYPT invariant P of the closure.
RatFunc homflypt(const BraidWord& b);

/// Framed invariant computed without the Hecke algebra: cyclic reduction,
/// destabilization, splitting off free strands, the quadratic relation on
/// repeated letters, a braid-relation rewrite and crossing switches.
/// Returns nothing if the search exceeds `max_depth`.
std::optional<RatFunc> skein_framed(const BraidWord& b, int max_depth = 64);

/// k -> [N choose k] with g = q^N kept formal; zero for k < 0. Only rank 1
/// is supported.
ColoredSeq colored_unknot(int rank = 1);

}  // namespace kch
