#pragma once

// The commutative algebra on the generators a_ij (i != j) over
// Q[g^±, nu_c^±, L_c^±], the braid group action on it, the matrices
// Phi^L / Phi^R, and the degree-0 relations of the abelianized knot contact
// homology in (nu, L, g) coordinates.
//
// Strand indices are 0-based in the API; variable names are 1-based
// ("a12", "nu1", ...). For knots the component variables are "nu" and "L".

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "kch/braid.hpp"
#include "kch/poly.hpp"

namespace kch {

/// Sign conventions that the source material leaves ambiguous. The defaults
/// are the values selected by the test suite.
struct Conventions {
  /// L' carries nu^(lambda_nu_sign * 2 * wr) on each component's leftmost strand.
  int lambda_nu_sign = -1;
  /// Psi(a_ij) = (-g)^(psi_sign * k(i,j)) (nu_c(i)/nu_c(j)) a_ij.
  int psi_sign = -1;
  /// Quantum torus commutation L_i nu_i = q^torus_sign nu_i L_i.
  int torus_sign = -1;

  bool operator==(const Conventions&) const = default;
};

/// Variable layout for an n-strand braid whose closure has r components:
/// a_ij for i != j (row-major), then nu_1..nu_r, L_1..L_r, g.
class AugRing {
 public:
  AugRing(int strands, int components);

  int strands() const { return strands_; }
  int components() const { return components_; }
  const VarTablePtr& vars() const { return vars_; }

  std::size_t a(int i, int j) const;
  std::size_t nu(int c) const { return a_count() + c; }
  std::size_t lambda(int c) const { return a_count() + components_ + c; }
  std::size_t g() const { return a_count() + 2 * components_; }
  std::size_t a_count() const { return static_cast<std::size_t>(strands_) * (strands_ - 1); }

  LaurentPoly a_poly(int i, int j) const { return LaurentPoly::variable(vars_, a(i, j)); }
  LaurentPoly nu_poly(int c, int power = 1) const { return LaurentPoly::variable(vars_, nu(c), power); }
  LaurentPoly lambda_poly(int c, int power = 1) const { return LaurentPoly::variable(vars_, lambda(c), power); }
  LaurentPoly g_poly(int power = 1) const { return LaurentPoly::variable(vars_, g(), power); }
  /// (-g)^power as a signed monomial.
  LaurentPoly minus_g_pow(int power) const;
  LaurentPoly constant(const Rational& c) const { return LaurentPoly::constant(vars_, c); }
  LaurentPoly zero() const { return LaurentPoly(vars_); }

  std::vector<std::size_t> a_vars() const;
  /// nu's, L's and g.
  std::vector<std::size_t> kept_vars() const;

 private:
  int strands_;
  int components_;
  VarTablePtr vars_;
};

/// Square matrix over the algebra.
class AugMatrix {
 public:
  AugMatrix(const AugRing& ring, int n);

  static AugMatrix identity(const AugRing& ring, int n);
  static AugMatrix diagonal(const AugRing& ring, const std::vector<LaurentPoly>& diag);

  int size() const { return n_; }
  LaurentPoly& operator()(int i, int j) { return entries_[static_cast<std::size_t>(i) * n_ + j]; }
  const LaurentPoly& operator()(int i, int j) const { return entries_[static_cast<std::size_t>(i) * n_ + j]; }

  AugMatrix operator*(const AugMatrix& o) const;
  AugMatrix operator+(const AugMatrix& o) const;
  AugMatrix operator-(const AugMatrix& o) const;
  bool operator==(const AugMatrix& o) const { return n_ == o.n_ && entries_ == o.entries_; }

  std::string to_string() const;

 private:
  int n_;
  std::vector<LaurentPoly> entries_;
};

/// Algebra endomorphism determined by images of the a_ij; coefficient
/// variables (nu, L, g) are fixed.
class AlgebraMap {
 public:
  static AlgebraMap identity(const AugRing& ring);
  /// Images indexed by variable index; entries for non-a variables ignored.
  AlgebraMap(const AugRing& ring, std::vector<LaurentPoly> a_images);

  const LaurentPoly& image(int i, int j) const;
  LaurentPoly operator()(const LaurentPoly& p) const;
  AugMatrix operator()(const AugMatrix& m) const;
  /// (this o inner)(x) = this(inner(x)).
  AlgebraMap compose(const AlgebraMap& inner) const;

  bool operator==(const AlgebraMap& o) const { return images_ == o.images_; }

 private:
  int strands_;
  VarTablePtr vars_;
  std::vector<std::optional<LaurentPoly>> images_;  // indexed by variable; set for a-variables only
};

/// phi_{sigma_k^sign}; k is 1-based as in braid words.
AlgebraMap phi_gen(const AugRing& ring, int k, int sign);
/// phi_{s_1 ... s_L} = phi_{s_1} o ... o phi_{s_L}.
AlgebraMap phi_word(const AugRing& ring, const BraidWord& b);

AugMatrix phiL_gen(const AugRing& ring, int k, int sign);
AugMatrix phiR_gen(const AugRing& ring, int k, int sign);
/// Folded with Phi^L_{b1 b2} = phi_{b1}(Phi^L_{b2}) Phi^L_{b1}.
AugMatrix phiL(const AugRing& ring, const BraidWord& b);
/// Folded with Phi^R_{b1 b2} = Phi^R_{b1} phi_{b1}(Phi^R_{b2}).
AugMatrix phiR(const AugRing& ring, const BraidWord& b);

/// A_ij = a_ij (i<j), -nu^-2 a_ij (i>j), 1 - nu^-2 (i=j).
AugMatrix build_A(const AugRing& ring, const ClosureInfo& cl);
/// The matrix -g*Ahat: -g^-1 a_ij (i<j), g nu^-2 a_ij (i>j), g nu^-2 - g^-1 (i=j).
AugMatrix build_Ahat(const AugRing& ring, const ClosureInfo& cl);
/// Diagonal; L_c^-1 nu_c^(±2 wr_c) (-g)^wr_c on each leftmost strand, 1 elsewhere.
AugMatrix build_LambdaPrime(const AugRing& ring, const ClosureInfo& cl, const Conventions& conv = {});
AugMatrix build_LambdaPrime_inverse(const AugRing& ring, const ClosureInfo& cl, const Conventions& conv = {});
/// diag((-g)^d(i)) and diag((-g)^d(perm(i))).
AugMatrix build_D(const AugRing& ring, const ClosureInfo& cl, int power = 1);
AugMatrix build_D_beta(const AugRing& ring, const ClosureInfo& cl, int power = 1);

AlgebraMap psi(const AugRing& ring, const ClosureInfo& cl, const Conventions& conv = {});

/// The relation ideal of the degree-0 abelianized contact homology.
struct Presentation {
  VarTablePtr vars;
  std::vector<LaurentPoly> generators;
  std::vector<std::string> labels;
  /// Variables to eliminate to reach the augmentation ideal (the a_ij).
  std::vector<std::size_t> eliminate;
  BraidWord braid;
  int components = 1;
};

struct RelationOptions {
  Conventions conventions;
  /// Also emit the entries of A - L' phi(A) L'^-1 (labelled "CH1").
  bool include_ch1 = false;
};

/// Entries of (-g Ahat) - L' Phi^L A  ("CH2[i,j]") and A L' - (-g Ahat) Phi^R
/// ("CH3[i,j]"), dropping zeros and scalar multiples of earlier entries.
Presentation relations(const BraidWord& b, const RelationOptions& opts = {});
/// Only the entries of L' phi(A) - A L' (ourCH1 multiplied by L').
std::vector<LaurentPoly> ch1_entries(const BraidWord& b, const Conventions& conv = {});

/// One-way import from (mu, lambda, U) coordinates: mu_i -> nu_i^-2,
/// U -> g^-2, lambda_i -> -g^-1 L_i^-1. Names "mu", "lambda" map to "nu", "L"
/// and "mu1".. to "nu1"..; other variables are matched by name in `target`.
LaurentPoly from_mu_lambda_U(const LaurentPoly& p, const VarTablePtr& target);

}  // namespace kch
