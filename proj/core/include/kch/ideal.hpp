#pragma once

// Ideals of Laurent polynomial rings over Q, computed with Buchberger's
// algorithm on an ordinary polynomial ring.
//
// Each invertible variable v gets an internal inverse tag t_v together with
// the generator v*t_v - 1. The tags sit in the eliminated block, so a basis
// describes the saturation of the input ideal by every invertible variable,
// which is the ideal the generators span in the Laurent ring.

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

#include "kch/error.hpp"
#include "kch/poly.hpp"

namespace kch {

/// A variable table plus the set of variables to eliminate. The monomial
/// order is a block order: eliminated variables (and all inverse tags) rank
/// above the kept ones; both blocks use graded reverse lex with ties broken
/// by table index (lower index = larger variable).
struct RingSpec {
  VarTablePtr vars;
  std::vector<std::size_t> eliminate;

  RingSpec() = default;
  RingSpec(VarTablePtr v, std::vector<std::size_t> elim = {});

  bool is_eliminated(std::size_t v) const;
  /// Table of the non-eliminated variables, in original order.
  VarTablePtr kept_table() const;
};

struct IdealGens {
  RingSpec ring;
  std::vector<LaurentPoly> gens;
};

struct GroebnerLimits {
  std::size_t spair_budget = 200000;
  double timeout_s = 60.0;
};

struct GroebnerStats {
  std::size_t spairs = 0;
  std::size_t zero_reductions = 0;
  std::size_t basis_size = 0;
  double seconds = 0.0;
};

namespace detail {
class GroebnerEngine;
}

class GroebnerBasis {
 public:
  bool complete() const;
  /// Empty when complete.
  const std::string& incomplete_reason() const;
  const RingSpec& ring() const;
  const GroebnerStats& stats() const;

  /// Basis elements that do not involve inverse tags, as polynomials on
  /// ring().vars (primitive, positive leading coefficient, ascending order).
  std::vector<LaurentPoly> polynomials() const;
  /// Basis elements free of inverse tags and of eliminated variables.
  std::vector<LaurentPoly> kept_polynomials() const;
  /// Number of elements including those with tags.
  std::size_t size() const;

  /// Remainder of a unit multiple of p, mapped back with t_v -> v^-1.
  LaurentPoly normal_form(const LaurentPoly& p) const;
  /// Membership in the Laurent ideal. Throws ResourceError when incomplete.
  bool contains(const LaurentPoly& p) const;

  /// Every element, tags printed as "inv_<name>".
  std::string to_string() const;

 private:
  friend GroebnerBasis groebner(const IdealGens&, const GroebnerLimits&);
  std::shared_ptr<const detail::GroebnerEngine> engine_;
};

/// Reduced Groebner basis of the saturated ideal. On hitting a limit the
/// result is marked incomplete instead of returning a truncated basis.
GroebnerBasis groebner(const IdealGens& g, const GroebnerLimits& limits = {});

struct Elimination {
  bool complete = true;
  std::string incomplete_reason;
  /// Generators on RingSpec::kept_table(); empty ideal when incomplete.
  IdealGens ideal;
  GroebnerStats stats;
};

/// Repeatedly picks a generator u*x + r with x in `drop`, u a unit monomial
/// and r free of x, and substitutes x = -r/u into the others. The quotient
/// rings are isomorphic, so elimination ideals are unchanged.
std::vector<LaurentPoly> linear_presolve(std::vector<LaurentPoly> gens, const std::vector<std::size_t>& drop);

/// Intersection of the saturated ideal with the subring of variables not in
/// `drop`. Runs linear_presolve first; generators are the basis elements free
/// of dropped variables.
Elimination eliminate(const IdealGens& g, const std::vector<std::size_t>& drop, const GroebnerLimits& limits = {});

/// Membership of p in the Laurent ideal generated by g. Throws ResourceError
/// when the basis computation does not finish.
bool member(const LaurentPoly& p, const IdealGens& g, const GroebnerLimits& limits = {});

/// Mutual membership of generators. Both ideals must live on structurally
/// equal tables (after rebasing by name).
bool ideals_equal(const IdealGens& a, const IdealGens& b, const GroebnerLimits& limits = {});

}  // namespace kch
