#pragma once

#include <random>

#include "kch/braid.hpp"
#include "kch/ngalg.hpp"
#include "kch/poly.hpp"

namespace kch::test {

inline LaurentPoly random_poly(std::mt19937& rng, const VarTablePtr& t, int terms = 4, int span = 2) {
  std::uniform_int_distribution<int> coeff(-5, 5);
  std::uniform_int_distribution<int> expo(-span, span);
  LaurentPoly p(t);
  for (int k = 0; k < terms; ++k) {
    Exponent e(t->size());
    for (std::size_t v = 0; v < t->size(); ++v) {
      int x = expo(rng);
      e[v] = (*t)[v].invertible ? x : std::abs(x);
    }
    p.add_term(e, coeff(rng));
  }
  return p;
}

inline BraidWord random_word(std::mt19937& rng, int n, int min_len, int max_len) {
  if (n == 1) return BraidWord(1, {});
  std::uniform_int_distribution<int> len(min_len, max_len);
  std::uniform_int_distribution<int> gen(1, n - 1);
  std::bernoulli_distribution neg(0.5);
  std::vector<int> letters(len(rng));
  for (int& l : letters) l = gen(rng) * (neg(rng) ? -1 : 1);
  return BraidWord(n, letters);
}

inline BraidWord random_knot_word(std::mt19937& rng, int n, int min_len, int max_len) {
  for (;;) {
    BraidWord b = random_word(rng, n, min_len, max_len);
    if (closure(b).is_knot()) return b;
  }
}

/// The closure data with every strand assigned to one component, so that A
/// carries a single nu.
inline ClosureInfo single_nu(ClosureInfo cl) {
  for (int& c : cl.component_of) c = 0;
  return cl;
}

}  // namespace kch::test
