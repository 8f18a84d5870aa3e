#pragma once

#include "kch/poly.hpp"
#include "kch/ratfunc.hpp"

namespace kch {

/// The table {q, g}, both invertible. Shared by the HOMFLYPT and quantum
/// torus coefficient rings.
const VarTablePtr& qg_table();

/// Symmetric Gaussian binomial [n choose k] in q, with
/// [m] = (q^m - q^-m)/(q - q^-1). Zero when k < 0 or k > n.
/// `vars` must contain an invertible variable named "q".
LaurentPoly qbinom_int(const VarTablePtr& vars, int n, int k);
LaurentPoly qbinom_int(int n, int k);

/// Formal binomial [N - a choose b] as a rational function of q and g = q^N:
///   prod_{i<b} (g q^{-a-i} - g^{-1} q^{a+i}) / prod_{i=1..b} (q^i - q^{-i}).
/// `vars` must contain invertible variables "q" and "g".
RatFunc qbinom_formal(const VarTablePtr& vars, int a, int b);
RatFunc qbinom_formal(int a, int b);

/// q^e on the given table.
LaurentPoly q_power(const VarTablePtr& vars, int e);

}  // namespace kch
