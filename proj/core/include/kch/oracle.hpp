#pragma once

// Floating-point cross-check of elimination results. Each trial samples the
// nu's and g at random complex points, solves the relation system for the
// a_ij and L's by damped Gauss-Newton, and evaluates candidate eliminated
// generators at the solution.

#include <cstdint>
#include <string>
#include <vector>

#include "kch/ngalg.hpp"
#include "kch/poly.hpp"

namespace kch {

struct OracleOptions {
  int trials = 100;
  std::uint64_t seed = 1;
  /// Convergence threshold on the largest relative residual of the system.
  double tolerance = 1e-12;
  int restarts = 8;
  int max_iterations = 200;
};

struct OracleTrial {
  bool converged = false;
  /// Largest relative residual of the relation system at the solution.
  double system_residual = 0;
  /// Largest relative residual of the checked generators (0 if not converged).
  double generator_residual = 0;
};

struct OracleReport {
  std::vector<OracleTrial> trials;
  int converged = 0;
  int skipped = 0;
  /// Maximum generator residual over convergent trials.
  double max_residual = 0;

  /// Fraction of all trials that converged with generator residual below `threshold`.
  double fraction_below(double threshold) const;
  /// Fraction of convergent trials with generator residual above `threshold`.
  double fraction_above(double threshold) const;
  /// Per-trial lines followed by a summary line.
  std::string to_text() const;
};

/// |p(x)| / sum_t |c_t x^t|; 0 when every term vanishes.
double relative_residual(const LaurentPoly& p, const std::vector<std::complex<double>>& point);

/// `generators` may live on any table whose variables are a subset of the
/// presentation's (matched by name), e.g. the kept table of an elimination.
OracleReport numeric_oracle(const Presentation& pres, const std::vector<LaurentPoly>& generators,
                            const OracleOptions& opts = {});

/// The negative-control generator: the leading coefficient increased by one.
LaurentPoly corrupt_generator(const LaurentPoly& p);

}  // namespace kch
