#pragma once

// Buchberger engine on a plain polynomial ring with integer coefficients.
// Internal positions [0, block1) form the eliminated block.

#include <array>
#include <chrono>
#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "kch/ideal.hpp"

namespace kch::detail {

constexpr int kMaxVars = 48;

struct Mono {
  std::array<std::uint16_t, kMaxVars> e{};
  std::uint32_t deg1 = 0;
  std::uint32_t deg2 = 0;
  std::uint64_t mask = 0;

  std::uint32_t degree() const { return deg1 + deg2; }
  bool operator==(const Mono& o) const { return mask == o.mask && e == o.e; }
};

struct Term {
  Mono m;
  mpz_class c;
};

struct Poly {
  std::vector<Term> terms;  // strictly descending
  std::uint32_t sugar = 0;

  bool zero() const { return terms.empty(); }
  const Mono& lm() const { return terms.front().m; }
};

class GroebnerEngine {
 public:
  GroebnerEngine(const RingSpec& ring, const GroebnerLimits& limits);

  void run(const std::vector<LaurentPoly>& gens);

  Poly from_laurent(const LaurentPoly& p) const;
  LaurentPoly to_laurent(const Poly& p) const;
  std::string poly_to_string(const Poly& p) const;
  /// Full reduction against the final basis.
  Poly reduce(Poly p) const;

  bool has_tag(const Poly& p) const;
  bool has_eliminated(const Poly& p) const;

  RingSpec ring;
  GroebnerLimits limits;
  bool complete = true;
  std::string reason;
  GroebnerStats stats;
  std::vector<Poly> basis;

 private:
  int cmp(const Mono& a, const Mono& b) const;
  void finish(Mono& m) const;
  Mono mul(const Mono& a, const Mono& b) const;
  Mono lcm(const Mono& a, const Mono& b) const;
  Mono quotient(const Mono& num, const Mono& den) const;
  bool divides(const Mono& a, const Mono& b) const;

  Poly normal_form(Poly p, const std::vector<Poly>& polys, const std::vector<std::size_t>& active, bool full) const;
  Poly spoly(const Poly& f, const Poly& g) const;
  void make_primitive(Poly& p) const;

  std::chrono::steady_clock::time_point deadline_ = std::chrono::steady_clock::time_point::max();
  int nvars_ = 0;
  int block1_ = 0;
  std::vector<int> position_of_var_;  // original variable -> internal position
  std::vector<int> tag_of_var_;       // original variable -> tag position or -1
  std::vector<int> var_at_;           // internal position -> original variable
  std::vector<bool> is_tag_;          // internal position -> tag flag
};

}  // namespace kch::detail
