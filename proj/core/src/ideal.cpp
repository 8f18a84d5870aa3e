#include "kch/ideal.hpp"

#include <algorithm>
#include <optional>

#include "groebner_engine.hpp"

namespace kch {

RingSpec::RingSpec(VarTablePtr v, std::vector<std::size_t> elim) : vars(std::move(v)), eliminate(std::move(elim)) {
  if (!vars) throw StructuralError("ring spec needs a variable table");
  std::sort(eliminate.begin(), eliminate.end());
  eliminate.erase(std::unique(eliminate.begin(), eliminate.end()), eliminate.end());
  for (std::size_t e : eliminate) {
    if (e >= vars->size()) throw StructuralError("eliminated variable index out of range");
  }
}

bool RingSpec::is_eliminated(std::size_t v) const {
  return std::binary_search(eliminate.begin(), eliminate.end(), v);
}

VarTablePtr RingSpec::kept_table() const {
  std::vector<VarTable::Var> kept;
  for (std::size_t v = 0; v < vars->size(); ++v) {
    if (!is_eliminated(v)) kept.push_back((*vars)[v]);
  }
  return VarTable::make(std::move(kept));
}

bool GroebnerBasis::complete() const { return engine_->complete; }
const std::string& GroebnerBasis::incomplete_reason() const { return engine_->reason; }
const RingSpec& GroebnerBasis::ring() const { return engine_->ring; }
const GroebnerStats& GroebnerBasis::stats() const { return engine_->stats; }
std::size_t GroebnerBasis::size() const { return engine_->basis.size(); }

std::vector<LaurentPoly> GroebnerBasis::polynomials() const {
  std::vector<LaurentPoly> out;
  for (const auto& p : engine_->basis) {
    if (!engine_->has_tag(p)) out.push_back(engine_->to_laurent(p));
  }
  return out;
}

std::vector<LaurentPoly> GroebnerBasis::kept_polynomials() const {
  std::vector<LaurentPoly> out;
  for (const auto& p : engine_->basis) {
    if (!engine_->has_eliminated(p)) out.push_back(engine_->to_laurent(p));
  }
  return out;
}

LaurentPoly GroebnerBasis::normal_form(const LaurentPoly& p) const {
  return engine_->to_laurent(engine_->reduce(engine_->from_laurent(p)));
}

bool GroebnerBasis::contains(const LaurentPoly& p) const {
  if (!complete()) throw ResourceError("Groebner basis incomplete: " + incomplete_reason());
  if (p.is_zero()) return true;
  return engine_->reduce(engine_->from_laurent(p)).zero();
}

std::string GroebnerBasis::to_string() const {
  std::string s;
  for (const auto& p : engine_->basis) {
    s += engine_->poly_to_string(p);
    s += '\n';
  }
  return s;
}

GroebnerBasis groebner(const IdealGens& g, const GroebnerLimits& limits) {
  auto engine = std::make_shared<detail::GroebnerEngine>(g.ring, limits);
  engine->run(g.gens);
  GroebnerBasis b;
  b.engine_ = std::move(engine);
  return b;
}

namespace {

// If p = u*x + r with u a unit monomial and r free of x, return -r/u.
std::optional<LaurentPoly> linear_solution(const LaurentPoly& p, std::size_t x) {
  const VarTable& t = *p.vars();
  LaurentPoly u(p.vars()), r(p.vars());
  for (const auto& [e, c] : p.terms()) {
    if (e[x] == 0) {
      r.add_term(e, c);
    } else if (e[x] == 1) {
      Exponent f = e;
      f[x] = 0;
      for (std::size_t v = 0; v < f.size(); ++v) {
        if (f[v] != 0 && !t[v].invertible) return std::nullopt;
      }
      u.add_term(f, c);
    } else {
      return std::nullopt;
    }
  }
  if (!u.is_monomial()) return std::nullopt;
  return -(r * u.pow(-1));
}

}  // namespace

std::vector<LaurentPoly> linear_presolve(std::vector<LaurentPoly> gens, const std::vector<std::size_t>& drop) {
  for (;;) {
    std::optional<std::size_t> best_gen, best_var;
    std::optional<LaurentPoly> best_image;
    for (std::size_t i = 0; i < gens.size(); ++i) {
      for (std::size_t x : drop) {
        if (!gens[i].involves(x)) continue;
        auto img = linear_solution(gens[i], x);
        if (img && (!best_image || img->size() < best_image->size())) {
          best_gen = i;
          best_var = x;
          best_image = std::move(img);
        }
      }
    }
    if (!best_image) return gens;
    std::vector<std::optional<LaurentPoly>> images(gens.front().vars()->size());
    images[*best_var] = *best_image;
    std::vector<LaurentPoly> next;
    for (std::size_t i = 0; i < gens.size(); ++i) {
      if (i == *best_gen) continue;
      LaurentPoly q = gens[i].substitute(images);
      if (!q.is_zero()) next.push_back(primitive_part(clear_denominators(q)));
    }
    gens = std::move(next);
    if (gens.empty()) return gens;
  }
}

Elimination eliminate(const IdealGens& g, const std::vector<std::size_t>& drop, const GroebnerLimits& limits) {
  IdealGens spec{RingSpec(g.ring.vars, drop), linear_presolve(g.gens, drop)};
  GroebnerBasis b = groebner(spec, limits);
  Elimination out;
  out.complete = b.complete();
  out.incomplete_reason = b.incomplete_reason();
  out.stats = b.stats();
  VarTablePtr kept = spec.ring.kept_table();
  out.ideal.ring = RingSpec(kept);
  if (out.complete) {
    for (const LaurentPoly& p : b.kept_polynomials()) out.ideal.gens.push_back(p.rebased(kept));
  }
  return out;
}

bool member(const LaurentPoly& p, const IdealGens& g, const GroebnerLimits& limits) {
  return groebner(g, limits).contains(p);
}

bool ideals_equal(const IdealGens& a, const IdealGens& b, const GroebnerLimits& limits) {
  if (!same_table(a.ring.vars, b.ring.vars)) {
    // Allow tables that agree up to variable order.
    for (const auto& v : b.ring.vars->vars()) {
      auto i = a.ring.vars->find(v.name);
      if (!i || (*a.ring.vars)[*i].invertible != v.invertible) {
        throw StructuralError("ideals live on different variable tables (variable '" + v.name + "')");
      }
    }
    if (a.ring.vars->size() != b.ring.vars->size()) throw StructuralError("ideals live on different variable tables");
  }
  IdealGens bb{RingSpec(a.ring.vars), {}};
  for (const auto& p : b.gens) bb.gens.push_back(p.rebased(a.ring.vars));
  IdealGens aa{RingSpec(a.ring.vars), a.gens};
  GroebnerBasis ga = groebner(aa, limits);
  for (const auto& p : bb.gens) {
    if (!ga.contains(p)) return false;
  }
  GroebnerBasis gb = groebner(bb, limits);
  for (const auto& p : aa.gens) {
    if (!gb.contains(p)) return false;
  }
  return true;
}

}  // namespace kch
