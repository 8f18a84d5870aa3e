#include <algorithm>
#include <chrono>
#include <limits>
#include <sstream>

#include "groebner_engine.hpp"

namespace kch::detail {

namespace {

std::string timeout_reason(double seconds) {
  std::ostringstream s;
  s << "timeout after " << seconds << " s";
  return s.str();
}

struct Timeout {};

using Clock = std::chrono::steady_clock;

struct Pair {
  std::size_t i, j;
  Mono lcm;
  std::uint32_t sugar;
};

}  // namespace

GroebnerEngine::GroebnerEngine(const RingSpec& r, const GroebnerLimits& l) : ring(r), limits(l) {
  const VarTable& t = *ring.vars;
  const std::size_t m = t.size();
  position_of_var_.assign(m, -1);
  tag_of_var_.assign(m, -1);
  for (std::size_t v = 0; v < m; ++v) {
    if (ring.is_eliminated(v)) {
      position_of_var_[v] = nvars_++;
      var_at_.push_back(static_cast<int>(v));
      is_tag_.push_back(false);
    }
  }
  for (std::size_t v = 0; v < m; ++v) {
    if (t[v].invertible) {
      tag_of_var_[v] = nvars_++;
      var_at_.push_back(static_cast<int>(v));
      is_tag_.push_back(true);
    }
  }
  block1_ = nvars_;
  for (std::size_t v = 0; v < m; ++v) {
    if (!ring.is_eliminated(v)) {
      position_of_var_[v] = nvars_++;
      var_at_.push_back(static_cast<int>(v));
      is_tag_.push_back(false);
    }
  }
  if (nvars_ > kMaxVars) {
    throw StructuralError("ring has " + std::to_string(nvars_) + " variables including inverse tags; the limit is " +
                          std::to_string(kMaxVars));
  }
}

void GroebnerEngine::finish(Mono& m) const {
  m.deg1 = m.deg2 = 0;
  m.mask = 0;
  for (int i = 0; i < nvars_; ++i) {
    if (i < block1_) m.deg1 += m.e[i];
    else m.deg2 += m.e[i];
    if (m.e[i]) m.mask |= std::uint64_t{1} << i;
  }
}

int GroebnerEngine::cmp(const Mono& a, const Mono& b) const {
  if (a.deg1 != b.deg1) return a.deg1 > b.deg1 ? 1 : -1;
  for (int i = block1_ - 1; i >= 0; --i) {
    if (a.e[i] != b.e[i]) return a.e[i] < b.e[i] ? 1 : -1;
  }
  if (a.deg2 != b.deg2) return a.deg2 > b.deg2 ? 1 : -1;
  for (int i = nvars_ - 1; i >= block1_; --i) {
    if (a.e[i] != b.e[i]) return a.e[i] < b.e[i] ? 1 : -1;
  }
  return 0;
}

Mono GroebnerEngine::mul(const Mono& a, const Mono& b) const {
  Mono r;
  for (int i = 0; i < nvars_; ++i) {
    unsigned s = unsigned{a.e[i]} + b.e[i];
    if (s > std::numeric_limits<std::uint16_t>::max()) throw StructuralError("exponent overflow in Groebner basis");
    r.e[i] = static_cast<std::uint16_t>(s);
  }
  r.deg1 = a.deg1 + b.deg1;
  r.deg2 = a.deg2 + b.deg2;
  r.mask = a.mask | b.mask;
  return r;
}

Mono GroebnerEngine::lcm(const Mono& a, const Mono& b) const {
  Mono r;
  for (int i = 0; i < nvars_; ++i) r.e[i] = std::max(a.e[i], b.e[i]);
  finish(r);
  return r;
}

Mono GroebnerEngine::quotient(const Mono& num, const Mono& den) const {
  Mono r;
  for (int i = 0; i < nvars_; ++i) r.e[i] = static_cast<std::uint16_t>(num.e[i] - den.e[i]);
  finish(r);
  return r;
}

bool GroebnerEngine::divides(const Mono& a, const Mono& b) const {
  if (a.mask & ~b.mask) return false;
  if (a.deg1 > b.deg1 || a.deg2 > b.deg2) return false;
  for (int i = 0; i < nvars_; ++i) {
    if (a.e[i] > b.e[i]) return false;
  }
  return true;
}

void GroebnerEngine::make_primitive(Poly& p) const {
  if (p.terms.empty()) return;
  mpz_class g = 0;
  for (const Term& t : p.terms) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.c.get_mpz_t());
    if (g == 1) break;
  }
  if (p.terms.front().c < 0) g = -g;
  if (g != 1) {
    for (Term& t : p.terms) mpz_divexact(t.c.get_mpz_t(), t.c.get_mpz_t(), g.get_mpz_t());
  }
}

namespace {

// a*mx*X - b*my*Y, skipping the first term of each (they cancel by construction).
template <class Cmp, class Mul>
std::vector<Term> combine(const mpz_class& a, const Mono* mx, const Term* x, const Term* xe, const mpz_class& b,
                          const Mono& my, const Term* y, const Term* ye, Cmp cmp, Mul mul) {
  std::vector<Term> out;
  out.reserve(static_cast<std::size_t>((xe - x) + (ye - y)));
  bool have_y = false;
  Mono ym;
  while (x != xe || y != ye) {
    if (y != ye && !have_y) {
      ym = mul(my, y->m);
      have_y = true;
    }
    int c;
    if (x == xe) c = -1;
    else if (y == ye) c = 1;
    else c = cmp(mx ? mul(*mx, x->m) : x->m, ym);
    if (c > 0) {
      out.push_back({mx ? mul(*mx, x->m) : x->m, a * x->c});
      ++x;
    } else if (c < 0) {
      out.push_back({ym, -(b * y->c)});
      ++y;
      have_y = false;
    } else {
      mpz_class v = a * x->c - b * y->c;
      if (v != 0) out.push_back({ym, std::move(v)});
      ++x;
      ++y;
      have_y = false;
    }
  }
  return out;
}

}  // namespace

Poly GroebnerEngine::normal_form(Poly p, const std::vector<Poly>& polys, const std::vector<std::size_t>& active,
                                 bool full) const {
  auto cmpf = [this](const Mono& a, const Mono& b) { return cmp(a, b); };
  auto mulf = [this](const Mono& a, const Mono& b) { return mul(a, b); };

  std::vector<Term> done;
  std::vector<Term> work = std::move(p.terms);
  std::size_t head = 0;
  std::uint32_t sugar = p.sugar;
  std::size_t steps = 0;

  while (head < work.size()) {
    const Term& lt = work[head];
    const Poly* red = nullptr;
    for (std::size_t idx : active) {
      const Poly& g = polys[idx];
      if (divides(g.lm(), lt.m) && (!red || g.terms.size() < red->terms.size())) red = &g;
    }
    if (!red) {
      if (!full) break;
      done.push_back(std::move(work[head]));
      ++head;
      continue;
    }
    Mono m = quotient(lt.m, red->lm());
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), lt.c.get_mpz_t(), red->terms.front().c.get_mpz_t());
    mpz_class a = red->terms.front().c / g;
    mpz_class b = lt.c / g;
    if (a < 0) {
      a = -a;
      b = -b;
    }
    work = combine(a, nullptr, work.data() + head + 1, work.data() + work.size(), b, m, red->terms.data() + 1,
                   red->terms.data() + red->terms.size(), cmpf, mulf);
    head = 0;
    if (a != 1) {
      for (Term& t : done) t.c *= a;
    }
    sugar = std::max(sugar, red->sugar + m.degree());
    if (++steps % 32 == 0) {
      mpz_class c = 0;
      for (const Term& t : done) mpz_gcd(c.get_mpz_t(), c.get_mpz_t(), t.c.get_mpz_t());
      for (const Term& t : work) mpz_gcd(c.get_mpz_t(), c.get_mpz_t(), t.c.get_mpz_t());
      if (c > 1) {
        for (Term& t : done) mpz_divexact(t.c.get_mpz_t(), t.c.get_mpz_t(), c.get_mpz_t());
        for (Term& t : work) mpz_divexact(t.c.get_mpz_t(), t.c.get_mpz_t(), c.get_mpz_t());
      }
      if (Clock::now() > deadline_) throw Timeout{};
    }
  }
  Poly r;
  r.sugar = sugar;
  r.terms = std::move(done);
  for (std::size_t i = head; i < work.size(); ++i) r.terms.push_back(std::move(work[i]));
  make_primitive(r);
  return r;
}

Poly GroebnerEngine::spoly(const Poly& f, const Poly& g) const {
  Mono l = lcm(f.lm(), g.lm());
  Mono mf = quotient(l, f.lm());
  Mono mg = quotient(l, g.lm());
  mpz_class d;
  mpz_gcd(d.get_mpz_t(), f.terms.front().c.get_mpz_t(), g.terms.front().c.get_mpz_t());
  mpz_class a = g.terms.front().c / d;
  mpz_class b = f.terms.front().c / d;
  Poly s;
  s.terms = combine(
      a, &mf, f.terms.data() + 1, f.terms.data() + f.terms.size(), b, mg, g.terms.data() + 1,
      g.terms.data() + g.terms.size(), [this](const Mono& x, const Mono& y) { return cmp(x, y); },
      [this](const Mono& x, const Mono& y) { return mul(x, y); });
  s.sugar = std::max(f.sugar + mf.degree(), g.sugar + mg.degree());
  make_primitive(s);
  return s;
}

Poly GroebnerEngine::from_laurent(const LaurentPoly& input) const {
  LaurentPoly p = same_table(input.vars(), ring.vars) ? input : input.rebased(ring.vars);
  p = clear_denominators(p);
  mpz_class den = 1;
  for (const auto& [e, c] : p.terms()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
  Poly r;
  for (const auto& [e, c] : p.terms()) {
    Term t;
    for (std::size_t v = 0; v < e.size(); ++v) {
      if (e[v] > std::numeric_limits<std::uint16_t>::max()) throw StructuralError("exponent too large");
      t.m.e[position_of_var_[v]] = static_cast<std::uint16_t>(e[v]);
    }
    finish(t.m);
    mpq_class scaled = c * den;
    t.c = scaled.get_num();
    r.sugar = std::max(r.sugar, t.m.degree());
    r.terms.push_back(std::move(t));
  }
  std::sort(r.terms.begin(), r.terms.end(), [this](const Term& a, const Term& b) { return cmp(a.m, b.m) > 0; });
  return r;
}

LaurentPoly GroebnerEngine::to_laurent(const Poly& p) const {
  LaurentPoly r(ring.vars);
  const std::size_t m = ring.vars->size();
  for (const Term& t : p.terms) {
    Exponent e(m, 0);
    for (int i = 0; i < nvars_; ++i) {
      if (!t.m.e[i]) continue;
      int v = var_at_[i];
      e[v] += is_tag_[i] ? -static_cast<int>(t.m.e[i]) : static_cast<int>(t.m.e[i]);
    }
    r.add_term(e, Rational(t.c));
  }
  return r;
}

std::string GroebnerEngine::poly_to_string(const Poly& p) const {
  std::vector<VarTable::Var> vars;
  std::vector<std::size_t> index(nvars_);
  const VarTable& t = *ring.vars;
  for (std::size_t v = 0; v < t.size(); ++v) {
    index[position_of_var_[v]] = vars.size();
    vars.push_back({t[v].name, false});
  }
  for (std::size_t v = 0; v < t.size(); ++v) {
    if (tag_of_var_[v] >= 0) {
      index[tag_of_var_[v]] = vars.size();
      vars.push_back({"inv_" + t[v].name, false});
    }
  }
  VarTablePtr table = VarTable::make(vars);
  LaurentPoly r(table);
  for (const Term& term : p.terms) {
    Exponent e(vars.size(), 0);
    for (int i = 0; i < nvars_; ++i) e[index[i]] = term.m.e[i];
    r.add_term(e, Rational(term.c));
  }
  return r.to_string();
}

bool GroebnerEngine::has_tag(const Poly& p) const {
  for (const Term& t : p.terms) {
    for (int i = 0; i < block1_; ++i) {
      if (is_tag_[i] && t.m.e[i]) return true;
    }
  }
  return false;
}

bool GroebnerEngine::has_eliminated(const Poly& p) const {
  for (const Term& t : p.terms) {
    if (t.m.deg1) return true;
  }
  return false;
}

Poly GroebnerEngine::reduce(Poly p) const {
  std::vector<std::size_t> all(basis.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  return normal_form(std::move(p), basis, all, true);
}

void GroebnerEngine::run(const std::vector<LaurentPoly>& gens) {
  const auto start = Clock::now();
  if (limits.timeout_s > 0) {
    deadline_ = start + std::chrono::duration_cast<Clock::duration>(std::chrono::duration<double>(limits.timeout_s));
  }
  auto elapsed = [&] { return std::chrono::duration<double>(Clock::now() - start).count(); };

  std::vector<Poly> inputs;
  for (const LaurentPoly& g : gens) {
    if (!g.is_zero()) inputs.push_back(from_laurent(g));
  }
  const VarTable& t = *ring.vars;
  for (std::size_t v = 0; v < t.size(); ++v) {
    if (tag_of_var_[v] < 0) continue;
    Poly tag;
    Term one, vt;
    vt.m.e[position_of_var_[v]] = 1;
    vt.m.e[tag_of_var_[v]] = 1;
    finish(vt.m);
    finish(one.m);
    vt.c = 1;
    one.c = -1;
    tag.terms = {vt, one};
    tag.sugar = 2;
    inputs.push_back(std::move(tag));
  }
  std::sort(inputs.begin(), inputs.end(), [this](const Poly& a, const Poly& b) {
    int c = cmp(a.lm(), b.lm());
    if (c != 0) return c < 0;
    return a.terms.size() < b.terms.size();
  });

  std::vector<Poly> polys;
  std::vector<std::size_t> active;
  std::vector<Pair> pairs;

  auto update = [&](Poly h) {
    const std::size_t hi = polys.size();
    polys.push_back(std::move(h));
    const Mono& lh = polys[hi].lm();

    struct Cand {
      std::size_t g;
      Mono lcm;
      bool coprime;
      bool keep = true;
    };
    std::vector<Cand> c;
    for (std::size_t g : active) {
      const Mono& lg = polys[g].lm();
      c.push_back({g, lcm(lh, lg), (lh.mask & lg.mask) == 0});
    }
    // Chain criterion among the new pairs: later candidates act as "C", kept ones as "D".
    std::vector<bool> decided(c.size(), false);
    for (std::size_t a = 0; a < c.size(); ++a) {
      if (c[a].coprime) {
        decided[a] = true;
        continue;
      }
      bool redundant = false;
      for (std::size_t b = 0; b < c.size() && !redundant; ++b) {
        if (b == a) continue;
        bool in_c = !decided[b];
        bool in_d = decided[b] && c[b].keep;
        if ((in_c || in_d) && divides(c[b].lcm, c[a].lcm)) redundant = true;
      }
      c[a].keep = !redundant;
      decided[a] = true;
    }
    std::vector<Pair> next;
    for (Pair& p : pairs) {
      if (!divides(lh, p.lcm) || lcm(polys[p.i].lm(), lh) == p.lcm || lcm(polys[p.j].lm(), lh) == p.lcm) {
        next.push_back(std::move(p));
      }
    }
    for (const Cand& x : c) {
      if (!x.keep || x.coprime) continue;
      const Poly& g = polys[x.g];
      std::uint32_t sugar = std::max(polys[hi].sugar + quotient(x.lcm, lh).degree(),
                                     g.sugar + quotient(x.lcm, g.lm()).degree());
      next.push_back({x.g, hi, x.lcm, sugar});
    }
    pairs = std::move(next);
    std::vector<std::size_t> kept;
    for (std::size_t g : active) {
      if (!divides(lh, polys[g].lm())) kept.push_back(g);
    }
    kept.push_back(hi);
    active = std::move(kept);
  };

  try {
    for (Poly& f : inputs) {
      Poly r = normal_form(std::move(f), polys, active, true);
      if (!r.zero()) update(std::move(r));
    }
    while (!pairs.empty()) {
      if (stats.spairs >= limits.spair_budget) {
        complete = false;
        reason = "S-pair budget of " + std::to_string(limits.spair_budget) + " exhausted";
        break;
      }
      if (limits.timeout_s > 0 && elapsed() > limits.timeout_s) throw Timeout{};
      std::size_t best = 0;
      for (std::size_t k = 1; k < pairs.size(); ++k) {
        const Pair& a = pairs[k];
        const Pair& b = pairs[best];
        if (a.sugar != b.sugar) {
          if (a.sugar < b.sugar) best = k;
          continue;
        }
        int c = cmp(a.lcm, b.lcm);
        if (c < 0 || (c == 0 && std::make_pair(a.j, a.i) < std::make_pair(b.j, b.i))) best = k;
      }
      Pair p = std::move(pairs[best]);
      pairs.erase(pairs.begin() + static_cast<std::ptrdiff_t>(best));
      ++stats.spairs;
      Poly s = spoly(polys[p.i], polys[p.j]);
      Poly r = normal_form(std::move(s), polys, active, true);
      if (r.zero()) {
        ++stats.zero_reductions;
        continue;
      }
      update(std::move(r));
    }
  } catch (const Timeout&) {
    complete = false;
  }
  if (!complete && reason.empty()) {
    reason = timeout_reason(limits.timeout_s);
  }

  // Interreduce the minimal basis into the reduced one.
  std::vector<Poly> result;
  for (std::size_t g : active) result.push_back(polys[g]);
  std::sort(result.begin(), result.end(), [this](const Poly& a, const Poly& b) { return cmp(a.lm(), b.lm()) < 0; });
  if (complete) {
    try {
      for (std::size_t k = 0; k < result.size(); ++k) {
        std::vector<std::size_t> others;
        for (std::size_t o = 0; o < result.size(); ++o) {
          if (o != k) others.push_back(o);
        }
        result[k] = normal_form(std::move(result[k]), result, others, true);
      }
    } catch (const Timeout&) {
      complete = false;
      reason = timeout_reason(limits.timeout_s);
    }
  }
  basis = std::move(result);
  deadline_ = Clock::time_point::max();
  stats.basis_size = basis.size();
  stats.seconds = elapsed();
}

}  // namespace kch::detail
