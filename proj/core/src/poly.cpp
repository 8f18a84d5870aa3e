#include "kch/poly.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>
#include <set>
#include <sstream>

namespace kch {

VarTable::VarTable(std::vector<Var> vars) : vars_(std::move(vars)) {
  std::set<std::string> seen;
  for (const auto& v : vars_) {
    if (v.name.empty()) throw StructuralError("empty variable name");
    if (!seen.insert(v.name).second) throw StructuralError("duplicate variable name '" + v.name + "'");
  }
}

std::shared_ptr<const VarTable> VarTable::make(std::vector<Var> vars) {
  return std::make_shared<const VarTable>(std::move(vars));
}

std::shared_ptr<const VarTable> VarTable::laurent(const std::vector<std::string>& names) {
  std::vector<Var> vars;
  vars.reserve(names.size());
  for (const auto& n : names) vars.push_back({n, true});
  return make(std::move(vars));
}

std::optional<std::size_t> VarTable::find(std::string_view name) const {
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    if (vars_[i].name == name) return i;
  }
  return std::nullopt;
}

std::size_t VarTable::index(std::string_view name) const {
  auto i = find(name);
  if (!i) throw StructuralError("unknown variable '" + std::string(name) + "'");
  return *i;
}

bool same_table(const VarTablePtr& a, const VarTablePtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return *a == *b;
}

bool GrlexLess::operator()(const Exponent& a, const Exponent& b) const {
  long da = std::accumulate(a.begin(), a.end(), 0L);
  long db = std::accumulate(b.begin(), b.end(), 0L);
  if (da != db) return da < db;
  return a < b;
}

LaurentPoly::LaurentPoly(VarTablePtr vars) : vars_(std::move(vars)) {
  if (!vars_) throw StructuralError("null variable table");
}

LaurentPoly LaurentPoly::constant(VarTablePtr vars, const Rational& c) {
  LaurentPoly p(std::move(vars));
  p.add_term(Exponent(p.vars_->size(), 0), c);
  return p;
}

LaurentPoly LaurentPoly::monomial(VarTablePtr vars, Exponent exp, const Rational& c) {
  LaurentPoly p(std::move(vars));
  p.add_term(exp, c);
  return p;
}

LaurentPoly LaurentPoly::variable(VarTablePtr vars, std::string_view name, int power) {
  std::size_t i = vars->index(name);
  return variable(std::move(vars), i, power);
}

LaurentPoly LaurentPoly::variable(VarTablePtr vars, std::size_t index, int power) {
  Exponent e(vars->size(), 0);
  e.at(index) = power;
  return monomial(std::move(vars), std::move(e));
}

bool LaurentPoly::is_constant() const {
  if (terms_.empty()) return true;
  if (terms_.size() > 1) return false;
  const auto& e = terms_.begin()->first;
  return std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
}

Rational LaurentPoly::constant_term() const { return coefficient(Exponent(vars_->size(), 0)); }

Rational LaurentPoly::coefficient(const Exponent& exp) const {
  auto it = terms_.find(exp);
  return it == terms_.end() ? Rational(0) : it->second;
}

const std::pair<const Exponent, Rational>& LaurentPoly::leading_term() const {
  if (terms_.empty()) throw StructuralError("leading term of zero polynomial");
  return *terms_.rbegin();
}

Exponent LaurentPoly::min_exponents() const {
  Exponent m(vars_->size(), 0);
  bool first = true;
  for (const auto& [e, c] : terms_) {
    for (std::size_t i = 0; i < m.size(); ++i) m[i] = first ? e[i] : std::min(m[i], e[i]);
    first = false;
  }
  return m;
}

Exponent LaurentPoly::max_exponents() const {
  Exponent m(vars_->size(), 0);
  bool first = true;
  for (const auto& [e, c] : terms_) {
    for (std::size_t i = 0; i < m.size(); ++i) m[i] = first ? e[i] : std::max(m[i], e[i]);
    first = false;
  }
  return m;
}

bool LaurentPoly::involves(std::size_t v) const {
  return std::any_of(terms_.begin(), terms_.end(), [v](const auto& t) { return t.first[v] != 0; });
}

int LaurentPoly::total_degree() const {
  if (terms_.empty()) return 0;
  const auto& e = terms_.rbegin()->first;
  return std::accumulate(e.begin(), e.end(), 0);
}

void LaurentPoly::check_exponent(const Exponent& e) const {
  if (e.size() != vars_->size()) throw StructuralError("exponent length does not match variable table");
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] < 0 && !(*vars_)[i].invertible) {
      throw StructuralError("negative exponent on non-invertible variable '" + (*vars_)[i].name + "'");
    }
  }
}

void LaurentPoly::add_term(const Exponent& exp, const Rational& c) {
  if (c == 0) return;
  check_exponent(exp);
  auto [it, inserted] = terms_.try_emplace(exp, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void LaurentPoly::check_same(const LaurentPoly& o) const {
  if (!same_table(vars_, o.vars_)) throw StructuralError("polynomials live on different variable tables");
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  check_same(o);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  check_same(o);
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  a.check_same(b);
  LaurentPoly r(a.vars_);
  if (a.is_zero() || b.is_zero()) return r;
  Exponent e(a.vars_->size());
  Rational c;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      c = ca * cb;
      auto [it, inserted] = r.terms_.try_emplace(e, c);
      if (!inserted) {
        it->second += c;
        if (it->second == 0) r.terms_.erase(it);
      }
    }
  }
  return r;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) { return *this = *this * o; }

LaurentPoly& LaurentPoly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, x] : terms_) x *= c;
  return *this;
}

LaurentPoly LaurentPoly::pow(int e) const {
  if (e < 0) {
    if (!is_monomial()) throw DivisionError("negative power of a non-monomial Laurent polynomial");
    const auto& [exp, c] = *terms_.begin();
    Exponent ne(exp.size());
    for (std::size_t i = 0; i < exp.size(); ++i) ne[i] = exp[i] * e;
    Rational nc = 1;
    for (int k = 0; k < -e; ++k) nc /= c;
    return monomial(vars_, std::move(ne), nc);
  }
  LaurentPoly result = constant(vars_, 1);
  LaurentPoly base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return result;
}

LaurentPoly LaurentPoly::shifted(const Exponent& shift) const {
  LaurentPoly r(vars_);
  Exponent e(shift.size());
  for (const auto& [ex, c] : terms_) {
    for (std::size_t i = 0; i < e.size(); ++i) e[i] = ex[i] + shift[i];
    r.add_term(e, c);
  }
  return r;
}

std::optional<LaurentPoly> LaurentPoly::exact_divide(const LaurentPoly& d) const {
  check_same(d);
  if (d.is_zero()) throw DivisionError("division by zero polynomial");
  if (is_zero()) return LaurentPoly(vars_);
  // Shift both to genuine polynomials with no monomial factor; if d divides
  // p in the Laurent ring the shifted d divides the shifted p as polynomials.
  Exponent mp = min_exponents();
  Exponent md = d.min_exponents();
  Exponent neg_mp(mp.size()), neg_md(md.size());
  for (std::size_t i = 0; i < mp.size(); ++i) {
    neg_mp[i] = -mp[i];
    neg_md[i] = -md[i];
  }
  LaurentPoly rem = shifted(neg_mp);
  LaurentPoly div = d.shifted(neg_md);
  const auto& [lead_e, lead_c] = div.leading_term();
  LaurentPoly quot(vars_);
  Exponent qe(mp.size());
  while (!rem.is_zero()) {
    const auto& [re, rc] = rem.leading_term();
    for (std::size_t i = 0; i < qe.size(); ++i) {
      qe[i] = re[i] - lead_e[i];
      if (qe[i] < 0) return std::nullopt;
    }
    Rational qc = rc / lead_c;
    LaurentPoly step = monomial(vars_, qe, qc);
    quot += step;
    rem -= step * div;
  }
  Exponent back(mp.size());
  for (std::size_t i = 0; i < back.size(); ++i) back[i] = mp[i] - md[i];
  return quot.shifted(back);
}

LaurentPoly LaurentPoly::derivative(std::size_t v) const {
  LaurentPoly r(vars_);
  for (const auto& [e, c] : terms_) {
    if (e[v] == 0) continue;
    Exponent ne = e;
    ne[v] -= 1;
    r.add_term(ne, c * e[v]);
  }
  return r;
}

LaurentPoly LaurentPoly::specialize(std::size_t v, const Rational& value) const {
  LaurentPoly r(vars_);
  for (const auto& [e, c] : terms_) {
    Exponent ne = e;
    int k = ne[v];
    ne[v] = 0;
    if (k < 0 && value == 0) throw DivisionError("negative power of '" + (*vars_)[v].name + "' evaluated at 0");
    Rational f = 1;
    Rational base = k < 0 ? Rational(1 / value) : value;
    for (int i = 0; i < std::abs(k); ++i) f *= base;
    r.add_term(ne, c * f);
  }
  return r;
}

LaurentPoly LaurentPoly::substitute(const std::vector<std::optional<LaurentPoly>>& images) const {
  if (images.size() != vars_->size()) throw StructuralError("substitution table has wrong length");
  VarTablePtr target;
  for (const auto& img : images) {
    if (!img) continue;
    if (!target) target = img->vars();
    else if (!same_table(target, img->vars())) throw StructuralError("substitution images on different tables");
  }
  if (!target) target = vars_;
  bool same = same_table(target, vars_);
  // Unmapped variables must exist in the target table.
  std::vector<std::size_t> passthrough(vars_->size(), 0);
  for (std::size_t i = 0; i < vars_->size(); ++i) {
    if (!images[i]) passthrough[i] = same ? i : target->index((*vars_)[i].name);
  }
  // Cache powers of each image.
  std::vector<std::map<int, LaurentPoly>> cache(vars_->size());
  auto power_of = [&](std::size_t v, int k) -> const LaurentPoly& {
    auto it = cache[v].find(k);
    if (it != cache[v].end()) return it->second;
    LaurentPoly val = images[v]->pow(k);
    return cache[v].emplace(k, std::move(val)).first->second;
  };
  LaurentPoly result(target);
  for (const auto& [e, c] : terms_) {
    Exponent mono(target->size(), 0);
    LaurentPoly term = LaurentPoly::constant(target, c);
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (images[i]) term *= power_of(i, e[i]);
      else mono[passthrough[i]] += e[i];
    }
    result += term.shifted(mono);
  }
  return result;
}

LaurentPoly LaurentPoly::rebased(const VarTablePtr& target) const {
  if (same_table(vars_, target)) {
    LaurentPoly r = *this;
    r.vars_ = target;
    return r;
  }
  // Only variables that occur need a counterpart in the target.
  std::vector<std::optional<std::size_t>> map(vars_->size());
  for (std::size_t i = 0; i < vars_->size(); ++i) {
    if (involves(i)) map[i] = target->index((*vars_)[i].name);
  }
  LaurentPoly r(target);
  for (const auto& [e, c] : terms_) {
    Exponent ne(target->size(), 0);
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (map[i]) ne[*map[i]] = e[i];
    }
    r.add_term(ne, c);
  }
  return r;
}

std::complex<double> LaurentPoly::evaluate(std::span<const std::complex<double>> point) const {
  if (point.size() != vars_->size()) throw StructuralError("evaluation point has wrong dimension");
  std::complex<double> sum = 0;
  for (const auto& [e, c] : terms_) {
    std::complex<double> t = c.get_d();
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] != 0) t *= std::pow(point[i], e[i]);
    }
    sum += t;
  }
  return sum;
}

namespace {

std::string monomial_string(const VarTable& vars, const Exponent& e) {
  std::string s;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!s.empty()) s += '*';
    s += vars[i].name;
    if (e[i] != 1) s += '^' + std::to_string(e[i]);
  }
  return s;
}

}  // namespace

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    Rational mag = abs(c);
    bool negative = c < 0;
    if (first) out += negative ? "-" : "";
    else out += negative ? " - " : " + ";
    first = false;
    std::string mono = monomial_string(*vars_, e);
    if (mono.empty()) out += mag.get_str();
    else if (mag == 1) out += mono;
    else out += mag.get_str() + "*" + mono;
  }
  return out;
}

bool LaurentPoly::operator==(const LaurentPoly& o) const {
  return same_table(vars_, o.vars_) && terms_ == o.terms_;
}

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p) { return os << p.to_string(); }

LaurentPoly clear_denominators(const LaurentPoly& p) {
  Exponent m = p.min_exponents();
  const VarTable& t = *p.vars();
  for (std::size_t v = 0; v < m.size(); ++v) m[v] = t[v].invertible ? -m[v] : 0;
  return p.shifted(m);
}

LaurentPoly primitive_part(const LaurentPoly& p) {
  if (p.is_zero()) return p;
  Integer num_gcd = 0, den_lcm = 1;
  for (const auto& [e, c] : p.terms()) {
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
  }
  Rational scale(den_lcm, num_gcd);
  scale.canonicalize();
  if (p.leading_coefficient() < 0) scale = -scale;
  return p * scale;
}

}  // namespace kch
