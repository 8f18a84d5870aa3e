#include "kch/ratfunc.hpp"

#include <ostream>

namespace kch {

RatFunc::RatFunc(VarTablePtr vars) : num_(vars), den_(LaurentPoly::constant(vars, 1)) {}

RatFunc::RatFunc(LaurentPoly num) : num_(std::move(num)), den_(LaurentPoly::constant(num_.vars(), 1)) {}

RatFunc::RatFunc(LaurentPoly num, LaurentPoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (!same_table(num_.vars(), den_.vars())) throw StructuralError("numerator and denominator on different tables");
  normalize();
}

RatFunc RatFunc::constant(VarTablePtr vars, const Rational& c) { return RatFunc(LaurentPoly::constant(std::move(vars), c)); }

void RatFunc::normalize() {
  if (den_.is_zero()) throw DivisionError("rational function with zero denominator");
  if (num_.is_zero()) {
    den_ = LaurentPoly::constant(num_.vars(), 1);
    return;
  }
  if (den_.is_monomial()) {
    num_ *= den_.pow(-1);
    den_ = LaurentPoly::constant(num_.vars(), 1);
    return;
  }
  Exponent shift = den_.min_exponents();
  for (auto& x : shift) x = -x;
  den_ = den_.shifted(shift);
  num_ = num_.shifted(shift);
  Rational lc = den_.leading_coefficient();
  if (lc != 1) {
    Rational inv = 1 / lc;
    den_ *= inv;
    num_ *= inv;
  }
  if (num_ == den_) {
    num_ = LaurentPoly::constant(num_.vars(), 1);
    den_ = num_;
  }
}

bool RatFunc::is_polynomial() const { return den_.is_constant(); }

std::optional<LaurentPoly> RatFunc::as_polynomial() const {
  if (is_polynomial()) return num_ * (1 / den_.constant_term());
  return num_.exact_divide(den_);
}

RatFunc RatFunc::operator-() const {
  RatFunc r = *this;
  r.num_ = -r.num_;
  return r;
}

RatFunc& RatFunc::operator+=(const RatFunc& o) {
  if (den_ == o.den_) {
    num_ += o.num_;
  } else {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ = den_ * o.den_;
  }
  normalize();
  return *this;
}

RatFunc& RatFunc::operator-=(const RatFunc& o) { return *this += -o; }

RatFunc& RatFunc::operator*=(const RatFunc& o) {
  num_ *= o.num_;
  if (!o.is_polynomial()) den_ *= o.den_;
  normalize();
  return *this;
}

RatFunc& RatFunc::operator/=(const RatFunc& o) {
  if (o.is_zero()) throw DivisionError("division by zero rational function");
  num_ *= o.den_;
  den_ *= o.num_;
  normalize();
  return *this;
}

RatFunc RatFunc::pow(int e) const {
  if (e < 0) {
    if (is_zero()) throw DivisionError("negative power of zero");
    return RatFunc(den_.pow(-e), num_.pow(-e));
  }
  return RatFunc(num_.pow(e), den_.pow(e));
}

bool RatFunc::operator==(const RatFunc& o) const {
  if (!same_table(vars(), o.vars())) return false;
  if (den_ == o.den_) return num_ == o.num_;
  return num_ * o.den_ == o.num_ * den_;
}

RatFunc RatFunc::cancel_root(std::size_t v, const Rational& value) const {
  LaurentPoly factor = LaurentPoly::variable(vars(), v) - LaurentPoly::constant(vars(), value);
  LaurentPoly n = num_, d = den_;
  while (!d.is_zero() && d.specialize(v, value).is_zero() && n.specialize(v, value).is_zero()) {
    auto nq = n.exact_divide(factor);
    auto dq = d.exact_divide(factor);
    if (!nq || !dq) break;
    n = std::move(*nq);
    d = std::move(*dq);
  }
  return RatFunc(std::move(n), std::move(d));
}

RatFunc RatFunc::reduced() const {
  if (is_polynomial()) return *this;
  if (auto q = num_.exact_divide(den_)) return RatFunc(std::move(*q));
  return *this;
}

RatFunc RatFunc::specialize(std::size_t v, const Rational& value) const {
  RatFunc r = cancel_root(v, value);
  LaurentPoly d = r.den_.specialize(v, value);
  if (d.is_zero()) {
    throw PoleError("pole at " + (*vars())[v].name + " = " + value.get_str() + " in " + to_string());
  }
  return RatFunc(r.num_.specialize(v, value), std::move(d));
}

RatFunc RatFunc::substitute(const std::map<std::size_t, RatFunc>& images) const {
  return kch::substitute(num_, images) / kch::substitute(den_, images);
}

RatFunc RatFunc::rebased(const VarTablePtr& target) const { return RatFunc(num_.rebased(target), den_.rebased(target)); }

std::complex<double> RatFunc::evaluate(std::span<const std::complex<double>> point) const {
  return num_.evaluate(point) / den_.evaluate(point);
}

std::string RatFunc::to_string() const {
  if (is_polynomial()) return (num_ * (1 / den_.constant_term())).to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

std::ostream& operator<<(std::ostream& os, const RatFunc& f) { return os << f.to_string(); }

RatFunc substitute(const LaurentPoly& p, const std::map<std::size_t, RatFunc>& images) {
  const VarTable& src = *p.vars();
  VarTablePtr target;
  for (const auto& [v, img] : images) {
    if (v >= src.size()) throw StructuralError("substitution index out of range");
    if (!target) target = img.vars();
    else if (!same_table(target, img.vars())) throw StructuralError("substitution images on different tables");
  }
  if (!target) return RatFunc(p);

  std::vector<const RatFunc*> image_of(src.size(), nullptr);
  for (const auto& [v, img] : images) image_of[v] = &img;
  std::vector<std::size_t> passthrough(src.size(), 0);
  bool same = same_table(target, p.vars());
  for (std::size_t i = 0; i < src.size(); ++i) {
    if (!image_of[i]) passthrough[i] = same ? i : target->index(src[i].name);
  }

  // Multiply through by prod_v den_v^{hi_v} num_v^{-lo_v} so that every term
  // becomes polynomial: num_v^{e - lo_v} den_v^{hi_v - e}.
  Exponent lo = p.min_exponents(), hi = p.max_exponents();
  for (std::size_t i = 0; i < src.size(); ++i) {
    lo[i] = std::min(lo[i], 0);
    hi[i] = std::max(hi[i], 0);
  }
  std::vector<std::map<int, LaurentPoly>> num_pow(src.size()), den_pow(src.size());
  auto cached = [](std::map<int, LaurentPoly>& cache, const LaurentPoly& base, int k) -> const LaurentPoly& {
    auto it = cache.find(k);
    if (it != cache.end()) return it->second;
    return cache.emplace(k, base.pow(k)).first->second;
  };

  LaurentPoly numerator(target);
  for (const auto& [e, c] : p.terms()) {
    Exponent mono(target->size(), 0);
    LaurentPoly term = LaurentPoly::constant(target, c);
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (image_of[i]) {
        term *= cached(num_pow[i], image_of[i]->num(), e[i] - lo[i]);
        term *= cached(den_pow[i], image_of[i]->den(), hi[i] - e[i]);
      } else {
        mono[passthrough[i]] += e[i];
      }
    }
    numerator += term.shifted(mono);
  }
  LaurentPoly denominator = LaurentPoly::constant(target, 1);
  for (std::size_t i = 0; i < src.size(); ++i) {
    if (!image_of[i]) continue;
    denominator *= cached(den_pow[i], image_of[i]->den(), hi[i]);
    denominator *= cached(num_pow[i], image_of[i]->num(), -lo[i]);
  }
  if (denominator.is_zero()) throw DivisionError("substitution sends a denominator to zero");
  return RatFunc(std::move(numerator), std::move(denominator));
}

}  // namespace kch
