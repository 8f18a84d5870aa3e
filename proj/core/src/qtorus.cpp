#include "kch/qtorus.hpp"

#include <mutex>

#include "kch/qbinom.hpp"

namespace kch {

namespace {

std::string monomial_string(const TorusElem::Key& key) {
  const int r = static_cast<int>(key.first.size());
  std::string s;
  auto emit = [&](const std::string& base, int i, int e) {
    if (e == 0) return;
    if (!s.empty()) s += '*';
    s += base;
    if (r > 1) s += std::to_string(i + 1);
    if (e != 1) s += "^" + std::to_string(e);
  };
  for (int i = 0; i < r; ++i) emit("nu", i, key.first[i]);
  for (int i = 0; i < r; ++i) emit("L", i, key.second[i]);
  return s;
}

RatFunc one() { return RatFunc::constant(qg_table(), 1); }

}  // namespace

TorusElem::TorusElem(int rank, int torus_sign) : rank_(rank), sign_(torus_sign) {
  if (rank < 1) throw StructuralError("quantum torus rank must be positive");
  if (torus_sign != 1 && torus_sign != -1) throw StructuralError("torus sign must be +1 or -1");
}

TorusElem TorusElem::scalar(int rank, const RatFunc& c, int torus_sign) {
  TorusElem t(rank, torus_sign);
  t.add_term(std::vector<int>(rank, 0), std::vector<int>(rank, 0), c.rebased(qg_table()));
  return t;
}

TorusElem TorusElem::nu(int rank, int i, int power, int torus_sign) {
  TorusElem t(rank, torus_sign);
  std::vector<int> a(rank, 0);
  a.at(i) = power;
  t.add_term(a, std::vector<int>(rank, 0), one());
  return t;
}

TorusElem TorusElem::lambda(int rank, int i, int power, int torus_sign) {
  TorusElem t(rank, torus_sign);
  std::vector<int> b(rank, 0);
  b.at(i) = power;
  t.add_term(std::vector<int>(rank, 0), b, one());
  return t;
}

void TorusElem::add_term(const std::vector<int>& nu_exp, const std::vector<int>& l_exp, const RatFunc& c) {
  if (static_cast<int>(nu_exp.size()) != rank_ || static_cast<int>(l_exp.size()) != rank_) {
    throw StructuralError("torus exponent length does not match rank");
  }
  if (c.is_zero()) return;
  Key key{nu_exp, l_exp};
  auto it = terms_.find(key);
  if (it == terms_.end()) {
    terms_.emplace(std::move(key), c);
  } else {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void TorusElem::check(const TorusElem& o) const {
  if (rank_ != o.rank_) throw StructuralError("quantum torus elements of different rank");
  if (sign_ != o.sign_) throw StructuralError("quantum torus elements with different commutation sign");
}

TorusElem TorusElem::operator-() const {
  TorusElem r = *this;
  for (auto& [k, c] : r.terms_) c = -c;
  return r;
}

TorusElem& TorusElem::operator+=(const TorusElem& o) {
  check(o);
  for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, c);
  return *this;
}

TorusElem& TorusElem::operator-=(const TorusElem& o) {
  check(o);
  for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, -c);
  return *this;
}

TorusElem operator*(const TorusElem& a, const TorusElem& b) {
  a.check(b);
  TorusElem r(a.rank_, a.sign_);
  const VarTablePtr& t = qg_table();
  for (const auto& [ka, ca] : a.terms_) {
    for (const auto& [kb, cb] : b.terms_) {
      int twist = 0;
      std::vector<int> nu(a.rank_), l(a.rank_);
      for (int i = 0; i < a.rank_; ++i) {
        twist += ka.second[i] * kb.first[i];
        nu[i] = ka.first[i] + kb.first[i];
        l[i] = ka.second[i] + kb.second[i];
      }
      r.add_term(nu, l, ca * cb * RatFunc(q_power(t, a.sign_ * twist)));
    }
  }
  return r;
}

TorusElem operator*(const RatFunc& c, const TorusElem& a) { return TorusElem::scalar(a.rank_, c, a.sign_) * a; }

TorusElem torus_mul(const TorusElem& a, const TorusElem& b) { return a * b; }

TorusElem TorusElem::pow(int e) const {
  if (e < 0) {
    if (terms_.size() != 1) throw DivisionError("negative power of a quantum torus element with several terms");
    const auto& [k, c] = *terms_.begin();
    std::vector<int> na(rank_), nb(rank_);
    for (int i = 0; i < rank_; ++i) {
      na[i] = -k.first[i];
      nb[i] = -k.second[i];
    }
    // (c nu^a L^b)^-1 = c^-1 L^-b nu^-a
    TorusElem lpart(rank_, sign_), nupart(rank_, sign_);
    lpart.add_term(std::vector<int>(rank_, 0), nb, one() / c);
    nupart.add_term(na, std::vector<int>(rank_, 0), one());
    return (lpart * nupart).pow(-e);
  }
  TorusElem r = scalar(rank_, one(), sign_);
  for (int i = 0; i < e; ++i) r = r * *this;
  return r;
}

bool TorusElem::operator==(const TorusElem& o) const {
  return rank_ == o.rank_ && sign_ == o.sign_ && terms_ == o.terms_;
}

std::string TorusElem::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& [k, c] : terms_) {
    std::string mono = monomial_string(k);
    std::string coeff;
    bool negative = false;
    if (auto p = c.as_polynomial(); p && p->is_constant()) {
      Rational v = p->constant_term();
      negative = v < 0;
      if (negative) v = -v;
      if (v != 1 || mono.empty()) coeff = v.get_str();
    } else if (auto p2 = c.as_polynomial(); p2 && p2->is_monomial() && p2->leading_coefficient() < 0) {
      negative = true;
      coeff = "(" + (-*p2).to_string() + ")";
    } else {
      coeff = "(" + c.to_string() + ")";
    }
    if (s.empty()) s += negative ? "-" : "";
    else s += negative ? " - " : " + ";
    s += coeff;
    if (!coeff.empty() && !mono.empty()) s += '*';
    s += mono;
  }
  return s;
}

struct ColoredSeq::Memo {
  std::mutex mutex;
  std::map<std::vector<int>, RatFunc> values;
};

ColoredSeq::ColoredSeq(int rank, Fn fn) : rank_(rank), fn_(std::move(fn)), memo_(std::make_shared<Memo>()) {}

RatFunc ColoredSeq::operator()(const std::vector<int>& k) const {
  if (static_cast<int>(k.size()) != rank_) throw StructuralError("sequence index has wrong dimension");
  {
    std::lock_guard<std::mutex> lock(memo_->mutex);
    auto it = memo_->values.find(k);
    if (it != memo_->values.end()) return it->second;
  }
  RatFunc v = fn_(k);
  std::lock_guard<std::mutex> lock(memo_->mutex);
  return memo_->values.try_emplace(k, std::move(v)).first->second;
}

ColoredSeq finite_sequence(int rank, std::map<std::vector<int>, RatFunc> values) {
  auto table = std::make_shared<const std::map<std::vector<int>, RatFunc>>(std::move(values));
  return ColoredSeq(rank, [table](const std::vector<int>& k) {
    auto it = table->find(k);
    return it == table->end() ? RatFunc(qg_table()) : it->second;
  });
}

ColoredSeq constant_sequence(int rank, const RatFunc& c) {
  return ColoredSeq(rank, [c](const std::vector<int>&) { return c; });
}

ColoredSeq act(const TorusElem& a, const ColoredSeq& f) {
  if (a.rank() != f.rank()) throw StructuralError("operator and sequence have different rank");
  return ColoredSeq(a.rank(), [a, f](const std::vector<int>& k) {
    RatFunc sum(qg_table());
    for (const auto& [key, c] : a.terms()) {
      int qexp = 0;
      std::vector<int> shifted = k;
      for (std::size_t i = 0; i < k.size(); ++i) {
        qexp += key.first[i] * k[i];
        shifted[i] -= key.second[i];
      }
      RatFunc v = f(shifted);
      if (v.is_zero()) continue;
      sum += c * RatFunc(q_power(qg_table(), qexp)) * v;
    }
    return sum;
  });
}

TorusElem unknot_operator(int torus_sign) {
  return parse_operator("nu - nu^-1 - L*(g*nu^-1 - g^-1*nu)", 1, torus_sign);
}

VarTablePtr classical_table(int rank) {
  std::vector<std::string> names;
  for (int i = 0; i < rank; ++i) names.push_back(rank == 1 ? "nu" : "nu" + std::to_string(i + 1));
  for (int i = 0; i < rank; ++i) names.push_back(rank == 1 ? "L" : "L" + std::to_string(i + 1));
  names.push_back("g");
  return VarTable::laurent(names);
}

LaurentPoly classical_limit(const TorusElem& a) {
  const int r = a.rank();
  VarTablePtr table = classical_table(r);
  const std::size_t q = qg_table()->index("q");
  const std::size_t g = qg_table()->index("g");
  LaurentPoly out(table);
  for (const auto& [key, c] : a.terms()) {
    RatFunc at1(qg_table());
    try {
      at1 = c.specialize(q, 1);
    } catch (const PoleError&) {
      try {
        at1 = c.reduced().specialize(q, 1);
      } catch (const PoleError&) {
        throw PoleError("coefficient " + c.to_string() + " of term " + monomial_string(key) + " has a pole at q = 1");
      }
    }
    auto poly = at1.reduced().as_polynomial();
    if (!poly) {
      throw PoleError("coefficient " + c.to_string() + " of term " + monomial_string(key) +
                      " is not a Laurent polynomial in g at q = 1");
    }
    Exponent shift(table->size(), 0);
    for (int i = 0; i < r; ++i) {
      shift[i] = key.first[i];
      shift[r + i] = key.second[i];
    }
    for (const auto& [e, v] : poly->terms()) {
      Exponent x = shift;
      x[2 * r] += e[g];
      out.add_term(x, v);
    }
  }
  return out;
}

AnnihilationReport annihilates(const TorusElem& a, const ColoredSeq& f, const std::vector<int>& lo,
                               const std::vector<int>& hi, int n_lo, int n_hi) {
  const int r = a.rank();
  if (static_cast<int>(lo.size()) != r || static_cast<int>(hi.size()) != r) {
    throw StructuralError("annihilation box has wrong dimension");
  }
  AnnihilationReport report;
  if (a.is_zero()) return report;
  for (int i = 0; i < r; ++i) {
    if (lo[i] > hi[i]) return report;
  }
  ColoredSeq image = act(a, f);
  const VarTablePtr& t = qg_table();
  const std::size_t g = t->index("g");
  std::vector<int> k = lo;
  for (;;) {
    RatFunc v = image(k);
    for (int N = n_lo; N <= n_hi; ++N) {
      ++report.points;
      RatFunc at = v.substitute({{g, RatFunc(q_power(t, N))}});
      if (!at.is_zero()) {
        report.all_zero = false;
        report.failures.push_back({k, N, at.to_string()});
      }
    }
    int i = 0;
    while (i < r && k[i] == hi[i]) {
      k[i] = lo[i];
      ++i;
    }
    if (i == r) break;
    ++k[i];
  }
  return report;
}

}  // namespace kch
