#include <algorithm>
#include <mutex>

#include "kch/homfly.hpp"
#include "kch/qbinom.hpp"

namespace kch {

namespace {

LaurentPoly q_minus() {
  // q^-1 - q
  return q_power(qg_table(), -1) - q_power(qg_table(), 1);
}

void check_perm(const HeckeElem::Perm& w) {
  std::vector<bool> seen(w.size(), false);
  for (int x : w) {
    if (x < 0 || x >= static_cast<int>(w.size()) || seen[x]) throw StructuralError("not a permutation");
    seen[x] = true;
  }
}

// Reduced word of w as 0-based generator indices, left to right.
std::vector<int> reduced_word(HeckeElem::Perm w) {
  std::vector<int> peeled;
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
      if (w[i] > w[i + 1]) {
        std::swap(w[i], w[i + 1]);
        peeled.push_back(static_cast<int>(i));
        changed = true;
      }
    }
  }
  std::reverse(peeled.begin(), peeled.end());
  return peeled;
}

std::vector<LaurentPoly> add_scaled(std::vector<LaurentPoly> acc, const std::vector<LaurentPoly>& v,
                                    const LaurentPoly& c) {
  if (acc.size() < v.size()) acc.resize(v.size(), LaurentPoly(qg_table()));
  for (std::size_t j = 0; j < v.size(); ++j) acc[j] += c * v[j];
  return acc;
}

std::vector<LaurentPoly> basis_trace(const HeckeElem::Perm& w);

std::vector<LaurentPoly> element_trace(const HeckeElem& x) {
  std::vector<LaurentPoly> acc;
  for (const auto& [w, c] : x.terms()) acc = add_scaled(std::move(acc), basis_trace(w), c);
  while (!acc.empty() && acc.back().is_zero()) acc.pop_back();
  return acc;
}

std::vector<LaurentPoly> basis_trace(const HeckeElem::Perm& w0) {
  static std::mutex mutex;
  static std::map<HeckeElem::Perm, std::vector<LaurentPoly>> cache;

  HeckeElem::Perm w = w0;
  while (!w.empty() && w.back() == static_cast<int>(w.size()) - 1) w.pop_back();
  if (w.empty()) return {LaurentPoly::constant(qg_table(), 1)};
  {
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(w);
    if (it != cache.end()) return it->second;
  }
  const int n = static_cast<int>(w.size());
  const int j = static_cast<int>(std::find(w.begin(), w.end(), n - 1) - w.begin());
  // w = w' s_{n-2} ... s_j with w' fixing n-1; tr(T_w) = z tr(T_{w'} T_{n-3} ... T_j).
  HeckeElem::Perm wp = w;
  for (int k = j; k < n - 1; ++k) std::swap(wp[k], wp[k + 1]);
  wp.pop_back();
  HeckeElem x = HeckeElem::basis(wp);
  for (int k = n - 3; k >= j; --k) x = x.times_generator(k);
  std::vector<LaurentPoly> inner = element_trace(x);
  std::vector<LaurentPoly> out;
  out.push_back(LaurentPoly(qg_table()));
  out.insert(out.end(), inner.begin(), inner.end());

  std::lock_guard<std::mutex> lock(mutex);
  cache.emplace(w, out);
  return out;
}

}  // namespace

HeckeElem::HeckeElem(int strands) : n_(strands) {
  if (strands < 1) throw StructuralError("Hecke algebra needs at least one strand");
}

HeckeElem HeckeElem::identity(int strands) {
  HeckeElem h(strands);
  Perm id(strands);
  for (int i = 0; i < strands; ++i) id[i] = i;
  h.add_term(id, LaurentPoly::constant(qg_table(), 1));
  return h;
}

HeckeElem HeckeElem::basis(Perm w) {
  check_perm(w);
  HeckeElem h(static_cast<int>(w.size()));
  h.add_term(w, LaurentPoly::constant(qg_table(), 1));
  return h;
}

HeckeElem HeckeElem::generator(int strands, int i, int sign) {
  if (i < 1 || i > strands - 1) throw StructuralError("Hecke generator index out of range");
  return identity(strands).times_generator(i - 1, sign);
}

HeckeElem HeckeElem::from_braid(const BraidWord& b) {
  HeckeElem h = identity(b.strands);
  for (int l : b.letters) h = h.times_generator(std::abs(l) - 1, l > 0 ? 1 : -1);
  return h;
}

void HeckeElem::add_term(const Perm& w, const LaurentPoly& c) {
  if (static_cast<int>(w.size()) != n_) throw StructuralError("permutation size does not match Hecke algebra");
  if (c.is_zero()) return;
  auto it = terms_.find(w);
  if (it == terms_.end()) {
    terms_.emplace(w, c.rebased(qg_table()));
  } else {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

HeckeElem HeckeElem::times_generator(int i, int sign) const {
  if (i < 0 || i >= n_ - 1) throw StructuralError("Hecke generator index out of range");
  const LaurentPoly z = q_minus();
  HeckeElem r(n_);
  for (const auto& [w, c] : terms_) {
    Perm ws = w;
    std::swap(ws[i], ws[i + 1]);
    bool longer = w[i] < w[i + 1];
    if (sign > 0) {
      // T_w T_i = T_{ws} if longer, else (q^-1 - q) T_w + T_{ws}
      r.add_term(ws, c);
      if (!longer) r.add_term(w, c * z);
    } else {
      // T_i^-1 = T_i - (q^-1 - q)
      r.add_term(ws, c);
      if (!longer) r.add_term(w, c * z);
      r.add_term(w, -(c * z));
    }
  }
  return r;
}

HeckeElem HeckeElem::operator-() const {
  HeckeElem r = *this;
  for (auto& [w, c] : r.terms_) c = -c;
  return r;
}

HeckeElem& HeckeElem::operator+=(const HeckeElem& o) {
  if (n_ != o.n_) throw StructuralError("Hecke elements on different strand counts");
  for (const auto& [w, c] : o.terms_) add_term(w, c);
  return *this;
}

HeckeElem& HeckeElem::operator-=(const HeckeElem& o) {
  if (n_ != o.n_) throw StructuralError("Hecke elements on different strand counts");
  for (const auto& [w, c] : o.terms_) add_term(w, -c);
  return *this;
}

HeckeElem operator*(const HeckeElem& a, const HeckeElem& b) {
  if (a.n_ != b.n_) throw StructuralError("Hecke elements on different strand counts");
  HeckeElem r(a.n_);
  for (const auto& [v, c] : b.terms_) {
    HeckeElem part = a;
    for (int i : reduced_word(v)) part = part.times_generator(i);
    r += c * part;
  }
  return r;
}

HeckeElem operator*(const LaurentPoly& c, const HeckeElem& a) {
  HeckeElem r(a.n_);
  if (c.is_zero()) return r;
  for (const auto& [w, x] : a.terms_) r.add_term(w, c.rebased(qg_table()) * x);
  return r;
}

HeckeElem hecke_mul(const HeckeElem& a, const HeckeElem& b) { return a * b; }

std::string HeckeElem::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    std::string w = "T[";
    for (std::size_t i = 0; i < it->first.size(); ++i) {
      if (i) w += ',';
      w += std::to_string(it->first[i] + 1);
    }
    w += ']';
    if (!s.empty()) s += " + ";
    const LaurentPoly& c = it->second;
    if (c == LaurentPoly::constant(qg_table(), 1)) s += w;
    else s += "(" + c.to_string() + ")*" + w;
  }
  return s;
}

std::vector<LaurentPoly> trace_coefficients(const HeckeElem& x) { return element_trace(x); }

}  // namespace kch
