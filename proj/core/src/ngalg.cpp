#include "kch/ngalg.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <sstream>

namespace kch {

namespace {

std::string a_name(int i, int j, int n) {
  if (n <= 9) return "a" + std::to_string(i + 1) + std::to_string(j + 1);
  return "a" + std::to_string(i + 1) + "_" + std::to_string(j + 1);
}

VarTablePtr make_aug_table(int n, int r) {
  std::vector<VarTable::Var> vars;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i != j) vars.push_back({a_name(i, j, n), false});
    }
  }
  for (int c = 0; c < r; ++c) vars.push_back({r == 1 ? "nu" : "nu" + std::to_string(c + 1), true});
  for (int c = 0; c < r; ++c) vars.push_back({r == 1 ? "L" : "L" + std::to_string(c + 1), true});
  vars.push_back({"g", true});
  return VarTable::make(std::move(vars));
}

std::size_t a_index(int n, int i, int j) {
  if (i == j || i < 0 || j < 0 || i >= n || j >= n) throw StructuralError("invalid generator index a_ij");
  return static_cast<std::size_t>(i) * (n - 1) + (j < i ? j : j - 1);
}

}  // namespace

AugRing::AugRing(int strands, int components)
    : strands_(strands), components_(components), vars_(make_aug_table(strands, components)) {
  if (strands < 1 || components < 1 || components > strands) throw StructuralError("invalid ring shape");
}

std::size_t AugRing::a(int i, int j) const { return a_index(strands_, i, j); }

LaurentPoly AugRing::minus_g_pow(int power) const {
  return g_poly(power) * Rational(power % 2 == 0 ? 1 : -1);
}

std::vector<std::size_t> AugRing::a_vars() const {
  std::vector<std::size_t> v(a_count());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = i;
  return v;
}

std::vector<std::size_t> AugRing::kept_vars() const {
  std::vector<std::size_t> v;
  for (std::size_t i = a_count(); i < vars_->size(); ++i) v.push_back(i);
  return v;
}

// ---------------------------------------------------------------------------

AugMatrix::AugMatrix(const AugRing& ring, int n)
    : n_(n), entries_(static_cast<std::size_t>(n) * n, ring.zero()) {}

AugMatrix AugMatrix::identity(const AugRing& ring, int n) {
  AugMatrix m(ring, n);
  for (int i = 0; i < n; ++i) m(i, i) = ring.constant(1);
  return m;
}

AugMatrix AugMatrix::diagonal(const AugRing& ring, const std::vector<LaurentPoly>& diag) {
  AugMatrix m(ring, static_cast<int>(diag.size()));
  for (int i = 0; i < m.n_; ++i) m(i, i) = diag[i];
  return m;
}

AugMatrix AugMatrix::operator*(const AugMatrix& o) const {
  if (n_ != o.n_) throw StructuralError("matrix size mismatch");
  AugMatrix r = *this;
  for (int i = 0; i < n_; ++i) {
    for (int j = 0; j < n_; ++j) {
      LaurentPoly s((*this)(0, 0).vars());
      for (int k = 0; k < n_; ++k) {
        const LaurentPoly& x = (*this)(i, k);
        const LaurentPoly& y = o(k, j);
        if (x.is_zero() || y.is_zero()) continue;
        s += x * y;
      }
      r(i, j) = std::move(s);
    }
  }
  return r;
}

AugMatrix AugMatrix::operator+(const AugMatrix& o) const {
  if (n_ != o.n_) throw StructuralError("matrix size mismatch");
  AugMatrix r = *this;
  for (std::size_t i = 0; i < entries_.size(); ++i) r.entries_[i] += o.entries_[i];
  return r;
}

AugMatrix AugMatrix::operator-(const AugMatrix& o) const {
  if (n_ != o.n_) throw StructuralError("matrix size mismatch");
  AugMatrix r = *this;
  for (std::size_t i = 0; i < entries_.size(); ++i) r.entries_[i] -= o.entries_[i];
  return r;
}

std::string AugMatrix::to_string() const {
  std::ostringstream os;
  os << "[";
  for (int i = 0; i < n_; ++i) {
    os << (i ? ", [" : "[");
    for (int j = 0; j < n_; ++j) os << (j ? ", " : "") << (*this)(i, j);
    os << "]";
  }
  os << "]";
  return os.str();
}

// ---------------------------------------------------------------------------

AlgebraMap AlgebraMap::identity(const AugRing& ring) {
  std::vector<LaurentPoly> imgs;
  for (std::size_t v : ring.a_vars()) imgs.push_back(LaurentPoly::variable(ring.vars(), v));
  return AlgebraMap(ring, std::move(imgs));
}

AlgebraMap::AlgebraMap(const AugRing& ring, std::vector<LaurentPoly> a_images)
    : strands_(ring.strands()), vars_(ring.vars()), images_(ring.vars()->size()) {
  if (a_images.size() != ring.a_count()) throw StructuralError("algebra map needs one image per generator");
  for (std::size_t v = 0; v < a_images.size(); ++v) images_[v] = std::move(a_images[v]);
}

const LaurentPoly& AlgebraMap::image(int i, int j) const { return *images_[a_index(strands_, i, j)]; }

LaurentPoly AlgebraMap::operator()(const LaurentPoly& p) const { return p.substitute(images_); }

AugMatrix AlgebraMap::operator()(const AugMatrix& m) const {
  AugMatrix r = m;
  for (int i = 0; i < m.size(); ++i) {
    for (int j = 0; j < m.size(); ++j) r(i, j) = (*this)(m(i, j));
  }
  return r;
}

AlgebraMap AlgebraMap::compose(const AlgebraMap& inner) const {
  AlgebraMap r = inner;
  for (auto& img : r.images_) {
    if (img) img = (*this)(*img);
  }
  return r;
}

AlgebraMap phi_gen(const AugRing& ring, int k1, int sign) {
  const int n = ring.strands();
  if (k1 < 1 || k1 > n - 1) throw StructuralError("generator index out of range");
  if (sign != 1 && sign != -1) throw StructuralError("generator sign must be +1 or -1");
  const int k = k1 - 1, k2 = k1;  // strands k and k+1, 0-based
  auto a = [&](int i, int j) { return ring.a_poly(i, j); };
  std::vector<LaurentPoly> imgs;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      LaurentPoly img = a(i, j);
      bool i_in = i == k || i == k2, j_in = j == k || j == k2;
      if (sign > 0) {
        if (i == k && j == k2) img = -a(k2, k);
        else if (i == k2 && j == k) img = -a(k, k2);
        else if (i == k2 && !j_in) img = a(k, j);
        else if (j == k2 && !i_in) img = a(i, k);
        else if (i == k && !j_in) img = a(k2, j) - a(k2, k) * a(k, j);
        else if (j == k && !i_in) img = a(i, k2) - a(i, k) * a(k, k2);
      } else {
        if (i == k && j == k2) img = -a(k2, k);
        else if (i == k2 && j == k) img = -a(k, k2);
        else if (i == k && !j_in) img = a(k2, j);
        else if (j == k && !i_in) img = a(i, k2);
        else if (i == k2 && !j_in) img = a(k, j) - a(k, k2) * a(k2, j);
        else if (j == k2 && !i_in) img = a(i, k) - a(i, k2) * a(k2, k);
      }
      imgs.push_back(std::move(img));
    }
  }
  return AlgebraMap(ring, std::move(imgs));
}

AlgebraMap phi_word(const AugRing& ring, const BraidWord& b) {
  AlgebraMap acc = AlgebraMap::identity(ring);
  for (int l : b.letters) {
    // acc <- acc o phi_l
    acc = acc.compose(phi_gen(ring, std::abs(l), l > 0 ? 1 : -1));
  }
  return acc;
}

namespace {

AugMatrix block_matrix(const AugRing& ring, int k, LaurentPoly tl, LaurentPoly tr, LaurentPoly bl, LaurentPoly br) {
  AugMatrix m = AugMatrix::identity(ring, ring.strands());
  m(k, k) = std::move(tl);
  m(k, k + 1) = std::move(tr);
  m(k + 1, k) = std::move(bl);
  m(k + 1, k + 1) = std::move(br);
  return m;
}

}  // namespace

AugMatrix phiL_gen(const AugRing& ring, int k1, int sign) {
  const int k = k1 - 1;
  if (sign > 0) return block_matrix(ring, k, -ring.a_poly(k + 1, k), ring.constant(1), ring.constant(1), ring.zero());
  return block_matrix(ring, k, ring.zero(), ring.constant(1), ring.constant(1), -ring.a_poly(k, k + 1));
}

AugMatrix phiR_gen(const AugRing& ring, int k1, int sign) {
  const int k = k1 - 1;
  if (sign > 0) return block_matrix(ring, k, -ring.a_poly(k, k + 1), ring.constant(1), ring.constant(1), ring.zero());
  return block_matrix(ring, k, ring.zero(), ring.constant(1), ring.constant(1), -ring.a_poly(k + 1, k));
}

AugMatrix phiL(const AugRing& ring, const BraidWord& b) {
  AugMatrix acc = AugMatrix::identity(ring, ring.strands());
  AlgebraMap prefix = AlgebraMap::identity(ring);
  for (int l : b.letters) {
    int k = std::abs(l), s = l > 0 ? 1 : -1;
    acc = prefix(phiL_gen(ring, k, s)) * acc;
    prefix = prefix.compose(phi_gen(ring, k, s));
  }
  return acc;
}

AugMatrix phiR(const AugRing& ring, const BraidWord& b) {
  AugMatrix acc = AugMatrix::identity(ring, ring.strands());
  AlgebraMap prefix = AlgebraMap::identity(ring);
  for (int l : b.letters) {
    int k = std::abs(l), s = l > 0 ? 1 : -1;
    acc = acc * prefix(phiR_gen(ring, k, s));
    prefix = prefix.compose(phi_gen(ring, k, s));
  }
  return acc;
}

// ---------------------------------------------------------------------------

AugMatrix build_A(const AugRing& ring, const ClosureInfo& cl) {
  const int n = ring.strands();
  AugMatrix m(ring, n);
  for (int i = 0; i < n; ++i) {
    LaurentPoly nu_m2 = ring.nu_poly(cl.component_of[i], -2);
    for (int j = 0; j < n; ++j) {
      if (i < j) m(i, j) = ring.a_poly(i, j);
      else if (i > j) m(i, j) = -(nu_m2 * ring.a_poly(i, j));
      else m(i, j) = ring.constant(1) - nu_m2;
    }
  }
  return m;
}

AugMatrix build_Ahat(const AugRing& ring, const ClosureInfo& cl) {
  const int n = ring.strands();
  AugMatrix m(ring, n);
  LaurentPoly g = ring.g_poly(), g_inv = ring.g_poly(-1);
  for (int i = 0; i < n; ++i) {
    LaurentPoly g_nu_m2 = g * ring.nu_poly(cl.component_of[i], -2);
    for (int j = 0; j < n; ++j) {
      if (i < j) m(i, j) = -(g_inv * ring.a_poly(i, j));
      else if (i > j) m(i, j) = g_nu_m2 * ring.a_poly(i, j);
      else m(i, j) = g_nu_m2 - g_inv;
    }
  }
  return m;
}

namespace {

std::vector<LaurentPoly> lambda_prime_diag(const AugRing& ring, const ClosureInfo& cl, const Conventions& conv,
                                           int power) {
  std::vector<LaurentPoly> diag(ring.strands(), ring.constant(1));
  for (std::size_t c = 0; c < cl.components.size(); ++c) {
    int wr = cl.self_wr[c];
    int comp = static_cast<int>(c);
    LaurentPoly entry = ring.lambda_poly(comp, -1) * ring.nu_poly(comp, conv.lambda_nu_sign * 2 * wr) *
                        ring.minus_g_pow(wr);
    diag[cl.leftmost[c]] = entry.pow(power);
  }
  return diag;
}

}  // namespace

AugMatrix build_LambdaPrime(const AugRing& ring, const ClosureInfo& cl, const Conventions& conv) {
  return AugMatrix::diagonal(ring, lambda_prime_diag(ring, cl, conv, 1));
}

AugMatrix build_LambdaPrime_inverse(const AugRing& ring, const ClosureInfo& cl, const Conventions& conv) {
  return AugMatrix::diagonal(ring, lambda_prime_diag(ring, cl, conv, -1));
}

AugMatrix build_D(const AugRing& ring, const ClosureInfo& cl, int power) {
  std::vector<LaurentPoly> diag;
  for (int i = 0; i < ring.strands(); ++i) diag.push_back(ring.minus_g_pow(power * cl.d[i]));
  return AugMatrix::diagonal(ring, diag);
}

AugMatrix build_D_beta(const AugRing& ring, const ClosureInfo& cl, int power) {
  std::vector<LaurentPoly> diag;
  for (int i = 0; i < ring.strands(); ++i) diag.push_back(ring.minus_g_pow(power * cl.d[cl.perm[i]]));
  return AugMatrix::diagonal(ring, diag);
}

AlgebraMap psi(const AugRing& ring, const ClosureInfo& cl, const Conventions& conv) {
  const int n = ring.strands();
  std::vector<LaurentPoly> imgs;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      LaurentPoly img = ring.minus_g_pow(conv.psi_sign * cl.k(i, j)) * ring.a_poly(i, j);
      int ci = cl.component_of[i], cj = cl.component_of[j];
      if (ci != cj) img = img * ring.nu_poly(ci) * ring.nu_poly(cj, -1);
      imgs.push_back(std::move(img));
    }
  }
  return AlgebraMap(ring, std::move(imgs));
}

// ---------------------------------------------------------------------------

namespace {

struct RelationBuilder {
  std::vector<LaurentPoly> gens;
  std::vector<LaurentPoly> normalized;
  std::vector<std::string> labels;

  void add(const LaurentPoly& p, std::string label) {
    if (p.is_zero()) return;
    LaurentPoly key = primitive_part(clear_denominators(p));
    for (const auto& k : normalized) {
      if (k == key) return;
    }
    normalized.push_back(std::move(key));
    gens.push_back(p);
    labels.push_back(std::move(label));
  }
};

std::string entry_label(const char* tag, int i, int j) {
  return std::string(tag) + "[" + std::to_string(i + 1) + "," + std::to_string(j + 1) + "]";
}

}  // namespace

std::vector<LaurentPoly> ch1_entries(const BraidWord& b, const Conventions& conv) {
  ClosureInfo cl = closure(b);
  AugRing ring(b.strands, static_cast<int>(cl.component_count()));
  AugMatrix A = build_A(ring, cl);
  AugMatrix Lp = build_LambdaPrime(ring, cl, conv);
  AugMatrix M = Lp * phi_word(ring, b)(A) - A * Lp;
  std::vector<LaurentPoly> out;
  for (int i = 0; i < M.size(); ++i) {
    for (int j = 0; j < M.size(); ++j) out.push_back(M(i, j));
  }
  return out;
}

Presentation relations(const BraidWord& b, const RelationOptions& opts) {
  ClosureInfo cl = closure(b);
  AugRing ring(b.strands, static_cast<int>(cl.component_count()));
  AugMatrix A = build_A(ring, cl);
  AugMatrix gAhat = build_Ahat(ring, cl);
  AugMatrix Lp = build_LambdaPrime(ring, cl, opts.conventions);

  AugMatrix ch2 = gAhat - Lp * phiL(ring, b) * A;
  AugMatrix ch3 = A * Lp - gAhat * phiR(ring, b);

  RelationBuilder rb;
  const int n = b.strands;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) rb.add(ch2(i, j), entry_label("CH2", i, j));
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) rb.add(ch3(i, j), entry_label("CH3", i, j));
  }
  if (opts.include_ch1) {
    AugMatrix ch1 = Lp * phi_word(ring, b)(A) - A * Lp;
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) rb.add(ch1(i, j), entry_label("CH1", i, j));
    }
  }

  Presentation p;
  p.vars = ring.vars();
  p.generators = std::move(rb.gens);
  p.labels = std::move(rb.labels);
  p.eliminate = ring.a_vars();
  p.braid = b;
  p.components = static_cast<int>(cl.component_count());
  return p;
}

}  // namespace kch

namespace kch {

LaurentPoly from_mu_lambda_U(const LaurentPoly& p, const VarTablePtr& target) {
  const VarTablePtr& src = p.vars();
  auto rename = [](const std::string& name, std::string_view from, std::string_view to) -> std::optional<std::string> {
    if (name.rfind(from, 0) != 0) return std::nullopt;
    std::string rest = name.substr(from.size());
    if (!rest.empty() && !std::all_of(rest.begin(), rest.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
      return std::nullopt;
    }
    return std::string(to) + rest;
  };
  const std::size_t g = target->index("g");
  LaurentPoly out(target);
  for (const auto& [e, c] : p.terms()) {
    Exponent x(target->size(), 0);
    Rational coeff = c;
    for (std::size_t v = 0; v < src->size(); ++v) {
      if (e[v] == 0) continue;
      const std::string& name = (*src)[v].name;
      if (name == "U") {
        x[g] += -2 * e[v];
      } else if (auto nu = rename(name, "mu", "nu")) {
        x[target->index(*nu)] += -2 * e[v];
      } else if (auto l = rename(name, "lambda", "L")) {
        x[target->index(*l)] += -e[v];
        x[g] += -e[v];
        if (e[v] % 2 != 0) coeff = -coeff;
      } else {
        x[target->index(name)] += e[v];
      }
    }
    out.add_term(x, coeff);
  }
  return out;
}

}  // namespace kch
