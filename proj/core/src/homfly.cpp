#include <algorithm>
#include <map>

#include "kch/homfly.hpp"
#include "kch/qbinom.hpp"

namespace kch {

namespace {

LaurentPoly qvar(int e) { return q_power(qg_table(), e); }
LaurentPoly gvar(int e) { return LaurentPoly::variable(qg_table(), "g", e); }

// q^-1 - q, the skein coefficient
RatFunc skein_z() { return RatFunc(qvar(-1) - qvar(1)); }
// -g, the kink factor
RatFunc kink() { return RatFunc(-gvar(1)); }

// num / (q - q^-1)^power with common factors of (q - q^-1) cancelled.
RatFunc over_qdiff(LaurentPoly num, int power) {
  const LaurentPoly d = qvar(1) - qvar(-1);
  while (power > 0 && !num.is_zero()) {
    auto quotient = num.exact_divide(d);
    if (!quotient) break;
    num = std::move(*quotient);
    --power;
  }
  if (num.is_zero()) return RatFunc(qg_table());
  return RatFunc(num, d.pow(power));
}

using Word = std::vector<int>;

void free_reduce(Word& w) {
  Word out;
  for (int l : w) {
    if (!out.empty() && out.back() == -l) out.pop_back();
    else out.push_back(l);
  }
  std::size_t lo = 0, hi = out.size();
  while (hi - lo >= 2 && out[lo] == -out[hi - 1]) {
    ++lo;
    --hi;
  }
  w.assign(out.begin() + lo, out.begin() + hi);
}

Word rotated(const Word& w, std::size_t start) {
  Word r(w.begin() + start, w.end());
  r.insert(r.end(), w.begin(), w.begin() + start);
  return r;
}

class SkeinSolver {
 public:
  explicit SkeinSolver(int budget) : budget_(budget) {}

  std::optional<RatFunc> solve(Word w, int n, int depth) {
    if (depth < 0 || --budget_ < 0) return std::nullopt;
    free_reduce(w);
    if (n == 1) return homfly_delta();
    auto key = std::make_pair(n, w);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    auto value = step(w, n, depth);
    if (value) memo_.emplace(std::move(key), *value);
    return value;
  }

 private:
  std::optional<RatFunc> combine(const Word& a, int n, const RatFunc& ca, const Word& b, int nb, const RatFunc& cb,
                                 int depth) {
    auto fa = solve(a, n, depth - 1);
    if (!fa) return std::nullopt;
    auto fb = solve(b, nb, depth - 1);
    if (!fb) return std::nullopt;
    return ca * *fa + cb * *fb;
  }

  // F(w) = F(w with letter i switched) + sign * z * F(w without letter i)
  std::optional<RatFunc> switch_crossing(const Word& w, int n, std::size_t i, int depth) {
    Word flipped = w, removed = w;
    flipped[i] = -w[i];
    removed.erase(removed.begin() + static_cast<long>(i));
    RatFunc c = skein_z();
    if (w[i] < 0) c = -c;
    return combine(flipped, n, RatFunc::constant(qg_table(), 1), removed, n, c, depth);
  }

  std::optional<RatFunc> step(const Word& w, int n, int depth) {
    const int m = n - 1;
    std::vector<std::size_t> top;
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (std::abs(w[i]) == m) top.push_back(i);
    }
    if (top.empty()) {
      auto f = solve(w, n - 1, depth - 1);
      if (!f) return std::nullopt;
      return homfly_delta() * *f;
    }
    if (top.size() == 1) {
      Word r = rotated(w, top[0] + 1);
      int e = r.back() > 0 ? 1 : -1;
      r.pop_back();
      auto f = solve(r, n - 1, depth - 1);
      if (!f) return std::nullopt;
      return kink().pow(e) * *f;
    }
    // x x = 1 + z x and x^-1 x^-1 = 1 - z x^-1 shorten the word.
    for (std::size_t i = 0; i < w.size(); ++i) {
      std::size_t j = (i + 1) % w.size();
      if (w.size() >= 2 && w[i] == w[j]) {
        Word r = rotated(w, i);
        Word both(r.begin() + 2, r.end());
        Word one(r.begin() + 1, r.end());
        RatFunc c = skein_z();
        if (r[0] < 0) c = -c;
        return combine(both, n, RatFunc::constant(qg_table(), 1), one, n, c, depth);
      }
    }
    // Bring consecutive top letters together across commuting letters.
    for (std::size_t t = 0; t < top.size(); ++t) {
      Word r = rotated(w, top[t]);
      std::size_t p1 = 1;
      while (std::abs(r[p1]) != m) ++p1;
      std::vector<std::size_t> middle;
      for (std::size_t s = 1; s < p1; ++s) {
        if (std::abs(r[s]) == m - 1) middle.push_back(s);
      }
      if (middle.empty()) {
        Word moved{r[0], r[p1]};
        moved.insert(moved.end(), r.begin() + 1, r.begin() + static_cast<long>(p1));
        moved.insert(moved.end(), r.begin() + static_cast<long>(p1) + 1, r.end());
        return solve(moved, n, depth - 1);
      }
      if (middle.size() == 1) {
        std::size_t s = middle[0];
        Word a(r.begin() + 1, r.begin() + static_cast<long>(s));
        Word b(r.begin() + static_cast<long>(s) + 1, r.begin() + static_cast<long>(p1));
        Word rest(r.begin() + static_cast<long>(p1) + 1, r.end());
        int e = r[0] > 0 ? 1 : -1;
        int f = r[s] > 0 ? 1 : -1;
        Word moved = a;
        if (r[p1] == -r[0]) {
          // s_m^e s_{m-1}^f s_m^-e = s_{m-1}^-e s_m^f s_{m-1}^e
          moved.insert(moved.end(), {-e * (m - 1), f * m, e * (m - 1)});
          moved.insert(moved.end(), b.begin(), b.end());
          moved.insert(moved.end(), rest.begin(), rest.end());
          return solve(moved, n, depth - 1);
        }
        moved.insert(moved.end(), {r[0], r[s], r[p1]});
        std::size_t third = moved.size() - 1;
        moved.insert(moved.end(), b.begin(), b.end());
        moved.insert(moved.end(), rest.begin(), rest.end());
        return switch_crossing(moved, n, third, depth);
      }
    }
    return switch_crossing(w, n, top[0], depth);
  }

  int budget_;
  std::map<std::pair<int, Word>, RatFunc> memo_;
};

}  // namespace

RatFunc homfly_delta() { return RatFunc(gvar(1) - gvar(-1), qvar(1) - qvar(-1)); }

RatFunc homflypt_framed(const BraidWord& b) {
  const int n = b.strands;
  std::vector<LaurentPoly> c = trace_coefficients(HeckeElem::from_braid(b));
  // F = delta^n sum_j c_j z^j with z = -g/delta
  //   = sum_j c_j (-g)^j (g - g^-1)^{n-j} (q - q^-1)^j / (q - q^-1)^n
  const LaurentPoly gd = gvar(1) - gvar(-1);
  const LaurentPoly qd = qvar(1) - qvar(-1);
  LaurentPoly num(qg_table());
  for (std::size_t j = 0; j < c.size(); ++j) {
    int jj = static_cast<int>(j);
    num += c[j] * (-gvar(1)).pow(jj) * gd.pow(n - jj) * qd.pow(jj);
  }
  return over_qdiff(std::move(num), n);
}

RatFunc homflypt(const BraidWord& b) { return kink().pow(-b.writhe()) * homflypt_framed(b); }

std::optional<RatFunc> skein_framed(const BraidWord& b, int max_depth) {
  SkeinSolver solver(200000);
  auto f = solver.solve(b.letters, b.strands, max_depth);
  return f;
}

ColoredSeq colored_unknot(int rank) {
  if (rank != 1) throw StructuralError("colored unknot is only defined for rank 1");
  return ColoredSeq(1, [](const std::vector<int>& k) {
    if (k[0] < 0) return RatFunc(qg_table());
    return qbinom_formal(0, k[0]);
  });
}

}  // namespace kch
