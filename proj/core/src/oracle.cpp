#include "kch/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <random>

#include <Eigen/Dense>

namespace kch {

namespace {

using Complex = std::complex<double>;
using Vec = Eigen::VectorXcd;
using Mat = Eigen::MatrixXcd;

Complex random_point(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> radius(0.6, 1.6), angle(0.0, 2.0 * M_PI);
  return std::polar(radius(rng), angle(rng));
}

struct System {
  std::vector<LaurentPoly> eqs;
  std::vector<std::size_t> unknowns;
  std::vector<std::vector<LaurentPoly>> jac;  // jac[e][u]

  double max_relative(const std::vector<Complex>& x) const {
    double r = 0;
    for (const auto& e : eqs) r = std::max(r, relative_residual(e, x));
    return r;
  }
};

Vec residual(const System& s, const std::vector<Complex>& x) {
  Vec f(static_cast<Eigen::Index>(s.eqs.size()));
  for (std::size_t e = 0; e < s.eqs.size(); ++e) f(static_cast<Eigen::Index>(e)) = s.eqs[e].evaluate(x);
  return f;
}

// Damped Gauss-Newton from the unknown values already in x.
bool solve(const System& s, std::vector<Complex>& x, const OracleOptions& o) {
  const auto m = static_cast<Eigen::Index>(s.eqs.size());
  const auto n = static_cast<Eigen::Index>(s.unknowns.size());
  Vec f = residual(s, x);
  for (int it = 0; it < o.max_iterations; ++it) {
    if (s.max_relative(x) < o.tolerance) return true;
    Mat J(m, n);
    for (Eigen::Index e = 0; e < m; ++e) {
      for (Eigen::Index u = 0; u < n; ++u) J(e, u) = s.jac[e][u].evaluate(x);
    }
    Vec step = J.completeOrthogonalDecomposition().solve(-f);
    double norm = f.norm();
    double t = 1.0;
    bool improved = false;
    for (int half = 0; half < 30; ++half, t *= 0.5) {
      std::vector<Complex> y = x;
      for (Eigen::Index u = 0; u < n; ++u) y[s.unknowns[u]] += t * step(u);
      Vec fy = residual(s, y);
      if (std::isfinite(fy.norm()) && fy.norm() < norm) {
        x = std::move(y);
        f = std::move(fy);
        improved = true;
        break;
      }
    }
    if (!improved) break;
  }
  return s.max_relative(x) < o.tolerance;
}

}  // namespace

double relative_residual(const LaurentPoly& p, const std::vector<Complex>& point) {
  double scale = 0;
  Complex sum = 0;
  for (const auto& [e, c] : p.terms()) {
    Complex t = c.get_d();
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] != 0) t *= std::pow(point[i], e[i]);
    }
    scale += std::abs(t);
    sum += t;
  }
  return scale == 0 ? 0 : std::abs(sum) / scale;
}

double OracleReport::fraction_below(double threshold) const {
  if (trials.empty()) return 0;
  auto n = std::count_if(trials.begin(), trials.end(),
                         [&](const OracleTrial& t) { return t.converged && t.generator_residual < threshold; });
  return static_cast<double>(n) / static_cast<double>(trials.size());
}

double OracleReport::fraction_above(double threshold) const {
  if (converged == 0) return 0;
  auto n = std::count_if(trials.begin(), trials.end(),
                         [&](const OracleTrial& t) { return t.converged && t.generator_residual > threshold; });
  return static_cast<double>(n) / converged;
}

std::string OracleReport::to_text() const {
  std::string s;
  char buf[160];
  for (std::size_t i = 0; i < trials.size(); ++i) {
    const auto& t = trials[i];
    if (t.converged) {
      std::snprintf(buf, sizeof buf, "trial %zu: system %.3e generators %.3e\n", i + 1, t.system_residual,
                    t.generator_residual);
    } else {
      std::snprintf(buf, sizeof buf, "trial %zu: no convergence (system %.3e)\n", i + 1, t.system_residual);
    }
    s += buf;
  }
  std::snprintf(buf, sizeof buf, "converged %d of %zu, skipped %d, max generator residual %.3e\n", converged,
                trials.size(), skipped, max_residual);
  return s + buf;
}

OracleReport numeric_oracle(const Presentation& pres, const std::vector<LaurentPoly>& generators,
                            const OracleOptions& opts) {
  const VarTable& t = *pres.vars;
  System sys;
  sys.eqs = pres.generators;
  std::vector<std::size_t> sampled;
  for (std::size_t v = 0; v < t.size(); ++v) {
    const std::string& name = t[v].name;
    bool is_param = name == "g" || name.rfind("nu", 0) == 0;
    (is_param ? sampled : sys.unknowns).push_back(v);
  }
  for (const auto& e : sys.eqs) {
    std::vector<LaurentPoly> row;
    for (std::size_t u : sys.unknowns) row.push_back(e.derivative(u));
    sys.jac.push_back(std::move(row));
  }
  std::vector<LaurentPoly> checks;
  for (const auto& g : generators) checks.push_back(g.rebased(pres.vars));

  OracleReport report;
  std::mt19937_64 rng(opts.seed);
  for (int trial = 0; trial < opts.trials; ++trial) {
    std::vector<Complex> x(t.size());
    for (std::size_t v : sampled) x[v] = random_point(rng);
    OracleTrial result;
    double best = std::numeric_limits<double>::infinity();
    for (int attempt = 0; attempt <= opts.restarts && !result.converged; ++attempt) {
      std::vector<Complex> y = x;
      for (std::size_t u : sys.unknowns) y[u] = random_point(rng);
      bool ok = solve(sys, y, opts);
      double r = sys.max_relative(y);
      best = std::min(best, r);
      if (ok) {
        result.converged = true;
        result.system_residual = r;
        for (const auto& c : checks) result.generator_residual = std::max(result.generator_residual, relative_residual(c, y));
      }
    }
    if (result.converged) {
      ++report.converged;
      report.max_residual = std::max(report.max_residual, result.generator_residual);
    } else {
      ++report.skipped;
      result.system_residual = best;
    }
    report.trials.push_back(result);
  }
  return report;
}

LaurentPoly corrupt_generator(const LaurentPoly& p) {
  if (p.is_zero()) throw StructuralError("cannot corrupt the zero polynomial");
  LaurentPoly r = p;
  r.add_term(p.leading_term().first, 1);
  return r;
}

}  // namespace kch
