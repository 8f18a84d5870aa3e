#include "cli.hpp"

#include <CLI11.hpp>
#include <map>
#include <sstream>

#include "kch/homfly.hpp"
#include "kch/qtorus.hpp"
#include "kch/serialize.hpp"

namespace kch::cli {

namespace {

BraidWord braid_of(const RunConfig& cfg) { return BraidWord::parse(cfg.braid, cfg.strands); }

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

std::string describe(const BraidWord& b) {
  std::ostringstream s;
  s << (b.letters.empty() ? "(empty)" : b.to_string()) << " on " << b.strands << (b.strands == 1 ? " strand" : " strands");
  return s.str();
}

struct Eliminated {
  Presentation pres;
  Elimination elim;
};

Eliminated augmentation(const BraidWord& b, const RunConfig& cfg) {
  RelationOptions opts;
  opts.conventions = cfg.conventions;
  Presentation pres = relations(b, opts);
  Elimination elim = eliminate(IdealGens{RingSpec(pres.vars), pres.generators}, pres.eliminate, cfg.limits);
  return {std::move(pres), std::move(elim)};
}

struct Step {
  std::string name;
  bool pass;
  std::string detail;
};

CommandResult report(const std::vector<Step>& steps, bool json) {
  bool all = true;
  for (const auto& s : steps) all = all && s.pass;
  CommandResult r;
  r.exit_code = all ? kPass : kMathFailure;
  if (json) {
    Json j;
    j["pass"] = all;
    j["steps"] = Json::array();
    for (const auto& s : steps) j["steps"].push_back({{"name", s.name}, {"pass", s.pass}, {"detail", s.detail}});
    r.output = dump(j);
  } else {
    for (const auto& s : steps) {
      r.output += s.name + ": " + (s.pass ? "PASS" : "FAIL");
      if (!s.detail.empty()) r.output += " (" + s.detail + ")";
      r.output += "\n";
    }
    r.output += std::string("result: ") + (all ? "PASS" : "FAIL") + "\n";
  }
  return r;
}

}  // namespace

CommandResult cmd_present(const RunConfig& cfg) {
  BraidWord b = braid_of(cfg);
  RelationOptions opts;
  opts.conventions = cfg.conventions;
  Presentation pres = relations(b, opts);
  CommandResult r;
  if (cfg.json) {
    r.output = dump(to_json(pres));
    return r;
  }
  std::ostringstream s;
  s << "braid: " << describe(b) << ", " << pres.components << (pres.components == 1 ? " component" : " components")
    << "\n";
  s << "relations: " << pres.generators.size() << "\n";
  for (std::size_t i = 0; i < pres.generators.size(); ++i) s << pres.labels[i] << ": " << pres.generators[i].to_string() << "\n";
  r.output = s.str();
  return r;
}

CommandResult cmd_augpoly(const RunConfig& cfg) {
  BraidWord b = braid_of(cfg);
  Eliminated e = augmentation(b, cfg);
  CommandResult r;
  if (!e.elim.complete) {
    r.exit_code = kResource;
    if (cfg.json) {
      r.output = dump({{"status", "incomplete"}, {"reason", e.elim.incomplete_reason}});
    } else {
      r.output = "status: incomplete (" + e.elim.incomplete_reason + ")\n";
    }
    return r;
  }
  if (cfg.json) {
    r.output = dump({{"status", "complete"}, {"spairs", e.elim.stats.spairs}, {"ideal", to_json(e.elim.ideal)}});
    return r;
  }
  std::ostringstream s;
  s << "status: complete\n";
  s << "generators: " << e.elim.ideal.gens.size() << "\n";
  for (const auto& p : e.elim.ideal.gens) s << p.to_string() << "\n";
  r.output = s.str();
  return r;
}

CommandResult cmd_verify_unknot(const RunConfig& cfg) {
  const Conventions& conv = cfg.conventions;
  std::vector<Step> steps;

  TorusElem op = unknot_operator(conv.torus_sign);
  AnnihilationReport ann = annihilates(op, colored_unknot(), {1}, {8}, 3, 6);
  steps.push_back({"annihilation", ann.all_zero,
                   std::to_string(ann.points - ann.failures.size()) + "/" + std::to_string(ann.points) +
                       " points vanish"});

  // nu * (q = 1 limit) against the unknot relation times -nu^2 L
  LaurentPoly limit = classical_limit(op);
  const VarTablePtr& t = limit.vars();
  RelationOptions opts;
  opts.conventions = conv;
  Presentation pres = relations(BraidWord(1, {}), opts);
  LaurentPoly relation = pres.generators.at(0).rebased(t);
  LaurentPoly nu = LaurentPoly::variable(t, "nu");
  LaurentPoly lhs = nu * limit;
  LaurentPoly rhs = -(nu.pow(2) * LaurentPoly::variable(t, "L")) * relation;
  steps.push_back({"classical-limit", lhs == rhs, "limit " + limit.to_string()});

  Elimination elim = eliminate(IdealGens{RingSpec(pres.vars), pres.generators}, pres.eliminate, cfg.limits);
  if (!elim.complete) throw ResourceError("unknot elimination: " + elim.incomplete_reason);
  IdealGens from_operator{RingSpec(t), {limit}};
  steps.push_back({"ideal-match", ideals_equal(elim.ideal, from_operator, cfg.limits), ""});

  BraidWord trefoil(2, {1, 1, 1});
  ClosureInfo cl = closure(trefoil);
  AugRing ring(trefoil.strands, static_cast<int>(cl.component_count()));
  AlgebraMap ps = psi(ring, cl, conv);
  AugMatrix L = phiL(ring, trefoil), R = phiR(ring, trefoil);
  bool left = ps(L) == build_D_beta(ring, cl) * L * build_D(ring, cl, -1);
  bool right = ps(R) == build_D(ring, cl) * R * build_D_beta(ring, cl, -1);
  steps.push_back({"psi-conjugation", left && right,
                   std::string("left ") + (left ? "holds" : "fails") + ", right " + (right ? "holds" : "fails")});
  return report(steps, cfg.json);
}

CommandResult cmd_homfly(const RunConfig& cfg) {
  RatFunc p = homflypt(braid_of(cfg));
  CommandResult r;
  r.output = cfg.json ? dump(to_json(p)) : p.to_string() + "\n";
  return r;
}

CommandResult cmd_markov(const RunConfig& cfg) {
  BraidWord base = braid_of(cfg);
  std::vector<std::pair<std::string, BraidWord>> others;
  if (cfg.against.empty()) {
    const int n = base.strands;
    if (n < 2) throw StructuralError("markov-test needs a braid on at least two strands");
    std::vector<BraidWord> conjugators{BraidWord(n, {1}), BraidWord(n, {-(n - 1)}),
                                       BraidWord(n, {1, n == 2 ? 1 : 2})};
    for (const auto& w : conjugators) others.emplace_back("conjugate by " + w.to_string(), conjugate(base, w));
    others.emplace_back("stabilize +1", stabilize(base, 1));
    others.emplace_back("stabilize -1", stabilize(base, -1));
  } else {
    for (const auto& text : cfg.against) others.emplace_back("against", BraidWord::parse(text));
  }

  Eliminated ref = augmentation(base, cfg);
  if (!ref.elim.complete) throw ResourceError(base.to_string() + ": " + ref.elim.incomplete_reason);
  std::vector<Step> steps;
  for (const auto& [label, b] : others) {
    Eliminated e = augmentation(b, cfg);
    if (!e.elim.complete) throw ResourceError(b.to_string() + ": " + e.elim.incomplete_reason);
    bool equal = false;
    try {
      equal = ideals_equal(ref.elim.ideal, e.elim.ideal, cfg.limits);
    } catch (const StructuralError&) {
      equal = false;  // different component counts
    }
    steps.push_back({label + " -> " + describe(b), equal, equal ? "equal ideals" : "different ideals"});
  }
  return report(steps, cfg.json);
}

CommandResult run_command(const RunConfig& cfg) {
  static const std::map<std::string, CommandResult (*)(const RunConfig&)> table{
      {"present", cmd_present},   {"augpoly", cmd_augpoly},         {"verify-unknot", cmd_verify_unknot},
      {"homfly", cmd_homfly},     {"markov-test", cmd_markov}};
  CommandResult r;
  auto it = table.find(cfg.command);
  if (it == table.end()) {
    r.exit_code = kUsage;
    r.error = "unknown command '" + cfg.command + "'\n";
    return r;
  }
  try {
    return it->second(cfg);
  } catch (const ResourceError& e) {
    r.exit_code = kResource;
    r.output = cfg.json ? dump({{"status", "incomplete"}, {"reason", e.what()}}) : std::string("status: incomplete (") + e.what() + ")\n";
  } catch (const ParseError& e) {
    r.exit_code = kUsage;
    r.error = std::string("parse error: ") + e.what() + "\n";
  } catch (const StructuralError& e) {
    r.exit_code = kUsage;
    r.error = std::string("invalid input: ") + e.what() + "\n";
  } catch (const Error& e) {
    r.exit_code = kMathFailure;
    r.error = std::string("error: ") + e.what() + "\n";
  }
  return r;
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Knot contact homology and HOMFLYPT calculator"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto common = [&cfg](CLI::App* sub, bool needs_braid) {
    auto* opt = sub->add_option("braid", cfg.braid, "braid word, e.g. \"1 -2 1 -2\" (use -- before words starting with -)");
    if (needs_braid) opt->required();
    sub->add_option("-n,--strands", cfg.strands, "strand count")->check(CLI::PositiveNumber);
    sub->add_flag("--json", cfg.json, "JSON output");
    sub->add_option("--spair-budget", cfg.limits.spair_budget, "S-pair budget for Groebner bases")
        ->check(CLI::PositiveNumber);
    sub->add_option("--timeout-s", cfg.limits.timeout_s, "wall-clock limit per Groebner basis")
        ->check(CLI::PositiveNumber);
    sub->add_option("--lambda-sign", cfg.conventions.lambda_nu_sign, "sign of the nu exponent in L'")
        ->check(CLI::IsMember({-1, 1}));
    sub->add_option("--psi-sign", cfg.conventions.psi_sign, "sign of the (-g) exponent in Psi")
        ->check(CLI::IsMember({-1, 1}));
    sub->add_option("--torus-sign", cfg.conventions.torus_sign, "commutation constant c in L nu = q^c nu L")
        ->check(CLI::IsMember({-1, 1}));
    return sub;
  };
  common(app.add_subcommand("present", "print the degree-0 relations"), true);
  common(app.add_subcommand("augpoly", "eliminate the a_ij to get the augmentation ideal"), true);
  common(app.add_subcommand("verify-unknot", "run the unknot recursion checks"), false);
  common(app.add_subcommand("homfly", "HOMFLYPT polynomial of the closure"), true);
  auto* markov = common(app.add_subcommand("markov-test", "compare augmentation ideals across Markov moves"), true);
  markov->add_option("--against", cfg.against, "compare with these braids instead of the built-in moves");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kPass : kUsage;
  }
  cfg.command = app.get_subcommands().front()->get_name();
  CommandResult r = run_command(cfg);
  out << r.output;
  err << r.error;
  return r.exit_code;
}

}  // namespace kch::cli
