#include "kch/serialize.hpp"

namespace kch {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("JSON field '") + key + "' missing", 0);
  return j.at(key);
}

Json ring_json(const RingSpec& r) {
  Json j = table_to_json(r.vars);
  Json elim = Json::array();
  for (std::size_t v : r.eliminate) elim.push_back((*r.vars)[v].name);
  j["eliminate"] = elim;
  return j;
}

RingSpec ring_from_json(const Json& j) {
  VarTablePtr t = table_from_json(j);
  std::vector<std::size_t> elim;
  if (j.contains("eliminate")) {
    for (const auto& n : j.at("eliminate")) elim.push_back(t->index(n.get<std::string>()));
  }
  return RingSpec(t, std::move(elim));
}

Json poly_terms(const LaurentPoly& p) {
  Json terms = Json::array();
  for (const auto& [e, c] : p.terms()) {
    terms.push_back({{"exp", e}, {"num", c.get_num().get_str()}, {"den", c.get_den().get_str()}});
  }
  return terms;
}

}  // namespace

Json table_to_json(const VarTablePtr& t) {
  Json names = Json::array(), inv = Json::array();
  for (const auto& v : t->vars()) {
    names.push_back(v.name);
    inv.push_back(v.invertible);
  }
  return {{"vars", names}, {"invertible", inv}};
}

VarTablePtr table_from_json(const Json& j) {
  const Json& names = field(j, "vars");
  std::vector<VarTable::Var> vars;
  for (std::size_t i = 0; i < names.size(); ++i) {
    bool inv = true;
    if (j.contains("invertible")) inv = j.at("invertible").at(i).get<bool>();
    vars.push_back({names.at(i).get<std::string>(), inv});
  }
  return VarTable::make(std::move(vars));
}

Json to_json(const LaurentPoly& p) {
  Json j = table_to_json(p.vars());
  j["terms"] = poly_terms(p);
  return j;
}

LaurentPoly poly_from_json(const Json& j) { return poly_from_json(j, table_from_json(j)); }

LaurentPoly poly_from_json(const Json& j, const VarTablePtr& table) {
  if (j.contains("vars") && !same_table(table_from_json(j), table)) {
    throw StructuralError("polynomial JSON uses a different variable table");
  }
  LaurentPoly p(table);
  for (const auto& t : field(j, "terms")) {
    Exponent e = field(t, "exp").get<Exponent>();
    Rational c;
    try {
      c = Rational(Integer(field(t, "num").get<std::string>()), Integer(field(t, "den").get<std::string>()));
    } catch (const std::invalid_argument&) {
      throw ParseError("coefficient is not a decimal integer", 0);
    }
    if (c.get_den() == 0) throw DivisionError("zero denominator in polynomial JSON");
    c.canonicalize();
    p.add_term(e, c);
  }
  return p;
}

Json to_json(const RatFunc& f) { return {{"num", to_json(f.num())}, {"den", to_json(f.den())}}; }

RatFunc ratfunc_from_json(const Json& j) {
  LaurentPoly num = poly_from_json(field(j, "num"));
  return RatFunc(num, poly_from_json(field(j, "den"), num.vars()));
}

Json to_json(const IdealGens& g) {
  Json gens = Json::array();
  for (const auto& p : g.gens) gens.push_back({{"terms", poly_terms(p)}});
  return {{"ring", ring_json(g.ring)}, {"generators", gens}};
}

IdealGens ideal_from_json(const Json& j) {
  IdealGens g;
  g.ring = ring_from_json(field(j, "ring"));
  for (const auto& p : field(j, "generators")) g.gens.push_back(poly_from_json(p, g.ring.vars));
  return g;
}

Json to_json(const Presentation& p) {
  Json j = to_json(IdealGens{RingSpec(p.vars, p.eliminate), p.generators});
  j["labels"] = p.labels;
  j["braid"] = {{"strands", p.braid.strands}, {"letters", p.braid.letters}};
  j["components"] = p.components;
  return j;
}

Presentation presentation_from_json(const Json& j) {
  IdealGens g = ideal_from_json(j);
  Presentation p;
  p.vars = g.ring.vars;
  p.generators = std::move(g.gens);
  p.eliminate = g.ring.eliminate;
  if (j.contains("labels")) p.labels = j.at("labels").get<std::vector<std::string>>();
  const Json& b = field(j, "braid");
  p.braid = BraidWord(field(b, "strands").get<int>(), field(b, "letters").get<std::vector<int>>());
  p.components = j.value("components", 1);
  return p;
}

Json to_json(const ClosureInfo& c) {
  auto one_based = [](std::vector<int> v) {
    for (int& x : v) ++x;
    return v;
  };
  Json comps = Json::array();
  for (const auto& comp : c.components) comps.push_back(one_based(comp));
  return {{"strands", c.strands},
          {"perm", one_based(c.perm)},
          {"components", comps},
          {"leftmost", one_based(c.leftmost)},
          {"wr_total", c.wr_total},
          {"self_wr", c.self_wr},
          {"mixed_wr", c.mixed_wr},
          {"d", c.d}};
}

}  // namespace kch
