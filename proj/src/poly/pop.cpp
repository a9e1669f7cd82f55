#include "sublevel/pop.hpp"

#include <cmath>
#include <fstream>

#include "sublevel/error.hpp"

namespace sublevel {

using nlohmann::json;
using poly::Monomial;
using poly::Polynomial;

void POPInstance::validate() const {
  auto check = [&](const Polynomial& p, const char* what) {
    if (p.nvars() != nvars) throw DimensionError(std::string(what) + " has wrong nvars");
  };
  check(objective, "objective");
  for (const auto& c : constraints) check(c.g, "constraint");
  if (domains.size() != nvars) throw DimensionError("domain list length differs from nvars");
  for (const auto& d : domains)
    if (d.kind == DomainKind::Box && !(d.lo <= d.hi))
      throw ConfigError("box domain with lo > hi");
}

poly::ReductionRule POPInstance::reduction_rule() const {
  poly::ReductionRule r(nvars);
  for (std::size_t i = 0; i < domains.size(); ++i) {
    if (domains[i].kind == DomainKind::PlusMinusOne) r.set(poly::Var(i), poly::Reduction::Involutory);
    if (domains[i].kind == DomainKind::Binary) r.set(poly::Var(i), poly::Reduction::Idempotent);
  }
  return r;
}

Polynomial POPInstance::box_polynomial(poly::Var v) const {
  const Domain& d = domains.at(v);
  Polynomial g(nvars);
  g.add_term(Monomial::variable(v, 2), -1.0);
  g.add_term(Monomial::variable(v), d.lo + d.hi);
  g.add_term(Monomial(), -d.lo * d.hi);
  return g;
}

std::vector<Constraint> POPInstance::effective_constraints() const {
  std::vector<Constraint> out = constraints;
  for (std::size_t i = 0; i < domains.size(); ++i)
    if (domains[i].kind == DomainKind::Box) out.push_back({box_polynomial(poly::Var(i)), Relation::GreaterEqual});
  return out;
}

json polynomial_to_json(const Polynomial& p) {
  json arr = json::array();
  for (const auto& [m, c] : p.terms()) {
    json term = json::array({c});
    for (const auto& t : m.terms()) term.push_back(json::array({t.var, t.exp}));
    arr.push_back(std::move(term));
  }
  return arr;
}

Polynomial polynomial_from_json(const json& j, std::size_t nvars) {
  if (!j.is_array()) throw ParseError("polynomial must be an array of terms");
  Polynomial p(nvars);
  for (const auto& term : j) {
    if (!term.is_array() || term.empty() || !term[0].is_number())
      throw ParseError("polynomial term must be [coeff, [var, pow], ...]");
    std::vector<Monomial::Term> ts;
    for (std::size_t k = 1; k < term.size(); ++k) {
      const auto& vp = term[k];
      if (!vp.is_array() || vp.size() != 2) throw ParseError("variable power must be [var, pow]");
      long long v = vp[0].get<long long>(), e = vp[1].get<long long>();
      if (v < 0 || std::size_t(v) >= nvars) throw DimensionError("variable index out of range in polynomial");
      if (e < 0) throw ParseError("negative exponent");
      ts.push_back({poly::Var(v), std::uint32_t(e)});
    }
    p.add_term(Monomial(std::move(ts)), term[0].get<double>());
  }
  return p;
}

namespace {

json domain_to_json(const Domain& d) {
  switch (d.kind) {
    case DomainKind::Free: return "free";
    case DomainKind::PlusMinusOne: return "pm1";
    case DomainKind::Binary: return "binary";
    case DomainKind::Box: return json{{"box", json::array({d.lo, d.hi})}};
  }
  return "free";
}

Domain domain_from_json(const json& j) {
  if (j.is_string()) {
    auto s = j.get<std::string>();
    if (s == "free") return Domain::free();
    if (s == "pm1") return Domain::pm1();
    if (s == "binary") return Domain::binary();
    throw ParseError("unknown domain '" + s + "'");
  }
  if (j.is_object() && j.contains("box")) {
    const auto& b = j.at("box");
    if (!b.is_array() || b.size() != 2) throw ParseError("box domain needs [lo, hi]");
    return Domain::box(b[0].get<double>(), b[1].get<double>());
  }
  throw ParseError("malformed domain entry");
}

}  // namespace

json pop_to_json(const POPInstance& pop) {
  json j;
  if (!pop.name.empty()) j["name"] = pop.name;
  j["nvars"] = pop.nvars;
  j["sense"] = pop.sense == Sense::Max ? "max" : "min";
  j["objective"] = polynomial_to_json(pop.objective);
  json cons = json::array();
  for (const auto& c : pop.constraints)
    cons.push_back({{"poly", polynomial_to_json(c.g)}, {"rel", c.rel == Relation::Equal ? "eq" : "ge"}});
  j["constraints"] = std::move(cons);
  json doms = json::array();
  for (const auto& d : pop.domains) doms.push_back(domain_to_json(d));
  j["domains"] = std::move(doms);
  return j;
}

POPInstance pop_from_json(const json& j) {
  try {
    POPInstance pop(j.at("nvars").get<std::size_t>());
    pop.name = j.value("name", std::string());
    std::string sense = j.value("sense", std::string("min"));
    if (sense != "min" && sense != "max") throw ParseError("sense must be min or max");
    pop.sense = sense == "max" ? Sense::Max : Sense::Min;
    pop.objective = polynomial_from_json(j.at("objective"), pop.nvars);
    if (j.contains("constraints")) {
      for (const auto& c : j.at("constraints")) {
        std::string rel = c.value("rel", std::string("ge"));
        if (rel != "ge" && rel != "eq") throw ParseError("rel must be ge or eq");
        pop.constraints.push_back({polynomial_from_json(c.at("poly"), pop.nvars),
                                   rel == "eq" ? Relation::Equal : Relation::GreaterEqual});
      }
    }
    if (j.contains("domains")) {
      const auto& d = j.at("domains");
      if (d.size() != pop.nvars) throw ParseError("domains length must equal nvars");
      for (std::size_t i = 0; i < pop.nvars; ++i) pop.domains[i] = domain_from_json(d[i]);
    }
    pop.validate();
    return pop;
  } catch (const json::exception& e) {
    throw ParseError(std::string("POP JSON: ") + e.what());
  }
}

POPInstance read_pop(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw ParseError(path + ": " + e.what());
  }
  return pop_from_json(j);
}

void write_pop(const POPInstance& pop, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path);
  out << pop_to_json(pop).dump(2) << '\n';
}

}  // namespace sublevel
