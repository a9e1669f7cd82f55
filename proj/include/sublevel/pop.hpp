#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "sublevel/poly.hpp"

namespace sublevel {

enum class Sense { Min, Max };
enum class Relation { GreaterEqual, Equal };

struct Constraint {
  poly::Polynomial g;
  Relation rel = Relation::GreaterEqual;
};

enum class DomainKind { Free, Box, PlusMinusOne, Binary };

struct Domain {
  DomainKind kind = DomainKind::Free;
  double lo = 0.0;
  double hi = 0.0;

  static Domain free() { return {}; }
  static Domain box(double lo, double hi) { return {DomainKind::Box, lo, hi}; }
  static Domain pm1() { return {DomainKind::PlusMinusOne, -1.0, 1.0}; }
  static Domain binary() { return {DomainKind::Binary, 0.0, 1.0}; }
  bool discrete() const { return kind == DomainKind::PlusMinusOne || kind == DomainKind::Binary; }
  bool operator==(const Domain&) const = default;
};

struct POPInstance {
  std::string name;
  std::size_t nvars = 0;
  Sense sense = Sense::Min;
  poly::Polynomial objective;
  std::vector<Constraint> constraints;
  std::vector<Domain> domains;

  POPInstance() = default;
  explicit POPInstance(std::size_t n)
      : nvars(n), objective(n), domains(n, Domain::free()) {}

  void validate() const;
  poly::ReductionRule reduction_rule() const;
  // Constraints followed by one (x-lo)(hi-x) >= 0 per Box domain.
  std::vector<Constraint> effective_constraints() const;
  poly::Polynomial box_polynomial(poly::Var v) const;
};

nlohmann::json polynomial_to_json(const poly::Polynomial& p);
poly::Polynomial polynomial_from_json(const nlohmann::json& j, std::size_t nvars);

nlohmann::json pop_to_json(const POPInstance& pop);
POPInstance pop_from_json(const nlohmann::json& j);
POPInstance read_pop(const std::string& path);
void write_pop(const POPInstance& pop, const std::string& path);

}  // namespace sublevel
