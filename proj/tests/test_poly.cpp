#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "sublevel/error.hpp"
#include "sublevel/poly.hpp"
#include "sublevel/pop.hpp"

using namespace sublevel;
using namespace sublevel::poly;

namespace {

Monomial mono(std::vector<Monomial::Term> t) { return Monomial(std::move(t)); }

Polynomial random_poly(std::mt19937_64& rng, std::size_t n, int terms) {
  Polynomial p(n);
  for (int k = 0; k < terms; ++k) {
    std::vector<Monomial::Term> t;
    int nv = int(rng() % 3);
    for (int a = 0; a < nv; ++a) t.push_back({Var(rng() % n), std::uint32_t(1 + rng() % 3)});
    p.add_term(Monomial(t), double(int(rng() % 19) - 9));
  }
  return p;
}

Monomial random_mono(std::mt19937_64& rng, std::size_t n) {
  std::vector<Monomial::Term> t;
  int nv = int(rng() % 5);
  for (int a = 0; a < nv; ++a) t.push_back({Var(rng() % n), std::uint32_t(1 + rng() % 4)});
  return Monomial(t);
}

}  // namespace

TEST_CASE("monomial canonical form") {
  auto m = mono({{3, 1}, {1, 2}, {3, 2}, {0, 0}});
  CHECK(m.degree() == 5);
  CHECK(m.exponent(3) == 3);
  CHECK(m.exponent(0) == 0);
  CHECK(m.to_string() == "x1^2*x3^3");
  for (const auto& t : m.terms()) CHECK(t.exp > 0);
}

TEST_CASE("graded order yields the expected degree-2 basis") {
  std::vector<Var> v{0, 1};
  auto b = monomial_basis(v, 2);
  std::vector<std::string> names;
  for (const auto& m : b) names.push_back(m.to_string());
  std::vector<std::string> expected{"1", "x0", "x1", "x0^2", "x0*x1", "x1^2"};
  CHECK(names == expected);
}

TEST_CASE("poly_mul examples") {
  const std::size_t n = 3;
  auto x1 = Polynomial::variable(n, 1), x2 = Polynomial::variable(n, 2);
  CHECK(poly_mul(x1 + x2, x1 - x2) == poly_mul(x1, x1) - poly_mul(x2, x2));

  std::mt19937_64 rng(1);
  auto p = random_poly(rng, n, 10);
  CHECK(poly_mul(Polynomial::constant(n, 1.0), p) == p);

  Polynomial a(n), b(n), c(n);
  a.add_term(mono({{1, 1}, {2, 1}}), 2.0);
  b.add_term(mono({{1, 1}}), 3.0);
  c.add_term(mono({{1, 2}, {2, 1}}), 6.0);
  CHECK(poly_mul(a, b) == c);

  CHECK_THROWS_AS(poly_mul(Polynomial(2), Polynomial(3)), DimensionError);
}

TEST_CASE("cancellation drops zero coefficients") {
  auto x = Polynomial::variable(2, 0);
  auto z = x - x;
  CHECK(z.is_zero());
  CHECK(z.size() == 0);
  CHECK_THROWS_AS(Polynomial(2).add_term(Monomial::variable(2), 1.0), DimensionError);
}

TEST_CASE("distributivity holds exactly on integer coefficients") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    auto p = random_poly(rng, 5, 20), q = random_poly(rng, 5, 20), r = random_poly(rng, 5, 20);
    CHECK(poly_mul(p + q, r) == poly_mul(p, r) + poly_mul(q, r));
  }
}

TEST_CASE("support is in canonical order") {
  std::mt19937_64 rng(3);
  auto p = random_poly(rng, 4, 20);
  auto s = p.support();
  for (std::size_t k = 1; k < s.size(); ++k) CHECK(s[k - 1] < s[k]);
}

TEST_CASE("reduce_monomial examples") {
  auto m = mono({{1, 3}, {2, 2}});
  CHECK(reduce_monomial(m, ReductionRule::uniform(3, Reduction::Involutory)) == mono({{1, 1}}));
  CHECK(reduce_monomial(m, ReductionRule::uniform(3, Reduction::Idempotent)) == mono({{1, 1}, {2, 1}}));
  auto xy = mono({{1, 1}, {2, 1}});
  CHECK(reduce_monomial(xy, ReductionRule(3)) == xy);
}

TEST_CASE("reduction is idempotent and never raises degree") {
  std::mt19937_64 rng(11);
  for (auto kind : {Reduction::None, Reduction::Involutory, Reduction::Idempotent}) {
    auto rule = ReductionRule::uniform(6, kind);
    for (int k = 0; k < 10000; ++k) {
      auto m = random_mono(rng, 6);
      auto r = reduce_monomial(m, rule);
      CHECK(reduce_monomial(r, rule) == r);
      CHECK(r.degree() <= m.degree());
    }
  }
}

TEST_CASE("riesz_index examples") {
  MomentDictionary d(ReductionRule::uniform(4, Reduction::Involutory));
  CHECK(riesz_index(d, Monomial()) == 0);
  auto i3 = riesz_index(d, Monomial::variable(3));
  CHECK(i3 == 1);
  CHECK(riesz_index(d, Monomial::variable(3)) == i3);
  CHECK(riesz_index(d, Monomial::variable(1, 2)) == 0);
  d.freeze();
  CHECK_THROWS_AS(d.index(Monomial::variable(0)), StructuralError);
  CHECK(d.index(Monomial::variable(3, 3)) == i3);
}

TEST_CASE("dictionary is a bijection on reduced monomials") {
  std::mt19937_64 rng(13);
  for (auto kind : {Reduction::None, Reduction::Involutory, Reduction::Idempotent}) {
    auto rule = ReductionRule::uniform(8, kind);
    MomentDictionary d(rule);
    std::vector<std::pair<Monomial, std::size_t>> seen;
    for (int k = 0; k < 10000; ++k) {
      auto m = random_mono(rng, 8);
      seen.emplace_back(m, d.index(m));
    }
    for (const auto& [m, idx] : seen) CHECK(d.monomial(idx) == reduce_monomial(m, rule));
    for (std::size_t i = 0; i < d.size(); ++i) CHECK(*d.find(d.monomial(i)) == i);
  }
}

TEST_CASE("monomial_basis examples and sizes") {
  std::vector<Var> v01{0, 1};
  CHECK(monomial_basis(v01, 1).size() == 3);
  CHECK(monomial_basis(v01, 2).size() == 6);
  std::vector<Var> none;
  auto b = monomial_basis(none, 3);
  REQUIRE(b.size() == 1);
  CHECK(b[0].is_constant());
  for (unsigned n = 1; n <= 8; ++n) {
    std::vector<Var> v;
    for (unsigned i = 0; i < n; ++i) v.push_back(Var(2 * i + 1));
    for (unsigned d = 0; d <= 4; ++d) {
      auto basis = monomial_basis(v, d);
      CHECK(basis.size() == binomial(n + d, d));
      for (std::size_t k = 1; k < basis.size(); ++k) CHECK(basis[k - 1] < basis[k]);
    }
  }
}

TEST_CASE("POP domains imply reduction rules") {
  POPInstance pop(3);
  pop.domains = {Domain::pm1(), Domain::binary(), Domain::box(0, 2)};
  auto rule = pop.reduction_rule();
  CHECK(rule.kind(0) == Reduction::Involutory);
  CHECK(rule.kind(1) == Reduction::Idempotent);
  CHECK(rule.kind(2) == Reduction::None);
  auto eff = pop.effective_constraints();
  REQUIRE(eff.size() == 1);
  double at[3] = {0, 0, 1};
  CHECK(evaluate(eff[0].g, at) == doctest::Approx(1.0));
}

TEST_CASE("POP JSON round trip") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 20; ++trial) {
    POPInstance pop(4);
    pop.name = "p" + std::to_string(trial);
    pop.sense = trial % 2 ? Sense::Max : Sense::Min;
    pop.objective = random_poly(rng, 4, 8);
    pop.constraints.push_back({random_poly(rng, 4, 5), Relation::GreaterEqual});
    pop.constraints.push_back({random_poly(rng, 4, 5), Relation::Equal});
    pop.domains = {Domain::free(), Domain::pm1(), Domain::binary(), Domain::box(-1.5, 2.25)};
    auto back = pop_from_json(pop_to_json(pop));
    CHECK(back.name == pop.name);
    CHECK(back.sense == pop.sense);
    CHECK(back.objective == pop.objective);
    REQUIRE(back.constraints.size() == 2);
    CHECK(back.constraints[1].rel == Relation::Equal);
    CHECK(back.constraints[0].g == pop.constraints[0].g);
    CHECK(back.domains == pop.domains);
    CHECK(pop_to_json(back).dump() == pop_to_json(pop).dump());
  }
}

TEST_CASE("POP JSON rejects malformed documents") {
  CHECK_THROWS_AS(pop_from_json(nlohmann::json::parse(R"({"nvars": 2, "objective": [[1, [5, 1]]]})")), Error);
  CHECK_THROWS_AS(pop_from_json(nlohmann::json::parse(R"({"objective": []})")), ParseError);
  CHECK_THROWS_AS(
      pop_from_json(nlohmann::json::parse(R"({"nvars": 1, "objective": [], "constraints": [{"poly": [], "rel": "le"}]})")),
      ParseError);
}
