#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "sublevel/error.hpp"
#include "sublevel/relax.hpp"

using namespace sublevel;
using namespace sublevel::relax;
using poly::Monomial;
using poly::Polynomial;

namespace {

Polynomial sq(std::size_t n, Var v) {
  Polynomial p(n);
  p.add_term(Monomial::variable(v, 2), 1.0);
  return p;
}

// min -|x|^2 s.t. 1 - |x_{0:4}|^2 >= 0, 1 - |x_{2:6}|^2 >= 0
POPInstance two_balls() {
  POPInstance pop(6);
  for (Var i = 0; i < 6; ++i) pop.objective -= sq(6, i);
  Polynomial g1 = Polynomial::constant(6, 1.0), g2 = Polynomial::constant(6, 1.0);
  for (Var i = 0; i < 4; ++i) g1 -= sq(6, i);
  for (Var i = 2; i < 6; ++i) g2 -= sq(6, i);
  pop.constraints = {{g1, Relation::GreaterEqual}, {g2, Relation::GreaterEqual}};
  return pop;
}

POPInstance one_box(std::size_t n) {
  POPInstance pop(n);
  pop.domains[0] = Domain::box(-1, 1);
  for (Var i = 0; i + 1 < n; ++i) pop.objective.add_term(Monomial::variable(i) * Monomial::variable(i + 1), 1.0);
  return pop;
}

std::vector<std::vector<Var>> subsets_of(const SubsetPlan& p, std::size_t slot, std::size_t clique) {
  for (const auto& e : p.entries)
    if (e.slot == slot && e.clique == clique) return e.subsets;
  return {};
}

std::vector<std::size_t> sizes(const Relaxation& r) {
  std::vector<std::size_t> s;
  for (const auto& b : r.blocks) s.push_back(b.size);
  return s;
}

POPInstance random_maxcut(std::mt19937_64& rng, std::size_t n, double p) {
  POPInstance pop(n);
  pop.sense = Sense::Max;
  std::uniform_real_distribution<double> u(0, 1);
  for (Var i = 0; i < n; ++i) {
    pop.domains[i] = Domain::pm1();
    for (Var j = i + 1; j < n; ++j)
      if (u(rng) < p) pop.objective.add_term(Monomial::variable(i) * Monomial::variable(j), -0.5);
  }
  return pop;
}

}  // namespace

TEST_CASE("moment_block examples") {
  poly::MomentDictionary d;
  std::vector<Var> v0{0};
  auto b = moment_block(d, v0, 1);
  CHECK(b.size == 2);
  REQUIRE(b.entries.size() == 3);
  CHECK(d.monomial(b.entries[0].moment).is_constant());
  CHECK(d.monomial(b.entries[1].moment) == Monomial::variable(0));
  CHECK(d.monomial(b.entries[2].moment) == Monomial::variable(0, 2));

  poly::MomentDictionary di(poly::ReductionRule::uniform(2, poly::Reduction::Involutory));
  std::vector<Var> v01{0, 1};
  auto bi = moment_block(di, v01, 1);
  for (const auto& e : bi.entries)
    if (e.row == e.col) CHECK(e.moment == 0);

  poly::MomentDictionary d8;
  std::vector<Var> v8{0, 1, 2, 3, 4, 5, 6, 7};
  CHECK(moment_block(d8, v8, 2).size == 45);
}

TEST_CASE("localizing_block examples") {
  poly::MomentDictionary d;
  std::vector<Var> v0{0};
  Polynomial g = Polynomial::constant(1, 1.0) - sq(1, 0);
  auto b = localizing_block(d, g, v0, 0);
  CHECK(b.size == 1);
  REQUIRE(b.entries.size() == 2);
  CHECK(b.entries[0].moment == 0);
  CHECK(b.entries[0].coeff == 1.0);
  CHECK(d.monomial(b.entries[1].moment) == Monomial::variable(0, 2));
  CHECK(b.entries[1].coeff == -1.0);

  poly::MomentDictionary d1, d2;
  std::vector<Var> v01{0, 1};
  auto lb = localizing_block(d1, Polynomial::constant(2, 1.0), v01, 1);
  auto mb = moment_block(d2, v01, 1);
  CHECK(lb.entries == mb.entries);

  poly::MomentDictionary d3;
  auto lx = localizing_block(d3, Polynomial::variable(1, 0), v0, 1);
  std::vector<std::string> names;
  for (const auto& e : lx.entries) names.push_back(d3.monomial(e.moment).to_string());
  std::vector<std::string> want{"x0", "x0^2", "x0^3"};
  CHECK(names == want);

  poly::MomentDictionary d4;
  CHECK_THROWS_AS(localizing_block(d4, Polynomial::variable(2, 1), v0, 1), DimensionError);
}

TEST_CASE("H2 takes ordered windows, with wraparound") {
  auto pop = one_box(6);
  SublevelConfig cfg;
  cfg.mode = Mode::Dense;
  cfg.level = 4;
  cfg.depth = 2;
  auto cover = working_cover(pop, Mode::Dense);
  auto plan = select_subsets(pop, cover, cfg);
  std::vector<std::vector<Var>> want{{0, 1, 2, 3}, {1, 2, 3, 4}};
  CHECK(subsets_of(plan, 0, 0) == want);

  auto pop5 = one_box(5);
  cfg.depth = 5;
  auto plan5 = select_subsets(pop5, working_cover(pop5, Mode::Dense), cfg);
  auto s = subsets_of(plan5, 0, 0);
  REQUIRE(s.size() == 5);
  CHECK(s[4] == std::vector<Var>{0, 1, 2, 4});
}

TEST_CASE("cyclic windows have exactly l elements") {
  std::vector<Var> c{2, 5, 7, 9};
  auto w = cyclic_windows(c, 3);
  REQUIRE(w.size() == 4);
  for (const auto& x : w) CHECK(x.size() == 3);
  CHECK(w[3] == std::vector<Var>{2, 5, 9});
  CHECK(cyclic_windows(c, 0).empty());
}

TEST_CASE("H1 is reproducible for a fixed seed") {
  std::mt19937_64 rng(3);
  auto pop = random_maxcut(rng, 12, 0.5);
  auto cover = working_cover(pop, Mode::Dense);
  SublevelConfig cfg;
  cfg.mode = Mode::Dense;
  cfg.level = 4;
  cfg.depth = 3;
  cfg.heuristic = Heuristic::H1;
  cfg.seed = 99;
  auto a = select_subsets(pop, cover, cfg), b = select_subsets(pop, cover, cfg);
  REQUIRE(a.entries.size() == b.entries.size());
  for (std::size_t k = 0; k < a.entries.size(); ++k) CHECK(a.entries[k].subsets == b.entries[k].subsets);
  bool differs = false;
  for (std::uint64_t seed = 100; seed < 110 && !differs; ++seed) {
    cfg.seed = seed;
    auto c = select_subsets(pop, cover, cfg);
    for (std::size_t k = 0; k < a.entries.size(); ++k) differs |= a.entries[k].subsets != c.entries[k].subsets;
  }
  CHECK(differs);
}

TEST_CASE("heuristics needing auxiliary data fail without it") {
  auto pop = one_box(6);
  auto cover = working_cover(pop, Mode::Dense);
  SublevelConfig cfg;
  cfg.mode = Mode::Dense;
  cfg.level = 3;
  cfg.depth = 1;
  for (auto h : {Heuristic::H3, Heuristic::H4, Heuristic::H35, Heuristic::H45, Heuristic::ProblemSpecific}) {
    cfg.heuristic = h;
    CHECK_THROWS_AS(select_subsets(pop, cover, cfg), ConfigError);
  }
  for (auto h : {Heuristic::H5, Heuristic::H6}) {
    cfg.heuristic = h;
    CHECK_NOTHROW(select_subsets(pop, cover, cfg));
  }
}

TEST_CASE("H3 and H4 rank windows by submatrix infinity norm") {
  auto pop = one_box(4);
  auto cover = working_cover(pop, Mode::Dense);
  SublevelConfig cfg;
  cfg.mode = Mode::Dense;
  cfg.level = 2;
  cfg.depth = 1;
  HeuristicInput aux;
  Eigen::MatrixXd M = Eigen::MatrixXd::Identity(5, 5) * 0.1;
  M(0, 0) = 1.0;
  M(3, 4) = M(4, 3) = 5.0;  // variables 2 and 3
  aux.moment = {M};
  cfg.heuristic = Heuristic::H3;
  CHECK(subsets_of(select_subsets(pop, cover, cfg, aux), 0, 0) == std::vector<std::vector<Var>>{{2, 3}});
  Eigen::MatrixXd L = Eigen::MatrixXd::Zero(4, 4);
  L(3, 0) = L(0, 3) = -7.0;
  aux.laplacian = L;
  cfg.heuristic = Heuristic::H4;
  CHECK(subsets_of(select_subsets(pop, cover, cfg, aux), 0, 0) == std::vector<std::vector<Var>>{{0, 3}});
}

TEST_CASE("H3 separates windows whose entries all share the same magnitude bound") {
  auto pop = one_box(4);
  auto cover = working_cover(pop, Mode::Dense);
  SublevelConfig cfg;
  cfg.mode = Mode::Dense;
  cfg.level = 2;
  cfg.depth = 2;
  cfg.heuristic = Heuristic::H3;
  Eigen::MatrixXd M = Eigen::MatrixXd::Identity(5, 5);
  M(1, 2) = M(2, 1) = 0.2;
  M(2, 3) = M(3, 2) = -0.9;
  M(3, 4) = M(4, 3) = 0.5;
  M(4, 1) = M(1, 4) = 0.1;
  HeuristicInput aux;
  aux.moment = {M};
  CHECK(subsets_of(select_subsets(pop, cover, cfg, aux), 0, 0) == std::vector<std::vector<Var>>{{1, 2}, {2, 3}});
}

TEST_CASE("H5 and H6 rank by clique containment") {
  POPInstance pop(5);
  pop.domains[1] = Domain::box(0, 1);
  auto add = [&](Var a, Var b) { pop.objective.add_term(Monomial::variable(a) * Monomial::variable(b), 1.0); };
  add(0, 1);
  add(1, 2);
  add(0, 2);
  add(1, 3);
  add(3, 4);
  add(1, 4);
  auto cover = working_cover(pop, Mode::Sparse);
  REQUIRE(cover.size() == 2);
  SublevelConfig cfg;
  cfg.level = 1;
  cfg.depth = 1;
  cfg.heuristic = Heuristic::H5;
  auto plan = select_subsets(pop, cover, cfg);
  for (const auto& e : plan.entries) CHECK(e.subsets == std::vector<std::vector<Var>>{{1}});
  cfg.heuristic = Heuristic::H6;
  plan = select_subsets(pop, cover, cfg);
  for (const auto& e : plan.entries) CHECK(e.subsets[0] != std::vector<Var>{1});
}

TEST_CASE("depth-q plans are prefixes of depth-(q+1) plans") {
  std::mt19937_64 rng(8);
  auto pop = random_maxcut(rng, 14, 0.3);
  auto cover = working_cover(pop, Mode::Sparse);
  HeuristicInput aux;
  for (const auto& c : cover.cliques) aux.moment.push_back(Eigen::MatrixXd::Random(c.size() + 1, c.size() + 1));
  aux.laplacian = Eigen::MatrixXd::Random(14, 14);
  for (auto h : {Heuristic::H1, Heuristic::H2, Heuristic::H3, Heuristic::H4, Heuristic::H5, Heuristic::H6,
                 Heuristic::H35, Heuristic::H45}) {
    SublevelConfig cfg;
    cfg.heuristic = h;
    cfg.level = 3;
    cfg.seed = 4;
    for (unsigned q = 1; q < 4; ++q) {
      cfg.depth = q;
      auto a = select_subsets(pop, cover, cfg, aux);
      cfg.depth = q + 1;
      auto b = select_subsets(pop, cover, cfg, aux);
      REQUIRE(a.entries.size() == b.entries.size());
      for (std::size_t k = 0; k < a.entries.size(); ++k) {
        const auto& sa = a.entries[k].subsets;
        const auto& sb = b.entries[k].subsets;
        REQUIRE(sa.size() <= sb.size());
        CHECK(std::equal(sa.begin(), sa.end(), sb.begin()));
      }
    }
  }
}

TEST_CASE("level at or above the clique size collapses to the clique, depth 1") {
  auto pop = one_box(5);
  auto cover = working_cover(pop, Mode::Dense);
  SublevelConfig a;
  a.mode = Mode::Dense;
  a.level = 9;
  a.depth = 3;
  SublevelConfig b = a;
  b.level = 5;
  b.depth = 1;
  auto pa = select_subsets(pop, cover, a), pb = select_subsets(pop, cover, b);
  CHECK(subsets_of(pa, 0, 0) == std::vector<std::vector<Var>>{{0, 1, 2, 3, 4}});
  auto ra = build_relaxation(pop, cover, a, pa), rb = build_relaxation(pop, cover, b, pb);
  REQUIRE(ra.blocks.size() == rb.blocks.size());
  for (std::size_t k = 0; k < ra.blocks.size(); ++k) CHECK(ra.blocks[k].entries == rb.blocks[k].entries);
}

TEST_CASE("level 0 is Shor: one order-1 moment block per clique plus scalar localizers") {
  auto pop = two_balls();
  for (auto mode : {Mode::Dense, Mode::Sparse}) {
    SublevelConfig cfg;
    cfg.mode = mode;
    auto cover = working_cover(pop, mode);
    auto r = build_relaxation(pop, cover, cfg, select_subsets(pop, cover, cfg));
    std::size_t moments = 0, locs = 0;
    for (const auto& b : r.blocks) {
      if (b.provenance.kind == BlockKind::MomentMatrix) {
        ++moments;
        CHECK(b.size == b.provenance.vars.size() + 1);
      } else {
        ++locs;
        CHECK(b.size == 1);
      }
      CHECK_FALSE(b.provenance.sublevel);
    }
    CHECK(moments == cover.size());
    CHECK(locs == 2);
  }
}

TEST_CASE("second-order dense sublevel example: one full order-1 block, two order-2 blocks, two localizers") {
  auto pop = two_balls();
  auto cover = working_cover(pop, Mode::Dense);
  SublevelConfig cfg;
  cfg.mode = Mode::Dense;
  cfg.localizers = LocalizerPolicy::Always;
  SubsetPlan plan{{{0, 0, {{0, 1}}}, {1, 0, {{4, 5}}}}};
  auto r = build_relaxation(pop, cover, cfg, plan);
  std::vector<std::size_t> want{7, 6, 6, 3, 3};
  CHECK(sizes(r) == want);
  CHECK(r.blocks[3].provenance.kind == BlockKind::LocalizingPSD);
  CHECK(*r.blocks[3].provenance.slot == 0);
  CHECK(*r.blocks[4].provenance.slot == 1);

  cfg.localizers = LocalizerPolicy::Covering;
  auto rc = build_relaxation(pop, cover, cfg, plan);
  std::vector<std::size_t> want_cov{7, 6, 6, 1, 1};
  CHECK(sizes(rc) == want_cov);
}

TEST_CASE("sparse variant of the example keeps one order-1 block per clique") {
  auto pop = two_balls();
  auto cover = working_cover(pop, Mode::Sparse);
  REQUIRE(cover.size() == 2);
  SublevelConfig cfg;
  cfg.localizers = LocalizerPolicy::Always;
  std::size_t k1 = cover.cliques[0][0] == 0 ? 0 : 1;
  SubsetPlan plan{{{0, k1, {{0, 1}}}, {1, 1 - k1, {{4, 5}}}}};
  auto r = build_relaxation(pop, cover, cfg, plan);
  std::vector<std::size_t> want{5, 5, 6, 6, 3, 3};
  CHECK(sizes(r) == want);
}

TEST_CASE("subset outside its clique is a structural error") {
  auto pop = two_balls();
  auto cover = working_cover(pop, Mode::Sparse);
  SublevelConfig cfg;
  std::size_t k1 = cover.cliques[0][0] == 0 ? 0 : 1;
  SubsetPlan plan{{{0, k1, {{0, 5}}}}};
  CHECK_THROWS_AS(build_relaxation(pop, cover, cfg, plan), StructuralError);
}

TEST_CASE("equality constraints give LocalizingZero blocks") {
  POPInstance pop(2);
  pop.objective = sq(2, 0) + sq(2, 1);
  Polynomial g = Polynomial::variable(2, 0) + Polynomial::variable(2, 1) - Polynomial::constant(2, 1.0);
  pop.constraints.push_back({g, Relation::Equal});
  SublevelConfig cfg;
  auto cover = working_cover(pop, Mode::Sparse);
  auto r = build_relaxation(pop, cover, cfg, {});
  bool found = false;
  for (const auto& b : r.blocks) found |= b.provenance.kind == BlockKind::LocalizingZero;
  CHECK(found);
}

TEST_CASE("dictionary covers every block entry and the objective; sizes match the closed form") {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 20; ++trial) {
    auto pop = random_maxcut(rng, 6 + trial % 8, 0.4);
    pop.domains[0] = Domain::box(-1, 1);
    SublevelConfig cfg;
    cfg.level = 3;
    cfg.depth = 2;
    cfg.order = 1 + trial % 2;
    auto cover = working_cover(pop, Mode::Sparse);
    auto r = build_relaxation(pop, cover, cfg, select_subsets(pop, cover, cfg));
    std::set<Monomial> seen;
    for (std::size_t i = 0; i < r.dict.size(); ++i) CHECK(seen.insert(r.dict.monomial(i)).second);
    for (const auto& b : r.blocks) {
      for (const auto& e : b.entries) {
        CHECK(e.moment < r.dict.size());
        CHECK(e.row <= e.col);
        CHECK(e.col < b.size);
      }
      CHECK(b.size == expected_block_size(b.provenance.vars, b.provenance.order, r.dict.rule()));
    }
    for (const auto& [idx, c] : r.objective) CHECK(idx < r.dict.size());
  }
}

TEST_CASE("config validation") {
  auto pop = two_balls();
  SublevelConfig cfg;
  cfg.order = 0;
  auto cover = working_cover(pop, Mode::Sparse);
  CHECK_THROWS_AS(build_relaxation(pop, cover, cfg, {}), ConfigError);
  cfg.order = 1;
  cfg.mode = Mode::Dense;
  CHECK_THROWS_AS(build_relaxation(pop, cover, cfg, {}), ConfigError);
  CHECK(parse_heuristic("h35") == Heuristic::H35);
  CHECK_THROWS_AS(parse_heuristic("h9"), ConfigError);
}
