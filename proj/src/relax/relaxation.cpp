#include <algorithm>
#include <cmath>
#include <map>
#include <tuple>

#include "sublevel/error.hpp"
#include "sublevel/relax.hpp"

namespace sublevel::relax {

namespace {

struct Spec {
  BlockKind kind;
  std::vector<Var> vars;
  unsigned order;
  std::optional<std::size_t> slot;
  bool sublevel;
  int group;  // 0 clique moment, 1 subset moment, 2 base localizer, 3 subset localizer
};

unsigned reduced_degree(const poly::Polynomial& g, const poly::ReductionRule& rule) {
  unsigned d = 0;
  for (const auto& [m, c] : g.terms()) d = std::max(d, poly::reduce_monomial(m, rule).degree());
  return d;
}

bool same_family(const Spec& a, const Spec& b) {
  if (a.kind != b.kind) return false;
  return a.kind == BlockKind::MomentMatrix || a.slot == b.slot;
}

// Basis of a is a sub-basis of b, so a's block is a principal submatrix of b's.
bool dominated(const Spec& a, const Spec& b) {
  if (!same_family(a, b)) return false;
  if (a.order == 0) return true;
  return a.order <= b.order && sparsity::subset_of(a.vars, b.vars);
}

}  // namespace

Relaxation build_relaxation(const POPInstance& pop, const sparsity::CliqueCover& cover, const SublevelConfig& cfg,
                            const SubsetPlan& plan) {
  pop.validate();
  if (cfg.order < 1) throw ConfigError("relaxation order must be at least 1");
  const unsigned d = cfg.order;
  if (cfg.mode == Mode::Dense &&
      (cover.size() != 1 || cover.cliques[0].size() != pop.nvars))
    throw ConfigError("dense mode expects the single all-variable clique");
  {
    std::vector<bool> seen(pop.nvars, false);
    for (const auto& c : cover.cliques)
      for (Var v : c) {
        if (v >= pop.nvars) throw StructuralError("clique references a variable outside the problem");
        seen[v] = true;
      }
    if (std::find(seen.begin(), seen.end(), false) != seen.end())
      throw StructuralError("clique cover does not cover every variable");
  }

  Relaxation R{poly::MomentDictionary(pop.reduction_rule()), {}, {}, pop.sense, d, cover};
  const auto& rule = R.dict.rule();
  if (reduced_degree(pop.objective, rule) > 2 * d)
    throw ConfigError("objective degree exceeds twice the relaxation order");

  auto slots = relaxation_slots(pop);
  std::vector<unsigned> omega(slots.size(), 0);
  std::vector<Spec> specs;
  for (const auto& c : cover.cliques) specs.push_back({BlockKind::MomentMatrix, c, d, std::nullopt, false, 0});
  for (std::size_t s = 0; s < slots.size(); ++s) {
    if (!slots[s].g) continue;
    omega[s] = (reduced_degree(*slots[s].g, rule) + 1) / 2;
    if (omega[s] > d) throw ConfigError("constraint degree exceeds twice the relaxation order");
    auto it = std::find_if(cover.cliques.begin(), cover.cliques.end(),
                           [&](const auto& c) { return sparsity::subset_of(slots[s].vars, c); });
    if (it == cover.cliques.end()) throw StructuralError("no clique contains the variables of a constraint");
    BlockKind kind = slots[s].rel == Relation::Equal ? BlockKind::LocalizingZero : BlockKind::LocalizingPSD;
    specs.push_back({kind, *it, d - omega[s], s, false, 2});
  }
  for (const auto& e : plan.entries) {
    if (e.clique >= cover.size() || e.slot >= slots.size())
      throw StructuralError("subset plan refers to an unknown clique or slot");
    const auto& slot = slots[e.slot];
    for (const auto& gamma : e.subsets) {
      if (!std::is_sorted(gamma.begin(), gamma.end()) || !sparsity::subset_of(gamma, cover.cliques[e.clique]))
        throw StructuralError("subset is not contained in its clique");
      specs.push_back({BlockKind::MomentMatrix, gamma, d + 1, std::nullopt, true, 1});
      if (!slot.g) continue;
      if (cfg.localizers == LocalizerPolicy::Covering && !sparsity::subset_of(slot.vars, gamma)) continue;
      BlockKind kind = slot.rel == Relation::Equal ? BlockKind::LocalizingZero : BlockKind::LocalizingPSD;
      specs.push_back({kind, gamma, d + 1 - omega[e.slot], e.slot, true, 3});
    }
  }

  std::vector<Spec> unique;
  for (auto& sp : specs) {
    bool dup = std::any_of(unique.begin(), unique.end(), [&](const Spec& u) {
      return same_family(u, sp) && u.vars == sp.vars && u.order == sp.order;
    });
    if (!dup) unique.push_back(std::move(sp));
  }
  std::vector<Spec> kept;
  for (std::size_t a = 0; a < unique.size(); ++a) {
    bool drop = false;
    for (std::size_t b = 0; b < unique.size() && !drop; ++b)
      drop = a != b && dominated(unique[a], unique[b]);
    if (!drop) kept.push_back(unique[a]);
  }
  std::stable_sort(kept.begin(), kept.end(), [](const Spec& a, const Spec& b) { return a.group < b.group; });

  for (const auto& sp : kept) {
    PSDBlock blk = sp.kind == BlockKind::MomentMatrix
                       ? moment_block(R.dict, sp.vars, sp.order)
                       : detail::localizing_block_on(R.dict, *slots[*sp.slot].g, sp.vars, sp.order, sp.kind);
    blk.provenance.slot = sp.slot;
    blk.provenance.sublevel = sp.sublevel;
    R.blocks.push_back(std::move(blk));
  }

  std::map<std::size_t, double> obj;
  for (const auto& [m, c] : pop.objective.terms()) obj[R.dict.index(m)] += c;
  for (const auto& [idx, c] : obj)
    if (std::abs(c) >= poly::Polynomial::kDropTol) R.objective.emplace_back(idx, c);
  R.dict.freeze();
  return R;
}

}  // namespace sublevel::relax
