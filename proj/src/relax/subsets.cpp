#include <algorithm>
#include <numeric>
#include <random>

#include "sublevel/error.hpp"
#include "sublevel/relax.hpp"

namespace sublevel::relax {

const char* heuristic_name(Heuristic h) {
  switch (h) {
    case Heuristic::H1: return "h1";
    case Heuristic::H2: return "h2";
    case Heuristic::H3: return "h3";
    case Heuristic::H4: return "h4";
    case Heuristic::H5: return "h5";
    case Heuristic::H6: return "h6";
    case Heuristic::H35: return "h35";
    case Heuristic::H45: return "h45";
    case Heuristic::ProblemSpecific: return "auto";
  }
  return "?";
}

Heuristic parse_heuristic(const std::string& s) {
  static const std::pair<const char*, Heuristic> table[] = {
      {"h1", Heuristic::H1}, {"h2", Heuristic::H2},   {"h3", Heuristic::H3},   {"h4", Heuristic::H4},
      {"h5", Heuristic::H5}, {"h6", Heuristic::H6},   {"h35", Heuristic::H35}, {"h45", Heuristic::H45},
      {"auto", Heuristic::ProblemSpecific}};
  for (const auto& [name, h] : table)
    if (s == name) return h;
  throw ConfigError("unknown heuristic '" + s + "'");
}

const char* mode_name(Mode m) { return m == Mode::Dense ? "dense" : "sparse"; }

LevelDepth SublevelConfig::at(std::size_t slot) const {
  auto it = per_slot.find(slot);
  if (it != per_slot.end()) return it->second;
  return {level, depth};
}

std::vector<Slot> relaxation_slots(const POPInstance& pop) {
  std::vector<Slot> out;
  auto cons = pop.effective_constraints();
  for (std::size_t k = 0; k < cons.size(); ++k) {
    Slot s;
    s.kind = Slot::Kind::Constraint;
    s.index = k;
    s.vars = cons[k].g.variables();
    s.rel = cons[k].rel;
    s.g = std::move(cons[k].g);
    out.push_back(std::move(s));
  }
  for (std::size_t i = 0; i < pop.domains.size(); ++i) {
    if (!pop.domains[i].discrete()) continue;
    Slot s;
    s.kind = Slot::Kind::Domain;
    s.index = i;
    s.vars = {Var(i)};
    out.push_back(std::move(s));
  }
  return out;
}

std::vector<std::vector<Var>> cyclic_windows(std::span<const Var> clique, unsigned level) {
  std::size_t tau = clique.size();
  std::vector<std::vector<Var>> out;
  if (tau == 0 || level == 0) return out;
  std::size_t l = std::min<std::size_t>(level, tau);
  for (std::size_t j = 0; j < tau; ++j) {
    std::vector<Var> w;
    for (std::size_t s = 0; s < l; ++s) w.push_back(clique[(j + s) % tau]);
    std::sort(w.begin(), w.end());
    out.push_back(std::move(w));
  }
  return out;
}

sparsity::CliqueCover working_cover(const POPInstance& pop, Mode mode) {
  if (mode == Mode::Dense) return sparsity::dense_cover(pop.nvars);
  return sparsity::clique_cover(pop);
}

namespace {

std::uint64_t splitmix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

// induced infinity norm: largest absolute row sum
double submatrix_norm(const Eigen::MatrixXd& M, const std::vector<std::size_t>& idx) {
  double best = 0.0;
  for (std::size_t a : idx) {
    double row = 0.0;
    for (std::size_t b : idx) row += std::abs(M(a, b));
    best = std::max(best, row);
  }
  return best;
}

std::vector<std::size_t> window_positions(std::size_t j, std::size_t l, std::size_t tau) {
  std::vector<std::size_t> p;
  for (std::size_t s = 0; s < l; ++s) p.push_back((j + s) % tau);
  return p;
}

std::vector<std::size_t> rank_windows(Heuristic h, const sparsity::CliqueCover& cover, std::size_t k,
                                      std::size_t slot, const SublevelConfig& cfg, const HeuristicInput& aux,
                                      std::size_t l) {
  const auto& clique = cover.cliques[k];
  std::size_t tau = clique.size();
  std::vector<std::size_t> order(tau);
  std::iota(order.begin(), order.end(), 0);
  auto windows = cyclic_windows(clique, unsigned(l));

  if (h == Heuristic::H1) {
    std::mt19937_64 rng(splitmix(cfg.seed ^ splitmix(slot * 0x100000001b3ull + k)));
    for (std::size_t i = tau; i > 1; --i) std::swap(order[i - 1], order[rng() % i]);
    return order;
  }
  if (h == Heuristic::H2) return order;

  std::vector<double> score(tau, 0.0);
  std::vector<std::size_t> count(tau, 0);
  bool need_moment = h == Heuristic::H3 || h == Heuristic::H35;
  bool need_lap = h == Heuristic::H4 || h == Heuristic::H45;
  if (need_moment) {
    if (aux.moment.size() != cover.size())
      throw ConfigError("moment heuristic needs one first-order moment matrix per clique");
    const auto& M = aux.moment[k];
    if (std::size_t(M.rows()) != tau + 1 || std::size_t(M.cols()) != tau + 1)
      throw ConfigError("first-order moment matrix has the wrong size for its clique");
    for (std::size_t j = 0; j < tau; ++j) {
      std::vector<std::size_t> idx{0};
      for (std::size_t p : window_positions(j, l, tau)) idx.push_back(p + 1);
      score[j] = submatrix_norm(M, idx);
    }
  }
  if (need_lap) {
    if (!aux.laplacian) throw ConfigError("Laplacian heuristic needs a Laplacian matrix");
    const auto& L = *aux.laplacian;
    for (std::size_t j = 0; j < tau; ++j) {
      std::vector<std::size_t> idx;
      for (Var v : windows[j]) {
        if (v >= std::size_t(L.rows())) throw ConfigError("Laplacian smaller than the variable count");
        idx.push_back(v);
      }
      score[j] = submatrix_norm(L, idx);
    }
  }
  if (h == Heuristic::H5 || h == Heuristic::H6 || h == Heuristic::H35 || h == Heuristic::H45)
    for (std::size_t j = 0; j < tau; ++j) count[j] = cover.containment_count(windows[j]);

  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    switch (h) {
      case Heuristic::H3:
      case Heuristic::H4: return score[a] > score[b];
      case Heuristic::H5: return count[a] > count[b];
      case Heuristic::H6: return count[a] < count[b];
      default:
        if (count[a] != count[b]) return count[a] < count[b];
        return score[a] > score[b];
    }
  });
  return order;
}

}  // namespace

SubsetPlan select_subsets(const POPInstance& pop, const sparsity::CliqueCover& cover, const SublevelConfig& cfg,
                          const HeuristicInput& aux) {
  if (cfg.order < 1) throw ConfigError("relaxation order must be at least 1");
  auto slots = relaxation_slots(pop);
  SubsetPlan plan;
  for (std::size_t s = 0; s < slots.size(); ++s) {
    LevelDepth ld = cfg.at(s);
    if (ld.level == 0 || ld.depth == 0) continue;
    if (cfg.heuristic == Heuristic::ProblemSpecific && aux.generators.size() != slots.size())
      throw ConfigError("problem-specific heuristic needs one subset generator per slot");
    for (std::size_t k = 0; k < cover.size(); ++k) {
      const auto& clique = cover.cliques[k];
      if (!sparsity::subset_of(slots[s].vars, clique)) continue;
      PlanEntry e{s, k, {}};
      std::size_t tau = clique.size();
      bool specific = cfg.heuristic == Heuristic::ProblemSpecific;
      if (specific && !aux.generators[s]) continue;
      if (ld.level >= tau) {
        e.subsets.push_back(clique);
      } else if (specific) {
        const auto& gen = aux.generators[s];
        for (unsigned t = 1; t <= ld.depth; ++t) {
          auto g = gen(clique, ld.level, t);
          std::sort(g.begin(), g.end());
          g.erase(std::unique(g.begin(), g.end()), g.end());
          if (g.empty() || !sparsity::subset_of(g, clique)) continue;
          if (std::find(e.subsets.begin(), e.subsets.end(), g) == e.subsets.end()) e.subsets.push_back(std::move(g));
        }
      } else {
        auto windows = cyclic_windows(clique, ld.level);
        auto order = rank_windows(cfg.heuristic, cover, k, s, cfg, aux, ld.level);
        std::size_t q = std::min<std::size_t>(ld.depth, tau);
        for (std::size_t j = 0; j < q; ++j) e.subsets.push_back(windows[order[j]]);
      }
      if (!e.subsets.empty()) plan.entries.push_back(std::move(e));
      if (slots[s].vars.empty()) break;
    }
  }
  return plan;
}

}  // namespace sublevel::relax
