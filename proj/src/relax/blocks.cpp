#include <algorithm>
#include <cmath>
#include <map>

#include "sublevel/error.hpp"
#include "sublevel/relax.hpp"

namespace sublevel::relax {

using poly::Monomial;

const char* block_kind_name(BlockKind k) {
  switch (k) {
    case BlockKind::MomentMatrix: return "moment";
    case BlockKind::LocalizingPSD: return "localizing";
    case BlockKind::LocalizingZero: return "localizing-zero";
  }
  return "?";
}

namespace {

std::vector<Monomial> reduced_basis(std::span<const Var> vars, unsigned t, const poly::ReductionRule& rule) {
  auto raw = poly::monomial_basis(vars, t);
  if (rule.trivial()) return raw;
  std::vector<Monomial> out;
  out.reserve(raw.size());
  for (const auto& m : raw) out.push_back(poly::reduce_monomial(m, rule));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

PSDBlock make_block(poly::MomentDictionary& dict, const poly::Polynomial* g, std::span<const Var> vars, unsigned t,
                    BlockKind kind) {
  PSDBlock b;
  b.basis = reduced_basis(vars, t, dict.rule());
  b.size = b.basis.size();
  b.provenance.kind = kind;
  b.provenance.vars.assign(vars.begin(), vars.end());
  b.provenance.order = t;
  std::map<std::size_t, double> acc;
  for (std::uint32_t r = 0; r < b.size; ++r) {
    for (std::uint32_t c = r; c < b.size; ++c) {
      Monomial m = b.basis[r] * b.basis[c];
      if (!g) {
        b.entries.push_back({r, c, dict.index(m), 1.0});
        continue;
      }
      acc.clear();
      for (const auto& [beta, coef] : g->terms()) acc[dict.index(m * beta)] += coef;
      for (const auto& [idx, coef] : acc)
        if (std::abs(coef) >= poly::Polynomial::kDropTol) b.entries.push_back({r, c, idx, coef});
    }
  }
  return b;
}

}  // namespace

PSDBlock moment_block(poly::MomentDictionary& dict, std::span<const Var> vars, unsigned t) {
  return make_block(dict, nullptr, vars, t, BlockKind::MomentMatrix);
}

PSDBlock localizing_block(poly::MomentDictionary& dict, const poly::Polynomial& g, std::span<const Var> vars,
                          unsigned t, BlockKind kind) {
  if (kind == BlockKind::MomentMatrix) throw ConfigError("localizing_block needs a localizing kind");
  auto gv = g.variables();
  if (!sparsity::subset_of(gv, vars))
    throw DimensionError("localizing polynomial has variables outside the block variable set");
  return make_block(dict, &g, vars, t, kind);
}

namespace detail {
PSDBlock localizing_block_on(poly::MomentDictionary& dict, const poly::Polynomial& g, std::span<const Var> vars,
                             unsigned t, BlockKind kind) {
  return make_block(dict, &g, vars, t, kind);
}
}  // namespace detail

std::uint64_t expected_block_size(std::span<const Var> vars, unsigned t, const poly::ReductionRule& rule) {
  unsigned r = 0, f = 0;
  for (Var v : vars) (rule.kind(v) == poly::Reduction::None ? f : r)++;
  std::uint64_t total = 0;
  for (unsigned k = 0; k <= std::min(t, r); ++k) total += poly::binomial(r, k) * poly::binomial(f + t - k, t - k);
  return total;
}

}  // namespace sublevel::relax
