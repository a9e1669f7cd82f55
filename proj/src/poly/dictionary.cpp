#include <algorithm>
#include <functional>

#include "sublevel/error.hpp"
#include "sublevel/poly.hpp"

namespace sublevel::poly {

ReductionRule ReductionRule::uniform(std::size_t nvars, Reduction kind) {
  ReductionRule r(nvars);
  std::fill(r.kinds_.begin(), r.kinds_.end(), kind);
  return r;
}

void ReductionRule::set(Var v, Reduction kind) {
  if (v >= kinds_.size()) kinds_.resize(v + 1, Reduction::None);
  kinds_[v] = kind;
}

bool ReductionRule::trivial() const {
  return std::all_of(kinds_.begin(), kinds_.end(), [](Reduction k) { return k == Reduction::None; });
}

Monomial reduce_monomial(const Monomial& m, const ReductionRule& rule) {
  std::vector<Monomial::Term> out;
  out.reserve(m.terms().size());
  bool changed = false;
  for (const auto& t : m.terms()) {
    std::uint32_t e = t.exp;
    switch (rule.kind(t.var)) {
      case Reduction::None: break;
      case Reduction::Involutory: e %= 2; break;
      case Reduction::Idempotent: e = e ? 1 : 0; break;
    }
    changed |= e != t.exp;
    if (e) out.push_back({t.var, e});
  }
  return changed ? Monomial(std::move(out)) : m;
}

MomentDictionary::MomentDictionary(ReductionRule rule) : rule_(std::move(rule)) {
  monomials_.emplace_back();
  lookup_.emplace(Monomial(), 0);
}

std::size_t MomentDictionary::index(const Monomial& m) {
  Monomial r = reduce_monomial(m, rule_);
  auto it = lookup_.find(r);
  if (it != lookup_.end()) return it->second;
  if (frozen_) throw StructuralError("frozen moment dictionary has no entry for " + r.to_string());
  std::size_t idx = monomials_.size();
  monomials_.push_back(r);
  lookup_.emplace(std::move(r), idx);
  return idx;
}

std::optional<std::size_t> MomentDictionary::find(const Monomial& m) const {
  auto it = lookup_.find(reduce_monomial(m, rule_));
  if (it == lookup_.end()) return std::nullopt;
  return it->second;
}

std::size_t riesz_index(MomentDictionary& dict, const Monomial& m) { return dict.index(m); }

std::vector<Monomial> monomial_basis(std::span<const Var> vars, unsigned d) {
  std::vector<Monomial> out;
  std::vector<Monomial::Term> cur;
  std::function<void(std::size_t, unsigned)> rec = [&](std::size_t from, unsigned left) {
    out.emplace_back(cur);
    if (left == 0) return;
    for (std::size_t k = from; k < vars.size(); ++k) {
      if (!cur.empty() && cur.back().var == vars[k]) {
        ++cur.back().exp;
        rec(k, left - 1);
        --cur.back().exp;
      } else {
        cur.push_back({vars[k], 1});
        rec(k, left - 1);
        cur.pop_back();
      }
    }
  };
  rec(0, d);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::uint64_t binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t r = 1;
  for (unsigned i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace sublevel::poly
