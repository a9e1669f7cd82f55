#include <algorithm>
#include <cmath>
#include <map>
#include <tuple>

#include "sublevel/error.hpp"
#include "sublevel/sdp.hpp"

namespace sublevel::sdp {

const char* status_name(Status s) {
  switch (s) {
    case Status::Optimal: return "optimal";
    case Status::NearOptimal: return "near_optimal";
    case Status::Infeasible: return "infeasible";
    case Status::IterLimit: return "iter_limit";
    case Status::NumericalFailure: return "numerical_failure";
  }
  return "?";
}

void BlockSDP::canonicalize() {
  for (auto& e : entries)
    if (e.i > e.j) std::swap(e.i, e.j);
  std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) {
    return std::tie(a.matno, a.block, a.i, a.j) < std::tie(b.matno, b.block, b.i, b.j);
  });
  std::vector<Entry> merged;
  for (const auto& e : entries) {
    if (!merged.empty() && merged.back().matno == e.matno && merged.back().block == e.block &&
        merged.back().i == e.i && merged.back().j == e.j)
      merged.back().v += e.v;
    else
      merged.push_back(e);
  }
  merged.erase(std::remove_if(merged.begin(), merged.end(), [](const Entry& e) { return e.v == 0.0; }),
               merged.end());
  entries.swap(merged);
}

void BlockSDP::validate() const {
  if (c.size() != m) throw DimensionError("objective length differs from variable count");
  for (const auto& e : entries) {
    if (e.matno > m) throw DimensionError("entry references a variable beyond m");
    if (e.block >= block_sizes.size()) throw DimensionError("entry references an unknown block");
    int s = block_sizes[e.block];
    std::uint32_t n = std::uint32_t(std::abs(s));
    if (e.i >= n || e.j >= n) throw DimensionError("entry index outside its block");
    if (s < 0 && e.i != e.j) throw DimensionError("off-diagonal entry in a diagonal block");
  }
  for (const auto& r : equalities)
    for (const auto& [j, v] : r.a)
      if (j >= m) throw DimensionError("equality row references a variable beyond m");
}

BlockSDP assemble(const relax::Relaxation& relax) {
  BlockSDP s;
  s.m = relax.dict.size() - 1;
  s.maximize = relax.sense == Sense::Max;
  double sign = s.maximize ? -1.0 : 1.0;
  s.c.assign(s.m, 0.0);
  for (const auto& [idx, coef] : relax.objective) {
    if (idx == 0) s.offset += sign * coef;
    else s.c[idx - 1] += sign * coef;
  }
  for (const auto& blk : relax.blocks) {
    if (blk.provenance.kind == relax::BlockKind::LocalizingZero) {
      std::map<std::pair<std::uint32_t, std::uint32_t>, EqualityRow> rows;
      for (const auto& e : blk.entries) {
        auto& row = rows[{e.row, e.col}];
        if (e.moment == 0) row.b -= e.coeff;
        else row.a.emplace_back(e.moment - 1, e.coeff);
      }
      for (auto& [rc, row] : rows) {
        std::sort(row.a.begin(), row.a.end());
        if (row.a.empty() && row.b == 0.0) continue;
        if (std::find(s.equalities.begin(), s.equalities.end(), row) == s.equalities.end())
          s.equalities.push_back(std::move(row));
      }
      continue;
    }
    std::uint32_t b = std::uint32_t(s.block_sizes.size());
    s.block_sizes.push_back(int(blk.size));
    for (const auto& e : blk.entries) {
      if (e.moment == 0) s.entries.push_back({0, b, e.row, e.col, -e.coeff});
      else s.entries.push_back({std::uint32_t(e.moment), b, e.row, e.col, e.coeff});
    }
  }
  s.canonicalize();
  return s;
}

Eigen::MatrixXd extract_moment_matrix(const SolverReport& report, const relax::Relaxation& relax, std::size_t k) {
  if (k >= relax.cover.size()) throw StructuralError("clique index out of range");
  if (report.y.size() != relax.dict.size()) throw StructuralError("solution vector does not match the dictionary");
  const auto& clique = relax.cover.cliques[k];
  std::vector<poly::Monomial> basis{poly::Monomial()};
  for (auto v : clique) basis.push_back(poly::Monomial::variable(v));
  Eigen::MatrixXd M(basis.size(), basis.size());
  for (std::size_t r = 0; r < basis.size(); ++r)
    for (std::size_t c = r; c < basis.size(); ++c) {
      auto idx = relax.dict.find(basis[r] * basis[c]);
      if (!idx) throw StructuralError("relaxation has no first-order moment block for clique " + std::to_string(k));
      M(r, c) = M(c, r) = report.y[*idx];
    }
  return M;
}

SolverReport solve_relaxation(const relax::Relaxation& relax, const SolverOptions& opts) {
  SolverReport rep = solve(assemble(relax), opts);
  if (rep.y.size() == relax.dict.size())
    for (std::size_t k = 0; k < relax.cover.size(); ++k) rep.first_order.push_back(extract_moment_matrix(rep, relax, k));
  return rep;
}

}  // namespace sublevel::sdp
