#include "sublevel/sparsity.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "sublevel/error.hpp"

namespace sublevel::sparsity {

void CSPGraph::add_edge(Var i, Var j) {
  if (i >= adj_.size() || j >= adj_.size()) throw DimensionError("edge endpoint out of range");
  if (i == j) return;
  auto ins = [](std::vector<Var>& v, Var x) {
    auto it = std::lower_bound(v.begin(), v.end(), x);
    if (it == v.end() || *it != x) v.insert(it, x);
  };
  ins(adj_[i], j);
  ins(adj_[j], i);
}

bool CSPGraph::has_edge(Var i, Var j) const {
  const auto& v = adj_.at(i);
  return std::binary_search(v.begin(), v.end(), j);
}

std::vector<std::pair<Var, Var>> CSPGraph::edges() const {
  std::vector<std::pair<Var, Var>> out;
  for (Var i = 0; i < adj_.size(); ++i)
    for (Var j : adj_[i])
      if (i < j) out.emplace_back(i, j);
  return out;
}

std::size_t CSPGraph::edge_count() const {
  std::size_t s = 0;
  for (const auto& a : adj_) s += a.size();
  return s / 2;
}

double CSPGraph::density() const {
  std::size_t n = adj_.size();
  if (n < 2) return 0.0;
  return double(edge_count()) / (double(n) * double(n - 1) / 2.0);
}

std::vector<std::size_t> CliqueCover::tau() const {
  std::vector<std::size_t> t;
  for (const auto& c : cliques) t.push_back(c.size());
  return t;
}

std::size_t CliqueCover::max_size() const {
  std::size_t m = 0;
  for (const auto& c : cliques) m = std::max(m, c.size());
  return m;
}

std::size_t CliqueCover::min_size() const {
  if (cliques.empty()) return 0;
  std::size_t m = cliques.front().size();
  for (const auto& c : cliques) m = std::min(m, c.size());
  return m;
}

bool subset_of(std::span<const Var> a, std::span<const Var> b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

std::size_t CliqueCover::containment_count(std::span<const Var> s) const {
  std::size_t n = 0;
  for (const auto& c : cliques)
    if (subset_of(s, c)) ++n;
  return n;
}

CSPGraph build_csp_graph(const POPInstance& pop) {
  CSPGraph g(pop.nvars);
  auto clique_on = [&](const std::vector<Var>& vs) {
    for (std::size_t a = 0; a < vs.size(); ++a)
      for (std::size_t b = a + 1; b < vs.size(); ++b) g.add_edge(vs[a], vs[b]);
  };
  for (const auto& [m, c] : pop.objective.terms()) clique_on(m.variables());
  for (const auto& con : pop.constraints) clique_on(con.g.variables());
  return g;
}

ChordalExtension chordal_extension(const CSPGraph& g) {
  std::size_t n = g.size();
  std::vector<std::set<Var>> work(n);
  for (Var i = 0; i < n; ++i) work[i].insert(g.neighbors(i).begin(), g.neighbors(i).end());
  ChordalExtension out{g, {}};
  std::vector<bool> done(n, false);
  // Bucketed by current degree; set ordering gives lowest index on ties.
  std::set<std::pair<std::size_t, Var>> queue;
  for (Var i = 0; i < n; ++i) queue.emplace(work[i].size(), i);
  while (!queue.empty()) {
    Var v = queue.begin()->second;
    queue.erase(queue.begin());
    done[v] = true;
    out.order.push_back(v);
    std::vector<Var> nb(work[v].begin(), work[v].end());
    for (Var a : nb) {
      queue.erase({work[a].size(), a});
      work[a].erase(v);
    }
    for (std::size_t x = 0; x < nb.size(); ++x)
      for (std::size_t y = x + 1; y < nb.size(); ++y)
        if (work[nb[x]].insert(nb[y]).second) {
          work[nb[y]].insert(nb[x]);
          out.graph.add_edge(nb[x], nb[y]);
        }
    for (Var a : nb) queue.emplace(work[a].size(), a);
  }
  return out;
}

namespace {

std::vector<std::size_t> positions(std::span<const Var> order, std::size_t n) {
  if (order.size() != n) throw StructuralError("elimination order length differs from vertex count");
  std::vector<std::size_t> pos(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    if (order[k] >= n || pos[order[k]] != n) throw StructuralError("elimination order is not a permutation");
    pos[order[k]] = k;
  }
  return pos;
}

std::vector<Var> later_neighbors(const CSPGraph& g, const std::vector<std::size_t>& pos, Var v) {
  std::vector<Var> out;
  for (Var u : g.neighbors(v))
    if (pos[u] > pos[v]) out.push_back(u);
  return out;
}

}  // namespace

bool is_perfect_elimination_order(const CSPGraph& g, std::span<const Var> order) {
  auto pos = positions(order, g.size());
  for (Var v : order) {
    auto later = later_neighbors(g, pos, v);
    for (std::size_t a = 0; a < later.size(); ++a)
      for (std::size_t b = a + 1; b < later.size(); ++b)
        if (!g.has_edge(later[a], later[b])) return false;
  }
  return true;
}

CliqueCover maximal_cliques(const CSPGraph& chordal, std::span<const Var> order) {
  std::size_t n = chordal.size();
  auto pos = positions(order, n);
  std::vector<std::vector<Var>> madj(n);
  std::vector<std::size_t> parent(n, n);
  for (Var v : order) {
    madj[v] = later_neighbors(chordal, pos, v);
    if (madj[v].empty()) continue;
    Var p = *std::min_element(madj[v].begin(), madj[v].end(),
                              [&](Var a, Var b) { return pos[a] < pos[b]; });
    parent[v] = p;
    for (Var u : madj[v])
      if (u != p && !chordal.has_edge(p, u))
        throw StructuralError("graph is not chordal under the given elimination order");
    // madj(v) \ {p} must lie in madj(p) for a perfect elimination ordering.
  }
  std::vector<bool> maximal(n, true);
  for (Var u = 0; u < n; ++u)
    if (parent[u] < n && madj[u].size() == madj[parent[u]].size() + 1) maximal[parent[u]] = false;
  std::vector<std::vector<Var>> found;
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    Var v = *it;
    if (!maximal[v]) continue;
    std::vector<Var> c = madj[v];
    c.push_back(v);
    std::sort(c.begin(), c.end());
    found.push_back(std::move(c));
  }
  // Prim order over intersection sizes: every clique follows its clique-tree parent.
  std::size_t m = found.size();
  std::vector<bool> used(m, false);
  std::vector<std::size_t> best(m, 0);
  CliqueCover cover;
  for (std::size_t step = 0; step < m; ++step) {
    std::size_t pick = m;
    for (std::size_t k = 0; k < m; ++k)
      if (!used[k] && (pick == m || best[k] > best[pick])) pick = k;
    used[pick] = true;
    for (std::size_t k = 0; k < m; ++k) {
      if (used[k]) continue;
      std::vector<Var> inter;
      std::set_intersection(found[pick].begin(), found[pick].end(), found[k].begin(), found[k].end(),
                            std::back_inserter(inter));
      best[k] = std::max(best[k], inter.size());
    }
    cover.cliques.push_back(found[pick]);
  }
  return cover;
}

CliqueCover dense_cover(std::size_t n) {
  CliqueCover c;
  c.cliques.emplace_back(n);
  std::iota(c.cliques[0].begin(), c.cliques[0].end(), Var(0));
  return c;
}

CliqueCover clique_cover(const POPInstance& pop) {
  auto ext = chordal_extension(build_csp_graph(pop));
  return maximal_cliques(ext.graph, ext.order);
}

bool satisfies_rip(const CliqueCover& cover) {
  std::vector<Var> seen;
  for (std::size_t k = 0; k < cover.cliques.size(); ++k) {
    const auto& c = cover.cliques[k];
    std::vector<Var> inter;
    std::set_intersection(c.begin(), c.end(), seen.begin(), seen.end(), std::back_inserter(inter));
    if (k > 0 && !inter.empty()) {
      bool ok = false;
      for (std::size_t s = 0; s < k && !ok; ++s) ok = subset_of(inter, cover.cliques[s]);
      if (!ok) return false;
    }
    std::vector<Var> merged;
    std::set_union(seen.begin(), seen.end(), c.begin(), c.end(), std::back_inserter(merged));
    seen.swap(merged);
  }
  return true;
}

}  // namespace sublevel::sparsity
