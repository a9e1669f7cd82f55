#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "sublevel/pop.hpp"

namespace sublevel::sparsity {

using poly::Var;

class CSPGraph {
 public:
  explicit CSPGraph(std::size_t n = 0) : adj_(n) {}

  std::size_t size() const { return adj_.size(); }
  void add_edge(Var i, Var j);
  bool has_edge(Var i, Var j) const;
  const std::vector<Var>& neighbors(Var i) const { return adj_.at(i); }
  std::vector<std::pair<Var, Var>> edges() const;
  std::size_t edge_count() const;
  double density() const;
  bool operator==(const CSPGraph&) const = default;

 private:
  std::vector<std::vector<Var>> adj_;
};

struct ChordalExtension {
  CSPGraph graph;
  std::vector<Var> order;  // order[k] is the k-th eliminated vertex
};

struct CliqueCover {
  std::vector<std::vector<Var>> cliques;

  std::size_t size() const { return cliques.size(); }
  std::vector<std::size_t> tau() const;
  std::size_t max_size() const;
  std::size_t min_size() const;
  // Number of cliques containing every element of the sorted set s.
  std::size_t containment_count(std::span<const Var> s) const;
};

CSPGraph build_csp_graph(const POPInstance& pop);
ChordalExtension chordal_extension(const CSPGraph& g);
CliqueCover maximal_cliques(const CSPGraph& chordal, std::span<const Var> order);
CliqueCover dense_cover(std::size_t n);
CliqueCover clique_cover(const POPInstance& pop);

bool is_perfect_elimination_order(const CSPGraph& g, std::span<const Var> order);
bool satisfies_rip(const CliqueCover& cover);

bool subset_of(std::span<const Var> a, std::span<const Var> b);

}  // namespace sublevel::sparsity
