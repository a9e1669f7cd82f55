#include <algorithm>
#include <cmath>

#include "sublevel/error.hpp"
#include "sublevel/problems.hpp"

namespace sublevel::problems {

using poly::Monomial;
using poly::Polynomial;

namespace {

Polynomial var(std::size_t n, Var v) { return Polynomial::variable(n, v); }
Polynomial cst(std::size_t n, double c) { return Polynomial::constant(n, c); }

Polynomial quadratic_form(std::size_t n, const Eigen::MatrixXd& Q, const Eigen::VectorXd& b, Var offset = 0) {
  Polynomial p(n);
  for (Eigen::Index i = 0; i < Q.rows(); ++i)
    for (Eigen::Index j = 0; j < Q.cols(); ++j)
      if (Q(i, j) != 0.0)
        p.add_term(Monomial::variable(Var(i) + offset) * Monomial::variable(Var(j) + offset), Q(i, j));
  for (Eigen::Index i = 0; i < b.size(); ++i)
    if (b[i] != 0.0) p.add_term(Monomial::variable(Var(i) + offset), b[i]);
  return p;
}

// A_row . x + b over variables offset..offset+len-1
Polynomial affine(std::size_t n, const Eigen::RowVectorXd& a, double b, Var offset = 0) {
  Polynomial p = cst(n, b);
  for (Eigen::Index i = 0; i < a.size(); ++i)
    if (a[i] != 0.0) p.add_term(Monomial::variable(Var(i) + offset), a[i]);
  return p;
}

Eigen::MatrixXd csp_laplacian(const POPInstance& pop) {
  auto g = sparsity::build_csp_graph(pop);
  auto N = Eigen::Index(pop.nvars);
  Eigen::MatrixXd L = Eigen::MatrixXd::Zero(N, N);
  for (auto [i, j] : g.edges()) {
    L(i, j) -= 1.0;
    L(j, i) -= 1.0;
    L(i, i) += 1.0;
    L(j, j) += 1.0;
  }
  return L;
}

relax::SubsetGenerator anchored(Var anchor) {
  return [anchor](std::span<const Var> clique, unsigned l, unsigned t) { return anchored_subset(clique, anchor, l, t); };
}

relax::SubsetGenerator window() {
  return [](std::span<const Var> clique, unsigned l, unsigned t) { return window_subset(clique, l, t); };
}

bool is_identity(const Eigen::MatrixXd& Q) {
  return Q.rows() == Q.cols() && (Q - Eigen::MatrixXd::Identity(Q.rows(), Q.cols())).cwiseAbs().maxCoeff() == 0.0;
}

Encoded encode_quadratic(const QuadInstance& q, bool keep_integer) {
  q.validate();
  std::size_t n = q.n;
  Encoded e;
  e.problem = keep_integer ? "miqcp" : "qcqp";
  e.pop = POPInstance(n);
  e.pop.name = q.name;
  e.pop.sense = q.sense;
  e.pop.objective = quadratic_form(n, q.Q0, q.b0);
  std::vector<relax::SubsetGenerator> gens;
  for (const auto& qc : q.quad) {
    Polynomial g = cst(n, qc.c) - quadratic_form(n, qc.Q, qc.b);
    e.pop.constraints.push_back({std::move(g), Relation::GreaterEqual});
    gens.push_back(is_identity(qc.Q) ? window() : relax::SubsetGenerator{});
  }
  for (Eigen::Index r = 0; r < q.A.rows(); ++r) {
    e.pop.constraints.push_back({affine(n, q.A.row(r), -q.rhs[r]), Relation::Equal});
    gens.push_back(window());
  }
  for (std::size_t i = 0; i < n; ++i) {
    auto I = Eigen::Index(i);
    if (keep_integer && q.integer[i]) {
      if (q.lo[I] != 0.0 || q.hi[I] != 1.0)
        throw ConfigError("integer variable " + std::to_string(i) + " must have bounds [0, 1]");
      e.pop.domains[i] = Domain::binary();
    } else {
      e.pop.domains[i] = Domain::box(q.lo[I], q.hi[I]);
    }
  }
  for (std::size_t i = 0; i < n; ++i)
    if (e.pop.domains[i].kind == DomainKind::Box) gens.push_back(anchored(Var(i)));
  for (std::size_t i = 0; i < n; ++i)
    if (e.pop.domains[i].discrete()) gens.push_back(anchored(Var(i)));
  e.generators = std::move(gens);
  e.dense_only = !q.quad.empty() || q.A.rows() > 0;
  e.pop.validate();
  e.laplacian = csp_laplacian(e.pop);
  return e;
}

}  // namespace

std::vector<Var> anchored_subset(std::span<const Var> clique, Var anchor, unsigned level, unsigned t) {
  auto it = std::find(clique.begin(), clique.end(), anchor);
  if (it == clique.end() || level == 0) return {};
  std::size_t tau = clique.size();
  std::size_t j = std::size_t(it - clique.begin());
  std::vector<Var> out{anchor};
  for (std::size_t s = 0; s + 1 < level && s + 1 < tau; ++s) out.push_back(clique[(j + t + s) % tau]);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<Var> window_subset(std::span<const Var> clique, unsigned level, unsigned t) {
  std::size_t tau = clique.size();
  if (tau == 0 || level == 0 || t == 0) return {};
  std::vector<Var> out;
  for (std::size_t s = 0; s < level && s < tau; ++s) out.push_back(clique[(t - 1 + s) % tau]);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

relax::SubsetPlan maxcut_subsets(const sparsity::CliqueCover& cover, unsigned level, unsigned depth, Var anchor) {
  relax::SubsetPlan plan;
  if (level == 0 || depth == 0) return plan;
  for (std::size_t k = 0; k < cover.size(); ++k) {
    const auto& clique = cover.cliques[k];
    if (!std::binary_search(clique.begin(), clique.end(), anchor)) continue;
    relax::PlanEntry e{anchor, k, {}};
    if (level >= clique.size()) {
      e.subsets.push_back(clique);
    } else {
      for (unsigned t = 1; t <= depth; ++t) {
        auto s = anchored_subset(clique, anchor, level, t);
        if (std::find(e.subsets.begin(), e.subsets.end(), s) == e.subsets.end()) e.subsets.push_back(std::move(s));
      }
    }
    plan.entries.push_back(std::move(e));
  }
  return plan;
}

Encoded encode_maxcut(const GraphInstance& g) {
  std::size_t n = g.n;
  Encoded e;
  e.problem = "maxcut";
  e.pop = POPInstance(n);
  e.pop.name = g.name;
  e.pop.sense = Sense::Max;
  Eigen::MatrixXd L = laplacian(g);
  e.pop.objective = quadratic_form(n, 0.25 * L, Eigen::VectorXd::Zero(Eigen::Index(n)));
  for (auto& d : e.pop.domains) d = Domain::pm1();
  for (std::size_t i = 0; i < n; ++i) e.generators.push_back(anchored(Var(i)));
  e.laplacian = L;
  e.pop.validate();
  return e;
}

Encoded encode_maxclique(const GraphInstance& g) {
  std::size_t n = g.n;
  Encoded e;
  e.problem = "maxclique";
  e.pop = POPInstance(n);
  e.pop.name = g.name;
  e.pop.sense = Sense::Max;
  Eigen::MatrixXd A = adjacency(g);
  e.pop.objective = quadratic_form(n, A, Eigen::VectorXd::Zero(Eigen::Index(n)));
  Polynomial simplex = cst(n, -1.0);
  for (std::size_t i = 0; i < n; ++i) simplex += var(n, Var(i));
  e.pop.constraints.push_back({simplex, Relation::Equal});
  e.generators.push_back(window());
  for (std::size_t i = 0; i < n; ++i) {
    Polynomial xi = var(n, Var(i));
    e.pop.constraints.push_back({xi - xi * xi, Relation::GreaterEqual});
    e.generators.push_back(anchored(Var(i)));
  }
  e.laplacian = laplacian(g);
  e.dense_only = true;
  e.pop.validate();
  return e;
}

Encoded encode_miqcp(const QuadInstance& q) { return encode_quadratic(q, true); }
Encoded encode_qcqp(const QuadInstance& q) { return encode_quadratic(q, false); }

Encoded encode_lipschitz(const NNInstance& nn) {
  nn.validate();
  std::size_t p1 = nn.p1(), p2 = nn.p2();
  std::size_t n = 2 * p1 + p2;
  auto X = [](std::size_t k) { return Var(k); };
  auto U = [p1](std::size_t j) { return Var(p1 + j); };
  auto T = [p1, p2](std::size_t k) { return Var(p1 + p2 + k); };

  Encoded e;
  e.problem = "lip";
  e.pop = POPInstance(n);
  e.pop.name = "lip_p" + std::to_string(p1) + "x" + std::to_string(p2) + "_s" + std::to_string(nn.seed);
  e.pop.sense = Sense::Max;
  for (std::size_t k = 0; k < p1; ++k)
    for (std::size_t j = 0; j < p2; ++j) {
      double w = nn.A(Eigen::Index(j), Eigen::Index(k)) * nn.c[Eigen::Index(j)];
      if (w != 0.0) e.pop.objective.add_term(Monomial::variable(T(k)) * Monomial::variable(U(j)), w);
    }

  auto in_clique = [](std::vector<Var> s, std::span<const Var> clique) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    return sparsity::subset_of(s, clique) ? s : std::vector<Var>{};
  };
  auto gen_u = [=](std::size_t j) -> relax::SubsetGenerator {
    return [=](std::span<const Var> clique, unsigned l, unsigned t) {
      unsigned h = l / 2;
      std::vector<Var> s;
      for (unsigned a = 0; a < h; ++a) s.push_back(X((t - 1 + a) % p1));
      s.push_back(U(j));
      for (unsigned a = 0; a + 2 <= l - h; ++a) s.push_back(U((j + t + a) % p2));
      return in_clique(std::move(s), clique);
    };
  };
  auto gen_t = [=](std::size_t k) -> relax::SubsetGenerator {
    return [=](std::span<const Var> clique, unsigned l, unsigned t) {
      std::vector<Var> s;
      for (unsigned a = 0; a + 1 < l; ++a) s.push_back(U((t - 1 + a) % p2));
      s.push_back(T(k));
      return in_clique(std::move(s), clique);
    };
  };
  auto gen_x = [=](std::size_t k) -> relax::SubsetGenerator {
    return [=](std::span<const Var> clique, unsigned l, unsigned t) {
      unsigned h = l / 2;
      std::vector<Var> s{X(k)};
      for (unsigned a = 0; a + 2 <= h; ++a) s.push_back(X((k + t + a) % p1));
      for (unsigned a = 0; a < l - h; ++a) s.push_back(U((t - 1 + a) % p2));
      return in_clique(std::move(s), clique);
    };
  };

  // u(u - 1) = 0 is carried by the binary domain
  for (std::size_t j = 0; j < p2; ++j) {
    Polynomial u = var(n, U(j));
    Polynomial pre = affine(n, nn.A.row(Eigen::Index(j)), nn.b[Eigen::Index(j)], X(0));
    e.pop.constraints.push_back({(u - cst(n, 0.5)) * pre, Relation::GreaterEqual});
    e.generators.push_back(gen_u(j));
  }
  for (std::size_t k = 0; k < p1; ++k) {
    Polynomial t = var(n, T(k));
    e.pop.constraints.push_back({cst(n, 1.0) - t * t, Relation::GreaterEqual});
    e.generators.push_back(gen_t(k));
  }
  for (std::size_t k = 0; k < p1; ++k) {
    Polynomial d = var(n, X(k)) - cst(n, nn.xbar[Eigen::Index(k)]);
    e.pop.constraints.push_back({cst(n, nn.eps * nn.eps) - d * d, Relation::GreaterEqual});
    e.generators.push_back(gen_x(k));
  }
  for (std::size_t j = 0; j < p2; ++j) {
    e.pop.domains[U(j)] = Domain::binary();
    e.generators.push_back(gen_u(j));
  }
  e.pop.validate();
  e.laplacian = csp_laplacian(e.pop);
  return e;
}

Encoded encode_cert(const NNInstance& nn) {
  nn.validate();
  std::size_t p1 = nn.p1(), p2 = nn.p2();
  std::size_t n = p1 + p2;
  auto U = [p1](std::size_t j) { return Var(p1 + j); };

  Encoded e;
  e.problem = "cert";
  e.pop = POPInstance(n);
  e.pop.name = "cert_p" + std::to_string(p1) + "x" + std::to_string(p2) + "_s" + std::to_string(nn.seed);
  e.pop.sense = Sense::Max;
  for (std::size_t j = 0; j < p2; ++j)
    if (nn.c[Eigen::Index(j)] != 0.0) e.pop.objective.add_term(Monomial::variable(U(j)), nn.c[Eigen::Index(j)]);

  relax::SubsetGenerator rule = [=](std::span<const Var> clique, unsigned l, unsigned t) {
    std::vector<Var> s;
    for (unsigned a = 0; a + 1 < l; ++a) s.push_back(Var((t - 1 + a) % p1));
    for (Var v : clique)
      if (v >= p1) {
        s.push_back(v);
        break;
      }
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    return sparsity::subset_of(s, clique) ? s : std::vector<Var>{};
  };

  std::vector<Polynomial> slack;
  for (std::size_t j = 0; j < p2; ++j)
    slack.push_back(var(n, U(j)) - affine(n, nn.A.row(Eigen::Index(j)), nn.b[Eigen::Index(j)], 0));
  for (std::size_t j = 0; j < p2; ++j) {
    // with u >= 0 and the slack >= 0 this forces u * slack = 0
    e.pop.constraints.push_back({-1.0 * (var(n, U(j)) * slack[j]), Relation::GreaterEqual});
    e.generators.push_back(rule);
  }
  for (std::size_t j = 0; j < p2; ++j) {
    e.pop.constraints.push_back({slack[j], Relation::GreaterEqual});
    e.generators.push_back(rule);
  }
  for (std::size_t j = 0; j < p2; ++j) {
    e.pop.constraints.push_back({var(n, U(j)), Relation::GreaterEqual});
    e.generators.push_back(rule);
  }
  for (std::size_t i = 0; i < p1; ++i) {
    Polynomial d = var(n, Var(i)) - cst(n, nn.xbar[Eigen::Index(i)]);
    e.pop.constraints.push_back({cst(n, nn.eps * nn.eps) - d * d, Relation::GreaterEqual});
    e.generators.push_back(rule);
  }
  e.pop.validate();
  e.laplacian = csp_laplacian(e.pop);
  return e;
}

Encoded encode_pop(const POPInstance& pop) {
  pop.validate();
  Encoded e;
  e.problem = "pop";
  e.pop = pop;
  e.laplacian = csp_laplacian(pop);
  return e;
}

}  // namespace sublevel::problems
