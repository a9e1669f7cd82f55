#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include "sublevel/error.hpp"
#include "sublevel/problems.hpp"

namespace sublevel::problems {

namespace {

struct Compiled {
  std::vector<double> coef;
  std::vector<std::vector<poly::Monomial::Term>> mono;

  explicit Compiled(const poly::Polynomial& p) {
    for (const auto& [m, c] : p.terms()) {
      coef.push_back(c);
      mono.emplace_back(m.terms().begin(), m.terms().end());
    }
  }
  double operator()(const std::vector<double>& x) const {
    double s = 0.0;
    for (std::size_t k = 0; k < coef.size(); ++k) {
      double v = coef[k];
      for (const auto& t : mono[k])
        for (std::uint32_t e = 0; e < t.exp; ++e) v *= x[t.var];
      s += v;
    }
    return s;
  }
};

struct Evaluator {
  Compiled f;
  std::vector<Compiled> g;
  std::vector<Relation> rel;
  bool maximize;

  explicit Evaluator(const POPInstance& pop) : f(pop.objective), maximize(pop.sense == Sense::Max) {
    for (const auto& c : pop.constraints) {
      g.emplace_back(c.g);
      rel.push_back(c.rel);
    }
  }
  bool feasible(const std::vector<double>& x) const {
    for (std::size_t k = 0; k < g.size(); ++k) {
      double v = g[k](x);
      if (rel[k] == Relation::Equal ? std::abs(v) > 1e-6 : v < -1e-9) return false;
    }
    return true;
  }
  void offer(const std::vector<double>& x, BruteForceResult& r) const {
    if (!feasible(x)) return;
    double v = f(x);
    if (!r.feasible || (maximize ? v > r.value : v < r.value)) {
      r.feasible = true;
      r.value = v;
      r.x = x;
    }
  }
};

// Vertices of {x : G x <= h} by solving every square subsystem.
std::vector<Eigen::VectorXd> vertices(const Eigen::MatrixXd& G, const Eigen::VectorXd& h) {
  auto m = G.rows(), p = G.cols();
  std::vector<Eigen::VectorXd> out;
  if (p == 0) {
    if ((h.array() >= -1e-9).all()) out.push_back(Eigen::VectorXd());
    return out;
  }
  std::vector<int> pick(std::size_t(m), 0);
  std::fill(pick.end() - p, pick.end(), 1);
  do {
    Eigen::MatrixXd S(p, p);
    Eigen::VectorXd r(p);
    Eigen::Index k = 0;
    for (Eigen::Index i = 0; i < m; ++i)
      if (pick[std::size_t(i)]) {
        S.row(k) = G.row(i);
        r[k++] = h[i];
      }
    Eigen::FullPivLU<Eigen::MatrixXd> lu(S);
    if (lu.rank() < p) continue;
    Eigen::VectorXd x = lu.solve(r);
    if (((G * x - h).array() <= 1e-9 * (1.0 + h.cwiseAbs().maxCoeff())).all()) out.push_back(x);
  } while (std::next_permutation(pick.begin(), pick.end()));
  return out;
}

// Box rows for |x - xbar| <= eps.
void box_rows(const NNInstance& nn, Eigen::MatrixXd& G, Eigen::VectorXd& h, Eigen::Index start) {
  auto p1 = Eigen::Index(nn.p1());
  for (Eigen::Index k = 0; k < p1; ++k) {
    G.row(start + 2 * k).setZero();
    G(start + 2 * k, k) = 1.0;
    h[start + 2 * k] = nn.xbar[k] + nn.eps;
    G.row(start + 2 * k + 1).setZero();
    G(start + 2 * k + 1, k) = -1.0;
    h[start + 2 * k + 1] = -(nn.xbar[k] - nn.eps);
  }
}

// Activation-pattern polytope: A_j x + b_j >= 0 where on, <= 0 where off, inside the box.
void pattern_polytope(const NNInstance& nn, std::uint64_t mask, Eigen::MatrixXd& G, Eigen::VectorXd& h) {
  auto p1 = Eigen::Index(nn.p1()), p2 = Eigen::Index(nn.p2());
  G.resize(p2 + 2 * p1, p1);
  h.resize(p2 + 2 * p1);
  for (Eigen::Index j = 0; j < p2; ++j) {
    bool on = (mask >> j) & 1u;
    G.row(j) = on ? Eigen::RowVectorXd(-nn.A.row(j)) : Eigen::RowVectorXd(nn.A.row(j));
    h[j] = on ? nn.b[j] : -nn.b[j];
  }
  box_rows(nn, G, h, p2);
}

}  // namespace

BruteForceResult brute_force(const POPInstance& pop, unsigned resolution, std::uint64_t seed, std::size_t samples) {
  pop.validate();
  std::size_t n = pop.nvars;
  Evaluator ev(pop);
  BruteForceResult r;
  r.value = std::numeric_limits<double>::quiet_NaN();

  std::vector<std::size_t> disc, cont;
  for (std::size_t i = 0; i < n; ++i) {
    const auto& d = pop.domains[i];
    if (d.discrete())
      disc.push_back(i);
    else if (d.kind == DomainKind::Box)
      cont.push_back(i);
    else
      throw ConfigError("brute force needs a bounded domain for variable " + std::to_string(i));
  }
  auto level = [&](std::size_t i, std::size_t bit) {
    const auto& d = pop.domains[i];
    if (d.kind == DomainKind::PlusMinusOne) return bit ? 1.0 : -1.0;
    return bit ? 1.0 : 0.0;
  };
  auto grid = [&](std::size_t i, std::size_t k) {
    const auto& d = pop.domains[i];
    if (resolution <= 1) return 0.5 * (d.lo + d.hi);
    return d.lo + (d.hi - d.lo) * double(k) / double(resolution - 1);
  };

  double total = std::ldexp(1.0, int(disc.size())) * std::pow(double(std::max(resolution, 1u)), double(cont.size()));
  bool enumerate = cont.empty() ? disc.size() <= 20 : total <= double(samples);
  std::vector<double> x(n, 0.0);
  if (enumerate) {
    std::size_t res = std::max(resolution, 1u);
    std::vector<std::size_t> digit(cont.size(), 0);
    std::uint64_t nd = std::uint64_t(1) << disc.size();
    while (true) {
      for (std::size_t c = 0; c < cont.size(); ++c) x[cont[c]] = grid(cont[c], digit[c]);
      for (std::uint64_t mask = 0; mask < nd; ++mask) {
        for (std::size_t k = 0; k < disc.size(); ++k) x[disc[k]] = level(disc[k], (mask >> k) & 1u);
        ev.offer(x, r);
      }
      std::size_t c = 0;
      while (c < cont.size() && ++digit[c] == res) digit[c++] = 0;
      if (c == cont.size()) break;
    }
    r.exact = cont.empty();
    return r;
  }

  std::mt19937_64 rng(seed);
  auto unit = [&] { return double(rng() >> 11) * 0x1.0p-53; };
  for (std::size_t s = 0; s < samples; ++s) {
    for (std::size_t i : disc) x[i] = level(i, rng() & 1u);
    for (std::size_t i : cont) {
      const auto& d = pop.domains[i];
      x[i] = d.lo + (d.hi - d.lo) * unit();
    }
    ev.offer(x, r);
  }
  r.exact = false;
  return r;
}

std::size_t clique_number(const GraphInstance& g) {
  std::size_t n = g.n;
  std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
  for (const auto& e : g.edges)
    if (e.w != 0.0) adj[e.i][e.j] = adj[e.j][e.i] = true;
  std::size_t best = 0;
  std::vector<std::size_t> R;
  auto bk = [&](auto&& self, std::vector<std::size_t> P, std::vector<std::size_t> X) -> void {
    if (P.empty() && X.empty()) {
      best = std::max(best, R.size());
      return;
    }
    if (R.size() + P.size() <= best) return;
    std::size_t pivot = P.empty() ? X.front() : P.front();
    std::size_t most = 0;
    for (auto* set : {&P, &X})
      for (std::size_t u : *set) {
        std::size_t c = 0;
        for (std::size_t v : P) c += adj[u][v];
        if (c >= most) most = c, pivot = u;
      }
    std::vector<std::size_t> cand;
    for (std::size_t v : P)
      if (!adj[pivot][v]) cand.push_back(v);
    for (std::size_t v : cand) {
      std::vector<std::size_t> P2, X2;
      for (std::size_t u : P)
        if (adj[v][u]) P2.push_back(u);
      for (std::size_t u : X)
        if (adj[v][u]) X2.push_back(u);
      R.push_back(v);
      self(self, P2, X2);
      R.pop_back();
      P.erase(std::find(P.begin(), P.end(), v));
      X.push_back(v);
    }
  };
  std::vector<std::size_t> P(n);
  for (std::size_t i = 0; i < n; ++i) P[i] = i;
  bk(bk, P, {});
  return best;
}

double maxclique_optimum(const GraphInstance& g) {
  if (g.n == 0) throw ConfigError("clique number of an empty vertex set");
  for (const auto& e : g.edges)
    if (e.w != 1.0) throw ConfigError("simplex clique formula needs unit weights");
  return 1.0 - 1.0 / double(clique_number(g));
}

double box_qp_optimum(const QuadInstance& q) {
  q.validate();
  if (!q.quad.empty() || q.A.rows() > 0) throw ConfigError("box QP oracle takes bound constraints only");
  std::size_t n = q.n;
  if (n > 12) throw ConfigError("box QP oracle limited to n <= 12");
  bool maximize = q.sense == Sense::Max;
  double best = maximize ? -std::numeric_limits<double>::infinity() : std::numeric_limits<double>::infinity();
  std::vector<int> state(n, 0);  // 0 lower, 1 upper, 2 free
  auto N = Eigen::Index(n);
  while (true) {
    Eigen::VectorXd x(N);
    std::vector<Eigen::Index> freev;
    for (Eigen::Index i = 0; i < N; ++i) {
      if (state[std::size_t(i)] == 2)
        freev.push_back(i);
      else
        x[i] = state[std::size_t(i)] ? q.hi[i] : q.lo[i];
    }
    bool ok = true;
    if (!freev.empty()) {
      auto F = Eigen::Index(freev.size());
      Eigen::MatrixXd H(F, F);
      Eigen::VectorXd rhs(F);
      for (Eigen::Index a = 0; a < F; ++a) {
        rhs[a] = -q.b0[freev[std::size_t(a)]];
        for (Eigen::Index b = 0; b < F; ++b) H(a, b) = 2.0 * q.Q0(freev[std::size_t(a)], freev[std::size_t(b)]);
        for (Eigen::Index i = 0; i < N; ++i)
          if (state[std::size_t(i)] != 2) rhs[a] -= 2.0 * q.Q0(freev[std::size_t(a)], i) * x[i];
      }
      Eigen::VectorXd z = H.completeOrthogonalDecomposition().solve(rhs);
      if ((H * z - rhs).norm() > 1e-8 * (1.0 + rhs.norm())) ok = false;
      for (Eigen::Index a = 0; a < F && ok; ++a) {
        Eigen::Index i = freev[std::size_t(a)];
        if (z[a] < q.lo[i] - 1e-9 || z[a] > q.hi[i] + 1e-9) ok = false;
        x[i] = z[a];
      }
    }
    if (ok) {
      double v = x.dot(q.Q0 * x) + q.b0.dot(x);
      best = maximize ? std::max(best, v) : std::min(best, v);
    }
    std::size_t k = 0;
    while (k < n && ++state[k] == 3) state[k++] = 0;
    if (k == n) break;
  }
  return best;
}

double lipschitz_optimum(const NNInstance& nn) {
  nn.validate();
  std::size_t p2 = nn.p2();
  if (p2 > 16 || nn.p1() > 6) throw ConfigError("Lipschitz oracle limited to small networks");
  double best = -std::numeric_limits<double>::infinity();
  for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << p2); ++mask) {
    Eigen::MatrixXd G;
    Eigen::VectorXd h;
    pattern_polytope(nn, mask, G, h);
    if (vertices(G, h).empty()) continue;
    Eigen::VectorXd dc = Eigen::VectorXd::Zero(Eigen::Index(p2));
    for (std::size_t j = 0; j < p2; ++j)
      if ((mask >> j) & 1u) dc[Eigen::Index(j)] = nn.c[Eigen::Index(j)];
    best = std::max(best, (nn.A.transpose() * dc).cwiseAbs().sum());
  }
  return best;
}

double cert_optimum(const NNInstance& nn) {
  nn.validate();
  std::size_t p2 = nn.p2();
  if (p2 > 16 || nn.p1() > 6) throw ConfigError("certification oracle limited to small networks");
  double best = -std::numeric_limits<double>::infinity();
  for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << p2); ++mask) {
    Eigen::MatrixXd G;
    Eigen::VectorXd h;
    pattern_polytope(nn, mask, G, h);
    for (const auto& x : vertices(G, h)) {
      double v = 0.0;
      for (std::size_t j = 0; j < p2; ++j)
        if ((mask >> j) & 1u) {
          auto J = Eigen::Index(j);
          v += nn.c[J] * (nn.A.row(J).dot(x) + nn.b[J]);
        }
      best = std::max(best, v);
    }
  }
  return best;
}

}  // namespace sublevel::problems
