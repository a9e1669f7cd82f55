#include <cmath>
#include <cstdio>
#include <fstream>
#include <random>
#include <set>
#include <sstream>

#include "sublevel/error.hpp"
#include "sublevel/problems.hpp"

namespace sublevel::problems {

Eigen::MatrixXd adjacency(const GraphInstance& g) {
  Eigen::MatrixXd W = Eigen::MatrixXd::Zero(Eigen::Index(g.n), Eigen::Index(g.n));
  for (const auto& e : g.edges) {
    W(e.i, e.j) += e.w;
    W(e.j, e.i) += e.w;
  }
  return W;
}

Eigen::MatrixXd laplacian(const GraphInstance& g) {
  Eigen::MatrixXd W = adjacency(g);
  Eigen::MatrixXd L = -W;
  L.diagonal() += W.rowwise().sum();
  return L;
}

GraphInstance parse_rudy_string(const std::string& text, const std::string& name) {
  GraphInstance g;
  g.name = name;
  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  bool have_header = false;
  std::size_t m = 0;
  std::set<std::pair<Var, Var>> seen;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::vector<std::string> tok;
    std::string t;
    while (ls >> t) tok.push_back(t);
    if (tok.empty()) continue;
    if (!have_header) {
      if (tok.size() != 2) throw ParseError("header must be 'n m'", lineno);
      try {
        long long n = std::stoll(tok[0]), mm = std::stoll(tok[1]);
        if (n < 0 || mm < 0) throw ParseError("negative size in header", lineno);
        g.n = std::size_t(n);
        m = std::size_t(mm);
      } catch (const ParseError&) {
        throw;
      } catch (...) {
        throw ParseError("header must hold two integers", lineno);
      }
      have_header = true;
      continue;
    }
    if (tok.size() != 3) throw ParseError("edge line must be 'i j w'", lineno);
    long long i, j;
    double w;
    try {
      std::size_t used = 0;
      i = std::stoll(tok[0], &used);
      if (used != tok[0].size()) throw 0;
      j = std::stoll(tok[1], &used);
      if (used != tok[1].size()) throw 0;
      w = std::stod(tok[2], &used);
      if (used != tok[2].size()) throw 0;
    } catch (...) {
      throw ParseError("malformed edge line", lineno);
    }
    if (i < 1 || j < 1 || std::size_t(i) > g.n || std::size_t(j) > g.n)
      throw ParseError("vertex index out of range 1.." + std::to_string(g.n), lineno);
    if (i == j) throw ParseError("self-loop", lineno);
    if (!std::isfinite(w)) throw ParseError("non-finite weight", lineno);
    Var a = Var(i - 1), b = Var(j - 1);
    if (!seen.insert({std::min(a, b), std::max(a, b)}).second) throw ParseError("duplicate edge", lineno);
    g.edges.push_back({a, b, w});
  }
  if (!have_header) throw ParseError("empty graph file", lineno);
  if (g.edges.size() != m)
    throw ParseError("header announces " + std::to_string(m) + " edges, found " + std::to_string(g.edges.size()));
  return g;
}

GraphInstance parse_rudy(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  auto slash = path.find_last_of('/');
  return parse_rudy_string(ss.str(), slash == std::string::npos ? path : path.substr(slash + 1));
}

std::string write_rudy_string(const GraphInstance& g) {
  std::ostringstream os;
  os << g.n << ' ' << g.edges.size() << '\n';
  char buf[40];
  for (const auto& e : g.edges) {
    std::snprintf(buf, sizeof buf, "%.17g", e.w);
    os << e.i + 1 << ' ' << e.j + 1 << ' ' << buf << '\n';
  }
  return os.str();
}

void write_rudy(const GraphInstance& g, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path);
  out << write_rudy_string(g);
}

GraphInstance random_graph(std::size_t n, double p, std::uint64_t seed, int wmin, int wmax) {
  GraphInstance g;
  g.n = n;
  g.name = "rand_n" + std::to_string(n) + "_s" + std::to_string(seed);
  std::mt19937_64 rng(seed);
  auto unit = [&] { return double(rng() >> 11) * 0x1.0p-53; };
  for (Var i = 0; i < n; ++i)
    for (Var j = i + 1; j < n; ++j)
      if (unit() < p) {
        int span = wmax - wmin + 1;
        int w = wmin + int(rng() % std::uint64_t(span > 0 ? span : 1));
        if (w == 0) w = 1;
        g.edges.push_back({i, j, double(w)});
      }
  return g;
}

}  // namespace sublevel::problems
