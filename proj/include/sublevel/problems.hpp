#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>
#include <json.hpp>

#include "sublevel/pop.hpp"
#include "sublevel/relax.hpp"

namespace sublevel::problems {

using poly::Var;

struct Edge {
  Var i = 0;
  Var j = 0;
  double w = 1.0;
  bool operator==(const Edge&) const = default;
};

struct GraphInstance {
  std::size_t n = 0;
  std::vector<Edge> edges;
  std::string name;
};

Eigen::MatrixXd laplacian(const GraphInstance& g);
Eigen::MatrixXd adjacency(const GraphInstance& g);

GraphInstance parse_rudy(const std::string& path);
GraphInstance parse_rudy_string(const std::string& text, const std::string& name = "");
std::string write_rudy_string(const GraphInstance& g);
void write_rudy(const GraphInstance& g, const std::string& path);
// Erdos-Renyi graph with integer weights drawn from [wmin, wmax].
GraphInstance random_graph(std::size_t n, double p, std::uint64_t seed, int wmin = 1, int wmax = 1);

// x'Qx + b'x <= c
struct QuadConstraint {
  Eigen::MatrixXd Q;
  Eigen::VectorXd b;
  double c = 0.0;
};

struct QuadInstance {
  std::string name;
  std::size_t n = 0;
  Sense sense = Sense::Min;
  Eigen::MatrixXd Q0;
  Eigen::VectorXd b0;
  std::vector<QuadConstraint> quad;
  Eigen::MatrixXd A;  // rows x n, A x = rhs
  Eigen::VectorXd rhs;
  Eigen::VectorXd lo;
  Eigen::VectorXd hi;
  std::vector<bool> integer;

  void validate() const;
};

nlohmann::json quad_to_json(const QuadInstance& q);
QuadInstance quad_from_json(const nlohmann::json& j);
QuadInstance read_quad(const std::string& path);
QuadInstance random_bqp(std::size_t n, std::uint64_t seed);
QuadInstance random_box_qp(std::size_t n, std::uint64_t seed);

struct NNInstance {
  Eigen::MatrixXd A;  // p2 x p1
  Eigen::VectorXd b;
  Eigen::VectorXd c;
  Eigen::VectorXd xbar;
  double eps = 0.1;
  std::uint64_t seed = 0;

  std::size_t p1() const { return std::size_t(A.cols()); }
  std::size_t p2() const { return std::size_t(A.rows()); }
  void validate() const;
};

NNInstance gen_random_nn(std::size_t p1, std::size_t p2, std::uint64_t seed, double eps = 0.1);
nlohmann::json nn_to_json(const NNInstance& nn);
NNInstance nn_from_json(const nlohmann::json& j);
NNInstance read_nn(const std::string& path);
void write_nn(const NNInstance& nn, const std::string& path);

struct Encoded {
  std::string problem;
  POPInstance pop;
  std::vector<relax::SubsetGenerator> generators;  // aligned with relax::relaxation_slots(pop)
  std::optional<Eigen::MatrixXd> laplacian;
  bool dense_only = false;
};

Encoded encode_maxcut(const GraphInstance& g);
Encoded encode_maxclique(const GraphInstance& g);
Encoded encode_miqcp(const QuadInstance& q);
Encoded encode_qcqp(const QuadInstance& q);
Encoded encode_lipschitz(const NNInstance& nn);
Encoded encode_cert(const NNInstance& nn);
Encoded encode_pop(const POPInstance& pop);

// {i, i_{j+t}, ..., i_{j+t+l-2}} around the anchor's clique position j; empty if the anchor is absent.
std::vector<Var> anchored_subset(std::span<const Var> clique, Var anchor, unsigned level, unsigned t);
// Clique positions t-1, ..., t+l-2 (cyclic).
std::vector<Var> window_subset(std::span<const Var> clique, unsigned level, unsigned t);
relax::SubsetPlan maxcut_subsets(const sparsity::CliqueCover& cover, unsigned level, unsigned depth, Var anchor);

struct BruteForceResult {
  double value = 0.0;
  bool exact = false;
  bool feasible = false;
  std::vector<double> x;
};

BruteForceResult brute_force(const POPInstance& pop, unsigned resolution = 21, std::uint64_t seed = 0,
                             std::size_t samples = 1000000);
std::size_t clique_number(const GraphInstance& g);
double maxclique_optimum(const GraphInstance& g);
double box_qp_optimum(const QuadInstance& q);
double lipschitz_optimum(const NNInstance& nn);
double cert_optimum(const NNInstance& nn);

}  // namespace sublevel::problems
