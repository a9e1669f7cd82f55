#include <cmath>
#include <fstream>
#include <random>

#include "sublevel/error.hpp"
#include "sublevel/problems.hpp"

namespace sublevel::problems {

using nlohmann::json;

namespace {

json mat_to_json(const Eigen::MatrixXd& M) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < M.rows(); ++i) {
    json r = json::array();
    for (Eigen::Index j = 0; j < M.cols(); ++j) r.push_back(M(i, j));
    rows.push_back(std::move(r));
  }
  return rows;
}

json vec_to_json(const Eigen::VectorXd& v) {
  json a = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) a.push_back(v[i]);
  return a;
}

Eigen::MatrixXd mat_from_json(const json& j, std::size_t cols) {
  Eigen::MatrixXd M(Eigen::Index(j.size()), Eigen::Index(cols));
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (j[i].size() != cols) throw ParseError("matrix row has wrong length");
    for (std::size_t k = 0; k < cols; ++k) M(Eigen::Index(i), Eigen::Index(k)) = j[i][k].get<double>();
  }
  return M;
}

Eigen::VectorXd vec_from_json(const json& j) {
  Eigen::VectorXd v(Eigen::Index(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i) v[Eigen::Index(i)] = j[i].get<double>();
  return v;
}

bool symmetric(const Eigen::MatrixXd& Q) {
  return Q.rows() == Q.cols() && (Q - Q.transpose()).cwiseAbs().maxCoeff() <= 1e-12 * (1.0 + Q.cwiseAbs().maxCoeff());
}

}  // namespace

void QuadInstance::validate() const {
  auto N = Eigen::Index(n);
  if (Q0.rows() != N || Q0.cols() != N || b0.size() != N) throw DimensionError("objective dimensions differ from n");
  if (!symmetric(Q0)) throw DimensionError("objective matrix is not symmetric");
  for (const auto& qc : quad) {
    if (qc.Q.rows() != N || qc.Q.cols() != N || qc.b.size() != N)
      throw DimensionError("quadratic constraint dimensions differ from n");
    if (!symmetric(qc.Q)) throw DimensionError("constraint matrix is not symmetric");
  }
  if (A.size() && (A.cols() != N || A.rows() != rhs.size())) throw DimensionError("linear system dimensions");
  if (!A.size() && rhs.size()) throw DimensionError("rhs without matrix");
  if (lo.size() != N || hi.size() != N || integer.size() != n) throw DimensionError("bound vectors differ from n");
  for (Eigen::Index i = 0; i < N; ++i)
    if (lo[i] > hi[i]) throw DimensionError("lower bound above upper bound at " + std::to_string(i));
}

json quad_to_json(const QuadInstance& q) {
  json j;
  j["name"] = q.name;
  j["n"] = q.n;
  j["sense"] = q.sense == Sense::Min ? "min" : "max";
  j["Q0"] = mat_to_json(q.Q0);
  j["b0"] = vec_to_json(q.b0);
  json qs = json::array();
  for (const auto& c : q.quad) qs.push_back({{"Q", mat_to_json(c.Q)}, {"b", vec_to_json(c.b)}, {"c", c.c}});
  j["quad"] = qs;
  j["A"] = mat_to_json(q.A);
  j["rhs"] = vec_to_json(q.rhs);
  j["lo"] = vec_to_json(q.lo);
  j["hi"] = vec_to_json(q.hi);
  j["integer"] = q.integer;
  return j;
}

QuadInstance quad_from_json(const json& j) {
  try {
    QuadInstance q;
    q.name = j.value("name", std::string());
    q.n = j.at("n").get<std::size_t>();
    std::string sense = j.value("sense", std::string("min"));
    if (sense != "min" && sense != "max") throw ParseError("sense must be min or max");
    q.sense = sense == "min" ? Sense::Min : Sense::Max;
    q.Q0 = mat_from_json(j.at("Q0"), q.n);
    q.b0 = j.contains("b0") ? vec_from_json(j["b0"]) : Eigen::VectorXd::Zero(Eigen::Index(q.n));
    if (j.contains("quad"))
      for (const auto& c : j["quad"])
        q.quad.push_back({mat_from_json(c.at("Q"), q.n), vec_from_json(c.at("b")), c.at("c").get<double>()});
    if (j.contains("A") && !j["A"].empty()) {
      q.A = mat_from_json(j["A"], q.n);
      q.rhs = vec_from_json(j.at("rhs"));
    }
    q.lo = j.contains("lo") ? vec_from_json(j["lo"]) : Eigen::VectorXd::Zero(Eigen::Index(q.n));
    q.hi = j.contains("hi") ? vec_from_json(j["hi"]) : Eigen::VectorXd::Ones(Eigen::Index(q.n));
    q.integer = j.contains("integer") ? j["integer"].get<std::vector<bool>>() : std::vector<bool>(q.n, false);
    q.validate();
    return q;
  } catch (const json::exception& e) {
    throw ParseError(std::string("quadratic instance JSON: ") + e.what());
  }
}

QuadInstance read_quad(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw ParseError(std::string("invalid JSON in ") + path + ": " + e.what());
  }
  auto q = quad_from_json(j);
  if (q.name.empty()) {
    auto slash = path.find_last_of('/');
    q.name = slash == std::string::npos ? path : path.substr(slash + 1);
  }
  return q;
}

namespace {

Eigen::MatrixXd random_symmetric_int(std::size_t n, std::mt19937_64& rng, int range, double density) {
  Eigen::MatrixXd Q = Eigen::MatrixXd::Zero(Eigen::Index(n), Eigen::Index(n));
  auto unit = [&] { return double(rng() >> 11) * 0x1.0p-53; };
  for (Eigen::Index i = 0; i < Eigen::Index(n); ++i)
    for (Eigen::Index j = i; j < Eigen::Index(n); ++j) {
      if (unit() >= density) continue;
      double v = double(int(rng() % std::uint64_t(2 * range + 1)) - range);
      Q(i, j) = v;
      Q(j, i) = v;
    }
  return Q;
}

}  // namespace

QuadInstance random_bqp(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  QuadInstance q;
  q.name = "bqp_n" + std::to_string(n) + "_s" + std::to_string(seed);
  q.n = n;
  q.Q0 = random_symmetric_int(n, rng, 10, 0.5);
  q.b0 = Eigen::VectorXd::Zero(Eigen::Index(n));
  q.lo = Eigen::VectorXd::Zero(Eigen::Index(n));
  q.hi = Eigen::VectorXd::Ones(Eigen::Index(n));
  q.integer.assign(n, true);
  return q;
}

QuadInstance random_box_qp(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  QuadInstance q;
  q.name = "boxqp_n" + std::to_string(n) + "_s" + std::to_string(seed);
  q.n = n;
  q.Q0 = random_symmetric_int(n, rng, 10, 0.7);
  q.b0 = Eigen::VectorXd(Eigen::Index(n));
  for (Eigen::Index i = 0; i < Eigen::Index(n); ++i) q.b0[i] = double(int(rng() % 21) - 10);
  q.lo = Eigen::VectorXd::Zero(Eigen::Index(n));
  q.hi = Eigen::VectorXd::Ones(Eigen::Index(n));
  q.integer.assign(n, false);
  return q;
}

}  // namespace sublevel::problems
