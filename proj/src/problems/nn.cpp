#include <cmath>
#include <fstream>
#include <numbers>
#include <random>

#include "sublevel/error.hpp"
#include "sublevel/problems.hpp"

namespace sublevel::problems {

using nlohmann::json;

namespace {

// Box-Muller on top of mt19937_64 so the stream does not depend on the standard library.
class Gaussian {
 public:
  explicit Gaussian(std::uint64_t seed) : rng_(seed) {}
  double operator()() {
    if (have_) {
      have_ = false;
      return spare_;
    }
    double u1 = uniform(), u2 = uniform();
    double r = std::sqrt(-2.0 * std::log(u1));
    double th = 2.0 * std::numbers::pi * u2;
    spare_ = r * std::sin(th);
    have_ = true;
    return r * std::cos(th);
  }

 private:
  double uniform() {
    double u;
    do u = double(rng_() >> 11) * 0x1.0p-53;
    while (u <= 0.0);
    return u;
  }

  std::mt19937_64 rng_;
  double spare_ = 0.0;
  bool have_ = false;
};

}  // namespace

void NNInstance::validate() const {
  if (A.rows() == 0) throw DimensionError("empty hidden layer");
  if (A.cols() == 0) throw DimensionError("empty input layer");
  if (b.size() != A.rows() || c.size() != A.rows()) throw DimensionError("b and c must have p2 entries");
  if (xbar.size() != A.cols()) throw DimensionError("xbar must have p1 entries");
  if (!(eps > 0.0) || !std::isfinite(eps)) throw DimensionError("eps must be positive");
  if (!A.allFinite() || !b.allFinite() || !c.allFinite() || !xbar.allFinite())
    throw DimensionError("non-finite network entry");
}

NNInstance gen_random_nn(std::size_t p1, std::size_t p2, std::uint64_t seed, double eps) {
  if (p2 == 0) throw DimensionError("empty hidden layer");
  if (p1 == 0) throw DimensionError("empty input layer");
  Gaussian g(seed);
  NNInstance nn;
  nn.seed = seed;
  nn.eps = eps;
  auto P1 = Eigen::Index(p1), P2 = Eigen::Index(p2);
  nn.A.resize(P2, P1);
  double scale = 1.0 / std::sqrt(double(p1));
  for (Eigen::Index i = 0; i < P2; ++i)
    for (Eigen::Index j = 0; j < P1; ++j) nn.A(i, j) = g() * scale;
  nn.b.resize(P2);
  for (Eigen::Index i = 0; i < P2; ++i) nn.b[i] = g();
  nn.c.resize(P2);
  for (Eigen::Index i = 0; i < P2; ++i) nn.c[i] = g();
  nn.xbar = Eigen::VectorXd::Zero(P1);
  nn.validate();
  return nn;
}

json nn_to_json(const NNInstance& nn) {
  json A = json::array();
  for (Eigen::Index i = 0; i < nn.A.rows(); ++i) {
    json r = json::array();
    for (Eigen::Index j = 0; j < nn.A.cols(); ++j) r.push_back(nn.A(i, j));
    A.push_back(std::move(r));
  }
  auto vec = [](const Eigen::VectorXd& v) {
    json a = json::array();
    for (Eigen::Index i = 0; i < v.size(); ++i) a.push_back(v[i]);
    return a;
  };
  return {{"p1", nn.p1()}, {"p2", nn.p2()}, {"A", A},        {"b", vec(nn.b)},
          {"c", vec(nn.c)}, {"xbar", vec(nn.xbar)}, {"eps", nn.eps}, {"seed", nn.seed}};
}

NNInstance nn_from_json(const json& j) {
  try {
    NNInstance nn;
    auto p1 = j.at("p1").get<std::size_t>(), p2 = j.at("p2").get<std::size_t>();
    const auto& A = j.at("A");
    if (A.size() != p2) throw ParseError("A must have p2 rows");
    nn.A.resize(Eigen::Index(p2), Eigen::Index(p1));
    for (std::size_t i = 0; i < p2; ++i) {
      if (A[i].size() != p1) throw ParseError("A rows must have p1 entries");
      for (std::size_t k = 0; k < p1; ++k) nn.A(Eigen::Index(i), Eigen::Index(k)) = A[i][k].get<double>();
    }
    auto vec = [](const json& a) {
      Eigen::VectorXd v(Eigen::Index(a.size()));
      for (std::size_t i = 0; i < a.size(); ++i) v[Eigen::Index(i)] = a[i].get<double>();
      return v;
    };
    nn.b = vec(j.at("b"));
    nn.c = vec(j.at("c"));
    nn.xbar = j.contains("xbar") ? vec(j["xbar"]) : Eigen::VectorXd::Zero(Eigen::Index(p1));
    nn.eps = j.value("eps", 0.1);
    nn.seed = j.value("seed", std::uint64_t(0));
    nn.validate();
    return nn;
  } catch (const json::exception& e) {
    throw ParseError(std::string("network JSON: ") + e.what());
  }
}

NNInstance read_nn(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw ParseError(std::string("invalid JSON in ") + path + ": " + e.what());
  }
  return nn_from_json(j);
}

void write_nn(const NNInstance& nn, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path);
  out << nn_to_json(nn).dump(2) << '\n';
}

}  // namespace sublevel::problems
