#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "sublevel/problems.hpp"
#include "sublevel/sdp.hpp"

namespace sublevel::bench {

// Percent improvement of the sublevel bound over Shor relative to the whole Shor gap.
double ri(double shor, double sublevel, double solution);
// Percent gap to the reference, signed so that a bound on the valid side is positive.
double rg(double sublevel, double solution, Sense sense = Sense::Max);

struct Reference {
  double value = 0.0;
  std::string kind = "solution";
};

Reference read_reference(const std::string& path);

struct RunRecord {
  std::string instance;
  std::string mode;
  unsigned order = 1;
  unsigned level = 0;
  unsigned depth = 0;
  std::string heuristic;
  double bound = 0.0;
  std::string status;
  int iterations = 0;
  double solve_seconds = 0.0;
  std::optional<double> reference;
  std::optional<double> ri;
  std::optional<double> rg;
  std::string error;
};

struct RunSpec {
  unsigned order = 1;
  unsigned level = 0;
  unsigned depth = 0;
  relax::Heuristic heuristic = relax::Heuristic::ProblemSpecific;
  relax::Mode mode = relax::Mode::Sparse;
  relax::LocalizerPolicy localizers = relax::LocalizerPolicy::Covering;
  std::uint64_t seed = 0;
  sdp::SolverOptions solver;
};

// "auto" falls back to H2 when the encoder provides no generators.
relax::Heuristic resolve_heuristic(const problems::Encoded& enc, relax::Heuristic h);
relax::Mode resolve_mode(const problems::Encoded& enc, relax::Mode m);
bool needs_moments(relax::Heuristic h);

relax::SublevelConfig make_config(const problems::Encoded& enc, const RunSpec& spec);
relax::Relaxation build(const problems::Encoded& enc, const sparsity::CliqueCover& cover, const RunSpec& spec,
                        const std::vector<Eigen::MatrixXd>& first_order = {});

struct RunResult {
  RunRecord record;
  sdp::SolverReport report;
};

// Single relaxation; solves Shor first when the heuristic needs first-order moments.
RunResult run(const problems::Encoded& enc, const RunSpec& spec, std::optional<double> reference = std::nullopt);

struct SweepSpec {
  RunSpec base;
  std::vector<unsigned> levels{0};
  std::vector<unsigned> depths{1};
  std::vector<relax::Heuristic> heuristics{relax::Heuristic::ProblemSpecific};
  unsigned jobs = 1;
  std::optional<double> reference;
};

std::vector<RunRecord> sweep(const problems::Encoded& enc, const SweepSpec& spec);

std::string to_csv(const std::vector<RunRecord>& rows, bool timing = true);
nlohmann::json to_json(const std::vector<RunRecord>& rows, bool timing = true);

}  // namespace sublevel::bench
