#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "sublevel/pop.hpp"
#include "sublevel/sparsity.hpp"

namespace sublevel::relax {

using poly::Var;

enum class Heuristic { H1, H2, H3, H4, H5, H6, H35, H45, ProblemSpecific };
enum class Mode { Dense, Sparse };
// Covering: sublevel localizer of g on a subset only when vars(g) lies inside it.
enum class LocalizerPolicy { Covering, Always };

const char* heuristic_name(Heuristic h);
Heuristic parse_heuristic(const std::string& s);
const char* mode_name(Mode m);

struct LevelDepth {
  unsigned level = 0;
  unsigned depth = 0;
};

struct SublevelConfig {
  unsigned order = 1;
  unsigned level = 0;
  unsigned depth = 0;
  Heuristic heuristic = Heuristic::H2;
  std::uint64_t seed = 0;
  Mode mode = Mode::Sparse;
  LocalizerPolicy localizers = LocalizerPolicy::Covering;
  std::map<std::size_t, LevelDepth> per_slot;

  LevelDepth at(std::size_t slot) const;
};

// A sublevel attachment point: one effective constraint, or one +-1/binary variable
// whose square relation is absorbed by the reduction rule.
struct Slot {
  enum class Kind { Constraint, Domain };
  Kind kind = Kind::Constraint;
  std::size_t index = 0;
  std::optional<poly::Polynomial> g;
  Relation rel = Relation::GreaterEqual;
  std::vector<Var> vars;
};

std::vector<Slot> relaxation_slots(const POPInstance& pop);

using SubsetGenerator = std::function<std::vector<Var>(std::span<const Var> clique, unsigned level, unsigned t)>;

struct HeuristicInput {
  std::vector<Eigen::MatrixXd> moment;        // per clique, (tau+1)x(tau+1), for H3
  std::optional<Eigen::MatrixXd> laplacian;   // nvars x nvars, for H4
  std::vector<SubsetGenerator> generators;    // per slot, for ProblemSpecific
};

struct PlanEntry {
  std::size_t slot = 0;
  std::size_t clique = 0;
  std::vector<std::vector<Var>> subsets;
};

struct SubsetPlan {
  std::vector<PlanEntry> entries;
};

std::vector<std::vector<Var>> cyclic_windows(std::span<const Var> clique, unsigned level);
sparsity::CliqueCover working_cover(const POPInstance& pop, Mode mode);
SubsetPlan select_subsets(const POPInstance& pop, const sparsity::CliqueCover& cover, const SublevelConfig& cfg,
                          const HeuristicInput& aux = {});

enum class BlockKind { MomentMatrix, LocalizingPSD, LocalizingZero };
const char* block_kind_name(BlockKind k);

struct BlockEntry {
  std::uint32_t row = 0;
  std::uint32_t col = 0;
  std::size_t moment = 0;
  double coeff = 0.0;
  bool operator==(const BlockEntry&) const = default;
};

struct Provenance {
  BlockKind kind = BlockKind::MomentMatrix;
  std::vector<Var> vars;
  unsigned order = 0;
  std::optional<std::size_t> slot;
  bool sublevel = false;
};

struct PSDBlock {
  std::size_t size = 0;
  std::vector<BlockEntry> entries;  // upper triangle, sorted by (row, col, moment)
  std::vector<poly::Monomial> basis;
  Provenance provenance;
};

PSDBlock moment_block(poly::MomentDictionary& dict, std::span<const Var> vars, unsigned t);
PSDBlock localizing_block(poly::MomentDictionary& dict, const poly::Polynomial& g, std::span<const Var> vars,
                          unsigned t, BlockKind kind = BlockKind::LocalizingPSD);

namespace detail {
// Localizer with rows indexed by vars even when g reaches outside them.
PSDBlock localizing_block_on(poly::MomentDictionary& dict, const poly::Polynomial& g, std::span<const Var> vars,
                             unsigned t, BlockKind kind);
}  // namespace detail

struct Relaxation {
  poly::MomentDictionary dict;
  std::vector<PSDBlock> blocks;
  std::vector<std::pair<std::size_t, double>> objective;  // L_y(f), sorted by moment index
  Sense sense = Sense::Min;
  unsigned order = 1;
  sparsity::CliqueCover cover;
};

Relaxation build_relaxation(const POPInstance& pop, const sparsity::CliqueCover& cover, const SublevelConfig& cfg,
                            const SubsetPlan& plan);

// Rows of a reduced basis on vars up to degree t.
std::uint64_t expected_block_size(std::span<const Var> vars, unsigned t, const poly::ReductionRule& rule);

}  // namespace sublevel::relax
