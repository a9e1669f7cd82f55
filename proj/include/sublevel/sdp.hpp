#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "sublevel/relax.hpp"

namespace sublevel::sdp {

// Coefficient of matrix matno (0 = F0, j >= 1 = F_j of variable j-1) in block `block`, upper triangle.
struct Entry {
  std::uint32_t matno = 0;
  std::uint32_t block = 0;
  std::uint32_t i = 0;
  std::uint32_t j = 0;
  double v = 0.0;
  bool operator==(const Entry&) const = default;
};

struct EqualityRow {
  std::vector<std::pair<std::size_t, double>> a;  // sorted by variable
  double b = 0.0;
  bool operator==(const EqualityRow&) const = default;
};

// min c.y + offset  s.t.  sum_j y_j F_j - F_0 >= 0 per block,  A y = b.
// `maximize` records that the source problem was a maximization negated into this form.
struct BlockSDP {
  std::size_t m = 0;
  std::vector<int> block_sizes;  // negative: diagonal block
  std::vector<Entry> entries;    // sorted by (matno, block, i, j)
  std::vector<double> c;
  double offset = 0.0;
  bool maximize = false;
  std::vector<EqualityRow> equalities;

  bool operator==(const BlockSDP&) const = default;
  void canonicalize();
  void validate() const;
  double bound_from(double min_objective) const { return maximize ? -min_objective : min_objective; }
};

BlockSDP assemble(const relax::Relaxation& relax);

enum class Status { Optimal, NearOptimal, Infeasible, IterLimit, NumericalFailure };
const char* status_name(Status s);

struct IterateInfo {
  int iter = 0;
  double pobj = 0.0;  // minimization orientation, offset included
  double dobj = 0.0;
  double mu = 0.0;
  double sx = 0.0;    // S.X
  double rpx = 0.0;   // Rp.X
  double lre = 0.0;   // lambda.re
  double yrd = 0.0;   // y.rd
  double pinf = 0.0;
  double dinf = 0.0;
  double einf = 0.0;
  double alpha_p = 0.0;
  double alpha_d = 0.0;
};

struct SolverOptions {
  double gap_tol = 1e-7;
  double feas_tol = 1e-7;
  int max_iter = 200;
  std::function<void(const IterateInfo&)> on_iterate;
};

struct SolverReport {
  Status status = Status::NumericalFailure;
  double bound = 0.0;       // source-sense objective
  double primal_obj = 0.0;  // source sense
  double dual_obj = 0.0;    // source sense
  double gap = 0.0;
  double min_eig = 0.0;     // smallest eigenvalue over PSD blocks at y
  int iterations = 0;
  double solve_seconds = 0.0;
  std::vector<double> y;    // full moment vector, y[0] = 1
  std::vector<double> lambda;
  std::string message;
  std::vector<Eigen::MatrixXd> first_order;  // per clique, filled by solve_relaxation
};

SolverReport solve(const BlockSDP& sdp, const SolverOptions& opts = {});

// Assemble, solve, and attach the per-clique first-order moment matrices.
SolverReport solve_relaxation(const relax::Relaxation& relax, const SolverOptions& opts = {});

Eigen::MatrixXd extract_moment_matrix(const SolverReport& report, const relax::Relaxation& relax, std::size_t clique);

void export_sdpa(const BlockSDP& sdp, std::ostream& out);
void export_sdpa(const BlockSDP& sdp, const std::string& path);
std::string export_sdpa_string(const BlockSDP& sdp);
BlockSDP parse_sdpa(std::istream& in);
BlockSDP parse_sdpa(const std::string& path);
BlockSDP parse_sdpa_string(const std::string& text);

}  // namespace sublevel::sdp
