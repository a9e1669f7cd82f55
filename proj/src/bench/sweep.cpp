#include <atomic>
#include <thread>

#include "sublevel/bench.hpp"
#include "sublevel/error.hpp"

namespace sublevel::bench {

relax::Heuristic resolve_heuristic(const problems::Encoded& enc, relax::Heuristic h) {
  if (h == relax::Heuristic::ProblemSpecific && enc.generators.empty()) return relax::Heuristic::H2;
  return h;
}

relax::Mode resolve_mode(const problems::Encoded& enc, relax::Mode m) {
  return enc.dense_only ? relax::Mode::Dense : m;
}

bool needs_moments(relax::Heuristic h) { return h == relax::Heuristic::H3 || h == relax::Heuristic::H35; }

relax::SublevelConfig make_config(const problems::Encoded& enc, const RunSpec& spec) {
  relax::SublevelConfig cfg;
  cfg.order = spec.order;
  cfg.level = spec.level;
  cfg.depth = spec.depth;
  cfg.heuristic = resolve_heuristic(enc, spec.heuristic);
  cfg.seed = spec.seed;
  cfg.mode = resolve_mode(enc, spec.mode);
  cfg.localizers = spec.localizers;
  return cfg;
}

relax::Relaxation build(const problems::Encoded& enc, const sparsity::CliqueCover& cover, const RunSpec& spec,
                        const std::vector<Eigen::MatrixXd>& first_order) {
  auto cfg = make_config(enc, spec);
  relax::HeuristicInput aux;
  aux.moment = first_order;
  aux.laplacian = enc.laplacian;
  aux.generators = enc.generators;
  auto plan = relax::select_subsets(enc.pop, cover, cfg, aux);
  return relax::build_relaxation(enc.pop, cover, cfg, plan);
}

namespace {

RunRecord blank(const problems::Encoded& enc, const RunSpec& spec) {
  RunRecord r;
  r.instance = enc.pop.name.empty() ? enc.problem : enc.pop.name;
  r.mode = relax::mode_name(resolve_mode(enc, spec.mode));
  r.order = spec.order;
  r.level = spec.level;
  r.depth = spec.depth;
  r.heuristic = relax::heuristic_name(resolve_heuristic(enc, spec.heuristic));
  return r;
}

void fill_metrics(RunRecord& r, Sense sense, std::optional<double> shor, std::optional<double> reference) {
  r.reference = reference;
  if (!reference || !r.error.empty()) return;
  try {
    r.rg = rg(r.bound, *reference, sense);
  } catch (const MetricError&) {
  }
  if (shor) {
    try {
      r.ri = ri(*shor, r.bound, *reference);
    } catch (const MetricError&) {
    }
  }
}

struct Shor {
  std::optional<double> bound;
  std::vector<Eigen::MatrixXd> first_order;
};

Shor solve_shor(const problems::Encoded& enc, const sparsity::CliqueCover& cover, const RunSpec& spec) {
  RunSpec s = spec;
  s.level = 0;
  s.depth = 0;
  s.heuristic = relax::Heuristic::H2;
  auto rep = sdp::solve_relaxation(build(enc, cover, s), spec.solver);
  Shor out;
  if (rep.status == sdp::Status::Optimal || rep.status == sdp::Status::NearOptimal) {
    out.bound = rep.bound;
    out.first_order = std::move(rep.first_order);
  }
  return out;
}

RunResult run_cell(const problems::Encoded& enc, const sparsity::CliqueCover& cover, const RunSpec& spec,
                   const Shor& shor, std::optional<double> reference) {
  RunResult res;
  res.record = blank(enc, spec);
  try {
    auto h = resolve_heuristic(enc, spec.heuristic);
    if (needs_moments(h) && spec.level > 0 && spec.depth > 0 && shor.first_order.empty())
      throw Error("first-order moments unavailable: Shor relaxation did not solve");
    auto relaxation = build(enc, cover, spec, shor.first_order);
    res.report = sdp::solve_relaxation(relaxation, spec.solver);
    res.record.bound = res.report.bound;
    res.record.status = sdp::status_name(res.report.status);
    res.record.iterations = res.report.iterations;
    res.record.solve_seconds = res.report.solve_seconds;
  } catch (const std::exception& e) {
    res.record.status = "error";
    res.record.error = e.what();
  }
  fill_metrics(res.record, enc.pop.sense, shor.bound, reference);
  return res;
}

}  // namespace

RunResult run(const problems::Encoded& enc, const RunSpec& spec, std::optional<double> reference) {
  auto cover = relax::working_cover(enc.pop, resolve_mode(enc, spec.mode));
  Shor shor;
  bool sub = spec.level > 0 && spec.depth > 0;
  if (sub && (reference || needs_moments(resolve_heuristic(enc, spec.heuristic)))) shor = solve_shor(enc, cover, spec);
  auto res = run_cell(enc, cover, spec, shor, reference);
  if (!sub && res.record.error.empty()) {
    shor.bound = res.record.bound;
    fill_metrics(res.record, enc.pop.sense, shor.bound, reference);
  }
  return res;
}

std::vector<RunRecord> sweep(const problems::Encoded& enc, const SweepSpec& spec) {
  auto cover = relax::working_cover(enc.pop, resolve_mode(enc, spec.base.mode));
  Shor shor = solve_shor(enc, cover, spec.base);

  std::vector<RunSpec> cells;
  for (auto h : spec.heuristics)
    for (unsigned l : spec.levels)
      for (unsigned q : spec.depths) {
        RunSpec s = spec.base;
        s.heuristic = h;
        s.level = l;
        s.depth = q;
        cells.push_back(s);
      }

  std::vector<RunRecord> rows(cells.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < cells.size();)
      rows[i] = run_cell(enc, cover, cells[i], shor, spec.reference).record;
  };
  unsigned jobs = std::max(1u, std::min<unsigned>(spec.jobs, unsigned(cells.size())));
  if (jobs <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  return rows;
}

}  // namespace sublevel::bench
