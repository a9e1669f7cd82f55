#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include <CLI11.hpp>

#include "sublevel/bench.hpp"
#include "sublevel/error.hpp"
#include "sublevel/kernels.hpp"

using namespace sublevel;

namespace {

struct Common {
  std::string instance;
  std::string problem = "pop-json";
  std::string ref;
  std::string out;
  std::string format = "json";
  std::string heuristic = "auto";
  std::string mode = "sparse";
  std::string localizers = "covering";
  std::string isa = "auto";
  unsigned order = 1;
  unsigned level = 0;
  unsigned depth = 1;
  std::uint64_t seed = 0;
  double gap_tol = 1e-7;
  double feas_tol = 1e-7;
  int max_iter = 200;
  bool no_timing = false;
};

void add_instance(CLI::App* app, Common& c) {
  app->add_option("--instance", c.instance, "Instance file")->required()->check(CLI::ExistingFile);
  app->add_option("--problem", c.problem, "Instance class")
      ->check(CLI::IsMember({"maxcut", "maxclique", "miqcp", "qcqp", "lip", "cert", "pop-json"}));
  app->add_option("--mode", c.mode)->check(CLI::IsMember({"dense", "sparse"}));
  app->add_option("--heuristic", c.heuristic, "h1|h2|h3|h4|h5|h6|h35|h45|auto");
  app->add_option("--order", c.order)->check(CLI::PositiveNumber);
  app->add_option("--seed", c.seed);
  app->add_option("--localizers", c.localizers)->check(CLI::IsMember({"covering", "always"}));
}

void add_level(CLI::App* app, Common& c) {
  app->add_option("--level", c.level);
  app->add_option("--depth", c.depth);
}

void add_solver(CLI::App* app, Common& c) {
  app->add_option("--gap-tol", c.gap_tol)->check(CLI::PositiveNumber);
  app->add_option("--feas-tol", c.feas_tol)->check(CLI::PositiveNumber);
  app->add_option("--max-iter", c.max_iter)->check(CLI::NonNegativeNumber);
  app->add_option("--ref", c.ref, "Reference value sidecar JSON")->check(CLI::ExistingFile);
  app->add_option("--isa", c.isa, "Kernel path")->check(CLI::IsMember({"auto", "scalar", "avx2"}));
}

problems::Encoded load(const Common& c) {
  const std::string& p = c.problem;
  if (p == "maxcut") return problems::encode_maxcut(problems::parse_rudy(c.instance));
  if (p == "maxclique") return problems::encode_maxclique(problems::parse_rudy(c.instance));
  if (p == "miqcp") return problems::encode_miqcp(problems::read_quad(c.instance));
  if (p == "qcqp") return problems::encode_qcqp(problems::read_quad(c.instance));
  if (p == "lip") return problems::encode_lipschitz(problems::read_nn(c.instance));
  if (p == "cert") return problems::encode_cert(problems::read_nn(c.instance));
  return problems::encode_pop(read_pop(c.instance));
}

bench::RunSpec make_spec(const Common& c) {
  bench::RunSpec s;
  s.order = c.order;
  s.level = c.level;
  s.depth = c.depth;
  s.heuristic = relax::parse_heuristic(c.heuristic);
  s.mode = c.mode == "dense" ? relax::Mode::Dense : relax::Mode::Sparse;
  s.localizers = c.localizers == "always" ? relax::LocalizerPolicy::Always : relax::LocalizerPolicy::Covering;
  s.seed = c.seed;
  s.solver.gap_tol = c.gap_tol;
  s.solver.feas_tol = c.feas_tol;
  s.solver.max_iter = c.max_iter;
  return s;
}

void apply_isa(const Common& c) {
  if (c.isa == "scalar") kernels::force_isa(kernels::Isa::Scalar);
  if (c.isa == "avx2") kernels::force_isa(kernels::Isa::Avx2);
}

std::optional<double> reference(const Common& c) {
  if (c.ref.empty()) return std::nullopt;
  return bench::read_reference(c.ref).value;
}

void emit(const std::string& text, const std::string& out) {
  if (out.empty() || out == "-") {
    std::cout << text;
    return;
  }
  std::ofstream f(out);
  if (!f) throw Error("cannot write " + out);
  f << text;
}

std::vector<unsigned> parse_list(const std::string& s) {
  std::vector<unsigned> v;
  std::stringstream ss(s);
  for (std::string tok; std::getline(ss, tok, ',');)
    if (!tok.empty()) v.push_back(unsigned(std::stoul(tok)));
  if (v.empty()) throw ConfigError("empty list: " + s);
  return v;
}

relax::Relaxation build_for(const problems::Encoded& enc, const bench::RunSpec& spec) {
  auto cover = relax::working_cover(enc.pop, bench::resolve_mode(enc, spec.mode));
  std::vector<Eigen::MatrixXd> first;
  if (spec.level > 0 && bench::needs_moments(bench::resolve_heuristic(enc, spec.heuristic))) {
    auto shor = spec;
    shor.level = 0;
    first = bench::run(enc, shor).report.first_order;
  }
  return bench::build(enc, cover, spec, first);
}

int cmd_analyze(const Common& c) {
  auto enc = load(c);
  auto spec = make_spec(c);
  auto rel = build_for(enc, spec);
  nlohmann::json j;
  j["instance"] = enc.pop.name;
  j["problem"] = enc.problem;
  j["nvars"] = enc.pop.nvars;
  j["constraints"] = enc.pop.constraints.size();
  j["mode"] = relax::mode_name(bench::resolve_mode(enc, spec.mode));
  j["cliques"] = rel.cover.cliques;
  j["max_clique"] = rel.cover.max_size();
  j["rip"] = sparsity::satisfies_rip(rel.cover);
  j["moments"] = rel.dict.size();
  nlohmann::json blocks = nlohmann::json::array();
  std::map<std::size_t, std::size_t> hist;
  for (const auto& b : rel.blocks) {
    blocks.push_back({{"kind", relax::block_kind_name(b.provenance.kind)},
                      {"size", b.size},
                      {"order", b.provenance.order},
                      {"vars", b.provenance.vars},
                      {"sublevel", b.provenance.sublevel}});
    ++hist[b.size];
  }
  j["blocks"] = blocks;
  nlohmann::json h = nlohmann::json::object();
  for (auto [s, n] : hist) h[std::to_string(s)] = n;
  j["block_size_histogram"] = h;
  emit(j.dump(2) + "\n", c.out);
  return 0;
}

int cmd_export(const Common& c) {
  auto enc = load(c);
  auto rel = build_for(enc, make_spec(c));
  emit(sdp::export_sdpa_string(sdp::assemble(rel)), c.out);
  return 0;
}

int cmd_run(const Common& c, const std::string& solver) {
  if (solver == "export") return cmd_export(c);
  auto enc = load(c);
  auto res = bench::run(enc, make_spec(c), reference(c));
  std::vector<bench::RunRecord> rows{res.record};
  if (c.format == "csv") {
    emit(bench::to_csv(rows, !c.no_timing), c.out);
  } else {
    auto j = bench::to_json(rows, !c.no_timing)[0];
    j["message"] = res.report.message;
    emit(j.dump(2) + "\n", c.out);
  }
  return res.report.status == sdp::Status::Optimal || res.report.status == sdp::Status::NearOptimal ? 0 : 3;
}

int cmd_sweep(const Common& c, const std::string& levels, const std::string& depths, const std::string& heuristics,
              unsigned jobs) {
  auto enc = load(c);
  bench::SweepSpec s;
  s.base = make_spec(c);
  s.levels = parse_list(levels);
  s.depths = parse_list(depths);
  s.heuristics.clear();
  std::stringstream ss(heuristics);
  for (std::string tok; std::getline(ss, tok, ',');)
    if (!tok.empty()) s.heuristics.push_back(relax::parse_heuristic(tok));
  if (s.heuristics.empty()) throw ConfigError("empty heuristic list");
  s.jobs = jobs;
  s.reference = reference(c);
  auto rows = bench::sweep(enc, s);
  emit(c.format == "csv" ? bench::to_csv(rows, !c.no_timing) : bench::to_json(rows, !c.no_timing).dump(2) + "\n",
       c.out);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Sublevel moment relaxations for polynomial optimization"};
  app.require_subcommand(1);
  Common c;
  std::string solver = "internal", levels = "0", depths = "1", heuristics = "auto";
  unsigned jobs = 1;
  std::size_t p1 = 2, p2 = 2;
  double eps = 0.1;

  auto* analyze = app.add_subcommand("analyze", "Clique cover and block statistics");
  add_instance(analyze, c);
  add_level(analyze, c);
  analyze->add_option("--out", c.out);

  auto* run = app.add_subcommand("run", "Build and solve one relaxation");
  add_instance(run, c);
  add_level(run, c);
  add_solver(run, c);
  run->add_option("--solver", solver)->check(CLI::IsMember({"internal", "export"}));
  run->add_option("--out", c.out);
  run->add_option("--format", c.format)->check(CLI::IsMember({"csv", "json"}));
  run->add_flag("--no-timing", c.no_timing);

  auto* sweep = app.add_subcommand("sweep", "Solve a grid of levels, depths and heuristics");
  add_instance(sweep, c);
  add_solver(sweep, c);
  sweep->add_option("--levels", levels, "Comma-separated levels");
  sweep->add_option("--depths", depths, "Comma-separated depths");
  sweep->add_option("--heuristics", heuristics, "Comma-separated heuristics");
  sweep->add_option("--jobs", jobs)->check(CLI::PositiveNumber);
  sweep->add_option("--out", c.out);
  sweep->add_option("--format", c.format)->check(CLI::IsMember({"csv", "json"}));
  sweep->add_flag("--no-timing", c.no_timing);

  auto* exp = app.add_subcommand("export", "Write the relaxation in SDPA sparse format");
  add_instance(exp, c);
  add_level(exp, c);
  exp->add_option("--out", c.out);

  auto* gen = app.add_subcommand("gen-nn", "Generate a random one-hidden-layer network");
  gen->add_option("--p1", p1)->check(CLI::PositiveNumber);
  gen->add_option("--p2", p2)->check(CLI::PositiveNumber);
  gen->add_option("--seed", c.seed);
  gen->add_option("--eps", eps)->check(CLI::PositiveNumber);
  gen->add_option("--out", c.out);

  CLI11_PARSE(app, argc, argv);

  try {
    apply_isa(c);
    if (analyze->parsed()) return cmd_analyze(c);
    if (run->parsed()) return cmd_run(c, solver);
    if (sweep->parsed()) return cmd_sweep(c, levels, depths, heuristics, jobs);
    if (exp->parsed()) return cmd_export(c);
    if (gen->parsed()) {
      emit(problems::nn_to_json(problems::gen_random_nn(p1, p2, c.seed, eps)).dump(2) + "\n", c.out);
      return 0;
    }
  } catch (const Error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
  return 0;
}
