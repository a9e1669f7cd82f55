#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "sublevel/bench.hpp"
#include "sublevel/error.hpp"

namespace sublevel::bench {

double ri(double shor, double sublevel, double solution) {
  if (shor == solution) throw MetricError("RI undefined: Shor bound equals the reference value");
  return (shor - sublevel) / (shor - solution) * 100.0;
}

double rg(double sublevel, double solution, Sense sense) {
  if (solution == 0.0) throw MetricError("RG undefined: reference value is zero");
  double d = sense == Sense::Max ? sublevel - solution : solution - sublevel;
  return d / std::abs(solution) * 100.0;
}

Reference read_reference(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  try {
    nlohmann::json j;
    in >> j;
    Reference r;
    r.value = j.at("value").get<double>();
    r.kind = j.value("kind", std::string("solution"));
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("reference JSON: ") + e.what());
  }
}

namespace {

std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::string opt(const std::optional<double>& v, bool have_ref) {
  if (v) return num(*v);
  return have_ref ? "-" : "";
}

}  // namespace

std::string to_csv(const std::vector<RunRecord>& rows, bool timing) {
  std::ostringstream os;
  os << "instance,mode,order,level,depth,heuristic,bound,status,iterations,solve_seconds,reference,ri_percent,"
        "rg_percent\n";
  for (const auto& r : rows) {
    bool ok = r.error.empty();
    os << r.instance << ',' << r.mode << ',' << r.order << ',' << r.level << ',' << r.depth << ',' << r.heuristic
       << ',' << (ok ? num(r.bound) : "") << ',' << r.status << ',' << r.iterations << ','
       << (timing && ok ? num(r.solve_seconds) : "") << ',' << (r.reference ? num(*r.reference) : "") << ','
       << opt(r.ri, r.reference.has_value()) << ',' << opt(r.rg, r.reference.has_value()) << '\n';
  }
  return os.str();
}

nlohmann::json to_json(const std::vector<RunRecord>& rows, bool timing) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& r : rows) {
    nlohmann::json j{{"instance", r.instance}, {"mode", r.mode},         {"order", r.order},
                     {"level", r.level},       {"depth", r.depth},       {"heuristic", r.heuristic},
                     {"status", r.status},     {"iterations", r.iterations}};
    j["bound"] = r.error.empty() ? nlohmann::json(r.bound) : nlohmann::json(nullptr);
    if (timing) j["solve_seconds"] = r.solve_seconds;
    j["reference"] = r.reference ? nlohmann::json(*r.reference) : nlohmann::json(nullptr);
    j["ri_percent"] = r.ri ? nlohmann::json(*r.ri) : nlohmann::json(nullptr);
    j["rg_percent"] = r.rg ? nlohmann::json(*r.rg) : nlohmann::json(nullptr);
    if (!r.error.empty()) j["error"] = r.error;
    out.push_back(std::move(j));
  }
  return out;
}

}  // namespace sublevel::bench
