#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>

#include "sublevel/error.hpp"
#include "sublevel/sdp.hpp"

namespace sublevel::sdp {

namespace {

std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

constexpr const char* kTag = "\"sublevel-sdpa";

}  // namespace

void export_sdpa(const BlockSDP& sdp, std::ostream& out) {
  sdp.validate();
  std::size_t K = sdp.equalities.size();
  out << kTag << " offset " << num(sdp.offset) << " sense " << (sdp.maximize ? "max" : "min") << '\n';
  out << "* equality-rows " << K << '\n';
  out << sdp.m << '\n';
  out << sdp.block_sizes.size() + (K ? 1 : 0) << '\n';
  for (std::size_t b = 0; b < sdp.block_sizes.size(); ++b) out << (b ? " " : "") << sdp.block_sizes[b];
  if (K) out << (sdp.block_sizes.empty() ? "" : " ") << -2 * long(K);
  out << '\n';
  for (std::size_t j = 0; j < sdp.m; ++j) out << (j ? " " : "") << num(sdp.c[j]);
  out << '\n';

  std::vector<Entry> all = sdp.entries;
  auto eqb = std::uint32_t(sdp.block_sizes.size());
  for (std::size_t r = 0; r < K; ++r) {
    const auto& row = sdp.equalities[r];
    auto d = std::uint32_t(2 * r);
    if (row.b != 0.0) {
      all.push_back({0, eqb, d, d, row.b});
      all.push_back({0, eqb, d + 1, d + 1, -row.b});
    }
    for (const auto& [j, v] : row.a) {
      all.push_back({std::uint32_t(j + 1), eqb, d, d, v});
      all.push_back({std::uint32_t(j + 1), eqb, d + 1, d + 1, -v});
    }
  }
  BlockSDP tmp;
  tmp.entries = std::move(all);
  tmp.canonicalize();
  for (const auto& e : tmp.entries)
    out << e.matno << ' ' << e.block + 1 << ' ' << e.i + 1 << ' ' << e.j + 1 << ' ' << num(e.v) << '\n';
}

void export_sdpa(const BlockSDP& sdp, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path);
  export_sdpa(sdp, out);
  if (!out) throw Error("write failed for " + path);
}

std::string export_sdpa_string(const BlockSDP& sdp) {
  std::ostringstream os;
  export_sdpa(sdp, os);
  return os.str();
}

BlockSDP parse_sdpa(std::istream& in) {
  BlockSDP s;
  std::size_t K = 0;
  std::string line;
  std::size_t lineno = 0;
  std::vector<std::string> header;
  auto strip = [](std::string t) {
    for (char& ch : t)
      if (ch == ',' || ch == '{' || ch == '}' || ch == '(' || ch == ')') ch = ' ';
    return t;
  };
  std::vector<std::pair<std::size_t, std::string>> body;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (line[0] == '"' || line[0] == '*') {
      std::istringstream is(line);
      std::string tag;
      is >> tag;
      if (tag == kTag) {
        std::string key, val, key2, sense;
        is >> key >> val >> key2 >> sense;
        try {
          s.offset = std::stod(val);
        } catch (...) {
          throw ParseError("bad offset in header comment", lineno);
        }
        s.maximize = sense == "max";
      } else if (tag == "*") {
        std::string key;
        is >> key;
        if (key == "equality-rows" && !(is >> K)) throw ParseError("bad equality-rows comment", lineno);
      }
      continue;
    }
    body.emplace_back(lineno, strip(line));
  }
  if (body.size() < 3) throw ParseError("truncated SDPA file", lineno);
  std::size_t nblock = 0;
  try {
    s.m = std::stoul(body[0].second);
    nblock = std::stoul(body[1].second);
  } catch (...) {
    throw ParseError("bad m or nBLOCK line", body[0].first);
  }
  std::vector<int> sizes;
  {
    std::istringstream is(body[2].second);
    int v;
    while (is >> v) sizes.push_back(v);
    if (sizes.size() != nblock) throw ParseError("block size count differs from nBLOCK", body[2].first);
  }
  std::size_t pos = 3;
  s.c.assign(s.m, 0.0);
  {
    std::size_t got = 0;
    while (got < s.m) {
      if (pos >= body.size()) throw ParseError("missing objective values", lineno);
      std::istringstream is(body[pos].second);
      std::string tok;
      while (got < s.m && is >> tok) {
        try {
          s.c[got++] = std::stod(tok);
        } catch (...) {
          throw ParseError("bad objective value", body[pos].first);
        }
      }
      ++pos;
    }
    if (s.m == 0 && pos < body.size()) {
      std::istringstream is(body[pos].second);
      std::string t1, t2;
      if ((is >> t1) && !(is >> t2)) ++pos;
    }
  }
  std::size_t eqb = K ? nblock - 1 : nblock;
  if (K) {
    if (nblock == 0 || sizes.back() != -2 * int(K)) throw ParseError("equality block size does not match its comment");
    s.block_sizes.assign(sizes.begin(), sizes.end() - 1);
  } else {
    s.block_sizes = sizes;
  }
  s.equalities.assign(K, {});
  for (; pos < body.size(); ++pos) {
    std::istringstream is(body[pos].second);
    long long matno, block, i, j;
    std::string vtok;
    if (!(is >> matno >> block >> i >> j >> vtok)) throw ParseError("malformed entry line", body[pos].first);
    double v;
    try {
      v = std::stod(vtok);
    } catch (...) {
      throw ParseError("bad entry value", body[pos].first);
    }
    if (matno < 0 || std::size_t(matno) > s.m || block < 1 || std::size_t(block) > nblock || i < 1 || j < 1)
      throw ParseError("entry index out of range", body[pos].first);
    int sz = sizes[std::size_t(block - 1)];
    if (i > std::abs(sz) || j > std::abs(sz)) throw ParseError("entry index outside its block", body[pos].first);
    if (std::size_t(block - 1) == eqb) {
      if (i != j) throw ParseError("off-diagonal entry in equality block", body[pos].first);
      if ((i - 1) % 2 != 0) continue;
      auto& row = s.equalities[std::size_t((i - 1) / 2)];
      if (matno == 0) row.b = v;
      else row.a.emplace_back(std::size_t(matno - 1), v);
      continue;
    }
    s.entries.push_back({std::uint32_t(matno), std::uint32_t(block - 1), std::uint32_t(i - 1), std::uint32_t(j - 1), v});
  }
  for (auto& row : s.equalities) std::sort(row.a.begin(), row.a.end());
  s.canonicalize();
  s.validate();
  return s;
}

BlockSDP parse_sdpa(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  return parse_sdpa(in);
}

BlockSDP parse_sdpa_string(const std::string& text) {
  std::istringstream is(text);
  return parse_sdpa(is);
}

}  // namespace sublevel::sdp
