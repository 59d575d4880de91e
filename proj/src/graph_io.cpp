#include "contmeas/graph_io.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace contmeas {

EmbeddedGraph parse_graph(const std::string& text) {
  EmbeddedGraph g;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string tag;
    if (!(ls >> tag)) continue;
    if (tag == "v") {
      Point p;
      double c;
      while (ls >> c) p.push_back(c);
      if (p.size() < 2)
        throw ParseError("vertex needs at least 2 coordinates at line " +
                         std::to_string(lineno));
      if (!g.vertices.empty() && p.size() != g.dim())
        throw ParseError("vertex dimension mismatch at line " +
                         std::to_string(lineno));
      g.vertices.push_back(std::move(p));
    } else if (tag == "e") {
      int i, j;
      if (!(ls >> i >> j))
        throw ParseError("malformed edge at line " + std::to_string(lineno));
      if (i < 0 || j < 0 || i >= static_cast<int>(g.vertices.size()) ||
          j >= static_cast<int>(g.vertices.size()))
        throw ParseError("vertex index out of range at line " +
                         std::to_string(lineno));
      g.edges.emplace_back(i, j);
    } else {
      throw ParseError("unknown directive '" + tag + "' at line " +
                       std::to_string(lineno));
    }
  }
  auto violations = validate(g);
  if (!violations.empty()) {
    const auto& v = violations.front();
    std::string msg = "graph validation failed: " + v.message;
    if (v.edge_a >= 0) msg += " (edge " + std::to_string(v.edge_a);
    if (v.edge_b >= 0) msg += " vs edge " + std::to_string(v.edge_b);
    if (v.edge_a >= 0) msg += ")";
    throw ParseError(msg);
  }
  return g;
}

EmbeddedGraph load_graph(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw ParseError("cannot open graph file: " + path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return parse_graph(ss.str());
}

std::string serialize_graph(const EmbeddedGraph& g) {
  std::ostringstream out;
  char buf[64];
  for (const auto& v : g.vertices) {
    out << "v";
    for (double c : v) {
      std::snprintf(buf, sizeof buf, " %.17g", c);
      out << buf;
    }
    out << "\n";
  }
  for (auto [i, j] : g.edges) out << "e " << i << " " << j << "\n";
  return out.str();
}

}  // namespace contmeas
