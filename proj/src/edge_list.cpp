#include "visikit/edge_list.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>
#include <vector>

#include "visikit/error.hpp"

namespace visikit {

namespace {

[[noreturn]] void fail_at(std::size_t line, const std::string& what) {
  throw InvalidArgument("line " + std::to_string(line) + ": " + what);
}

// Parses exactly two unsigned integers; anything else on the line is an
// error.
bool parse_pair(const std::string& line, std::uint64_t& a, std::uint64_t& b) {
  std::istringstream fields(line);
  std::string first, second, extra;
  if (!(fields >> first >> second) || (fields >> extra)) return false;
  auto to_uint = [](const std::string& s, std::uint64_t& out) {
    if (s.empty() || s.size() > 18) return false;
    out = 0;
    for (char c : s) {
      if (c < '0' || c > '9') return false;
      out = out * 10 + static_cast<std::uint64_t>(c - '0');
    }
    return true;
  };
  return to_uint(first, a) && to_uint(second, b);
}

}  // namespace

Graph read_edge_list(std::istream& in, bool allow_disconnected) {
  std::string line;
  std::size_t line_no = 0;
  bool have_header = false;
  std::uint64_t n = 0;
  std::uint64_t m = 0;
  std::vector<Edge> edges;
  std::set<std::pair<VertexId, VertexId>> seen;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto start = line.find_first_not_of(" \t");
    if (start == std::string::npos || line[start] == '#') continue;
    std::uint64_t a = 0, b = 0;
    if (!parse_pair(line, a, b)) {
      fail_at(line_no, have_header ? "expected \"u v\"" : "expected \"n m\"");
    }
    if (!have_header) {
      n = a;
      m = b;
      have_header = true;
      continue;
    }
    if (edges.size() == m) fail_at(line_no, "more than m=" + std::to_string(m) + " edges");
    if (a >= n || b >= n) fail_at(line_no, "vertex id out of range for n=" + std::to_string(n));
    if (a == b) fail_at(line_no, "self-loop at vertex " + std::to_string(a));
    const auto u = static_cast<VertexId>(std::min(a, b));
    const auto v = static_cast<VertexId>(std::max(a, b));
    if (!seen.insert({u, v}).second) {
      fail_at(line_no, "duplicate edge (" + std::to_string(u) + "," +
                           std::to_string(v) + ")");
    }
    edges.push_back({u, v});
  }
  if (!have_header) throw InvalidArgument("empty edge list: missing \"n m\" header");
  if (edges.size() != m) {
    throw InvalidArgument("header promises " + std::to_string(m) +
                          " edges but " + std::to_string(edges.size()) +
                          " were given");
  }
  Graph g = Graph::from_edges(n, edges);
  if (!allow_disconnected && !g.is_connected()) {
    throw InvalidArgument("graph not connected");
  }
  return g;
}

Graph parse_edge_list(const std::string& text, bool allow_disconnected) {
  std::istringstream in(text);
  return read_edge_list(in, allow_disconnected);
}

Graph load_graph(const std::string& path, bool allow_disconnected) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot open " + path);
  try {
    return read_edge_list(in, allow_disconnected);
  } catch (const InvalidArgument& e) {
    throw InvalidArgument(path + ": " + e.what());
  }
}

void write_edge_list(std::ostream& out, const Graph& g) {
  out << g.num_vertices() << ' ' << g.num_edges() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

std::string format_edge_list(const Graph& g) {
  std::ostringstream out;
  write_edge_list(out, g);
  return out.str();
}

void save_graph(const std::string& path, const Graph& g) {
  std::ofstream out(path);
  if (!out) throw InvalidArgument("cannot write " + path);
  write_edge_list(out, g);
}

}  // namespace visikit
