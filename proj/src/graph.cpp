#include "visikit/graph.hpp"

#include <algorithm>
#include <charconv>
#include <queue>
#include <sstream>

#include "visikit/error.hpp"

namespace visikit {

Graph Graph::from_edges(std::size_t n, std::span<const Edge> edges,
                        std::vector<std::string> labels) {
  if (!labels.empty() && labels.size() != n) {
    throw InvalidArgument("label count " + std::to_string(labels.size()) +
                          " does not match vertex count " + std::to_string(n));
  }
  Graph g;
  g.adjacency_.resize(n);
  for (const Edge& e : edges) {
    if (e.u >= n || e.v >= n) {
      throw InvalidArgument("edge (" + std::to_string(e.u) + "," +
                            std::to_string(e.v) + ") references a vertex >= " +
                            std::to_string(n));
    }
    if (e.u == e.v) {
      throw InvalidArgument("self-loop at vertex " + std::to_string(e.u));
    }
    g.adjacency_[e.u].push_back(e.v);
    g.adjacency_[e.v].push_back(e.u);
  }
  for (std::size_t v = 0; v < n; ++v) {
    auto& list = g.adjacency_[v];
    std::sort(list.begin(), list.end());
    const auto dup = std::adjacent_find(list.begin(), list.end());
    if (dup != list.end()) {
      throw InvalidArgument("duplicate edge (" + std::to_string(v) + "," +
                            std::to_string(*dup) + ")");
    }
  }
  g.num_edges_ = edges.size();
  g.labels_ = std::move(labels);
  return g;
}

bool Graph::has_edge(VertexId u, VertexId v) const {
  const auto& list = adjacency_[u];
  return std::binary_search(list.begin(), list.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> result;
  result.reserve(num_edges_);
  for (VertexId u = 0; u < adjacency_.size(); ++u) {
    for (VertexId v : adjacency_[u]) {
      if (u < v) result.push_back({u, v});
    }
  }
  return result;
}

const std::string& Graph::label(VertexId v) const {
  static const std::string kEmpty;
  return labels_.empty() ? kEmpty : labels_[v];
}

bool Graph::is_connected() const {
  const std::size_t n = adjacency_.size();
  if (n == 0) return true;
  std::vector<std::uint8_t> seen(n, 0);
  std::queue<VertexId> queue;
  queue.push(0);
  seen[0] = 1;
  std::size_t reached = 1;
  while (!queue.empty()) {
    const VertexId a = queue.front();
    queue.pop();
    for (VertexId b : adjacency_[a]) {
      if (!seen[b]) {
        seen[b] = 1;
        ++reached;
        queue.push(b);
      }
    }
  }
  return reached == n;
}

VertexSet::VertexSet(std::vector<VertexId> ids) : ids_(std::move(ids)) {
  std::sort(ids_.begin(), ids_.end());
  const auto dup = std::adjacent_find(ids_.begin(), ids_.end());
  if (dup != ids_.end()) {
    throw InvalidArgument("vertex " + std::to_string(*dup) +
                          " listed twice in a vertex set");
  }
}

VertexSet VertexSet::from_mask(std::span<const std::uint8_t> mask) {
  VertexSet set;
  for (std::size_t v = 0; v < mask.size(); ++v) {
    if (mask[v]) set.ids_.push_back(static_cast<VertexId>(v));
  }
  return set;
}

bool VertexSet::contains(VertexId v) const {
  return std::binary_search(ids_.begin(), ids_.end(), v);
}

void VertexSet::check_within(std::size_t n) const {
  if (!ids_.empty() && ids_.back() >= n) {
    throw InvalidArgument("vertex " + std::to_string(ids_.back()) +
                          " is not in a graph with " + std::to_string(n) +
                          " vertices");
  }
}

std::vector<std::uint8_t> VertexSet::mask(std::size_t n) const {
  check_within(n);
  std::vector<std::uint8_t> result(n, 0);
  for (VertexId v : ids_) result[v] = 1;
  return result;
}

VertexSet all_vertices(std::size_t n) {
  std::vector<VertexId> ids(n);
  for (std::size_t v = 0; v < n; ++v) ids[v] = static_cast<VertexId>(v);
  return VertexSet(std::move(ids));
}

bool is_independent_set(const Graph& g, const VertexSet& set) {
  set.check_within(g.num_vertices());
  for (std::size_t i = 0; i < set.size(); ++i) {
    for (std::size_t j = i + 1; j < set.size(); ++j) {
      if (g.has_edge(set[i], set[j])) return false;
    }
  }
  return true;
}

bool is_clique(const Graph& g, const VertexSet& set) {
  set.check_within(g.num_vertices());
  for (std::size_t i = 0; i < set.size(); ++i) {
    for (std::size_t j = i + 1; j < set.size(); ++j) {
      if (!g.has_edge(set[i], set[j])) return false;
    }
  }
  return true;
}

std::string format_vertex_list(const VertexSet& set) {
  std::string out;
  for (std::size_t i = 0; i < set.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(set[i]);
  }
  return out;
}

VertexSet parse_vertex_list(const std::string& text) {
  std::vector<VertexId> ids;
  std::stringstream stream(text);
  std::string token;
  while (std::getline(stream, token, ',')) {
    const auto first = token.find_first_not_of(" \t");
    if (first == std::string::npos) {
      if (stream.eof() && ids.empty()) break;
      throw InvalidArgument("empty entry in vertex list \"" + text + "\"");
    }
    const auto last = token.find_last_not_of(" \t");
    const std::string trimmed = token.substr(first, last - first + 1);
    VertexId id = 0;
    const auto [ptr, ec] =
        std::from_chars(trimmed.data(), trimmed.data() + trimmed.size(), id);
    if (ec != std::errc() || ptr != trimmed.data() + trimmed.size()) {
      throw InvalidArgument("bad vertex id \"" + trimmed + "\"");
    }
    ids.push_back(id);
  }
  return VertexSet(std::move(ids));
}

}  // namespace visikit
