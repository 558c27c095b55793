#include "visikit/constructions.hpp"

#include <optional>
#include <string>
#include <vector>

#include "visikit/error.hpp"

namespace visikit {

Graph complete_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v = u + 1; v < n; ++v) edges.push_back({u, v});
  }
  return Graph::from_edges(n, edges);
}

Graph path_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (VertexId v = 1; v < n; ++v) edges.push_back({v - 1, v});
  return Graph::from_edges(n, edges);
}

Graph cycle_graph(std::size_t n) {
  if (n < 3) throw InvalidArgument("cycle needs n>=3");
  std::vector<Edge> edges;
  for (VertexId v = 1; v < n; ++v) edges.push_back({v - 1, v});
  edges.push_back({0, static_cast<VertexId>(n - 1)});
  return Graph::from_edges(n, edges);
}

Graph grid_graph(std::size_t rows, std::size_t cols) {
  if (rows == 0 || cols == 0) throw InvalidArgument("grid needs rows, cols >= 1");
  std::vector<Edge> edges;
  auto id = [cols](std::size_t r, std::size_t c) {
    return static_cast<VertexId>(r * cols + c);
  };
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      if (c + 1 < cols) edges.push_back({id(r, c), id(r, c + 1)});
      if (r + 1 < rows) edges.push_back({id(r, c), id(r + 1, c)});
    }
  }
  return Graph::from_edges(rows * cols, edges);
}

Graph cartesian_product(const Graph& g, const Graph& h) {
  const std::size_t ng = g.num_vertices();
  const std::size_t nh = h.num_vertices();
  if (ng == 0 || nh == 0) {
    throw InvalidArgument("cartesian product of an empty graph");
  }
  auto id = [nh](std::size_t a, std::size_t b) {
    return static_cast<VertexId>(a * nh + b);
  };
  std::vector<Edge> edges;
  edges.reserve(ng * h.num_edges() + nh * g.num_edges());
  for (std::size_t a = 0; a < ng; ++a) {
    for (const Edge& e : h.edges()) edges.push_back({id(a, e.u), id(a, e.v)});
  }
  for (const Edge& e : g.edges()) {
    for (std::size_t b = 0; b < nh; ++b) edges.push_back({id(e.u, b), id(e.v, b)});
  }
  std::vector<std::string> labels;
  labels.reserve(ng * nh);
  for (std::size_t a = 0; a < ng; ++a) {
    for (std::size_t b = 0; b < nh; ++b) {
      labels.push_back("(" + std::to_string(a) + "," + std::to_string(b) + ")");
    }
  }
  return Graph::from_edges(ng * nh, edges, std::move(labels));
}

std::pair<Graph, VertexId> add_universal_vertex(const Graph& g) {
  const std::size_t n = g.num_vertices();
  const auto apex = static_cast<VertexId>(n);
  std::vector<Edge> edges = g.edges();
  for (VertexId v = 0; v < n; ++v) edges.push_back({v, apex});
  std::vector<std::string> labels;
  if (g.has_labels()) {
    labels = g.labels();
    labels.push_back("z");
  }
  return {Graph::from_edges(n + 1, edges, std::move(labels)), apex};
}

Graph induced_subgraph(const Graph& g, const VertexSet& vertices) {
  vertices.check_within(g.num_vertices());
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    for (std::size_t j = i + 1; j < vertices.size(); ++j) {
      if (g.has_edge(vertices[i], vertices[j])) {
        edges.push_back({static_cast<VertexId>(i), static_cast<VertexId>(j)});
      }
    }
  }
  return Graph::from_edges(vertices.size(), edges);
}

std::optional<VertexId> find_universal_vertex(const Graph& g) {
  const std::size_t n = g.num_vertices();
  for (VertexId v = 0; v < n; ++v) {
    if (g.degree(v) + 1 == n) return v;
  }
  return std::nullopt;
}

}  // namespace visikit
