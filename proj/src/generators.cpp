#include "visikit/generators.hpp"

#include <algorithm>
#include <vector>

#include "visikit/constructions.hpp"
#include "visikit/error.hpp"
#include "visikit/random.hpp"

namespace visikit {

std::string to_string(GraphFamily family) {
  switch (family) {
    case GraphFamily::kPath: return "path";
    case GraphFamily::kCycle: return "cycle";
    case GraphFamily::kComplete: return "complete";
    case GraphFamily::kGrid: return "grid";
    case GraphFamily::kRandomConnected: return "random_connected";
    case GraphFamily::kRandomSubcubic: return "random_subcubic";
  }
  return "unknown";
}

GraphFamily parse_graph_family(const std::string& name) {
  for (GraphFamily f :
       {GraphFamily::kPath, GraphFamily::kCycle, GraphFamily::kComplete,
        GraphFamily::kGrid, GraphFamily::kRandomConnected,
        GraphFamily::kRandomSubcubic}) {
    if (to_string(f) == name) return f;
  }
  throw InvalidArgument("unknown graph family \"" + name + "\"");
}

namespace {

Graph random_connected(std::size_t n, double p, Rng& rng) {
  if (!(p > 0.0 && p <= 1.0)) {
    throw InvalidArgument("random_connected needs p in (0,1]");
  }
  for (int attempt = 0; attempt < kMaxGeneratorAttempts; ++attempt) {
    std::vector<Edge> edges;
    for (VertexId u = 0; u < n; ++u) {
      for (VertexId v = u + 1; v < n; ++v) {
        if (rng.bernoulli(p)) edges.push_back({u, v});
      }
    }
    Graph g = Graph::from_edges(n, edges);
    if (g.is_connected()) return g;
  }
  throw InvalidArgument("random_connected: no connected sample in " +
                        std::to_string(kMaxGeneratorAttempts) + " attempts");
}

// Random spanning tree with maximum degree 3, then random extra edges
// between vertices of degree < 3 until the edge target is met.
std::optional<Graph> subcubic_attempt(std::size_t n, std::size_t target,
                                      Rng& rng) {
  std::vector<VertexId> order(n);
  for (VertexId v = 0; v < n; ++v) order[v] = v;
  rng.shuffle(std::span<VertexId>(order));

  std::vector<std::size_t> degree(n, 0);
  std::vector<std::vector<std::uint8_t>> adjacent(
      n, std::vector<std::uint8_t>(n, 0));
  std::vector<Edge> edges;
  auto connect = [&](VertexId a, VertexId b) {
    edges.push_back({std::min(a, b), std::max(a, b)});
    adjacent[a][b] = adjacent[b][a] = 1;
    ++degree[a];
    ++degree[b];
  };

  std::vector<VertexId> open;
  for (std::size_t k = 1; k < n; ++k) {
    open.clear();
    for (std::size_t j = 0; j < k; ++j) {
      if (degree[order[j]] < 3) open.push_back(order[j]);
    }
    connect(order[k], open[rng.below(open.size())]);
  }

  std::vector<Edge> candidates;
  while (edges.size() < target) {
    candidates.clear();
    for (VertexId u = 0; u < n; ++u) {
      if (degree[u] >= 3) continue;
      for (VertexId v = u + 1; v < n; ++v) {
        if (degree[v] < 3 && !adjacent[u][v]) candidates.push_back({u, v});
      }
    }
    if (candidates.empty()) return std::nullopt;
    const Edge e = candidates[rng.below(candidates.size())];
    connect(e.u, e.v);
  }
  std::sort(edges.begin(), edges.end());
  return Graph::from_edges(n, edges);
}

Graph random_subcubic(const GeneratorParams& params, Rng& rng) {
  const std::size_t n = params.n;
  const std::size_t max_edges = std::min(3 * n / 2, n * (n - 1) / 2);
  const std::size_t min_edges = n - 1;
  std::size_t target = 0;
  if (params.edges) {
    target = *params.edges;
    if (target < min_edges || target > max_edges) {
      throw InvalidArgument("random_subcubic: m=" + std::to_string(target) +
                            " infeasible for n=" + std::to_string(n) +
                            " (need " + std::to_string(min_edges) +
                            " <= m <= " + std::to_string(max_edges) + ")");
    }
  } else {
    target = rng.between(min_edges, max_edges);
  }
  for (int attempt = 0; attempt < kMaxGeneratorAttempts; ++attempt) {
    if (auto g = subcubic_attempt(n, target, rng)) return *std::move(g);
  }
  throw InvalidArgument("random_subcubic: no sample with m=" +
                        std::to_string(target) + " in " +
                        std::to_string(kMaxGeneratorAttempts) + " attempts");
}

}  // namespace

Graph generate(GraphFamily family, const GeneratorParams& params,
               std::uint64_t seed) {
  Rng rng(seed);
  if (family != GraphFamily::kGrid && params.n == 0) {
    throw InvalidArgument(to_string(family) + " needs n>=1");
  }
  switch (family) {
    case GraphFamily::kPath: return path_graph(params.n);
    case GraphFamily::kCycle: return cycle_graph(params.n);
    case GraphFamily::kComplete: return complete_graph(params.n);
    case GraphFamily::kGrid: return grid_graph(params.rows, params.cols);
    case GraphFamily::kRandomConnected:
      return random_connected(params.n, params.p, rng);
    case GraphFamily::kRandomSubcubic: return random_subcubic(params, rng);
  }
  throw InvalidArgument("unknown graph family");
}

}  // namespace visikit
