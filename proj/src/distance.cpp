#include "visikit/distance.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "visikit/error.hpp"

namespace visikit {

std::size_t DistanceMatrix::max() const {
  if (table_.empty()) return 0;
  return *std::max_element(table_.begin(), table_.end());
}

std::vector<int> bfs_distances(const Graph& g, VertexId source) {
  std::vector<int> dist(g.num_vertices(), -1);
  std::vector<VertexId> queue;
  queue.reserve(g.num_vertices());
  dist[source] = 0;
  queue.push_back(source);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const VertexId a = queue[head];
    for (VertexId b : g.neighbors(a)) {
      if (dist[b] < 0) {
        dist[b] = dist[a] + 1;
        queue.push_back(b);
      }
    }
  }
  return dist;
}

DistanceMatrix all_pairs_distances(const Graph& g) {
  const std::size_t n = g.num_vertices();
  if (n > std::numeric_limits<DistanceMatrix::Entry>::max()) {
    throw InvalidArgument("graph too large for the distance table (n=" +
                          std::to_string(n) + ")");
  }
  DistanceMatrix result;
  result.n_ = n;
  result.table_.assign(n * n, 0);
  std::vector<VertexId> queue(n);
  std::vector<std::uint8_t> seen(n);
  for (VertexId s = 0; s < n; ++s) {
    DistanceMatrix::Entry* row = result.table_.data() + std::size_t{s} * n;
    std::fill(seen.begin(), seen.end(), 0);
    std::size_t head = 0;
    std::size_t tail = 0;
    queue[tail++] = s;
    seen[s] = 1;
    while (head < tail) {
      const VertexId a = queue[head++];
      for (VertexId b : g.neighbors(a)) {
        if (!seen[b]) {
          seen[b] = 1;
          row[b] = static_cast<DistanceMatrix::Entry>(row[a] + 1);
          queue[tail++] = b;
        }
      }
    }
    if (tail != n) {
      const auto missing = std::find(seen.begin(), seen.end(), 0) - seen.begin();
      throw InvalidArgument("graph not connected: no path between " +
                            std::to_string(s) + " and " +
                            std::to_string(missing));
    }
  }
  return result;
}

std::size_t diameter(const DistanceMatrix& dist) { return dist.max(); }

std::size_t diameter(const Graph& g) {
  return diameter(all_pairs_distances(g));
}

AverageDistance average_distance(const DistanceMatrix& dist) {
  const std::size_t n = dist.size();
  if (n < 2) throw InvalidArgument("average distance undefined for n<2");
  std::uint64_t total = 0;
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v = u + 1; v < n; ++v) total += dist(u, v);
  }
  const mpz_class pairs = mpz_class(std::to_string(
                              static_cast<std::uint64_t>(n) * (n - 1))) /
                          2;
  AverageDistance result;
  result.exact = Rational(mpz_class(std::to_string(total)), pairs);
  result.exact.canonicalize();
  result.value = result.exact.get_d();
  return result;
}

AverageDistance average_distance(const Graph& g) {
  if (g.num_vertices() < 2) {
    throw InvalidArgument("average distance undefined for n<2");
  }
  return average_distance(all_pairs_distances(g));
}

}  // namespace visikit
