#ifndef VISIKIT_DISTANCE_HPP_
#define VISIKIT_DISTANCE_HPP_

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "visikit/graph.hpp"
#include "visikit/rational.hpp"

namespace visikit {

// Hop distances between every pair of vertices of a connected graph,
// stored as a flat row-major n*n table.
class DistanceMatrix {
 public:
  using Entry = std::uint16_t;

  DistanceMatrix() = default;

  std::size_t size() const { return n_; }
  std::size_t operator()(VertexId u, VertexId v) const {
    return table_[static_cast<std::size_t>(u) * n_ + v];
  }
  std::span<const Entry> row(VertexId u) const {
    return {table_.data() + static_cast<std::size_t>(u) * n_, n_};
  }
  // True iff w lies on some shortest u,v-path (endpoints included).
  bool on_shortest_path(VertexId u, VertexId w, VertexId v) const {
    return (*this)(u, w) + (*this)(w, v) == (*this)(u, v);
  }
  std::size_t max() const;

 private:
  friend DistanceMatrix all_pairs_distances(const Graph& g);

  std::size_t n_ = 0;
  std::vector<Entry> table_;
};

// One BFS per source. Throws InvalidArgument("graph not connected: ...")
// naming the first unreachable pair.
DistanceMatrix all_pairs_distances(const Graph& g);

// Single-source BFS distances; unreachable vertices get -1.
std::vector<int> bfs_distances(const Graph& g, VertexId source);

std::size_t diameter(const Graph& g);
std::size_t diameter(const DistanceMatrix& dist);

struct AverageDistance {
  Rational exact;
  double value = 0.0;
};

// 2/(n(n-1)) * sum over unordered pairs of d(u,v). Requires n >= 2.
AverageDistance average_distance(const Graph& g);
AverageDistance average_distance(const DistanceMatrix& dist);

}  // namespace visikit

#endif  // VISIKIT_DISTANCE_HPP_
