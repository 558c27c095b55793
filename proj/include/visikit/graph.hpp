#ifndef VISIKIT_GRAPH_HPP_
#define VISIKIT_GRAPH_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace visikit {

using VertexId = std::uint32_t;

struct Edge {
  VertexId u = 0;
  VertexId v = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Simple undirected graph on the dense vertex ids 0..n-1.
//
// Neighbor lists are kept sorted, so two graphs compare equal exactly when
// their adjacency structure is identical (labels are not compared). The
// graph is immutable once built. Connectivity is not enforced here: metric
// operations check it and report an unreachable pair when it fails.
class Graph {
 public:
  Graph() = default;

  // Throws InvalidArgument on out-of-range ids, self-loops, duplicate edges
  // (in either orientation) and on a labels vector of the wrong length.
  static Graph from_edges(std::size_t n, std::span<const Edge> edges,
                          std::vector<std::string> labels = {});
  static Graph from_edges(std::size_t n, std::initializer_list<Edge> edges) {
    return from_edges(n, std::span<const Edge>(edges.begin(), edges.size()));
  }

  std::size_t num_vertices() const { return adjacency_.size(); }
  std::size_t num_edges() const { return num_edges_; }

  std::span<const VertexId> neighbors(VertexId v) const {
    return adjacency_[v];
  }
  std::size_t degree(VertexId v) const { return adjacency_[v].size(); }
  bool has_edge(VertexId u, VertexId v) const;

  // All edges with u < v, sorted.
  std::vector<Edge> edges() const;

  bool has_labels() const { return !labels_.empty(); }
  // Empty string when the graph carries no labels.
  const std::string& label(VertexId v) const;
  const std::vector<std::string>& labels() const { return labels_; }

  bool is_connected() const;

  bool operator==(const Graph& other) const {
    return adjacency_ == other.adjacency_;
  }

 private:
  std::vector<std::vector<VertexId>> adjacency_;
  std::vector<std::string> labels_;
  std::size_t num_edges_ = 0;
};

// Canonical sorted set of vertex ids without duplicates.
class VertexSet {
 public:
  VertexSet() = default;
  // Sorts; throws InvalidArgument on duplicates.
  explicit VertexSet(std::vector<VertexId> ids);
  VertexSet(std::initializer_list<VertexId> ids)
      : VertexSet(std::vector<VertexId>(ids)) {}

  // Builds the set from a membership mask (nonzero entries are members).
  static VertexSet from_mask(std::span<const std::uint8_t> mask);

  std::size_t size() const { return ids_.size(); }
  bool empty() const { return ids_.empty(); }
  bool contains(VertexId v) const;
  auto begin() const { return ids_.begin(); }
  auto end() const { return ids_.end(); }
  VertexId operator[](std::size_t i) const { return ids_[i]; }
  const std::vector<VertexId>& ids() const { return ids_; }

  // Throws InvalidArgument if some id is not a vertex of a graph on n
  // vertices.
  void check_within(std::size_t n) const;
  // Membership mask of length n (1 for members).
  std::vector<std::uint8_t> mask(std::size_t n) const;

  friend auto operator<=>(const VertexSet&, const VertexSet&) = default;

 private:
  std::vector<VertexId> ids_;
};

// Set of vertices {0, ..., n-1}.
VertexSet all_vertices(std::size_t n);

// True iff no two members of the set are adjacent in g.
bool is_independent_set(const Graph& g, const VertexSet& set);
// True iff every two members of the set are adjacent in g.
bool is_clique(const Graph& g, const VertexSet& set);

// Comma-separated ids, e.g. "0,2,5". Whitespace is tolerated on parse.
std::string format_vertex_list(const VertexSet& set);
VertexSet parse_vertex_list(const std::string& text);

}  // namespace visikit

#endif  // VISIKIT_GRAPH_HPP_
