#ifndef VISIKIT_CONSTRUCTIONS_HPP_
#define VISIKIT_CONSTRUCTIONS_HPP_

#include <cstddef>
#include <optional>
#include <utility>

#include "visikit/graph.hpp"

namespace visikit {

Graph complete_graph(std::size_t n);
Graph path_graph(std::size_t n);
// n >= 3.
Graph cycle_graph(std::size_t n);
// rows x cols lattice; vertex (r, c) has id r*cols + c.
Graph grid_graph(std::size_t rows, std::size_t cols);

// Cartesian product G x H. Vertex (g, h) gets id g*n(H) + h and the label
// "(g,h)": fixing the first coordinate yields a layer isomorphic to H.
Graph cartesian_product(const Graph& g, const Graph& h);

// Appends a vertex adjacent to every existing vertex and returns its id.
// Existing labels are kept; the new vertex is labelled "z" when the input
// carries labels.
std::pair<Graph, VertexId> add_universal_vertex(const Graph& g);

// Subgraph induced by the given vertices, relabelled 0..k-1 in set order.
Graph induced_subgraph(const Graph& g, const VertexSet& vertices);

// Some vertex of degree n-1 with the lowest id, if any.
std::optional<VertexId> find_universal_vertex(const Graph& g);

}  // namespace visikit

#endif  // VISIKIT_CONSTRUCTIONS_HPP_
