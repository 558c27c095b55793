#ifndef VISIKIT_REDUCTIONS_HPP_
#define VISIKIT_REDUCTIONS_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "visikit/graph.hpp"
#include "visikit/visibility.hpp"

namespace visikit {

// Gadget graphs built from a source graph H, together with the maps that
// tie every gadget vertex back to H, and the embedding / extraction maps
// between independent sets of H and visibility sets of the gadget.
//
//   kDiam2         L cliques of copies of V(H), one vertex per edge of H,
//                  plus y (optional) and z. Diameter 2 with y.
//   kCliqueProduct K_L x H for an H with a vertex of degree N-1.
//                  Diameter <= 3.
//   kGpUniversal   H plus one vertex adjacent to everything. Diameter <= 2.
enum class GadgetKind { kDiam2, kCliqueProduct, kGpUniversal };

// "diam2", "product", "gp".
std::string to_string(GadgetKind kind);
GadgetKind parse_gadget_kind(const std::string& name);

struct ReductionInstance {
  GadgetKind kind = GadgetKind::kDiam2;
  Graph graph;
  Graph source;
  std::size_t copies = 1;  // L
  // vertex_copy[i][v]: id in `graph` of the copy of source vertex v in layer
  // i (0-based).
  std::vector<std::vector<VertexId>> vertex_copy;
  // kDiam2 only: source edges in sorted order and, parallel to them, the ids
  // of their edge-vertices.
  std::vector<Edge> source_edges;
  std::vector<VertexId> edge_vertex;
  std::optional<VertexId> y;
  std::optional<VertexId> z;
  // kCliqueProduct only: the source vertex of degree N-1 used by the
  // embedding.
  std::optional<VertexId> hub;

  VertexId copy_of(VertexId v, std::size_t layer) const {
    return vertex_copy[layer][v];
  }

  friend bool operator==(const ReductionInstance&, const ReductionInstance&) = default;
};

// Edge rules: copies of distinct vertices in the same layer are adjacent; the
// edge-vertex of (u,v) is adjacent to every copy of u and of v; y is adjacent
// to every copy and to z; z is adjacent to every edge-vertex. n(G) = L*n(H) + m(H) + 2
// (one less without y). Requires H connected with n(H) >= 3 and L >= 1; with
// y the diameter is checked to be exactly 2.
ReductionInstance build_diam2_gadget(const Graph& h, std::size_t copies,
                                     bool include_y = true);

// All edge-vertices plus every copy of S. For an independent S this is a
// mu_t-set of size L*|S| + m(H) (checked). Needs the y vertex.
VertexSet embed_is_as_total_set(const ReductionInstance& inst, const VertexSet& s);

// L = 1 only. Given a mu-set M, take S' = {v : v_1 in M}; if |S'| <= 2 return
// the empty set, otherwise drop the lower endpoint of every edge whose
// edge-vertex is not in M. The result is independent with
// |S| >= |M| - m(H) - 4 (both checked).
VertexSet extract_is_from_mu_set(const ReductionInstance& inst, const VertexSet& m);

// {v : v_i in X} for each layer i.
std::vector<VertexSet> layer_sets(const ReductionInstance& inst, const VertexSet& x);

// Given a mu_t-set X, every layer set is independent; returns the largest
// (lowest layer on ties), of size >= (|X| - m(H) - 2) / L (checked).
VertexSet extract_is_from_total_set(const ReductionInstance& inst,
                                    const VertexSet& x);

// K_L x H with layer i holding ids i*N .. i*N + N-1. Requires a vertex of
// degree N-1 in H (the hub) and N >= 2; diameter <= 3 is checked.
ReductionInstance build_clique_product_gadget(const Graph& h, std::size_t copies);

// Every layer copy of S, a mu_t-set of size L*|S| (checked). S must be
// independent and avoid the hub.
VertexSet embed_layered_total_set(const ReductionInstance& inst, const VertexSet& s);

struct PruneResult {
  VertexSet kept;     // X'
  VertexSet removed;  // X''
};

// For a tau-set X (tau in mu, mud, muo, mut, named by `kind`): removes both
// copies u_i, v_i whenever an edge (u,v) of H lies inside one layer of X.
// Checks that no edge lies inside two layers, that for muo/mut the endpoints
// of such an edge appear in no other layer, that every layer of X' is
// independent, and |X'| >= |X| - N^beta with beta = 2 for mu/mud and 1 for
// muo/mut.
PruneResult prune_layer_conflicts(const ReductionInstance& inst, const VertexSet& x,
                                  SetKind kind);

// Largest layer set of a layerwise-independent X' (lowest layer on ties), or
// {0} when every layer is empty. |S| >= max(1, |X'| / L).
VertexSet extract_best_layer_is(const ReductionInstance& inst, const VertexSet& x);

// H plus a universal vertex z. Vertex ids of H are kept.
ReductionInstance build_gp_universal_gadget(const Graph& h);

enum class PairedTag { kClique, kIndependentSet };
std::string to_string(PairedTag tag);

struct PairedSet {
  VertexSet set;
  PairedTag tag = PairedTag::kIndependentSet;
};

// g must have diameter 2 and C must be a gp-set, hence an independent clique.
// Returns one vertex per component when there are at least sqrt(|C|)
// components and otherwise the largest component; either way the size is
// at least ceil(sqrt(|C|)). For |C| < 2, vertices 0 and 1 of g are returned.
PairedSet extract_clique_or_is(const Graph& g, const VertexSet& c);

// Smallest k with k*k >= value.
std::size_t ceil_sqrt(std::size_t value);

// JSON document {kind, L, graph, source, maps}; graphs are inline edge lists
// and maps are name -> id tables. reduction_from_json rebuilds the gadget from
// the source and rejects documents that disagree with it.
std::string reduction_to_json(const ReductionInstance& inst);
ReductionInstance reduction_from_json(const std::string& text);
ReductionInstance load_reduction(const std::string& path);
void save_reduction(const std::string& path, const ReductionInstance& inst);

}  // namespace visikit

#endif  // VISIKIT_REDUCTIONS_HPP_
