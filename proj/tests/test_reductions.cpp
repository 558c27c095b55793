#include <gtest/gtest.h>

#include <cmath>

#include "test_support.hpp"
#include "visikit/constructions.hpp"
#include "visikit/distance.hpp"
#include "visikit/error.hpp"
#include "visikit/exact_oracles.hpp"
#include "visikit/generators.hpp"
#include "visikit/reductions.hpp"

namespace visikit {
namespace {

using testing::brute_force_max;
using testing::set_from_mask;

// P_3 (0-1-2) with an apex 3 adjacent to all of it.
Graph p3_with_apex() { return add_universal_vertex(path_graph(3)).first; }

TEST(GadgetNames, RoundTrip) {
  for (GadgetKind k : {GadgetKind::kDiam2, GadgetKind::kCliqueProduct, GadgetKind::kGpUniversal}) {
    EXPECT_EQ(parse_gadget_kind(to_string(k)), k);
  }
  EXPECT_THROW(parse_gadget_kind("diam3"), InvalidArgument);
  EXPECT_EQ(ceil_sqrt(0), 0u);
  EXPECT_EQ(ceil_sqrt(1), 1u);
  EXPECT_EQ(ceil_sqrt(6), 3u);
  EXPECT_EQ(ceil_sqrt(9), 3u);
  EXPECT_EQ(ceil_sqrt(10), 4u);
}

TEST(Diam2Gadget, SizesAndDiameter) {
  const ReductionInstance k3 = build_diam2_gadget(complete_graph(3), 1);
  EXPECT_EQ(k3.graph.num_vertices(), 8u);
  EXPECT_EQ(diameter(k3.graph), 2u);

  const ReductionInstance p3 = build_diam2_gadget(path_graph(3), 2);
  EXPECT_EQ(p3.graph.num_vertices(), 10u);
  EXPECT_EQ(diameter(p3.graph), 2u);

  const ReductionInstance no_y = build_diam2_gadget(path_graph(3), 2, false);
  EXPECT_EQ(no_y.graph.num_vertices(), 9u);
  EXPECT_FALSE(no_y.y);

  EXPECT_THROW(build_diam2_gadget(path_graph(2), 1), InvalidArgument);
  EXPECT_THROW(build_diam2_gadget(path_graph(4), 0), InvalidArgument);
}

TEST(Diam2Gadget, EdgeRulesAndMaps) {
  const Graph h = cycle_graph(5);
  const ReductionInstance inst = build_diam2_gadget(h, 3);
  const Graph& g = inst.graph;
  for (std::size_t i = 0; i < 3; ++i) {
    for (VertexId u = 0; u < 5; ++u) {
      EXPECT_TRUE(g.has_edge(inst.copy_of(u, i), *inst.y));
      for (VertexId v = 0; v < 5; ++v) {
        if (u != v) { EXPECT_TRUE(g.has_edge(inst.copy_of(u, i), inst.copy_of(v, i))); }
        for (std::size_t j = 0; j < 3; ++j) {
          if (j != i) { EXPECT_FALSE(g.has_edge(inst.copy_of(u, i), inst.copy_of(v, j))); }
        }
      }
    }
  }
  for (std::size_t k = 0; k < inst.source_edges.size(); ++k) {
    const VertexId e = inst.edge_vertex[k];
    EXPECT_TRUE(g.has_edge(e, *inst.z));
    EXPECT_EQ(g.degree(e), 1 + 2 * 3u);
    for (std::size_t i = 0; i < 3; ++i) {
      EXPECT_TRUE(g.has_edge(e, inst.copy_of(inst.source_edges[k].u, i)));
      EXPECT_TRUE(g.has_edge(e, inst.copy_of(inst.source_edges[k].v, i)));
    }
  }
  EXPECT_TRUE(g.has_edge(*inst.y, *inst.z));
  EXPECT_EQ(g.label(inst.copy_of(2, 1)), "v2_1");
  EXPECT_EQ(g.label(inst.edge_vertex[0]), "e0-1");
  EXPECT_EQ(g.label(*inst.y), "y");
  EXPECT_EQ(g.label(*inst.z), "z");

  // The maps are injective and cover V(G).
  std::vector<int> hits(g.num_vertices(), 0);
  for (const auto& layer : inst.vertex_copy)
    for (VertexId id : layer) ++hits[id];
  for (VertexId id : inst.edge_vertex) ++hits[id];
  ++hits[*inst.y];
  ++hits[*inst.z];
  for (int h_count : hits) EXPECT_EQ(h_count, 1);
}

TEST(Diam2Gadget, EmbedIndependentSet) {
  const ReductionInstance p3 = build_diam2_gadget(path_graph(3), 1);
  const VertexSet x = embed_is_as_total_set(p3, {0, 2});
  EXPECT_EQ(x.size(), 4u);
  EXPECT_TRUE(verify_set(p3.graph, x, SetKind::kMuTotal).ok);
  EXPECT_TRUE(testing::naive_property(p3.graph, x, SetKind::kMuTotal));

  const ReductionInstance c6 = build_diam2_gadget(cycle_graph(6), 2);
  const VertexSet y = embed_is_as_total_set(c6, {0, 2, 4});
  EXPECT_EQ(y.size(), 12u);
  EXPECT_TRUE(verify_set(c6.graph, y, SetKind::kMuTotal).ok);

  const VertexSet edges_only = embed_is_as_total_set(c6, {});
  EXPECT_EQ(edges_only.size(), 6u);
  EXPECT_TRUE(verify_set(c6.graph, edges_only, SetKind::kMuTotal).ok);

  EXPECT_THROW(embed_is_as_total_set(c6, {0, 1}), InvalidArgument);
  EXPECT_THROW(embed_is_as_total_set(build_diam2_gadget(path_graph(3), 1, false), {0}),
               InvalidArgument);
}

TEST(Diam2Gadget, ExtractFromMuSet) {
  const ReductionInstance p3 = build_diam2_gadget(path_graph(3), 1);
  EXPECT_EQ(extract_is_from_mu_set(p3, embed_is_as_total_set(p3, {0, 2})), VertexSet{});

  const ReductionInstance c6 = build_diam2_gadget(cycle_graph(6), 1);
  const VertexSet m = embed_is_as_total_set(c6, {0, 2, 4});
  ASSERT_EQ(m.size(), 9u);
  EXPECT_EQ(extract_is_from_mu_set(c6, m), (VertexSet{0, 2, 4}));

  // Leaving out edge-vertices forces R to drop their lower endpoints.
  const VertexSet copies_only{c6.copy_of(0, 0), c6.copy_of(2, 0), c6.copy_of(4, 0)};
  ASSERT_TRUE(verify_set(c6.graph, copies_only, SetKind::kMu).ok);
  const VertexSet s = extract_is_from_mu_set(c6, copies_only);
  EXPECT_TRUE(is_independent_set(c6.source, s));
  EXPECT_GE(static_cast<long>(s.size()), 3L - 6 - 4);

  EXPECT_THROW(extract_is_from_mu_set(c6, {c6.copy_of(0, 0), c6.copy_of(1, 0), c6.copy_of(3, 0),
                                           c6.edge_vertex[0]}),
               VerificationFailure);
  const ReductionInstance two = build_diam2_gadget(cycle_graph(6), 2);
  EXPECT_THROW(extract_is_from_mu_set(two, {}), InvalidArgument);
}

TEST(Diam2Gadget, ExtractFromTotalSet) {
  const ReductionInstance p3 = build_diam2_gadget(path_graph(3), 2);
  const VertexSet x = embed_is_as_total_set(p3, {0, 2});
  const auto layers = layer_sets(p3, x);
  ASSERT_EQ(layers.size(), 2u);
  EXPECT_EQ(layers[0], (VertexSet{0, 2}));
  EXPECT_EQ(layers[1], (VertexSet{0, 2}));
  EXPECT_EQ(extract_is_from_total_set(p3, x), (VertexSet{0, 2}));

  const VertexSet edges_only = embed_is_as_total_set(p3, {});
  EXPECT_EQ(extract_is_from_total_set(p3, edges_only), VertexSet{});

  EXPECT_THROW(extract_is_from_total_set(p3, {p3.copy_of(0, 0), p3.copy_of(1, 0), p3.edge_vertex[0],
                                              p3.edge_vertex[1]}),
               VerificationFailure);
}

// Every mu_t-set of a small gadget: each layer set is independent and the
// extraction bound holds.
TEST(Diam2Gadget, ExtractionOverAllTotalSets) {
  for (std::size_t copies : {1u, 2u}) {
    const ReductionInstance inst = build_diam2_gadget(path_graph(3), copies);
    const std::size_t n = inst.graph.num_vertices();
    const DistanceMatrix d = all_pairs_distances(inst.graph);
    std::size_t seen = 0;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
      const VertexSet x = set_from_mask(n, mask);
      if (!verify_set(inst.graph, d, x, SetKind::kMuTotal).ok) continue;
      ++seen;
      for (const VertexSet& layer : layer_sets(inst, x)) EXPECT_TRUE(is_independent_set(inst.source, layer));
      const VertexSet s = extract_is_from_total_set(inst, x);
      EXPECT_GE(static_cast<double>(s.size()),
                (static_cast<double>(x.size()) - 2.0 - 2.0) / static_cast<double>(copies));
      if (copies == 1 && verify_set(inst.graph, d, x, SetKind::kMu).ok) {
        const VertexSet m = extract_is_from_mu_set(inst, x);
        EXPECT_TRUE(is_independent_set(inst.source, m));
        EXPECT_GE(static_cast<long>(m.size()), static_cast<long>(x.size()) - 2 - 4);
      }
    }
    EXPECT_GT(seen, 0u);
  }
}

TEST(ProductGadget, Examples) {
  const ReductionInstance inst = build_clique_product_gadget(p3_with_apex(), 2);
  EXPECT_EQ(inst.graph.num_vertices(), 8u);
  EXPECT_EQ(diameter(inst.graph), 3u);
  EXPECT_EQ(all_pairs_distances(inst.graph)(inst.copy_of(0, 0), inst.copy_of(2, 1)), 3u);
  EXPECT_EQ(inst.hub, 1u);
  EXPECT_EQ(inst.graph, cartesian_product(complete_graph(2), p3_with_apex()));

  const ReductionInstance k3 = build_clique_product_gadget(complete_graph(3), 1);
  EXPECT_EQ(k3.graph, complete_graph(3));
  EXPECT_EQ(diameter(k3.graph), 1u);

  for (std::size_t i = 0; i < inst.copies; ++i) {
    EXPECT_EQ(induced_subgraph(inst.graph, VertexSet(inst.vertex_copy[i])), inst.source);
  }
  try {
    build_clique_product_gadget(path_graph(4), 2);
    FAIL();
  } catch (const InvalidArgument& e) {
    EXPECT_NE(std::string(e.what()).find("degree N-1"), std::string::npos);
  }
}

TEST(ProductGadget, LayeredEmbedding) {
  const ReductionInstance inst = build_clique_product_gadget(p3_with_apex(), 2);
  const VertexSet x = embed_layered_total_set(inst, {0, 2});
  EXPECT_EQ(x.size(), 4u);
  EXPECT_TRUE(verify_set(inst.graph, x, SetKind::kMuTotal).ok);
  EXPECT_TRUE(testing::naive_property(inst.graph, x, SetKind::kMuTotal));
  EXPECT_EQ(embed_layered_total_set(inst, {}), VertexSet{});

  const ReductionInstance one = build_clique_product_gadget(p3_with_apex(), 1);
  const VertexSet x1 = embed_layered_total_set(one, {0, 2});
  EXPECT_EQ(x1, (VertexSet{0, 2}));
  EXPECT_TRUE(verify_set(one.graph, x1, SetKind::kMuTotal).ok);

  EXPECT_THROW(embed_layered_total_set(inst, {0, 3}), InvalidArgument);
  EXPECT_THROW(embed_layered_total_set(inst, {0, 1}), InvalidArgument);
}

TEST(ProductGadget, PruneTriangleExample) {
  // Triangle with u=0, v=1 and z=2; X = {u_1, v_1, z_2}.
  const ReductionInstance inst = build_clique_product_gadget(complete_graph(3), 2);
  const VertexSet x{inst.copy_of(0, 0), inst.copy_of(1, 0), inst.copy_of(2, 1)};
  ASSERT_TRUE(verify_set(inst.graph, x, SetKind::kMu).ok);
  const PruneResult r = prune_layer_conflicts(inst, x, SetKind::kMu);
  EXPECT_EQ(r.removed, (VertexSet{inst.copy_of(0, 0), inst.copy_of(1, 0)}));
  EXPECT_EQ(r.kept, VertexSet{inst.copy_of(2, 1)});
  for (const VertexSet& layer : layer_sets(inst, r.kept)) EXPECT_TRUE(is_independent_set(inst.source, layer));
  EXPECT_EQ(extract_best_layer_is(inst, r.kept), VertexSet{2});
}

TEST(ProductGadget, PruneWithoutConflictsKeepsEverything) {
  const ReductionInstance inst = build_clique_product_gadget(p3_with_apex(), 2);
  const VertexSet x = embed_layered_total_set(inst, {0, 2});
  const PruneResult r = prune_layer_conflicts(inst, x, SetKind::kMuTotal);
  EXPECT_TRUE(r.removed.empty());
  EXPECT_EQ(r.kept, x);
  EXPECT_THROW(prune_layer_conflicts(inst, x, SetKind::kGeneralPosition), InvalidArgument);
  EXPECT_THROW(prune_layer_conflicts(inst, all_vertices(8), SetKind::kMu), VerificationFailure);
}

// Enumerates every tau-set of small product gadgets and checks the pruning
// contract, including the exclusivity claim for muo/mut.
TEST(ProductGadget, PruneOverAllSets) {
  const std::vector<std::pair<Graph, std::size_t>> cases{
      {complete_graph(3), 2}, {complete_graph(3), 3}, {p3_with_apex(), 2},
      {add_universal_vertex(Graph::from_edges(2, {})).first, 3}};
  std::size_t total_layer_edges = 0;
  for (const auto& [h, copies] : cases) {
    const ReductionInstance inst = build_clique_product_gadget(h, copies);
    const std::size_t n = inst.graph.num_vertices();
    const std::size_t big_n = h.num_vertices();
    const DistanceMatrix d = all_pairs_distances(inst.graph);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
      const VertexSet x = set_from_mask(n, mask);
      for (SetKind kind : {SetKind::kMu, SetKind::kMuDual, SetKind::kMuOuter, SetKind::kMuTotal}) {
        if (!verify_set(inst.graph, d, x, kind).ok) continue;
        const PruneResult r = prune_layer_conflicts(inst, x, kind);
        const std::size_t beta = kind == SetKind::kMu || kind == SetKind::kMuDual ? 2 : 1;
        EXPECT_GE(static_cast<double>(r.kept.size()),
                  static_cast<double>(x.size()) - std::pow(static_cast<double>(big_n), beta));
        EXPECT_EQ(r.kept.size() + r.removed.size(), x.size());
        for (const VertexSet& layer : layer_sets(inst, r.kept)) {
          EXPECT_TRUE(is_independent_set(inst.source, layer));
        }
        if (kind == SetKind::kMuTotal && !r.removed.empty()) {
          ++total_layer_edges;
          // Removed copies have no twin in another layer.
          for (VertexId a : r.removed) {
            for (std::size_t j = 0; j < copies; ++j) {
              const VertexId twin = inst.copy_of(a % big_n, j);
              if (twin != a) { EXPECT_FALSE(x.contains(twin)); }
            }
          }
        }
        const VertexSet s = extract_best_layer_is(inst, r.kept);
        EXPECT_TRUE(is_independent_set(inst.source, s));
        EXPECT_GE(static_cast<double>(s.size()),
                  std::max(1.0, static_cast<double>(r.kept.size()) / static_cast<double>(copies)));
      }
    }
  }
  EXPECT_GT(total_layer_edges, 0u);
}

TEST(ProductGadget, BestLayerExtraction) {
  const ReductionInstance inst = build_clique_product_gadget(p3_with_apex(), 2);
  EXPECT_EQ(extract_best_layer_is(inst, {inst.copy_of(0, 0), inst.copy_of(2, 0), inst.copy_of(0, 1)}),
            (VertexSet{0, 2}));
  EXPECT_EQ(extract_best_layer_is(inst, {inst.copy_of(0, 1), inst.copy_of(2, 1), inst.copy_of(0, 0)}),
            (VertexSet{0, 2}));
  EXPECT_EQ(extract_best_layer_is(inst, {}), VertexSet{0});
  EXPECT_THROW(extract_best_layer_is(inst, {inst.copy_of(0, 0), inst.copy_of(1, 0)}), InvalidArgument);
}

TEST(GpGadget, UniversalVertexGadget) {
  const ReductionInstance inst = build_gp_universal_gadget(cycle_graph(6));
  EXPECT_EQ(inst.graph.num_vertices(), 7u);
  EXPECT_EQ(*inst.z, 6u);
  EXPECT_LE(diameter(inst.graph), 2u);
  EXPECT_EQ(inst.graph.label(0), "v0_0");
  EXPECT_EQ(inst.graph.label(6), "z");
}

TEST(GpGadget, GpOptimumIsLargestIndependentClique) {
  Rng rng(41);
  for (int t = 0; t < 25; ++t) {
    const std::size_t n = 2 + rng.below(8);
    std::vector<Edge> edges;
    for (VertexId u = 0; u < n; ++u)
      for (VertexId v = u + 1; v < n; ++v)
        if (rng.bernoulli(0.4)) edges.push_back({u, v});
    const ReductionInstance inst = build_gp_universal_gadget(Graph::from_edges(n, edges));
    const Graph& g = inst.graph;
    const std::size_t best = brute_force_max(g.num_vertices(), [&](const VertexSet& x) {
      return is_independent_clique(g, x);
    });
    EXPECT_EQ(max_set_exact(g, SetKind::kGeneralPosition).optimum, best);
  }
}

TEST(CliqueOrIs, Examples) {
  const Graph star = add_universal_vertex(Graph::from_edges(4, {})).first;
  const PairedSet leaves = extract_clique_or_is(star, {0, 1, 2, 3});
  EXPECT_EQ(leaves.tag, PairedTag::kIndependentSet);
  EXPECT_EQ(leaves.set, (VertexSet{0, 1, 2, 3}));

  std::vector<Edge> k9;
  for (VertexId u = 0; u < 9; ++u)
    for (VertexId v = u + 1; v < 9; ++v) k9.push_back({u, v});
  k9.push_back({0, 9});
  const Graph pendant = Graph::from_edges(10, k9);
  ASSERT_EQ(diameter(pendant), 2u);
  const PairedSet clique = extract_clique_or_is(pendant, all_vertices(9));
  EXPECT_EQ(clique.tag, PairedTag::kClique);
  EXPECT_EQ(clique.set.size(), 9u);

  const Graph triangles = add_universal_vertex(
      Graph::from_edges(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}})).first;
  const PairedSet tri = extract_clique_or_is(triangles, all_vertices(6));
  EXPECT_EQ(tri.tag, PairedTag::kClique);
  EXPECT_EQ(tri.set.size(), 3u);
  EXPECT_TRUE(is_clique(triangles, tri.set));

  const PairedSet tiny = extract_clique_or_is(triangles, {4});
  EXPECT_EQ(tiny.set.size(), 2u);
  EXPECT_TRUE(tiny.tag == PairedTag::kClique ? is_clique(triangles, tiny.set)
                                             : is_independent_set(triangles, tiny.set));

  EXPECT_THROW(extract_clique_or_is(triangles, {0, 3, 6}), VerificationFailure);
  EXPECT_THROW(extract_clique_or_is(path_graph(4), {0}), InvalidArgument);
  EXPECT_EQ(to_string(PairedTag::kClique), "clique");
  EXPECT_EQ(to_string(PairedTag::kIndependentSet), "independent_set");
}

TEST(ReductionJson, RoundTripAllKinds) {
  const std::vector<ReductionInstance> instances{
      build_diam2_gadget(cycle_graph(5), 2), build_diam2_gadget(path_graph(4), 1, false),
      build_clique_product_gadget(p3_with_apex(), 3), build_gp_universal_gadget(path_graph(5))};
  for (const ReductionInstance& inst : instances) {
    const std::string text = reduction_to_json(inst);
    const ReductionInstance back = reduction_from_json(text);
    EXPECT_EQ(back, inst);
    EXPECT_EQ(reduction_to_json(back), text);
  }
  const std::string path = ::testing::TempDir() + "/visikit_reduction.json";
  save_reduction(path, instances[0]);
  EXPECT_EQ(load_reduction(path), instances[0]);
}

TEST(ReductionJson, RejectsInconsistentDocuments) {
  std::string text = reduction_to_json(build_diam2_gadget(complete_graph(3), 1));
  EXPECT_THROW(reduction_from_json("{}"), InvalidArgument);
  EXPECT_THROW(reduction_from_json("not json"), InvalidArgument);
  const auto pos = text.find("\"y\":6");
  ASSERT_NE(pos, std::string::npos);
  text.replace(pos, 5, "\"y\":5");
  EXPECT_THROW(reduction_from_json(text), InvalidArgument);
}

}  // namespace
}  // namespace visikit
