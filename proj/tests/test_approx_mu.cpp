#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <set>

#include "test_support.hpp"
#include "visikit/approx_mu.hpp"
#include "visikit/constructions.hpp"
#include "visikit/distance.hpp"
#include "visikit/error.hpp"
#include "visikit/exact_oracles.hpp"
#include "visikit/generators.hpp"

namespace visikit {
namespace {

// binom(d + 1/2, d) rewritten as prod_{j=1..d} (2j+1)/(2j).
Rational reference_half_binomial(std::size_t d) {
  Rational r(1);
  for (unsigned long j = 1; j <= d; ++j) r *= Rational(2 * j + 1, 2 * j);
  return r;
}

bool hypergraph_independent(const ThreeUniformHypergraph& h, const VertexSet& s) {
  return std::none_of(h.edges.begin(), h.edges.end(), [&](const Triple& t) {
    return s.contains(t[0]) && s.contains(t[1]) && s.contains(t[2]);
  });
}

TEST(GeneralizedBinomial, Examples) {
  EXPECT_EQ(generalized_binomial(Rational(1, 2), 0), Rational(1));
  EXPECT_EQ(generalized_binomial(Rational(3, 2), 1), Rational(3, 2));
  EXPECT_EQ(generalized_binomial(Rational(5, 2), 2), Rational(15, 8));
  EXPECT_EQ(generalized_binomial(Rational(7, 2), 3), Rational(35, 16));
  // Integer arguments agree with ordinary binomials.
  EXPECT_EQ(generalized_binomial(Rational(6), 2), Rational(15));
  EXPECT_EQ(generalized_binomial(Rational(2), 3), Rational(0));
}

TEST(CaroTuzaTerm, MatchesReference) {
  for (std::size_t d = 0; d <= 40; ++d) {
    const Rational term = caro_tuza_term(d);
    EXPECT_EQ(term, Rational(1 / reference_half_binomial(d)));
    EXPECT_EQ(term, Rational(1 / generalized_binomial(Rational(2 * d + 1, 2), d)));
    EXPECT_GT(term, 0);
    EXPECT_LE(term, 1);
  }
  EXPECT_EQ(caro_tuza_term(1), Rational(2, 3));
}

TEST(PathInterior, Examples) {
  const Graph k4 = complete_graph(4);
  const DistanceMatrix dk = all_pairs_distances(k4);
  for (VertexId u = 0; u < 4; ++u)
    for (VertexId v = u + 1; v < 4; ++v) EXPECT_TRUE(choose_path_interior(k4, dk, u, v).empty());

  const Graph p4 = path_graph(4);
  const DistanceMatrix dp = all_pairs_distances(p4);
  EXPECT_EQ(choose_path_interior(p4, dp, 0, 3), (std::vector<VertexId>{1, 2}));
  EXPECT_EQ(choose_path_interior(p4, dp, 3, 0), (std::vector<VertexId>{1, 2}));

  const Graph c4 = cycle_graph(4);
  EXPECT_EQ(choose_path_interior(c4, all_pairs_distances(c4), 0, 2), (std::vector<VertexId>{1}));
}

TEST(PathInterior, IsAShortestPath) {
  Rng rng(4);
  for (int t = 0; t < 30; ++t) {
    const Graph g = generate(GraphFamily::kRandomConnected, {.n = 15, .p = 0.2}, rng.next());
    const DistanceMatrix d = all_pairs_distances(g);
    for (VertexId u = 0; u < 15; ++u) {
      for (VertexId v = u + 1; v < 15; ++v) {
        const auto inner = choose_path_interior(g, d, u, v);
        ASSERT_EQ(inner.size() + 1, d(u, v));
        std::vector<VertexId> walk{u};
        walk.insert(walk.end(), inner.begin(), inner.end());
        walk.push_back(v);
        for (std::size_t i = 0; i + 1 < walk.size(); ++i) ASSERT_TRUE(g.has_edge(walk[i], walk[i + 1]));
        EXPECT_EQ(choose_path_interior(g, d, v, u), inner);
      }
    }
  }
}

TEST(Hypergraph, CompleteGraphHasNoEdges) {
  for (std::size_t n = 1; n <= 8; ++n) {
    EXPECT_EQ(build_visibility_hypergraph(complete_graph(n)).num_edges(), 0u);
  }
}

TEST(Hypergraph, PathOnFourVertices) {
  const ThreeUniformHypergraph h = build_visibility_hypergraph(path_graph(4));
  const std::set<Triple> expected{{0, 1, 2}, {1, 2, 3}, {0, 1, 3}, {0, 2, 3}};
  EXPECT_EQ(std::set<Triple>(h.edges.begin(), h.edges.end()), expected);
  EXPECT_EQ(h.num_edges(), 4u);
  EXPECT_EQ(h.degrees, (std::vector<std::size_t>{3, 3, 3, 3}));
}

TEST(Hypergraph, MakeValidatesAndDeduplicates) {
  const auto h = make_hypergraph(5, {{2, 1, 0}, {0, 1, 2}, {4, 3, 0}});
  EXPECT_EQ(h.num_edges(), 2u);
  EXPECT_EQ(h.edges[0], (Triple{0, 1, 2}));
  EXPECT_EQ(h.degrees, (std::vector<std::size_t>{2, 1, 1, 1, 1}));
  EXPECT_THROW(make_hypergraph(3, {{0, 0, 1}}), InvalidArgument);
  EXPECT_THROW(make_hypergraph(3, {{0, 1, 3}}), InvalidArgument);
}

TEST(Hypergraph, InvariantsAndDedupSafety) {
  Rng rng(8);
  for (int t = 0; t < 40; ++t) {
    const Graph g = generate(t % 2 ? GraphFamily::kRandomSubcubic : GraphFamily::kRandomConnected,
                             {.n = 20, .p = 0.15}, rng.next());
    const DistanceMatrix d = all_pairs_distances(g);
    const ThreeUniformHypergraph h = build_visibility_hypergraph(g, d);
    std::size_t degree_sum = 0;
    for (std::size_t deg : h.degrees) degree_sum += deg;
    EXPECT_EQ(degree_sum, 3 * h.num_edges());
    EXPECT_TRUE(std::is_sorted(h.edges.begin(), h.edges.end()));
    EXPECT_EQ(std::adjacent_find(h.edges.begin(), h.edges.end()), h.edges.end());
    std::vector<std::size_t> recount(g.num_vertices(), 0);
    for (const Triple& e : h.edges) {
      EXPECT_LT(e[0], e[1]);
      EXPECT_LT(e[1], e[2]);
      EXPECT_LT(e[2], g.num_vertices());
      for (VertexId v : e) ++recount[v];
    }
    EXPECT_EQ(recount, h.degrees);

    const auto raw = raw_hyperedge_degrees(g, d);
    for (std::size_t v = 0; v < raw.size(); ++v) EXPECT_GE(raw[v], h.degrees[v]);
    EXPECT_LE(caro_tuza_total(raw), caro_tuza_bound(h).total);
  }
}

TEST(CaroTuzaBound, Examples) {
  EXPECT_EQ(caro_tuza_bound(make_hypergraph(4, {})).total, Rational(4));
  const auto one = caro_tuza_bound(make_hypergraph(4, {{0, 1, 2}}));
  EXPECT_EQ(one.total, Rational(3));
  EXPECT_EQ(one.per_vertex_terms,
            (std::vector<Rational>{Rational(2, 3), Rational(2, 3), Rational(2, 3), Rational(1)}));
  const auto p4 = caro_tuza_bound(build_visibility_hypergraph(path_graph(4)));
  EXPECT_EQ(p4.total, Rational(64, 35));
  EXPECT_FALSE(p4.jensen_floor);
}

TEST(CaroTuzaBound, JensenValueIsReportedWhenGiven) {
  const Graph g = cycle_graph(4);
  const auto cert = caro_tuza_bound(build_visibility_hypergraph(g), average_distance(g).exact);
  ASSERT_TRUE(cert.jensen_floor);
  EXPECT_NEAR(*cert.jensen_floor, std::sqrt(6.0 * 4 / (4.0 / 3.0)), 1e-12);
  Rational sum(0);
  for (const Rational& term : cert.per_vertex_terms) sum += term;
  EXPECT_EQ(sum, cert.total);
}

TEST(IndependentSet, Examples) {
  const auto empty = make_hypergraph(5, {});
  EXPECT_EQ(hypergraph_independent_set(empty, 1), all_vertices(5));

  const auto p4 = build_visibility_hypergraph(path_graph(4));
  ASSERT_EQ(testing::brute_force_max(4, [&](const VertexSet& s) { return hypergraph_independent(p4, s); }), 2u);
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const VertexSet s = hypergraph_independent_set(p4, seed);
    EXPECT_EQ(s.size(), 2u);
    EXPECT_TRUE(hypergraph_independent(p4, s));
  }

  const auto single = make_hypergraph(4, {{0, 1, 2}});
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const VertexSet s = hypergraph_independent_set(single, seed);
    EXPECT_GE(s.size(), 3u);
    EXPECT_TRUE(hypergraph_independent(single, s));
    EXPECT_TRUE(s.contains(3));
  }
}

TEST(IndependentSet, PostconditionsAndDeterminism) {
  Rng rng(21);
  for (int t = 0; t < 40; ++t) {
    const Graph g = generate(GraphFamily::kRandomConnected, {.n = 25, .p = 0.12}, rng.next());
    const auto h = build_visibility_hypergraph(g);
    const std::uint64_t seed = rng.next();
    const IndependentSetRun run = hypergraph_independent_set_run(h, seed);
    EXPECT_TRUE(hypergraph_independent(h, run.set));
    EXPECT_GE(Rational(static_cast<unsigned long>(run.set.size())), caro_tuza_bound(h).total);
    EXPECT_LT(run.restarts, kMaxIndependentSetRestarts);
    EXPECT_EQ(hypergraph_independent_set(h, seed), run.set);
  }
}

TEST(ApproxMu, CompleteGraphs) {
  for (std::size_t n = 2; n <= 10; ++n) {
    const ApproxResult r = approx_mu_set(complete_graph(n), 3);
    EXPECT_EQ(r.set, all_vertices(n));
    EXPECT_EQ(r.certificate.total, Rational(static_cast<unsigned long>(n)));
  }
}

TEST(ApproxMu, SmallGraphsUseExactOptimum) {
  const ApproxResult r = approx_mu_set(path_graph(4), 0);
  EXPECT_TRUE(r.exact);
  EXPECT_EQ(r.set.size(), 2u);
  EXPECT_EQ(r.set.size(), max_set_exact(path_graph(4), SetKind::kMu).optimum);
  EXPECT_FALSE(approx_mu_set(path_graph(7), 0).exact);
  EXPECT_THROW(approx_mu_set(path_graph(1), 0), InvalidArgument);
}

TEST(ApproxMu, EightByEightGrid) {
  const Graph grid = grid_graph(8, 8);
  const ApproxResult r = approx_mu_set(grid, 2024);
  EXPECT_TRUE(verify_set(grid, r.set, SetKind::kMu).ok);
  EXPECT_GE(Rational(static_cast<unsigned long>(r.set.size())), r.certificate.total);
  RecordProperty("grid8x8_size", static_cast<int>(r.set.size()));
  RecordProperty("grid8x8_f", to_string(r.certificate.total));
  RecordProperty("grid8x8_hyperedges", static_cast<int>(r.hypergraph.num_edges()));
}

TEST(ApproxMu, SoundnessBoundAndDeterminism) {
  Rng rng(99);
  for (int t = 0; t < 60; ++t) {
    const GraphFamily family = t % 3 == 0   ? GraphFamily::kRandomSubcubic
                               : t % 3 == 1 ? GraphFamily::kRandomConnected
                                            : GraphFamily::kCycle;
    const Graph g = generate(family, {.n = 3 + rng.below(14), .p = 0.3}, rng.next());
    const std::uint64_t seed = rng.next();
    const ApproxResult r = approx_mu_set(g, seed);
    ASSERT_TRUE(verify_set(g, r.set, SetKind::kMu).ok);
    ASSERT_TRUE(testing::naive_property(g, r.set, SetKind::kMu));
    EXPECT_GE(Rational(static_cast<unsigned long>(r.set.size())), r.certificate.total);
    EXPECT_EQ(approx_mu_set(g, seed).set, r.set);
    if (g.num_vertices() <= 12) {
      EXPECT_GE(max_set_exact(g, SetKind::kMu).optimum, r.set.size());
    }
  }
}

}  // namespace
}  // namespace visikit
