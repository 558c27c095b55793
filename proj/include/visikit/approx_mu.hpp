#ifndef VISIKIT_APPROX_MU_HPP_
#define VISIKIT_APPROX_MU_HPP_

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "visikit/distance.hpp"
#include "visikit/error.hpp"
#include "visikit/graph.hpp"
#include "visikit/rational.hpp"

namespace visikit {

using Triple = std::array<VertexId, 3>;

// 3-uniform hypergraph on the vertices of a graph. Hyperedges are sorted
// triples, stored sorted and without duplicates; degrees[v] counts the
// hyperedges containing v.
struct ThreeUniformHypergraph {
  std::size_t num_vertices = 0;
  std::vector<Triple> edges;
  std::vector<std::size_t> degrees;

  std::size_t num_edges() const { return edges.size(); }
};

// Builds the hypergraph from a list of triples (any vertex order, duplicates
// allowed). Throws InvalidArgument on repeated or out-of-range ids in a
// triple.
ThreeUniformHypergraph make_hypergraph(std::size_t n, std::vector<Triple> triples);

// binom(r, l) = (1/l!) * prod_{i<l} (r - i), exact.
Rational generalized_binomial(const Rational& r, std::size_t l);

// Interior vertices x_1..x_k of one shortest u,v-path, listed from the end
// with the smaller id. The path is traced from max(u,v) back to min(u,v),
// always stepping to the lowest-id neighbour one step closer. Empty when u
// and v are adjacent. Requires u != v.
std::vector<VertexId> choose_path_interior(const Graph& g,
                                           const DistanceMatrix& dist,
                                           VertexId u, VertexId v);

// One hyperedge {u, v, x} per unordered pair {u, v} and interior vertex x of
// its chosen path, deduplicated.
ThreeUniformHypergraph build_visibility_hypergraph(const Graph& g,
                                                   const DistanceMatrix& dist);
ThreeUniformHypergraph build_visibility_hypergraph(const Graph& g);

// Vertex degrees of the same construction counted with multiplicity, i.e.
// before duplicate hyperedges are merged.
std::vector<std::size_t> raw_hyperedge_degrees(const Graph& g,
                                               const DistanceMatrix& dist);

// 1 / binom(degree + 1/2, degree).
Rational caro_tuza_term(std::size_t degree);

// Sum of caro_tuza_term over the given degrees.
Rational caro_tuza_total(std::span<const std::size_t> degrees);

struct BoundCertificate {
  std::vector<Rational> per_vertex_terms;
  Rational total;
  // sqrt(6n / average distance); display only.
  std::optional<double> jensen_floor;
};

// Lower bound on the independent set found by hypergraph_independent_set.
// jensen_floor is filled in when the source graph's average distance is
// supplied.
BoundCertificate caro_tuza_bound(
    const ThreeUniformHypergraph& h,
    const std::optional<Rational>& average_distance = std::nullopt);

// Restarts allowed before hypergraph_independent_set gives up.
inline constexpr std::size_t kMaxIndependentSetRestarts = 1000;

// Thrown when no restart reached the certified bound.
class BoundNotMet : public Error {
 public:
  BoundNotMet(const std::string& what, VertexSet best)
      : Error(what), best_(std::move(best)) {}
  const VertexSet& best() const { return best_; }

 private:
  VertexSet best_;
};

struct IndependentSetRun {
  VertexSet set;
  // Index of the accepted draw (0 = first permutation).
  std::size_t restarts = 0;
};

// Random-permutation rule: draw an order of the vertices and keep every v
// that is not the last vertex, in that order, of any hyperedge containing it.
// No hyperedge survives whole since its last vertex is dropped. Draws are
// repeated with derived seeds until |S| >= caro_tuza_bound(h).total.
IndependentSetRun hypergraph_independent_set_run(const ThreeUniformHypergraph& h,
                                                 std::uint64_t seed);
VertexSet hypergraph_independent_set(const ThreeUniformHypergraph& h,
                                     std::uint64_t seed);

// Largest n for which approx_mu_set answers with the exact optimum.
inline constexpr std::size_t kExactMuCutoff = 6;

struct ApproxResult {
  VertexSet set;
  BoundCertificate certificate;
  ThreeUniformHypergraph hypergraph;
  AverageDistance average_distance;
  // True when the set came from the exhaustive search (n <= kExactMuCutoff).
  bool exact = false;
  std::size_t restarts = 0;
};

// A mu-set of g with |S| >= f(H) for the visibility hypergraph H. Requires g
// connected with n >= 2.
ApproxResult approx_mu_set(const Graph& g, std::uint64_t seed);
ApproxResult approx_mu_set(const Graph& g, const DistanceMatrix& dist,
                           std::uint64_t seed);

}  // namespace visikit

#endif  // VISIKIT_APPROX_MU_HPP_
