#include "visikit/approx_mu.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "visikit/exact_oracles.hpp"
#include "visikit/random.hpp"
#include "visikit/visibility.hpp"

namespace visikit {

ThreeUniformHypergraph make_hypergraph(std::size_t n, std::vector<Triple> triples) {
  for (Triple& t : triples) {
    std::sort(t.begin(), t.end());
    if (t[0] == t[1] || t[1] == t[2]) {
      throw InvalidArgument("hyperedge with a repeated vertex");
    }
    if (t[2] >= n) throw InvalidArgument("hyperedge vertex out of range");
  }
  std::sort(triples.begin(), triples.end());
  triples.erase(std::unique(triples.begin(), triples.end()), triples.end());
  ThreeUniformHypergraph h;
  h.num_vertices = n;
  h.degrees.assign(n, 0);
  for (const Triple& t : triples) {
    for (VertexId v : t) ++h.degrees[v];
  }
  h.edges = std::move(triples);
  return h;
}

Rational generalized_binomial(const Rational& r, std::size_t l) {
  Rational product = 1;
  for (std::size_t i = 0; i < l; ++i) {
    product *= r - Rational(static_cast<unsigned long>(i));
    product /= Rational(static_cast<unsigned long>(i + 1));
  }
  return product;
}

std::vector<VertexId> choose_path_interior(const Graph& g,
                                           const DistanceMatrix& dist,
                                           VertexId u, VertexId v) {
  if (u == v) throw InvalidArgument("path interior needs two distinct vertices");
  const VertexId source = std::min(u, v);
  VertexId at = std::max(u, v);
  const auto from_source = dist.row(source);
  std::vector<VertexId> interior;
  while (from_source[at] > 1) {
    VertexId step = at;
    for (VertexId b : g.neighbors(at)) {
      // Neighbour lists are sorted, so the first hit has the lowest id.
      if (from_source[b] + 1 == from_source[at]) {
        step = b;
        break;
      }
    }
    interior.push_back(step);
    at = step;
  }
  std::reverse(interior.begin(), interior.end());
  return interior;
}

namespace {

template <class Visit>
void for_each_visibility_triple(const Graph& g, const DistanceMatrix& dist,
                                Visit&& visit) {
  const std::size_t n = g.num_vertices();
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v = u + 1; v < n; ++v) {
      if (dist(u, v) <= 1) continue;
      for (VertexId x : choose_path_interior(g, dist, u, v)) visit(Triple{u, v, x});
    }
  }
}

}  // namespace

ThreeUniformHypergraph build_visibility_hypergraph(const Graph& g,
                                                   const DistanceMatrix& dist) {
  std::vector<Triple> triples;
  for_each_visibility_triple(g, dist, [&](const Triple& t) { triples.push_back(t); });
  return make_hypergraph(g.num_vertices(), std::move(triples));
}

ThreeUniformHypergraph build_visibility_hypergraph(const Graph& g) {
  return build_visibility_hypergraph(g, all_pairs_distances(g));
}

std::vector<std::size_t> raw_hyperedge_degrees(const Graph& g,
                                               const DistanceMatrix& dist) {
  std::vector<std::size_t> degrees(g.num_vertices(), 0);
  for_each_visibility_triple(g, dist, [&](const Triple& t) {
    for (VertexId v : t) ++degrees[v];
  });
  return degrees;
}

// 1/binom(d + 1/2, d) = prod_{j=1..d} 2j / (2j + 1).
Rational caro_tuza_term(std::size_t degree) {
  mpz_class num = 1;
  mpz_class den = 1;
  for (std::size_t j = 1; j <= degree; ++j) {
    num *= static_cast<unsigned long>(2 * j);
    den *= static_cast<unsigned long>(2 * j + 1);
  }
  Rational term(num, den);
  term.canonicalize();
  return term;
}

namespace {

// Terms for every distinct degree, sharing one running product.
std::map<std::size_t, Rational> caro_tuza_terms(std::span<const std::size_t> degrees) {
  std::map<std::size_t, Rational> terms;
  for (std::size_t d : degrees) terms.emplace(d, Rational());
  mpz_class num = 1;
  mpz_class den = 1;
  std::size_t reached = 0;
  for (auto& [degree, term] : terms) {
    for (; reached < degree; ++reached) {
      num *= static_cast<unsigned long>(2 * (reached + 1));
      den *= static_cast<unsigned long>(2 * (reached + 1) + 1);
    }
    term = Rational(num, den);
    term.canonicalize();
  }
  return terms;
}

}  // namespace

Rational caro_tuza_total(std::span<const std::size_t> degrees) {
  const auto terms = caro_tuza_terms(degrees);
  std::map<std::size_t, unsigned long> counts;
  for (std::size_t d : degrees) ++counts[d];
  Rational total = 0;
  for (const auto& [degree, count] : counts) total += terms.at(degree) * count;
  return total;
}

BoundCertificate caro_tuza_bound(const ThreeUniformHypergraph& h,
                                 const std::optional<Rational>& average_distance) {
  const auto terms = caro_tuza_terms(h.degrees);
  BoundCertificate cert;
  cert.per_vertex_terms.reserve(h.num_vertices);
  for (std::size_t d : h.degrees) cert.per_vertex_terms.push_back(terms.at(d));
  cert.total = caro_tuza_total(h.degrees);
  if (average_distance && *average_distance > 0) {
    cert.jensen_floor =
        std::sqrt(6.0 * static_cast<double>(h.num_vertices) / average_distance->get_d());
  }
  return cert;
}

namespace {

VertexSet permutation_rule(const ThreeUniformHypergraph& h, std::uint64_t seed) {
  const std::size_t n = h.num_vertices;
  std::vector<VertexId> order(n);
  for (VertexId v = 0; v < n; ++v) order[v] = v;
  Rng rng(seed);
  rng.shuffle(std::span<VertexId>(order));
  std::vector<std::size_t> rank(n);
  for (std::size_t i = 0; i < n; ++i) rank[order[i]] = i;

  std::vector<std::uint8_t> keep(n, 1);
  for (const Triple& e : h.edges) {
    VertexId last = e[0];
    for (VertexId v : e) {
      if (rank[v] > rank[last]) last = v;
    }
    keep[last] = 0;
  }
  return VertexSet::from_mask(keep);
}

}  // namespace

IndependentSetRun hypergraph_independent_set_run(const ThreeUniformHypergraph& h,
                                                 std::uint64_t seed) {
  const Rational bound = caro_tuza_bound(h).total;
  VertexSet best;
  for (std::size_t restart = 0; restart < kMaxIndependentSetRestarts; ++restart) {
    VertexSet candidate = permutation_rule(h, derive_seed(seed, restart));
    if (Rational(static_cast<unsigned long>(candidate.size())) >= bound) {
      return {std::move(candidate), restart};
    }
    if (candidate.size() > best.size()) best = std::move(candidate);
  }
  throw BoundNotMet("independent set below the Caro-Tuza bound " +
                        to_string(bound) + " after " +
                        std::to_string(kMaxIndependentSetRestarts) +
                        " restarts (best size " + std::to_string(best.size()) + ")",
                    std::move(best));
}

VertexSet hypergraph_independent_set(const ThreeUniformHypergraph& h,
                                     std::uint64_t seed) {
  return hypergraph_independent_set_run(h, seed).set;
}

ApproxResult approx_mu_set(const Graph& g, const DistanceMatrix& dist,
                           std::uint64_t seed) {
  if (g.num_vertices() < 2) throw InvalidArgument("approx_mu_set needs n>=2");
  ApproxResult result;
  result.average_distance = average_distance(dist);
  result.hypergraph = build_visibility_hypergraph(g, dist);
  result.certificate = caro_tuza_bound(result.hypergraph, result.average_distance.exact);
  if (g.num_vertices() <= kExactMuCutoff) {
    result.set = max_set_exact(g, dist, SetKind::kMu).best_set;
    result.exact = true;
  } else {
    auto run = hypergraph_independent_set_run(result.hypergraph, seed);
    result.set = std::move(run.set);
    result.restarts = run.restarts;
  }
  return result;
}

ApproxResult approx_mu_set(const Graph& g, std::uint64_t seed) {
  return approx_mu_set(g, all_pairs_distances(g), seed);
}

}  // namespace visikit
