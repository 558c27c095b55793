#ifndef VISIKIT_VISIBILITY_HPP_
#define VISIKIT_VISIBILITY_HPP_

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "visikit/distance.hpp"
#include "visikit/graph.hpp"

namespace visikit {

// The visibility properties a vertex set X can have. For MU only pairs
// inside X must be X-visible; MU_O adds pairs with one end outside X; MU_D
// adds pairs with both ends outside X; MU_T covers every pair. GP forbids
// three members on a common shortest path.
enum class SetKind { kMu, kMuDual, kMuOuter, kMuTotal, kGeneralPosition };

inline constexpr std::array<SetKind, 5> kAllSetKinds = {
    SetKind::kMu, SetKind::kMuDual, SetKind::kMuOuter, SetKind::kMuTotal,
    SetKind::kGeneralPosition};

// "mu", "mud", "muo", "mut", "gp".
std::string to_string(SetKind kind);
SetKind parse_set_kind(const std::string& name);

// Closed under taking subsets. MU_D is excluded: its pair scope grows when
// a member is dropped.
constexpr bool is_hereditary(SetKind kind) {
  return kind != SetKind::kMuDual;
}

// Whether the pair (a, b) has to be X-visible for `kind`, given which of the
// two endpoints belong to X. Not meaningful for GP.
constexpr bool pair_in_scope(SetKind kind, bool a_in_x, bool b_in_x) {
  switch (kind) {
    case SetKind::kMu: return a_in_x && b_in_x;
    case SetKind::kMuOuter: return a_in_x || b_in_x;
    case SetKind::kMuDual: return a_in_x == b_in_x;
    case SetKind::kMuTotal: return true;
    case SetKind::kGeneralPosition: return false;
  }
  return false;
}

// Rational path-stretch factor sigma = num/den >= 1. A pair is visible under
// sigma when some path avoiding X internally has length <= sigma * d(u,v).
class Sigma {
 public:
  Sigma() = default;
  // Throws InvalidArgument unless den > 0 and num >= den.
  Sigma(std::uint64_t num, std::uint64_t den);
  // "p/q" or "p".
  static Sigma parse(const std::string& text);

  std::uint64_t num() const { return num_; }
  std::uint64_t den() const { return den_; }
  bool is_one() const { return num_ == den_; }
  // floor(sigma * distance), the longest admissible path.
  std::size_t max_length(std::size_t distance) const;
  std::string str() const;

  friend bool operator==(const Sigma& a, const Sigma& b) {
    return a.num_ * b.den_ == b.num_ * a.den_;
  }

 private:
  std::uint64_t num_ = 1;
  std::uint64_t den_ = 1;
};

// A failing pair (u, v), or for GP a failing triple with `between` on a
// shortest u,v-path.
struct Witness {
  VertexId u = 0;
  VertexId v = 0;
  std::optional<VertexId> between;

  friend bool operator==(const Witness&, const Witness&) = default;
};

struct Verdict {
  bool ok = true;
  std::optional<Witness> witness;

  explicit operator bool() const { return ok; }
  friend bool operator==(const Verdict&, const Verdict&) = default;
};

// Membership mask: in_x[v] != 0 iff v is in X.
using Membership = std::span<const std::uint8_t>;

// True iff some u,v-path of length <= sigma*d(u,v) has no internal vertex in
// X. Computed by BFS in the subgraph induced by (V \ X) + {u, v}. u == v is
// always visible.
bool x_visible(const Graph& g, const DistanceMatrix& dist, Membership in_x,
               VertexId u, VertexId v, Sigma sigma = {});
bool x_visible(const Graph& g, const DistanceMatrix& dist, const VertexSet& x,
               VertexId u, VertexId v, Sigma sigma = {});

// Checks the kind's definition; pairs are scanned in lexicographic order and
// the first failure is reported. sigma = 1 takes the shortest-path-interval
// route of VisibilityChecker, any other sigma the BFS of x_visible.
// GP with sigma != 1 throws InvalidArgument("relaxation undefined for gp").
Verdict verify_set(const Graph& g, const DistanceMatrix& dist,
                   const VertexSet& x, SetKind kind, Sigma sigma = {});
Verdict verify_set(const Graph& g, const VertexSet& x, SetKind kind,
                   Sigma sigma = {});

// verify_set that always goes through x_visible, at any sigma.
Verdict verify_set_by_search(const Graph& g, const DistanceMatrix& dist,
                             const VertexSet& x, SetKind kind,
                             Sigma sigma = {});

// True iff every connected component of g[X] is a clique. Empty X is one.
bool is_independent_clique(const Graph& g, const VertexSet& x);

// Unrelaxed (sigma = 1) visibility over a fixed graph. A pair (u, v) is
// X-visible iff a walk through the shortest-path interval
// {w : d(u,w) + d(w,v) = d(u,v)} reaches v without touching X, so each query
// only explores the interval layer by layer.
//
// Keeps references to the graph and the distance table, and reuses internal
// scratch buffers: one checker per thread.
class VisibilityChecker {
 public:
  VisibilityChecker(const Graph& g, const DistanceMatrix& dist);

  const Graph& graph() const { return graph_; }
  const DistanceMatrix& distances() const { return dist_; }

  bool visible(Membership in_x, VertexId u, VertexId v) const;
  Verdict verify(Membership in_x, SetKind kind) const;
  Verdict verify(const VertexSet& x, SetKind kind) const;

  // Given X satisfying `kind` and w outside X, decides whether X + {w} still
  // satisfies it. Only pairs through w are rechecked: adding w cannot affect
  // a pair whose shortest paths all avoid w.
  bool can_add(std::span<std::uint8_t> in_x, VertexId w, SetKind kind) const;

  // Scans `order` once, adding every vertex that keeps the set valid.
  // Starts from `start`, which must satisfy the kind. The result is maximal
  // when the kind is hereditary.
  VertexSet extend_greedily(const VertexSet& start,
                            std::span<const VertexId> order,
                            SetKind kind) const;

 private:
  const Graph& graph_;
  const DistanceMatrix& dist_;
  mutable std::vector<std::uint32_t> stamp_;
  mutable std::uint32_t epoch_ = 0;
  mutable std::vector<VertexId> frontier_;
  mutable std::vector<VertexId> next_;
};

}  // namespace visikit

#endif  // VISIKIT_VISIBILITY_HPP_
