#include "visikit/visibility.hpp"

#include <algorithm>
#include <limits>

#include "visikit/error.hpp"
#include "visikit/rational.hpp"

namespace visikit {

std::string to_string(SetKind kind) {
  switch (kind) {
    case SetKind::kMu: return "mu";
    case SetKind::kMuDual: return "mud";
    case SetKind::kMuOuter: return "muo";
    case SetKind::kMuTotal: return "mut";
    case SetKind::kGeneralPosition: return "gp";
  }
  return "unknown";
}

SetKind parse_set_kind(const std::string& name) {
  for (SetKind kind : kAllSetKinds) {
    if (to_string(kind) == name) return kind;
  }
  throw InvalidArgument("unknown set kind \"" + name +
                        "\" (expected mu|mud|muo|mut|gp)");
}

Sigma::Sigma(std::uint64_t num, std::uint64_t den) : num_(num), den_(den) {
  constexpr std::uint64_t kMax = std::numeric_limits<std::uint32_t>::max();
  if (den == 0) throw InvalidArgument("sigma has a zero denominator");
  if (num < den) throw InvalidArgument("sigma must be >= 1");
  if (num > kMax || den > kMax) {
    throw InvalidArgument("sigma numerator/denominator must fit in 32 bits");
  }
}

Sigma Sigma::parse(const std::string& text) {
  const Rational value = parse_rational(text);
  if (value < 1) throw InvalidArgument("sigma must be >= 1, got " + text);
  if (!value.get_num().fits_ulong_p() || !value.get_den().fits_ulong_p()) {
    throw InvalidArgument("sigma out of range: " + text);
  }
  return Sigma(value.get_num().get_ui(), value.get_den().get_ui());
}

std::size_t Sigma::max_length(std::size_t distance) const {
  return static_cast<std::size_t>(num_ * distance / den_);
}

std::string Sigma::str() const {
  return std::to_string(num_) + "/" + std::to_string(den_);
}

bool x_visible(const Graph& g, const DistanceMatrix& dist, Membership in_x,
               VertexId u, VertexId v, Sigma sigma) {
  const std::size_t n = g.num_vertices();
  if (u >= n || v >= n) {
    throw InvalidArgument("vertex id out of range in visibility query");
  }
  if (in_x.size() != n) throw InvalidArgument("membership mask has wrong size");
  if (u == v) return true;
  const std::size_t limit = sigma.max_length(dist(u, v));

  // Layered BFS from u; members of X are never entered except v itself.
  std::vector<std::size_t> depth(n, std::numeric_limits<std::size_t>::max());
  std::vector<VertexId> queue;
  queue.reserve(n);
  depth[u] = 0;
  queue.push_back(u);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const VertexId a = queue[head];
    if (depth[a] >= limit) break;
    for (VertexId b : g.neighbors(a)) {
      if (b == v) return true;
      if (in_x[b] || depth[b] != std::numeric_limits<std::size_t>::max()) {
        continue;
      }
      depth[b] = depth[a] + 1;
      queue.push_back(b);
    }
  }
  return false;
}

bool x_visible(const Graph& g, const DistanceMatrix& dist, const VertexSet& x,
               VertexId u, VertexId v, Sigma sigma) {
  const auto mask = x.mask(g.num_vertices());
  return x_visible(g, dist, mask, u, v, sigma);
}

namespace {

Verdict gp_verdict(const DistanceMatrix& dist, const VertexSet& x) {
  for (std::size_t i = 0; i < x.size(); ++i) {
    for (std::size_t j = i + 1; j < x.size(); ++j) {
      for (std::size_t k = 0; k < x.size(); ++k) {
        if (k == i || k == j) continue;
        if (dist.on_shortest_path(x[i], x[k], x[j])) {
          return {false, Witness{x[i], x[j], x[k]}};
        }
      }
    }
  }
  return {};
}

template <class Visible>
Verdict pair_verdict(std::size_t n, Membership in_x, SetKind kind,
                     Visible&& visible) {
  for (VertexId a = 0; a < n; ++a) {
    for (VertexId b = a + 1; b < n; ++b) {
      if (!pair_in_scope(kind, in_x[a] != 0, in_x[b] != 0)) continue;
      if (!visible(a, b)) return {false, Witness{a, b, std::nullopt}};
    }
  }
  return {};
}

void check_inputs(const Graph& g, const DistanceMatrix& dist,
                  const VertexSet& x, SetKind kind, Sigma sigma) {
  if (dist.size() != g.num_vertices()) {
    throw InvalidArgument("distance table does not match the graph");
  }
  x.check_within(g.num_vertices());
  if (kind == SetKind::kGeneralPosition && !sigma.is_one()) {
    throw InvalidArgument("relaxation undefined for gp");
  }
}

}  // namespace

Verdict verify_set_by_search(const Graph& g, const DistanceMatrix& dist,
                             const VertexSet& x, SetKind kind, Sigma sigma) {
  check_inputs(g, dist, x, kind, sigma);
  if (kind == SetKind::kGeneralPosition) return gp_verdict(dist, x);
  const auto mask = x.mask(g.num_vertices());
  return pair_verdict(g.num_vertices(), mask, kind, [&](VertexId a, VertexId b) {
    return x_visible(g, dist, mask, a, b, sigma);
  });
}

Verdict verify_set(const Graph& g, const DistanceMatrix& dist,
                   const VertexSet& x, SetKind kind, Sigma sigma) {
  check_inputs(g, dist, x, kind, sigma);
  if (!sigma.is_one()) return verify_set_by_search(g, dist, x, kind, sigma);
  return VisibilityChecker(g, dist).verify(x, kind);
}

Verdict verify_set(const Graph& g, const VertexSet& x, SetKind kind,
                   Sigma sigma) {
  const DistanceMatrix dist = all_pairs_distances(g);
  return verify_set(g, dist, x, kind, sigma);
}

bool is_independent_clique(const Graph& g, const VertexSet& x) {
  const std::size_t n = g.num_vertices();
  const auto in_x = x.mask(n);
  std::vector<std::uint8_t> seen(n, 0);
  std::vector<VertexId> component;
  for (VertexId start : x) {
    if (seen[start]) continue;
    component.clear();
    component.push_back(start);
    seen[start] = 1;
    for (std::size_t head = 0; head < component.size(); ++head) {
      for (VertexId b : g.neighbors(component[head])) {
        if (in_x[b] && !seen[b]) {
          seen[b] = 1;
          component.push_back(b);
        }
      }
    }
    // Within g[X] a component's vertices only see each other, so it is a
    // clique iff each has exactly |component| - 1 neighbours in X.
    for (VertexId a : component) {
      std::size_t inside = 0;
      for (VertexId b : g.neighbors(a)) inside += in_x[b] ? 1 : 0;
      if (inside + 1 != component.size()) return false;
    }
  }
  return true;
}

VisibilityChecker::VisibilityChecker(const Graph& g, const DistanceMatrix& dist)
    : graph_(g), dist_(dist), stamp_(g.num_vertices(), 0) {
  if (dist.size() != g.num_vertices()) {
    throw InvalidArgument("distance table does not match the graph");
  }
}

bool VisibilityChecker::visible(Membership in_x, VertexId u,
                                VertexId v) const {
  const std::size_t d = dist_(u, v);
  if (d <= 1) return true;
  if (++epoch_ == 0) {
    std::fill(stamp_.begin(), stamp_.end(), 0);
    epoch_ = 1;
  }
  const auto from_u = dist_.row(u);
  const auto from_v = dist_.row(v);
  frontier_.clear();
  frontier_.push_back(u);
  for (std::size_t k = 1; k < d; ++k) {
    next_.clear();
    for (VertexId a : frontier_) {
      for (VertexId b : graph_.neighbors(a)) {
        if (stamp_[b] == epoch_ || in_x[b] || from_u[b] != k ||
            from_v[b] != d - k) {
          continue;
        }
        stamp_[b] = epoch_;
        next_.push_back(b);
      }
    }
    if (next_.empty()) return false;
    frontier_.swap(next_);
  }
  // The surviving layer sits at distance 1 from v.
  return true;
}

Verdict VisibilityChecker::verify(Membership in_x, SetKind kind) const {
  if (in_x.size() != graph_.num_vertices()) {
    throw InvalidArgument("membership mask has wrong size");
  }
  if (kind == SetKind::kGeneralPosition) {
    return gp_verdict(dist_, VertexSet::from_mask(in_x));
  }
  return pair_verdict(graph_.num_vertices(), in_x, kind,
                      [&](VertexId a, VertexId b) { return visible(in_x, a, b); });
}

Verdict VisibilityChecker::verify(const VertexSet& x, SetKind kind) const {
  const auto mask = x.mask(graph_.num_vertices());
  return verify(mask, kind);
}

bool VisibilityChecker::can_add(std::span<std::uint8_t> in_x, VertexId w,
                                SetKind kind) const {
  const std::size_t n = graph_.num_vertices();
  if (in_x[w]) return true;
  if (kind == SetKind::kGeneralPosition) {
    for (VertexId a = 0; a < n; ++a) {
      if (!in_x[a]) continue;
      for (VertexId b = a + 1; b < n; ++b) {
        if (!in_x[b]) continue;
        if (dist_.on_shortest_path(a, w, b) || dist_.on_shortest_path(w, a, b) ||
            dist_.on_shortest_path(a, b, w)) {
          return false;
        }
      }
    }
    return true;
  }

  in_x[w] = 1;
  bool ok = true;
  for (VertexId a = 0; a < n && ok; ++a) {
    for (VertexId b = a + 1; b < n; ++b) {
      if (!pair_in_scope(kind, in_x[a] != 0, in_x[b] != 0)) continue;
      const bool through_w =
          a == w || b == w || dist_.on_shortest_path(a, w, b);
      if (through_w && !visible(in_x, a, b)) {
        ok = false;
        break;
      }
    }
  }
  in_x[w] = 0;
  return ok;
}

VertexSet VisibilityChecker::extend_greedily(const VertexSet& start,
                                             std::span<const VertexId> order,
                                             SetKind kind) const {
  auto mask = start.mask(graph_.num_vertices());
  for (VertexId w : order) {
    if (!mask[w] && can_add(mask, w, kind)) mask[w] = 1;
  }
  return VertexSet::from_mask(mask);
}

}  // namespace visikit
