#include "visikit/exact_oracles.hpp"

#include <bit>
#include <string>
#include <vector>

#include "visikit/error.hpp"

namespace visikit {

namespace {

void check_limit(std::size_t n, std::size_t limit) {
  if (n > limit) {
    throw InvalidArgument("instance too large for exact oracle (n=" +
                          std::to_string(n) + ", limit " +
                          std::to_string(limit) + ")");
  }
}

// Include-before-exclude over vertices in id order visits equal-size sets in
// lexicographic order, so keeping only strict improvements yields the
// lexicographically smallest maximum set.
class HereditarySearch {
 public:
  HereditarySearch(const VisibilityChecker& checker, SetKind kind)
      : checker_(checker),
        kind_(kind),
        n_(checker.graph().num_vertices()),
        mask_(n_, 0),
        best_mask_(n_, 0) {}

  OracleResult run() {
    descend(0);
    return {VertexSet::from_mask(best_mask_), best_size_, explored_};
  }

 private:
  void descend(VertexId v) {
    ++explored_;
    if (size_ + (n_ - v) <= best_size_ && !(v == n_ && size_ > best_size_)) {
      return;
    }
    if (v == n_) {
      best_size_ = size_;
      best_mask_ = mask_;
      return;
    }
    if (checker_.can_add(mask_, v, kind_)) {
      mask_[v] = 1;
      ++size_;
      descend(v + 1);
      --size_;
      mask_[v] = 0;
    }
    descend(v + 1);
  }

  const VisibilityChecker& checker_;
  SetKind kind_;
  std::size_t n_;
  std::vector<std::uint8_t> mask_;
  std::vector<std::uint8_t> best_mask_;
  std::size_t size_ = 0;
  std::size_t best_size_ = 0;
  std::uint64_t explored_ = 0;
};

// Subsets of size k in lexicographic order; the first valid one wins.
OracleResult dual_search(const VisibilityChecker& checker) {
  const std::size_t n = checker.graph().num_vertices();
  OracleResult result;
  std::vector<std::uint8_t> mask(n, 0);
  std::vector<VertexId> pick;
  for (std::size_t k = n + 1; k-- > 0;) {
    pick.resize(k);
    for (std::size_t i = 0; i < k; ++i) pick[i] = static_cast<VertexId>(i);
    while (true) {
      std::fill(mask.begin(), mask.end(), 0);
      for (VertexId v : pick) mask[v] = 1;
      ++result.explored;
      if (checker.verify(mask, SetKind::kMuDual).ok) {
        result.best_set = VertexSet(pick);
        result.optimum = k;
        return result;
      }
      // Advance to the next combination.
      std::size_t i = k;
      while (i > 0 && pick[i - 1] == n - k + i - 1) --i;
      if (i == 0) break;
      ++pick[i - 1];
      for (std::size_t j = i; j < k; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
  return result;  // unreachable: the empty set is always a mu_d-set
}

}  // namespace

OracleResult max_set_exact(const Graph& g, const DistanceMatrix& dist,
                           SetKind kind, const OracleLimits& limits) {
  const std::size_t n = g.num_vertices();
  check_limit(n, kind == SetKind::kMuDual ? limits.dual : limits.hereditary);
  const VisibilityChecker checker(g, dist);
  if (kind == SetKind::kMuDual) return dual_search(checker);
  return HereditarySearch(checker, kind).run();
}

OracleResult max_set_exact(const Graph& g, SetKind kind,
                           const OracleLimits& limits) {
  check_limit(g.num_vertices(),
              kind == SetKind::kMuDual ? limits.dual : limits.hereditary);
  return max_set_exact(g, all_pairs_distances(g), kind, limits);
}

namespace {

struct IndependentSetSearch {
  std::vector<std::uint64_t> closed;  // N[v] as bitmask
  std::uint64_t best = 0;
  int best_size = 0;
  std::uint64_t explored = 0;

  void descend(std::uint64_t candidates, std::uint64_t chosen, int size) {
    ++explored;
    const int reachable = size + std::popcount(candidates);
    if (reachable <= best_size && !(candidates == 0 && size > best_size)) return;
    if (candidates == 0) {
      best = chosen;
      best_size = size;
      return;
    }
    const int v = std::countr_zero(candidates);
    const std::uint64_t bit = std::uint64_t{1} << v;
    descend(candidates & ~closed[v], chosen | bit, size + 1);
    descend(candidates & ~bit, chosen, size);
  }
};

}  // namespace

OracleResult max_independent_set_exact(const Graph& g, std::size_t limit) {
  const std::size_t n = g.num_vertices();
  check_limit(n, std::min<std::size_t>(limit, 64));
  IndependentSetSearch search;
  search.closed.assign(n, 0);
  for (VertexId v = 0; v < n; ++v) {
    search.closed[v] = std::uint64_t{1} << v;
    for (VertexId b : g.neighbors(v)) search.closed[v] |= std::uint64_t{1} << b;
  }
  const std::uint64_t all = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  search.descend(all, 0, 0);
  std::vector<VertexId> ids;
  for (VertexId v = 0; v < n; ++v) {
    if (search.best >> v & 1) ids.push_back(v);
  }
  return {VertexSet(std::move(ids)), static_cast<std::size_t>(search.best_size),
          search.explored};
}

}  // namespace visikit
