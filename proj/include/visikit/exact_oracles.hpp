#ifndef VISIKIT_EXACT_ORACLES_HPP_
#define VISIKIT_EXACT_ORACLES_HPP_

#include <cstddef>
#include <cstdint>

#include "visikit/distance.hpp"
#include "visikit/graph.hpp"
#include "visikit/visibility.hpp"

namespace visikit {

// Exponential-time exact maximizers. Ground truth for small graphs only.

struct OracleLimits {
  std::size_t hereditary = 20;  // MU, MU_O, MU_T, GP
  std::size_t dual = 14;        // MU_D
  std::size_t independent_set = 24;
};

struct OracleResult {
  // Lexicographically smallest among the maximum sets.
  VertexSet best_set;
  std::size_t optimum = 0;
  // Search nodes visited.
  std::uint64_t explored = 0;
};

// Maximum set with the given property. Hereditary kinds use branch and bound
// over include/exclude decisions, dropping every superset of a failing set;
// MU_D enumerates subsets by decreasing size. Throws InvalidArgument
// ("instance too large for exact oracle") above the kind's limit.
OracleResult max_set_exact(const Graph& g, const DistanceMatrix& dist,
                           SetKind kind, const OracleLimits& limits = {});
OracleResult max_set_exact(const Graph& g, SetKind kind,
                           const OracleLimits& limits = {});

// Maximum independent set of g (need not be connected). limit <= 64.
OracleResult max_independent_set_exact(const Graph& g, std::size_t limit = 24);

}  // namespace visikit

#endif  // VISIKIT_EXACT_ORACLES_HPP_
