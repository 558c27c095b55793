#ifndef VISIKIT_GENERATORS_HPP_
#define VISIKIT_GENERATORS_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>

#include "visikit/graph.hpp"

namespace visikit {

enum class GraphFamily {
  kPath,
  kCycle,
  kComplete,
  kGrid,
  kRandomConnected,
  kRandomSubcubic,
};

std::string to_string(GraphFamily family);
// Accepts path, cycle, complete, grid, random_connected, random_subcubic.
GraphFamily parse_graph_family(const std::string& name);

struct GeneratorParams {
  std::size_t n = 0;
  // grid only
  std::size_t rows = 0;
  std::size_t cols = 0;
  // random_connected: edge probability in (0, 1]
  double p = 0.5;
  // random_subcubic: edge count in [n-1, min(3n/2, n(n-1)/2)]; drawn from
  // the seed when absent.
  std::optional<std::size_t> edges = std::nullopt;
};

// Attempts before random_connected / random_subcubic give up.
inline constexpr int kMaxGeneratorAttempts = 10000;

// Deterministic in (family, params, seed). Every result is connected.
// Throws InvalidArgument for infeasible parameters and when the attempt cap
// is exhausted.
Graph generate(GraphFamily family, const GeneratorParams& params,
               std::uint64_t seed);

}  // namespace visikit

#endif  // VISIKIT_GENERATORS_HPP_
