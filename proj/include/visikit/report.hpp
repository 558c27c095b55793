#ifndef VISIKIT_REPORT_HPP_
#define VISIKIT_REPORT_HPP_

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "visikit/graph.hpp"
#include "visikit/rational.hpp"
#include "visikit/visibility.hpp"

namespace visikit {

struct PhaseTiming {
  std::string phase;
  double milliseconds = 0.0;

  friend bool operator==(const PhaseTiming&, const PhaseTiming&) = default;
};

// One experiment run. Serialized as a single JSON object per line.
struct Report {
  std::string instance_id;
  std::string command;
  std::string algorithm;
  std::size_t n = 0;
  std::size_t m = 0;
  std::size_t diameter = 0;
  std::optional<Rational> average_distance;
  // mu|mud|muo|mut|gp, independent_set, clique, or empty when no set.
  std::string property;
  // "graph" when the set lives in the instance graph, "source" when it is a
  // set of a reduction's source graph.
  std::string set_scope = "graph";
  VertexSet set;
  bool verified = false;
  std::optional<Witness> witness;
  std::optional<std::string> sigma;
  std::optional<Rational> caro_tuza_bound;
  std::optional<double> jensen_floor;
  std::optional<std::size_t> optimum;
  std::uint64_t seed = 0;
  std::map<std::string, std::string> details;
  std::vector<PhaseTiming> timings;

  friend bool operator==(const Report& a, const Report& b);
};

// Compact JSON; omits wall-clock timings when include_timings is false so
// that replays compare byte for byte.
std::string report_to_json(const Report& report, bool include_timings = true);
Report report_from_json(const std::string& line);

// Re-checks report.set against `graph` under report.property.
bool recheck_report(const Report& report, const Graph& graph);

}  // namespace visikit

#endif  // VISIKIT_REPORT_HPP_
