#ifndef VISIKIT_HARNESS_HPP_
#define VISIKIT_HARNESS_HPP_

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "visikit/error.hpp"
#include "visikit/exact_oracles.hpp"
#include "visikit/generators.hpp"
#include "visikit/graph.hpp"
#include "visikit/report.hpp"
#include "visikit/visibility.hpp"

namespace visikit {

// Bad command line or configuration; maps to exit code 2.
class UsageError : public Error {
 public:
  using Error::Error;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailed = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitError = 3;

struct ExperimentConfig {
  // gen | verify | approx | exact | reduce | extract | bench
  std::string command;
  std::string input;     // edge-list path (verify, approx, exact, reduce)
  std::string format = "edgelist";
  std::string instance;  // reduction JSON path (extract)
  std::string gadget;    // diam2 | product | gp (reduce)
  std::optional<GraphFamily> family;  // gen
  GeneratorParams generator;
  std::optional<SetKind> kind;
  std::string sigma = "1";
  std::size_t copies = 1;  // L
  bool include_y = true;
  std::uint64_t seed = 0;
  OracleLimits limits;
  std::optional<std::string> set;  // "0,2,5"
  std::string out;                 // report path; artifact path for gen/reduce
  bool allow_disconnected = false;
  std::string id;                  // instance id override
  std::size_t count = 200;         // bench corpus size
  bool timings = true;
};

// Throws UsageError on missing or inconsistent fields.
void validate(const ExperimentConfig& config);

// Runs one command. gen and reduce also write their artifact to config.out.
std::vector<Report> run(const ExperimentConfig& config);

// run() plus report emission (JSONL to config.out, or `out` when the report
// has no path) and exit-code mapping: 0 ok, 1 a set failed verification,
// 2 usage error, 3 any other error.
int execute(const ExperimentConfig& config, std::ostream& out, std::ostream& err);

struct CorpusEntry {
  std::string id;
  Graph graph;
};

// Fixed mix of connected graphs with 8 <= n <= 64: G(n,p), subcubic, grids,
// cycles and cliques in rotation. Deterministic in (count, seed).
std::vector<CorpusEntry> standard_corpus(std::size_t count, std::uint64_t seed);

// Worker count for bench: VISIKIT_THREADS if set and positive, otherwise the
// hardware concurrency.
std::size_t worker_threads();

}  // namespace visikit

#endif  // VISIKIT_HARNESS_HPP_
