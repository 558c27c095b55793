#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "visikit/harness.hpp"

namespace {

using visikit::ExperimentConfig;

struct RawOptions {
  std::string family;
  std::string kind;
  std::string set;
  std::size_t edges = 0;
  bool no_y = false;
  bool no_timings = false;
};

void add_common(CLI::App* sub, ExperimentConfig& c) {
  sub->add_option("--seed", c.seed, "RNG seed");
  sub->add_option("--out", c.out, "Output path");
  sub->add_option("--id", c.id, "Instance id recorded in the report");
}

void add_input(CLI::App* sub, ExperimentConfig& c) {
  sub->add_option("--input", c.input, "Edge-list file")->required();
  sub->add_option("--format", c.format, "Input format (edgelist)");
  sub->add_flag("--allow-disconnected", c.allow_disconnected,
                "Accept a disconnected input graph");
}

void add_limits(CLI::App* sub, ExperimentConfig& c) {
  sub->add_option("--limit", c.limits.hereditary,
                  "Largest n for the hereditary exact search");
  sub->add_option("--dual-limit", c.limits.dual, "Largest n for the mud exact search");
}

}  // namespace

int main(int argc, char** argv) {
  ExperimentConfig config;
  RawOptions raw;
  CLI::App app{"Mutual-visibility toolkit"};
  app.require_subcommand(1);

  auto* gen = app.add_subcommand("gen", "Generate a graph and write it as an edge list");
  gen->add_option("--family", raw.family,
                  "path|cycle|complete|grid|random_connected|random_subcubic")->required();
  gen->add_option("--n", config.generator.n, "Vertex count");
  gen->add_option("--rows", config.generator.rows, "Grid rows");
  gen->add_option("--cols", config.generator.cols, "Grid columns");
  gen->add_option("--p", config.generator.p, "Edge probability");
  gen->add_option("--m", raw.edges, "Edge count (subcubic)");
  add_common(gen, config);

  auto* verify = app.add_subcommand("verify", "Check a vertex set against a property");
  add_input(verify, config);
  verify->add_option("--kind", raw.kind, "mu|mud|muo|mut|gp")->required();
  verify->add_option("--set", raw.set, "Comma-separated vertex ids")->required();
  verify->add_option("--sigma", config.sigma, "Path stretch p/q >= 1");
  add_common(verify, config);

  auto* approx = app.add_subcommand("approx", "Mutual-visibility set with a lower-bound certificate");
  add_input(approx, config);
  add_common(approx, config);

  auto* exact = app.add_subcommand("exact", "Maximum set by exhaustive search");
  add_input(exact, config);
  exact->add_option("--kind", raw.kind, "mu|mud|muo|mut|gp")->required();
  add_limits(exact, config);
  add_common(exact, config);

  auto* reduce = app.add_subcommand("reduce", "Build a reduction gadget from a source graph");
  add_input(reduce, config);
  reduce->add_option("--gadget", config.gadget, "diam2|product|gp")->required();
  reduce->add_option("--L", config.copies, "Number of copies");
  reduce->add_flag("--no-y", raw.no_y, "Omit the y vertex (diam2)");
  add_common(reduce, config);

  auto* extract = app.add_subcommand("extract", "Map a gadget set back to the source graph");
  extract->add_option("--instance", config.instance, "Reduction JSON")->required();
  extract->add_option("--kind", raw.kind, "mu|mud|muo|mut|gp")->required();
  extract->add_option("--set", raw.set, "Comma-separated vertex ids")->required();
  add_common(extract, config);

  auto* bench = app.add_subcommand("bench", "Run approx over the standard corpus");
  bench->add_option("--count", config.count, "Corpus size");
  add_common(bench, config);

  for (auto* sub : {gen, verify, approx, exact, reduce, extract, bench}) {
    sub->add_flag("--no-timings", raw.no_timings, "Omit wall-clock timings from reports");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? visikit::kExitOk : visikit::kExitUsage;
  }

  try {
    config.command = app.get_subcommands().front()->get_name();
    if (!raw.family.empty()) config.family = visikit::parse_graph_family(raw.family);
    if (!raw.kind.empty()) config.kind = visikit::parse_set_kind(raw.kind);
    if (!raw.set.empty() || config.command == "verify" || config.command == "extract") {
      config.set = raw.set;
    }
    if (raw.edges > 0) config.generator.edges = raw.edges;
    config.include_y = !raw.no_y;
    config.timings = !raw.no_timings;
  } catch (const std::exception& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return visikit::kExitUsage;
  }
  return visikit::execute(config, std::cout, std::cerr);
}
