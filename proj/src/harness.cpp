#include "visikit/harness.hpp"

#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <ostream>
#include <thread>

#include "visikit/approx_mu.hpp"
#include "visikit/distance.hpp"
#include "visikit/edge_list.hpp"
#include "visikit/random.hpp"
#include "visikit/reductions.hpp"

namespace visikit {

namespace {

class Stopwatch {
 public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  // Milliseconds since construction or the previous lap.
  double lap() {
    const auto now = std::chrono::steady_clock::now();
    const double ms = std::chrono::duration<double, std::milli>(now - start_).count();
    start_ = now;
    return ms;
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

void describe_graph(Report& r, const Graph& g, const DistanceMatrix& dist) {
  r.n = g.num_vertices();
  r.m = g.num_edges();
  r.diameter = diameter(dist);
  if (g.num_vertices() >= 2) r.average_distance = average_distance(dist).exact;
}

std::string instance_id(const ExperimentConfig& config, const std::string& fallback) {
  return config.id.empty() ? fallback : config.id;
}

Graph load_input(const ExperimentConfig& config) {
  return load_graph(config.input, config.allow_disconnected);
}

void fill_witness(Report& r, const Verdict& verdict) {
  r.verified = verdict.ok;
  r.witness = verdict.witness;
}

Report approx_report(const std::string& id, const Graph& g, std::uint64_t seed) {
  Report r;
  r.instance_id = id;
  r.command = "approx";
  r.seed = seed;
  Stopwatch clock;
  const DistanceMatrix dist = all_pairs_distances(g);
  r.timings.push_back({"distances", clock.lap()});
  const ApproxResult result = approx_mu_set(g, dist, seed);
  r.timings.push_back({"approx", clock.lap()});
  fill_witness(r, verify_set(g, dist, result.set, SetKind::kMu));
  r.timings.push_back({"verify", clock.lap()});
  describe_graph(r, g, dist);
  r.algorithm = result.exact ? "exact_small_graph" : "hypergraph_permutation";
  r.property = to_string(SetKind::kMu);
  r.set = result.set;
  r.caro_tuza_bound = result.certificate.total;
  r.jensen_floor = result.certificate.jensen_floor;
  r.details["hyperedges"] = std::to_string(result.hypergraph.num_edges());
  r.details["restarts"] = std::to_string(result.restarts);
  r.details["meets_bound"] =
      Rational(static_cast<unsigned long>(result.set.size())) >= result.certificate.total
          ? "true"
          : "false";
  if (r.details["meets_bound"] != "true") r.verified = false;
  return r;
}

Report run_gen(const ExperimentConfig& config) {
  const Graph g = generate(*config.family, config.generator, config.seed);
  save_graph(config.out, g);
  Report r;
  r.instance_id = instance_id(config, config.out);
  r.command = "gen";
  r.algorithm = to_string(*config.family);
  r.seed = config.seed;
  describe_graph(r, g, all_pairs_distances(g));
  r.verified = true;
  return r;
}

Report run_verify(const ExperimentConfig& config) {
  const Graph g = load_input(config);
  const VertexSet x = parse_vertex_list(*config.set);
  x.check_within(g.num_vertices());
  const Sigma sigma = Sigma::parse(config.sigma);
  Report r;
  r.instance_id = instance_id(config, config.input);
  r.command = "verify";
  r.algorithm = sigma.is_one() ? "interval_walk" : "restricted_bfs";
  r.seed = config.seed;
  Stopwatch clock;
  const DistanceMatrix dist = all_pairs_distances(g);
  r.timings.push_back({"distances", clock.lap()});
  fill_witness(r, verify_set(g, dist, x, *config.kind, sigma));
  r.timings.push_back({"verify", clock.lap()});
  describe_graph(r, g, dist);
  r.property = to_string(*config.kind);
  r.set = x;
  r.sigma = sigma.str();
  return r;
}

Report run_exact(const ExperimentConfig& config) {
  const Graph g = load_input(config);
  Report r;
  r.instance_id = instance_id(config, config.input);
  r.command = "exact";
  r.algorithm = *config.kind == SetKind::kMuDual ? "descending_enumeration"
                                                 : "branch_and_bound";
  r.seed = config.seed;
  Stopwatch clock;
  const DistanceMatrix dist = all_pairs_distances(g);
  r.timings.push_back({"distances", clock.lap()});
  const OracleResult result = max_set_exact(g, dist, *config.kind, config.limits);
  r.timings.push_back({"search", clock.lap()});
  fill_witness(r, verify_set(g, dist, result.best_set, *config.kind));
  describe_graph(r, g, dist);
  r.property = to_string(*config.kind);
  r.set = result.best_set;
  r.optimum = result.optimum;
  r.details["explored"] = std::to_string(result.explored);
  return r;
}

Report run_reduce(const ExperimentConfig& config) {
  const Graph h = load_input(config);
  const GadgetKind kind = parse_gadget_kind(config.gadget);
  ReductionInstance inst;
  switch (kind) {
    case GadgetKind::kDiam2: inst = build_diam2_gadget(h, config.copies, config.include_y); break;
    case GadgetKind::kCliqueProduct: inst = build_clique_product_gadget(h, config.copies); break;
    case GadgetKind::kGpUniversal: inst = build_gp_universal_gadget(h); break;
  }
  save_reduction(config.out, inst);
  Report r;
  r.instance_id = instance_id(config, config.out);
  r.command = "reduce";
  r.algorithm = to_string(kind);
  r.seed = config.seed;
  describe_graph(r, inst.graph, all_pairs_distances(inst.graph));
  r.verified = true;
  r.details["L"] = std::to_string(inst.copies);
  r.details["source_n"] = std::to_string(h.num_vertices());
  r.details["source_m"] = std::to_string(h.num_edges());
  return r;
}

Report run_extract(const ExperimentConfig& config) {
  const ReductionInstance inst = load_reduction(config.instance);
  const VertexSet x = parse_vertex_list(*config.set);
  Report r;
  r.instance_id = instance_id(config, config.instance);
  r.command = "extract";
  r.seed = config.seed;
  r.set_scope = "source";
  r.details["input_size"] = std::to_string(x.size());
  const SetKind kind = *config.kind;
  switch (inst.kind) {
    case GadgetKind::kDiam2:
      if (kind == SetKind::kMu) {
        r.algorithm = "mu_set_to_is";
        r.set = extract_is_from_mu_set(inst, x);
      } else if (kind == SetKind::kMuTotal) {
        r.algorithm = "total_set_to_is";
        r.set = extract_is_from_total_set(inst, x);
      } else {
        throw UsageError("diam2 extraction takes --kind mu or mut");
      }
      r.property = "independent_set";
      break;
    case GadgetKind::kCliqueProduct: {
      if (kind == SetKind::kGeneralPosition) {
        throw UsageError("product extraction takes --kind mu|mud|muo|mut");
      }
      r.algorithm = "prune_then_best_layer";
      const PruneResult pruned = prune_layer_conflicts(inst, x, kind);
      r.details["pruned_size"] = std::to_string(pruned.kept.size());
      r.set = extract_best_layer_is(inst, pruned.kept);
      r.property = "independent_set";
      break;
    }
    case GadgetKind::kGpUniversal: {
      if (kind != SetKind::kGeneralPosition) {
        throw UsageError("gp extraction takes --kind gp");
      }
      r.algorithm = "clique_or_is";
      const PairedSet paired = extract_clique_or_is(inst.graph, x);
      std::vector<VertexId> ids;
      for (VertexId v : paired.set) {
        if (v != *inst.z) ids.push_back(v);
      }
      r.set = VertexSet(std::move(ids));
      r.details["gadget_set"] = format_vertex_list(paired.set);
      r.property = to_string(paired.tag);
      break;
    }
  }
  const Graph& h = inst.source;
  r.n = h.num_vertices();
  r.m = h.num_edges();
  if (h.num_vertices() > 0 && h.is_connected()) describe_graph(r, h, all_pairs_distances(h));
  r.verified = recheck_report(r, h);
  return r;
}

std::vector<Report> run_bench(const ExperimentConfig& config) {
  const auto corpus = standard_corpus(config.count, config.seed);
  std::vector<Report> reports(corpus.size());
  std::vector<std::string> failures(corpus.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < corpus.size(); i = next++) {
      try {
        reports[i] = approx_report(corpus[i].id, corpus[i].graph, derive_seed(config.seed, i));
        reports[i].command = "bench";
      } catch (const std::exception& e) {
        failures[i] = corpus[i].id + ": " + e.what();
      }
    }
  };
  const std::size_t threads = std::min(worker_threads(), std::max<std::size_t>(corpus.size(), 1));
  std::vector<std::thread> pool;
  for (std::size_t t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
  for (const std::string& failure : failures) {
    if (!failure.empty()) throw Error(failure);
  }
  return reports;
}

}  // namespace

void validate(const ExperimentConfig& c) {
  auto need = [&](bool ok, const std::string& what) {
    if (!ok) throw UsageError(c.command + ": " + what);
  };
  if (c.format != "edgelist") throw UsageError("unsupported --format " + c.format);
  try {
    (void)Sigma::parse(c.sigma);
  } catch (const InvalidArgument& e) {
    throw UsageError(std::string("--sigma: ") + e.what());
  }
  need(c.copies >= 1, "--L must be >= 1");
  if (c.command == "gen") {
    need(c.family.has_value(), "--family is required");
    need(!c.out.empty(), "--out is required");
  } else if (c.command == "verify") {
    need(!c.input.empty(), "--input is required");
    need(c.kind.has_value(), "--kind is required");
    need(c.set.has_value(), "--set is required");
    need(c.sigma == "1" || c.kind != SetKind::kGeneralPosition || Sigma::parse(c.sigma).is_one(),
         "relaxation undefined for gp");
  } else if (c.command == "approx") {
    need(!c.input.empty(), "--input is required");
  } else if (c.command == "exact") {
    need(!c.input.empty(), "--input is required");
    need(c.kind.has_value(), "--kind is required");
  } else if (c.command == "reduce") {
    need(!c.input.empty(), "--input is required");
    need(!c.out.empty(), "--out is required");
    try {
      (void)parse_gadget_kind(c.gadget);
    } catch (const InvalidArgument& e) {
      throw UsageError(e.what());
    }
  } else if (c.command == "extract") {
    need(!c.instance.empty(), "--instance is required");
    need(c.kind.has_value(), "--kind is required");
    need(c.set.has_value(), "--set is required");
  } else if (c.command == "bench") {
    need(c.count >= 1, "--count must be >= 1");
  } else {
    throw UsageError("unknown command \"" + c.command + "\"");
  }
}

std::vector<Report> run(const ExperimentConfig& config) {
  validate(config);
  if (config.command == "gen") return {run_gen(config)};
  if (config.command == "verify") return {run_verify(config)};
  if (config.command == "approx") {
    return {approx_report(instance_id(config, config.input), load_input(config), config.seed)};
  }
  if (config.command == "exact") return {run_exact(config)};
  if (config.command == "reduce") return {run_reduce(config)};
  if (config.command == "extract") return {run_extract(config)};
  return run_bench(config);
}

int execute(const ExperimentConfig& config, std::ostream& out, std::ostream& err) {
  try {
    const std::vector<Report> reports = run(config);
    const bool artifact = config.command == "gen" || config.command == "reduce";
    std::ofstream file;
    std::ostream* sink = &out;
    if (!artifact && !config.out.empty()) {
      file.open(config.out);
      if (!file) throw InvalidArgument("cannot write " + config.out);
      sink = &file;
    }
    bool all_verified = true;
    for (const Report& r : reports) {
      *sink << report_to_json(r, config.timings) << '\n';
      all_verified = all_verified && r.verified;
    }
    sink->flush();
    return all_verified ? kExitOk : kExitVerificationFailed;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const VerificationFailure& e) {
    err << "verification failed: " << e.what() << '\n';
    return kExitVerificationFailed;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitError;
  }
}

std::vector<CorpusEntry> standard_corpus(std::size_t count, std::uint64_t seed) {
  std::vector<CorpusEntry> corpus;
  corpus.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    Rng rng(derive_seed(seed, i));
    GeneratorParams params;
    GraphFamily family = GraphFamily::kPath;
    switch (i % 5) {
      case 0:
        family = GraphFamily::kRandomConnected;
        params.n = rng.between(8, 64);
        params.p = std::min(1.0, 2.0 * std::log(static_cast<double>(params.n)) /
                                         static_cast<double>(params.n) +
                                     0.05 + 0.25 * rng.uniform());
        break;
      case 1:
        family = GraphFamily::kRandomSubcubic;
        params.n = rng.between(8, 64);
        break;
      case 2:
        family = GraphFamily::kGrid;
        params.rows = rng.between(2, 8);
        params.cols = rng.between(std::max<std::size_t>(2, (8 + params.rows - 1) / params.rows),
                                  64 / params.rows);
        break;
      case 3:
        family = GraphFamily::kCycle;
        params.n = rng.between(8, 64);
        break;
      default:
        family = GraphFamily::kComplete;
        params.n = rng.between(8, 64);
        break;
    }
    Graph g = generate(family, params, rng.next());
    corpus.push_back({to_string(family) + "-" + std::to_string(i) + "-n" +
                          std::to_string(g.num_vertices()),
                      std::move(g)});
  }
  return corpus;
}

std::size_t worker_threads() {
  if (const char* env = std::getenv("VISIKIT_THREADS")) {
    char* end = nullptr;
    const long value = std::strtol(env, &end, 10);
    if (end != env && value > 0) return static_cast<std::size_t>(value);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

}  // namespace visikit
