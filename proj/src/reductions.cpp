#include "visikit/reductions.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "visikit/constructions.hpp"
#include "visikit/distance.hpp"
#include "visikit/error.hpp"

namespace visikit {

using Json = nlohmann::ordered_json;

std::string to_string(GadgetKind kind) {
  switch (kind) {
    case GadgetKind::kDiam2: return "diam2";
    case GadgetKind::kCliqueProduct: return "product";
    case GadgetKind::kGpUniversal: return "gp";
  }
  return "unknown";
}

GadgetKind parse_gadget_kind(const std::string& name) {
  for (GadgetKind kind : {GadgetKind::kDiam2, GadgetKind::kCliqueProduct,
                          GadgetKind::kGpUniversal}) {
    if (to_string(kind) == name) return kind;
  }
  throw InvalidArgument("unknown gadget \"" + name + "\" (expected diam2|product|gp)");
}

std::string to_string(PairedTag tag) {
  return tag == PairedTag::kClique ? "clique" : "independent_set";
}

std::size_t ceil_sqrt(std::size_t value) {
  std::size_t k = 0;
  while (k * k < value) ++k;
  return k;
}

namespace {

std::string copy_name(VertexId v, std::size_t layer) {
  return "v" + std::to_string(v) + "_" + std::to_string(layer);
}

std::string edge_name(const Edge& e) {
  return "e" + std::to_string(e.u) + "-" + std::to_string(e.v);
}

void require_kind(const ReductionInstance& inst, GadgetKind kind) {
  if (inst.kind != kind) {
    throw InvalidArgument("operation needs a " + to_string(kind) +
                          " instance, got " + to_string(inst.kind));
  }
}

void require_independent(const Graph& h, const VertexSet& s) {
  if (!is_independent_set(h, s)) {
    throw InvalidArgument("set is not an independent set of the source graph");
  }
}

void require_verified(const Graph& g, const VertexSet& x, SetKind kind) {
  const Verdict verdict = verify_set(g, x, kind);
  if (!verdict.ok) {
    const Witness& w = *verdict.witness;
    throw VerificationFailure("set is not a " + to_string(kind) +
                              "-set of the gadget (pair " + std::to_string(w.u) +
                              "," + std::to_string(w.v) + ")");
  }
}

std::size_t power(std::size_t base, std::size_t exponent) {
  std::size_t result = 1;
  for (std::size_t i = 0; i < exponent; ++i) result *= base;
  return result;
}

}  // namespace

ReductionInstance build_diam2_gadget(const Graph& h, std::size_t copies,
                                     bool include_y) {
  const std::size_t n = h.num_vertices();
  if (n < 3) throw InvalidArgument("diam2 gadget needs n(H) >= 3");
  if (copies < 1) throw InvalidArgument("diam2 gadget needs L >= 1");
  if (!h.is_connected()) throw InvalidArgument("diam2 gadget needs H connected");

  ReductionInstance inst;
  inst.kind = GadgetKind::kDiam2;
  inst.source = h;
  inst.copies = copies;
  inst.source_edges = h.edges();
  const std::size_t m = inst.source_edges.size();
  const std::size_t total = copies * n + m + (include_y ? 2 : 1);

  std::vector<std::string> labels(total);
  inst.vertex_copy.assign(copies, std::vector<VertexId>(n));
  for (std::size_t i = 0; i < copies; ++i) {
    for (VertexId v = 0; v < n; ++v) {
      const auto id = static_cast<VertexId>(i * n + v);
      inst.vertex_copy[i][v] = id;
      labels[id] = copy_name(v, i);
    }
  }
  for (std::size_t k = 0; k < m; ++k) {
    const auto id = static_cast<VertexId>(copies * n + k);
    inst.edge_vertex.push_back(id);
    labels[id] = edge_name(inst.source_edges[k]);
  }
  VertexId next = static_cast<VertexId>(copies * n + m);
  if (include_y) {
    inst.y = next++;
    labels[*inst.y] = "y";
  }
  inst.z = next;
  labels[*inst.z] = "z";

  std::vector<Edge> edges;
  for (std::size_t i = 0; i < copies; ++i) {
    for (VertexId u = 0; u < n; ++u) {
      for (VertexId v = u + 1; v < n; ++v) {
        edges.push_back({inst.copy_of(u, i), inst.copy_of(v, i)});
      }
    }
  }
  for (std::size_t k = 0; k < m; ++k) {
    const Edge& e = inst.source_edges[k];
    for (std::size_t i = 0; i < copies; ++i) {
      edges.push_back({inst.copy_of(e.u, i), inst.edge_vertex[k]});
      edges.push_back({inst.copy_of(e.v, i), inst.edge_vertex[k]});
    }
  }
  if (inst.y) {
    for (std::size_t i = 0; i < copies; ++i) {
      for (VertexId v = 0; v < n; ++v) edges.push_back({inst.copy_of(v, i), *inst.y});
    }
  }
  for (VertexId e : inst.edge_vertex) edges.push_back({e, *inst.z});
  // y and z are adjacent: the visibility arguments route copy-to-z pairs
  // through y and edge-vertex-to-y pairs through z.
  if (inst.y) edges.push_back({*inst.y, *inst.z});
  inst.graph = Graph::from_edges(total, edges, std::move(labels));

  if (include_y && diameter(inst.graph) != 2) {
    throw ContractViolation("diam2 gadget does not have diameter 2");
  }
  return inst;
}

VertexSet embed_is_as_total_set(const ReductionInstance& inst, const VertexSet& s) {
  require_kind(inst, GadgetKind::kDiam2);
  if (!inst.y) throw InvalidArgument("embedding needs the gadget's y vertex");
  require_independent(inst.source, s);
  std::vector<VertexId> ids(inst.edge_vertex);
  for (std::size_t i = 0; i < inst.copies; ++i) {
    for (VertexId v : s) ids.push_back(inst.copy_of(v, i));
  }
  VertexSet x(std::move(ids));
  if (x.size() != inst.copies * s.size() + inst.source_edges.size()) {
    throw ContractViolation("embedded set has the wrong size");
  }
  if (!verify_set(inst.graph, x, SetKind::kMuTotal).ok) {
    throw ContractViolation("embedded set is not a mu_t-set");
  }
  return x;
}

VertexSet extract_is_from_mu_set(const ReductionInstance& inst, const VertexSet& m) {
  require_kind(inst, GadgetKind::kDiam2);
  if (inst.copies != 1) throw InvalidArgument("mu-set extraction needs L = 1");
  if (!inst.y) throw InvalidArgument("mu-set extraction needs the gadget's y vertex");
  require_verified(inst.graph, m, SetKind::kMu);

  const Graph& h = inst.source;
  std::vector<VertexId> chosen;
  for (VertexId v = 0; v < h.num_vertices(); ++v) {
    if (m.contains(inst.copy_of(v, 0))) chosen.push_back(v);
  }
  VertexSet s;
  if (chosen.size() > 2) {
    std::vector<std::uint8_t> drop(h.num_vertices(), 0);
    for (std::size_t k = 0; k < inst.source_edges.size(); ++k) {
      if (!m.contains(inst.edge_vertex[k])) drop[inst.source_edges[k].u] = 1;
    }
    std::vector<VertexId> kept;
    for (VertexId v : chosen) {
      if (!drop[v]) kept.push_back(v);
    }
    s = VertexSet(std::move(kept));
  }
  if (!is_independent_set(h, s)) {
    throw ContractViolation("extracted set is not independent");
  }
  const auto bound = static_cast<long long>(m.size()) -
                     static_cast<long long>(inst.source_edges.size()) - 4;
  if (static_cast<long long>(s.size()) < bound) {
    throw ContractViolation("extracted set below |M| - m(H) - 4");
  }
  return s;
}

std::vector<VertexSet> layer_sets(const ReductionInstance& inst, const VertexSet& x) {
  x.check_within(inst.graph.num_vertices());
  std::vector<VertexSet> layers;
  for (std::size_t i = 0; i < inst.copies; ++i) {
    std::vector<VertexId> members;
    for (VertexId v = 0; v < inst.source.num_vertices(); ++v) {
      if (x.contains(inst.copy_of(v, i))) members.push_back(v);
    }
    layers.emplace_back(std::move(members));
  }
  return layers;
}

VertexSet extract_is_from_total_set(const ReductionInstance& inst,
                                    const VertexSet& x) {
  require_kind(inst, GadgetKind::kDiam2);
  if (!inst.y) throw InvalidArgument("total-set extraction needs the gadget's y vertex");
  require_verified(inst.graph, x, SetKind::kMuTotal);
  const auto layers = layer_sets(inst, x);
  std::size_t best = 0;
  for (std::size_t i = 0; i < layers.size(); ++i) {
    if (!is_independent_set(inst.source, layers[i])) {
      throw ContractViolation("layer " + std::to_string(i) +
                              " of a mu_t-set is not independent");
    }
    if (layers[i].size() > layers[best].size()) best = i;
  }
  const auto lhs = static_cast<long long>(layers[best].size() * inst.copies);
  const auto rhs = static_cast<long long>(x.size()) -
                   static_cast<long long>(inst.source_edges.size()) - 2;
  if (lhs < rhs) throw ContractViolation("extracted set below (|X| - m(H) - 2) / L");
  return layers[best];
}

ReductionInstance build_clique_product_gadget(const Graph& h, std::size_t copies) {
  const std::size_t n = h.num_vertices();
  if (n < 2) throw InvalidArgument("product gadget needs N >= 2");
  if (copies < 1) throw InvalidArgument("product gadget needs L >= 1");
  const auto hub = find_universal_vertex(h);
  if (!hub) {
    throw InvalidArgument("product gadget needs a source vertex z of degree N-1");
  }
  ReductionInstance inst;
  inst.kind = GadgetKind::kCliqueProduct;
  inst.source = h;
  inst.copies = copies;
  inst.hub = hub;
  inst.graph = cartesian_product(complete_graph(copies), h);
  inst.vertex_copy.assign(copies, std::vector<VertexId>(n));
  for (std::size_t i = 0; i < copies; ++i) {
    for (VertexId v = 0; v < n; ++v) {
      inst.vertex_copy[i][v] = static_cast<VertexId>(i * n + v);
    }
  }
  if (diameter(inst.graph) > 3) {
    throw ContractViolation("product gadget has diameter above 3");
  }
  return inst;
}

VertexSet embed_layered_total_set(const ReductionInstance& inst, const VertexSet& s) {
  require_kind(inst, GadgetKind::kCliqueProduct);
  require_independent(inst.source, s);
  if (s.contains(*inst.hub)) {
    throw InvalidArgument("layered embedding needs a set without the hub vertex " +
                          std::to_string(*inst.hub));
  }
  std::vector<VertexId> ids;
  for (std::size_t i = 0; i < inst.copies; ++i) {
    for (VertexId v : s) ids.push_back(inst.copy_of(v, i));
  }
  VertexSet x(std::move(ids));
  if (!verify_set(inst.graph, x, SetKind::kMuTotal).ok) {
    throw ContractViolation("layered embedding is not a mu_t-set");
  }
  return x;
}

PruneResult prune_layer_conflicts(const ReductionInstance& inst, const VertexSet& x,
                                  SetKind kind) {
  require_kind(inst, GadgetKind::kCliqueProduct);
  if (kind == SetKind::kGeneralPosition) {
    throw InvalidArgument("layer pruning is defined for mu, mud, muo and mut");
  }
  require_verified(inst.graph, x, kind);
  const bool outer = kind == SetKind::kMuOuter || kind == SetKind::kMuTotal;

  std::vector<std::uint8_t> removed(inst.graph.num_vertices(), 0);
  for (const Edge& e : inst.source.edges()) {
    std::vector<std::size_t> hits;
    for (std::size_t i = 0; i < inst.copies; ++i) {
      if (x.contains(inst.copy_of(e.u, i)) && x.contains(inst.copy_of(e.v, i))) {
        hits.push_back(i);
      }
    }
    if (hits.size() >= 2) {
      throw ContractViolation("edge " + edge_name(e) + " lies inside layers " +
                              std::to_string(hits[0]) + " and " +
                              std::to_string(hits[1]));
    }
    if (hits.empty()) continue;
    const std::size_t i = hits[0];
    if (outer) {
      for (std::size_t j = 0; j < inst.copies; ++j) {
        if (j == i) continue;
        if (x.contains(inst.copy_of(e.u, j)) || x.contains(inst.copy_of(e.v, j))) {
          throw ContractViolation("endpoint of edge " + edge_name(e) +
                                  " repeated in layer " + std::to_string(j));
        }
      }
    }
    removed[inst.copy_of(e.u, i)] = 1;
    removed[inst.copy_of(e.v, i)] = 1;
  }

  std::vector<VertexId> kept;
  std::vector<VertexId> dropped;
  for (VertexId v : x) (removed[v] ? dropped : kept).push_back(v);
  PruneResult result{VertexSet(std::move(kept)), VertexSet(std::move(dropped))};

  const std::size_t beta = outer ? 1 : 2;
  const std::size_t slack = power(inst.source.num_vertices(), beta);
  if (result.kept.size() + slack < x.size()) {
    throw ContractViolation("pruning removed more than N^beta vertices");
  }
  for (const VertexSet& layer : layer_sets(inst, result.kept)) {
    if (!is_independent_set(inst.source, layer)) {
      throw ContractViolation("pruned layer is not independent");
    }
  }
  return result;
}

VertexSet extract_best_layer_is(const ReductionInstance& inst, const VertexSet& x) {
  require_kind(inst, GadgetKind::kCliqueProduct);
  const auto layers = layer_sets(inst, x);
  std::size_t best = 0;
  for (std::size_t i = 0; i < layers.size(); ++i) {
    if (!is_independent_set(inst.source, layers[i])) {
      throw InvalidArgument("layer " + std::to_string(i) + " is not independent");
    }
    if (layers[i].size() > layers[best].size()) best = i;
  }
  VertexSet s = layers[best].empty() ? VertexSet{0} : layers[best];
  if (s.size() * inst.copies < x.size()) {
    throw ContractViolation("best layer below |X'| / L");
  }
  return s;
}

ReductionInstance build_gp_universal_gadget(const Graph& h) {
  if (h.num_vertices() < 1) throw InvalidArgument("gp gadget needs n(H) >= 1");
  ReductionInstance inst;
  inst.kind = GadgetKind::kGpUniversal;
  inst.source = h;
  inst.copies = 1;
  auto [graph, apex] = add_universal_vertex(h);
  std::vector<std::string> labels;
  for (VertexId v = 0; v < h.num_vertices(); ++v) labels.push_back(copy_name(v, 0));
  labels.push_back("z");
  inst.graph = Graph::from_edges(graph.num_vertices(), graph.edges(), std::move(labels));
  inst.z = apex;
  inst.vertex_copy.assign(1, std::vector<VertexId>(h.num_vertices()));
  for (VertexId v = 0; v < h.num_vertices(); ++v) inst.vertex_copy[0][v] = v;
  if (diameter(inst.graph) > 2) {
    throw ContractViolation("gp gadget has diameter above 2");
  }
  return inst;
}

PairedSet extract_clique_or_is(const Graph& g, const VertexSet& c) {
  const DistanceMatrix dist = all_pairs_distances(g);
  if (diameter(dist) != 2) {
    throw InvalidArgument("clique-or-IS extraction needs a diameter-2 graph");
  }
  if (!verify_set(g, dist, c, SetKind::kGeneralPosition).ok) {
    throw VerificationFailure("set is not a gp-set");
  }
  if (c.size() < 2) {
    VertexSet pair{0, 1};
    return {pair, g.has_edge(0, 1) ? PairedTag::kClique : PairedTag::kIndependentSet};
  }

  const auto in_c = c.mask(g.num_vertices());
  std::vector<std::uint8_t> seen(g.num_vertices(), 0);
  std::vector<std::vector<VertexId>> components;
  for (VertexId start : c) {
    if (seen[start]) continue;
    std::vector<VertexId> comp{start};
    seen[start] = 1;
    for (std::size_t head = 0; head < comp.size(); ++head) {
      for (VertexId b : g.neighbors(comp[head])) {
        if (in_c[b] && !seen[b]) {
          seen[b] = 1;
          comp.push_back(b);
        }
      }
    }
    components.push_back(std::move(comp));
  }

  PairedSet result;
  if (components.size() * components.size() >= c.size()) {
    std::vector<VertexId> picks;
    for (const auto& comp : components) picks.push_back(comp.front());
    result = {VertexSet(std::move(picks)), PairedTag::kIndependentSet};
  } else {
    std::size_t best = 0;
    for (std::size_t i = 1; i < components.size(); ++i) {
      if (components[i].size() > components[best].size()) best = i;
    }
    result = {VertexSet(components[best]), PairedTag::kClique};
  }
  const bool shape_ok = result.tag == PairedTag::kClique
                            ? is_clique(g, result.set)
                            : is_independent_set(g, result.set);
  if (!shape_ok || result.set.size() < ceil_sqrt(c.size())) {
    throw ContractViolation("clique-or-IS extraction postcondition failed");
  }
  return result;
}

namespace {

Json graph_to_json(const Graph& g) {
  Json edges = Json::array();
  for (const Edge& e : g.edges()) edges.push_back({e.u, e.v});
  return Json{{"n", g.num_vertices()}, {"edges", std::move(edges)}};
}

Graph graph_from_json(const Json& j) {
  std::vector<Edge> edges;
  for (const auto& e : j.at("edges")) {
    edges.push_back({e.at(0).get<VertexId>(), e.at(1).get<VertexId>()});
  }
  return Graph::from_edges(j.at("n").get<std::size_t>(), edges);
}

}  // namespace

std::string reduction_to_json(const ReductionInstance& inst) {
  Json copies = Json::object();
  for (std::size_t i = 0; i < inst.copies; ++i) {
    for (VertexId v = 0; v < inst.source.num_vertices(); ++v) {
      copies[copy_name(v, i)] = inst.copy_of(v, i);
    }
  }
  Json edge_vertices = Json::object();
  for (std::size_t k = 0; k < inst.source_edges.size(); ++k) {
    edge_vertices[edge_name(inst.source_edges[k])] = inst.edge_vertex[k];
  }
  Json specials = Json::object();
  if (inst.y) specials["y"] = *inst.y;
  if (inst.z) specials["z"] = *inst.z;
  Json maps{{"vertex_copy", std::move(copies)},
            {"edge_vertex", std::move(edge_vertices)},
            {"specials", std::move(specials)}};
  if (inst.hub) maps["hub"] = *inst.hub;
  Json doc{{"kind", to_string(inst.kind)},
           {"L", inst.copies},
           {"graph", graph_to_json(inst.graph)},
           {"source", graph_to_json(inst.source)},
           {"maps", std::move(maps)}};
  return doc.dump();
}

ReductionInstance reduction_from_json(const std::string& text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::exception& e) {
    throw InvalidArgument(std::string("reduction document: ") + e.what());
  }
  try {
    const GadgetKind kind = parse_gadget_kind(doc.at("kind").get<std::string>());
    const auto copies = doc.at("L").get<std::size_t>();
    const Graph graph = graph_from_json(doc.at("graph"));
    const Graph source = graph_from_json(doc.at("source"));
    const Json& maps = doc.at("maps");
    const bool has_y = maps.at("specials").contains("y");

    ReductionInstance rebuilt;
    switch (kind) {
      case GadgetKind::kDiam2: rebuilt = build_diam2_gadget(source, copies, has_y); break;
      case GadgetKind::kCliqueProduct:
        rebuilt = build_clique_product_gadget(source, copies);
        break;
      case GadgetKind::kGpUniversal: rebuilt = build_gp_universal_gadget(source); break;
    }
    // The document must describe exactly the gadget its source produces.
    if (!(rebuilt.graph == graph) || reduction_to_json(rebuilt) != doc.dump()) {
      throw InvalidArgument("reduction document does not match its source graph");
    }
    return rebuilt;
  } catch (const Json::exception& e) {
    throw InvalidArgument(std::string("reduction document: ") + e.what());
  }
}

ReductionInstance load_reduction(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot open " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return reduction_from_json(buffer.str());
}

void save_reduction(const std::string& path, const ReductionInstance& inst) {
  std::ofstream out(path);
  if (!out) throw InvalidArgument("cannot write " + path);
  out << reduction_to_json(inst) << '\n';
}

}  // namespace visikit
