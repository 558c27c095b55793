#include "visikit/report.hpp"

#include <tuple>

#include <json.hpp>

#include "visikit/error.hpp"

namespace visikit {

using Json = nlohmann::ordered_json;

bool operator==(const Report& a, const Report& b) {
  auto key = [](const Report& r) {
    return std::tie(r.instance_id, r.command, r.algorithm, r.n, r.m, r.diameter,
                    r.property, r.set_scope, r.set, r.verified, r.witness, r.sigma,
                    r.jensen_floor, r.optimum, r.seed, r.details, r.timings);
  };
  return key(a) == key(b) && a.average_distance == b.average_distance &&
         a.caro_tuza_bound == b.caro_tuza_bound;
}

std::string report_to_json(const Report& r, bool include_timings) {
  Json j;
  j["instance"] = r.instance_id;
  j["command"] = r.command;
  j["algorithm"] = r.algorithm;
  j["n"] = r.n;
  j["m"] = r.m;
  j["diameter"] = r.diameter;
  if (r.average_distance) {
    j["avg_distance"] = to_string(*r.average_distance);
    j["avg_distance_float"] = r.average_distance->get_d();
  }
  j["property"] = r.property;
  j["set_scope"] = r.set_scope;
  j["set"] = r.set.ids();
  j["size"] = r.set.size();
  j["verified"] = r.verified;
  if (r.witness) {
    Json w = Json::array({r.witness->u});
    if (r.witness->between) w.push_back(*r.witness->between);
    w.push_back(r.witness->v);
    j["witness"] = std::move(w);
  }
  if (r.sigma) j["sigma"] = *r.sigma;
  if (r.caro_tuza_bound) {
    j["f_bound"] = to_string(*r.caro_tuza_bound);
    j["f_bound_float"] = r.caro_tuza_bound->get_d();
  }
  if (r.jensen_floor) j["jensen_floor"] = *r.jensen_floor;
  if (r.optimum) j["optimum"] = *r.optimum;
  j["seed"] = r.seed;
  if (!r.details.empty()) j["details"] = r.details;
  if (include_timings) {
    Json t = Json::object();
    for (const PhaseTiming& p : r.timings) t[p.phase] = p.milliseconds;
    j["timings_ms"] = std::move(t);
  }
  return j.dump();
}

Report report_from_json(const std::string& line) {
  try {
    const Json j = Json::parse(line);
    Report r;
    r.instance_id = j.at("instance").get<std::string>();
    r.command = j.at("command").get<std::string>();
    r.algorithm = j.at("algorithm").get<std::string>();
    r.n = j.at("n").get<std::size_t>();
    r.m = j.at("m").get<std::size_t>();
    r.diameter = j.at("diameter").get<std::size_t>();
    if (j.contains("avg_distance")) {
      r.average_distance = parse_rational(j["avg_distance"].get<std::string>());
    }
    r.property = j.at("property").get<std::string>();
    r.set_scope = j.at("set_scope").get<std::string>();
    r.set = VertexSet(j.at("set").get<std::vector<VertexId>>());
    r.verified = j.at("verified").get<bool>();
    if (j.contains("witness")) {
      const auto w = j["witness"].get<std::vector<VertexId>>();
      if (w.size() == 2) {
        r.witness = Witness{w[0], w[1], std::nullopt};
      } else if (w.size() == 3) {
        r.witness = Witness{w[0], w[2], w[1]};
      } else {
        throw InvalidArgument("report witness must have 2 or 3 entries");
      }
    }
    if (j.contains("sigma")) r.sigma = j["sigma"].get<std::string>();
    if (j.contains("f_bound")) {
      r.caro_tuza_bound = parse_rational(j["f_bound"].get<std::string>());
    }
    if (j.contains("jensen_floor")) r.jensen_floor = j["jensen_floor"].get<double>();
    if (j.contains("optimum")) r.optimum = j["optimum"].get<std::size_t>();
    r.seed = j.at("seed").get<std::uint64_t>();
    if (j.contains("details")) {
      r.details = j["details"].get<std::map<std::string, std::string>>();
    }
    if (j.contains("timings_ms")) {
      for (const auto& [phase, ms] : j["timings_ms"].items()) {
        r.timings.push_back({phase, ms.get<double>()});
      }
    }
    return r;
  } catch (const Json::exception& e) {
    throw InvalidArgument(std::string("malformed report: ") + e.what());
  }
}

bool recheck_report(const Report& report, const Graph& graph) {
  if (report.property == "independent_set") return is_independent_set(graph, report.set);
  if (report.property == "clique") return is_clique(graph, report.set);
  const SetKind kind = parse_set_kind(report.property);
  Sigma sigma;
  if (report.sigma) sigma = Sigma::parse(*report.sigma);
  return verify_set(graph, report.set, kind, sigma).ok;
}

}  // namespace visikit
