#pragma once

#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "implab/bal.hpp"
#include "implab/balance.hpp"
#include "implab/enumeration.hpp"
#include "implab/fixtures.hpp"
#include "implab/impropriety.hpp"
#include "implab/interval_model.hpp"
#include "implab/io.hpp"
#include "implab/recognition.hpp"

namespace implab {

using json = nlohmann::json;

inline constexpr const char* kSchema = "implab/1";

inline json vertex_set_json(VertexSet s) { return vset::members(s); }

inline void to_json(json& j, const Graph& g) {
  j = json{{"graph6", graph6::encode(g)}, {"n", g.order()}, {"edges", adjacency_list::encode(g)}};
}

inline void to_json(json& j, const CliqueOrdering& o) {
  j = json::object();
  j["cliques"] = json::array();
  for (VertexSet c : o.cliques) j["cliques"].push_back(vertex_set_json(c));
  j["ranges"] = o.ranges;
}

inline void to_json(json& j, const NonIntervalWitness& w) {
  j = json{{"kind", to_string(w.kind)}, {"vertices", w.vertices}};
  if (w.kind == NonIntervalWitness::Kind::AsteroidalTriple) j["paths"] = w.paths;
}

/// Events as ["L", v] / ["R", v] pairs in left-to-right order.
inline void to_json(json& j, const IntervalModel& m) {
  j = json::array();
  for (const auto& e : m.events()) j.push_back(json::array({e.side == Side::Left ? "L" : "R", e.vertex}));
}

inline IntervalModel model_from_json(const json& j) {
  std::vector<Endpoint> events;
  for (const auto& e : j) {
    const auto side = e.at(0).get<std::string>();
    if (side != "L" && side != "R") throw std::invalid_argument("endpoint side must be L or R");
    events.push_back({e.at(1).get<int>(), side == "L" ? Side::Left : Side::Right});
  }
  return IntervalModel(std::move(events));
}

inline void to_json(json& j, const ImproprietyCertificate& c) {
  j = json{{"graph", c.graph},
           {"p", c.p},
           {"witness_model", c.witness_model},
           {"lower_bound", c.lower_bound},
           {"lower_bound_kind", to_string(c.lower_bound_kind)},
           {"per_vertex", c.per_vertex}};
}

inline void to_json(json& j, const BalanceReport& r) {
  j = json{{"wt", r.wt},
           {"imp", r.imp},
           {"balanced", r.balanced},
           {"basepoints", vertex_set_json(r.basepoints)},
           {"critical", r.critical},
           {"p", r.p},
           {"deletion_imps", r.deletion_imps}};
}

inline void to_json(json& j, const CheckResult& c) {
  j = json{{"check", c.check}, {"status", to_string(c.status)}, {"detail", c.detail}, {"offending", json::array()}};
  for (VertexSet s : c.offending) j["offending"].push_back(vertex_set_json(s));
}

inline void to_json(json& j, const BalSpec& s) {
  j = json{{"k", s.k}, {"parts", json::array()}};
  for (const auto& h : s.parts) j["parts"].push_back(graph6::encode(h));
}

inline BalSpec bal_spec_from_json(const json& j) {
  BalSpec s;
  s.k = j.at("k").get<int>();
  for (const auto& p : j.at("parts")) s.parts.push_back(graph6::decode(p.get<std::string>()));
  return s;
}

inline void to_json(json& j, const BalRejection& r) {
  j = json{{"clause", r.clause}, {"reason", r.reason}, {"candidate", r.candidate}};
}

inline void to_json(json& j, const BalRecognition& r) {
  if (const auto* s = std::get_if<BalSpec>(&r))
    j = json{{"bal", true}, {"spec", *s}};
  else
    j = json{{"bal", false}, {"rejection", std::get<BalRejection>(r)}};
}

inline void to_json(json& j, const MfisgRecord& r) {
  j = json{{"schema", kSchema},
           {"graph6", graph6::encode(r.graph)},
           {"edges", adjacency_list::encode(r.graph)},
           {"n", r.n},
           {"p", r.p},
           {"imp", r.imp},
           {"wt", r.wt},
           {"classification", to_string(r.classification)}};
}

inline void to_json(json& j, const Classification& c) {
  j = json{{"schema", kSchema}, {"graph", c.graph}, {"interval", c.interval}, {"connected", c.connected}};
  if (c.witness) {
    j["witness"] = *c.witness;
    return;
  }
  j["imp"] = c.imp;
  j["wt"] = c.wt;
  j["balanced"] = c.balanced;
  j["critical"] = c.critical;
  j["p"] = c.p;
  j["basepoints"] = vertex_set_json(c.basepoints);
  j["types"] = c.types;
  j["deletion_imps"] = c.deletion_imps;
  if (c.certificate) j["certificate"] = *c.certificate;
  if (c.bal_form) j["bal_form"] = *c.bal_form;
}

inline void to_json(json& j, const FixtureDiff& d) {
  j = json{{"matched", d.matched}, {"missing", d.missing}, {"unmatched", d.unmatched}, {"exact", d.exact()}};
}

}  // namespace implab
