#include "mpr/report.hpp"

namespace mpr {

Json edge_list_json(const Graph& g, EdgeSet edges) {
  Json out = Json::array();
  for (EdgeId e : edges) out.push_back({g.edge(e).u, g.edge(e).v});
  return out;
}

Json nodes_json(NodeSet s) {
  Json out = Json::array();
  for (NodeId v : s) out.push_back(v);
  return out;
}

Json to_json(const Graph& g, const Inequality& q) {
  Json out{{"id", q.to_string()}, {"kind", to_string(q.kind())}, {"support", edge_list_json(g, q.support())},
           {"rhs", q.rhs()}, {"sign", q.sign()}};
  if (q.kind() != InequalityKind::NonNeg) out["nodes"] = nodes_json(q.nodes());
  return out;
}

Json to_json(const Graph& g, const Matching& m) { return edge_list_json(g, m.edges()); }

Json to_json(const Graph& g, const FaceDescriptor& f) {
  Json tight = Json::array();
  for (const Inequality& q : f.tight_set) tight.push_back(to_json(g, q));
  return {{"tight", tight}, {"dimension", f.dimension}, {"n_tight_matchings", f.tight_matchings.size()}};
}

Json to_json(const Graph& g, const RankReport& r) {
  Json ranks = Json::array();
  for (std::size_t k = 0; k < r.facets.size(); ++k) {
    ranks.push_back({{"facet", r.facets[k].to_string()}, {"rank", r.ranks[k]}});
  }
  Json certs = Json::array();
  for (const RidgeCertificate& c : r.certificates) {
    certs.push_back(
        {{"facet", c.facet.to_string()}, {"partner", c.partner.to_string()}, {"ridge_dimension", c.ridge_dimension}});
  }
  Json zero = Json::array();
  for (const Inequality& q : r.rank_zero_set) zero.push_back(to_json(g, q));
  return {{"f0_mode", to_string(r.f0_mode)},
          {"polytope_dimension", r.polytope_dimension},
          {"rho", r.rho},
          {"complete", r.complete},
          {"rank_zero", zero},
          {"ranks", ranks},
          {"certificates", certs},
          {"violations", r.violations}};
}

Json to_json(const Graph& g, const WitnessResult& w) {
  Json out{{"target", w.target.to_string()},
           {"case", to_string(w.case_tag)},
           {"matching", to_json(g, w.matching)},
           {"checks",
            {{"valid_matching", w.checks.valid_matching},
             {"tight_on_u", w.checks.tight_on_u},
             {"tight_on_v", w.checks.tight_on_v},
             {"slack_on_target", w.checks.slack_on_target}}},
           {"fallback", w.fallback}};
  if (!w.note.empty()) out["note"] = w.note;
  return out;
}

Json to_json(const Graph& g, const WitnessReport& w) {
  Json results = Json::array();
  for (const WitnessResult& r : w.results) results.push_back(to_json(g, r));
  return {{"facet", nodes_json(w.u)},
          {"anchor", w.anchor.node},
          {"anchor_kind", w.anchor.kind == AnchorKind::OddHole ? "odd_hole" : "ear_endpoint"},
          {"ridge_dimension", w.ridge_dimension},
          {"ridge", w.ridge},
          {"fallback_count", w.fallback_count},
          {"ok", w.ok()},
          {"witnesses", results}};
}

Json to_json(const EarDecomposition& d) {
  Json ears = Json::array();
  for (const Ear& e : d.ears) ears.push_back(e.path);
  return {{"initial_cycle", d.initial_cycle}, {"ears", ears}};
}

}  // namespace mpr
