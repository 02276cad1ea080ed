#include "mpr/witness.hpp"

#include <algorithm>

#include "mpr/errors.hpp"

namespace mpr {

std::string to_string(WitnessCase c) {
  switch (c) {
    case WitnessCase::Case1a: return "Case1a";
    case WitnessCase::Case1b: return "Case1b";
    case WitnessCase::Case2: return "Case2";
    case WitnessCase::Case3a: return "Case3a";
    case WitnessCase::Case3b: return "Case3b";
    case WitnessCase::Case3c: return "Case3c";
    case WitnessCase::Case4: return "Case4";
  }
  return "?";
}

bool WitnessReport::ok() const {
  return ridge && fallback_count == 0 &&
         std::all_of(results.begin(), results.end(), [](const WitnessResult& r) { return r.checks.all(); });
}

namespace {

bool is_blossom(const Graph& g, NodeSet u) {
  if (u.size() < 3 || u.size() % 2 == 0) return false;
  const Subgraph h = induced(g, u);
  return is_factor_critical(g, h) && is_2_connected(g, h);
}

void require_blossom(const Graph& g, NodeSet u) {
  if (!u.is_subset_of(g.all_nodes()) || !is_blossom(g, u)) {
    throw PreconditionError(format_nodes(u) + " does not induce a factor-critical 2-connected subgraph");
  }
}

/// Node order of a connected 2-regular subgraph.
Cycle cycle_order(const Graph& g, const Subgraph& h) {
  Cycle c{h.nodes.front()};
  NodeId prev = -1;
  for (;;) {
    const NodeId cur = c.back();
    NodeId next = -1;
    for (EdgeId e : g.incident(cur) & h.edges) {
      const NodeId y = g.edge(e).other(cur);
      if (y != prev) {
        next = y;
        break;
      }
    }
    if (next == c.front() || next < 0) break;
    prev = cur;
    c.push_back(next);
  }
  return c;
}

/// The two i-j paths of a cycle: forward along the stored order and backward.
std::pair<std::vector<NodeId>, std::vector<NodeId>> cycle_arcs(const Cycle& c, NodeId i, NodeId j) {
  const auto n = c.size();
  const auto pi = static_cast<std::size_t>(std::find(c.begin(), c.end(), i) - c.begin());
  std::vector<NodeId> fwd, bwd;
  for (std::size_t k = 0;; ++k) {
    fwd.push_back(c[(pi + k) % n]);
    if (fwd.back() == j) break;
  }
  for (std::size_t k = 0;; ++k) {
    bwd.push_back(c[(pi + n - k) % n]);
    if (bwd.back() == j) break;
  }
  return {fwd, bwd};
}

std::optional<NodeId> smallest_except(NodeSet s, NodeId skip) {
  const NodeSet rest = s.without(skip);
  if (rest.empty()) return std::nullopt;
  return rest.front();
}

class Builder {
 public:
  Builder(const Graph& g, NodeSet u, NodeId v) : g_(g), u_(u), v_(v), gu_(induced(g, u)) {}

  Matching near_pm(NodeId w) const { return near_pm_excluding(g_, gu_, w); }

  /// Perfect matching of G[U] minus `used`.
  Matching pm_outside(NodeSet used) const {
    auto m = smallest_perfect_matching(g_, remove_nodes(g_, gu_, used));
    if (!m) throw InternalError("remainder " + format_nodes(u_ - used) + " has no perfect matching");
    return *m;
  }

  /// Near-perfect matching of G[U] missing some node other than v.
  Matching near_pm_keeping_v(std::optional<NodeId> preferred = std::nullopt) const {
    if (preferred && *preferred != v_) return near_pm(*preferred);
    return near_pm(*smallest_except(u_, v_));
  }

  /// Near-perfect matching of the cycle containing e, missing a node other
  /// than v and the endpoints of e.
  std::optional<Matching> cycle_pm_with_edge(const Cycle& c, EdgeId e) const {
    std::vector<NodeId> order = c;
    std::sort(order.begin(), order.end());
    for (NodeId x : order) {
      if (x == v_ || g_.edge(e).has(x)) continue;
      const Matching m = cycle_near_pm(g_, c, x);
      if (m.contains(e)) return m;
    }
    return std::nullopt;
  }

  Matching edge_case_outside_u(EdgeId e) const {
    const Edge& ed = g_.edge(e);
    if (u_.contains(ed.u)) return near_pm(ed.u).with(e);
    if (u_.contains(ed.v)) return near_pm(ed.v).with(e);
    return near_pm_keeping_v().with(e);
  }

  Matching edge_case_inside_u(EdgeId e) const {
    const Cycle c = nice_odd_cycle_through_edge(g_, gu_, e);
    if (auto m = cycle_pm_with_edge(c, e)) return *m | pm_outside(NodeSet::from_range(c));

    // The cycle is the triangle {a, b, v}: grow the first ear from (v, k).
    const Edge& ed = g_.edge(e);
    const NodeSet tri = NodeSet::from_range(c);
    const NodeSet off = (g_.neighbor_set(v_) & u_) - tri;
    if (off.empty()) throw InternalError("anchor has no neighbour off the triangle");
    const Ear first = grow_odd_ear(g_, gu_, tri, v_, off.front());
    if (first.is_proper()) {
      const NodeId y = first.endpoint_b();
      Cycle longer = first.path;
      longer.push_back(ed.other(y));
      auto m = cycle_pm_with_edge(longer, e);
      if (!m) throw InternalError("re-routed cycle has no matching through the edge");
      return *m | pm_outside(NodeSet::from_range(longer));
    }
    Cycle ear_cycle(first.path.begin(), first.path.end() - 1);
    const Matching on_ear = cycle_near_pm(g_, ear_cycle, *smallest_except(NodeSet::from_range(ear_cycle), v_));
    return Matching(EdgeSet{e}) | on_ear | pm_outside(tri | NodeSet::from_range(ear_cycle));
  }

  Matching hole_edge_inside_u(EdgeId e) const {
    const Cycle c = cycle_order(g_, gu_);
    if (auto m = cycle_pm_with_edge(c, e)) return *m;
    // Triangle whose edge e avoids v: v has a neighbour outside U.
    const NodeSet out = g_.neighbor_set(v_) - u_;
    if (out.empty()) throw InternalError("triangle anchor has degree 2");
    return Matching(EdgeSet{e, *g_.find_edge(v_, out.front())});
  }

  Matching degree_case(NodeId w) const {
    if (u_.contains(w)) return near_pm(w);
    return near_pm_keeping_v();
  }

  Matching odd_set_disjoint_or_large(NodeSet up) const { return near_pm_keeping_v(smallest_except(up & u_, v_)); }

  Matching odd_set_crossing(NodeSet up) const { return near_pm_keeping_v(smallest_except(up & u_, v_)); }

  Matching odd_set_nested(NodeSet up) const {
    if (!is_nice_subgraph(g_, gu_, up)) return near_pm(*smallest_except(up, v_));

    WitnessContext ctx = build_case3c_scaffold(g_, u_, up);
    ctx.v = v_;
    const Cycle c = case3c_nice_cycle(g_, ctx);
    const NodeSet on_cycle = NodeSet::from_range(c);
    auto [fwd, bwd] = cycle_arcs(c, ctx.i, ctx.j);
    const std::vector<NodeId>& inner = NodeSet::from_range(fwd).is_subset_of(up) ? fwd : bwd;

    std::vector<NodeId> candidates;
    if (ctx.i == v_) {
      candidates = {inner[inner.size() - 2]};
    } else if (ctx.j == v_) {
      candidates = {inner[1]};
    } else {
      candidates = {inner[1], inner[inner.size() - 2]};
    }
    for (NodeId m : candidates) {
      if (m != v_) return cycle_near_pm(g_, c, m) | pm_outside(on_cycle);
    }

    // v is the only inner node between i and j: route v into a new ear.
    const NodeSet spare = (g_.neighbor_set(v_) & u_).without(ctx.i).without(ctx.j);
    if (spare.empty()) throw InternalError("anchor has degree 2 in G[U]");
    const NodeSet off_cycle = spare - on_cycle;
    if (!off_cycle.empty()) {
      const Ear ear = grow_odd_ear(g_, gu_, on_cycle, v_, off_cycle.front());
      const auto interior = ear.interior();
      const std::vector<NodeId> rest(interior.begin() + 1, interior.end() - 1);
      return cycle_near_pm(g_, c, v_) | Matching(EdgeSet{*g_.find_edge(v_, interior.front())}) |
             path_pm(g_, rest) | pm_outside(on_cycle | NodeSet::from_range(interior));
    }
    return chord_repair(c, spare.front(), ctx, up) | pm_outside(on_cycle);
  }

 private:
  // v matched along the chord (v, r) of the cycle; the two arcs of the cycle
  // minus {v, r} are matched after deleting one more node.
  Matching chord_repair(const Cycle& c, NodeId r, const WitnessContext& ctx, NodeSet up) const {
    const auto [a1, a2] = cycle_arcs(c, v_, r);
    const std::vector<NodeId> arc1(a1.begin() + 1, a1.end() - 1);
    const std::vector<NodeId> arc2(a2.begin() + 1, a2.end() - 1);
    const Matching chord(EdgeSet{*g_.find_edge(v_, r)});
    std::vector<NodeId> order = c;
    std::sort(order.begin(), order.end());
    for (NodeId x : order) {
      if (x == v_ || x == r) continue;
      auto drop = [x](std::vector<NodeId> p) {
        p.erase(std::remove(p.begin(), p.end(), x), p.end());
        return p;
      };
      const auto p1 = drop(arc1);
      const auto p2 = drop(arc2);
      if (p1.size() % 2 != 0 || p2.size() % 2 != 0) continue;
      const Matching m = chord | path_pm(g_, p1) | path_pm(g_, p2);
      auto matched_inside = [&](NodeId w) {
        for (EdgeId e : m.edges() & g_.incident(w)) {
          if (up.contains(g_.edge(e).other(w))) return true;
        }
        return false;
      };
      if (!matched_inside(ctx.i) && !matched_inside(ctx.j)) return m;
    }
    throw InternalError("no chord repair keeps i and j matched outside U'");
  }

  const Graph& g_;
  NodeSet u_;
  NodeId v_;
  Subgraph gu_;
};

}  // namespace

Anchor choose_anchor(const Graph& g, NodeSet u) {
  require_blossom(g, u);
  const Subgraph gu = induced(g, u);
  if (is_chordless_cycle(g, gu)) {
    if (u.size() == 3) {
      for (NodeId x : u) {
        if (g.degree(x) == 2) {
          throw PreconditionError("triangle " + format_nodes(u) + " has a node of degree 2; its facet has rank 0");
        }
      }
    }
    return {u.front(), AnchorKind::OddHole};
  }
  const EarDecomposition d = proper_odd_ear_decomposition(g, gu);
  NodeSet endpoints;
  for (const Ear& ear : d.ears) {
    endpoints.insert(ear.endpoint_a());
    endpoints.insert(ear.endpoint_b());
  }
  for (NodeId x : endpoints) {
    if (degree_in(g, gu, x) >= 3) return {x, AnchorKind::EarEndpoint};
  }
  throw InternalError("no ear endpoint of degree >= 3 in " + format_nodes(u));
}

WitnessContext build_case3c_scaffold(const Graph& g, NodeSet u, NodeSet u_prime) {
  if (u_prime == u || !u_prime.is_subset_of(u)) throw PreconditionError("U' must be a proper subset of U");
  require_blossom(g, u);
  require_blossom(g, u_prime);
  const Subgraph gu = induced(g, u);
  const Subgraph gup = induced(g, u_prime);
  if (!is_nice_subgraph(g, gu, u_prime)) throw PreconditionError("G[U'] is not a nice subgraph of G[U]");

  WitnessContext ctx;
  ctx.u = u;
  ctx.u_prime = u_prime;
  ctx.inner = odd_ear_decomposition(g, gup, nice_odd_cycle_through_edge(g, gup, gup.edges.front()));
  ctx.extension = extend_ear_decomposition(g, gu, gup);

  // Outside nodes grouped into components, each hanging from one node of U'.
  struct Component {
    NodeSet nodes;
    NodeSet attach;
    std::vector<std::size_t> ears;
  };
  std::vector<Component> comps;
  std::vector<int> comp_of(g.node_count(), -1);
  auto side = [&](NodeId x) { return u_prime.contains(x) ? x : comps[comp_of[x]].attach.front(); };

  bool joined = false;
  for (std::size_t t = 0; t < ctx.extension.size() && !joined; ++t) {
    const Ear& ear = ctx.extension[t];
    NodeSet attach;
    std::vector<int> touched;
    for (NodeId end : {ear.endpoint_a(), ear.endpoint_b()}) {
      if (u_prime.contains(end)) {
        attach.insert(end);
      } else {
        touched.push_back(comp_of[end]);
        attach |= comps[comp_of[end]].attach;
      }
    }
    if (attach.size() >= 2) {
      ctx.ell = t;
      ctx.i = side(ear.endpoint_a());
      ctx.j = side(ear.endpoint_b());
      joined = true;
      break;
    }
    Component merged{ear.interior_set(), attach, {t}};
    std::sort(touched.begin(), touched.end());
    touched.erase(std::unique(touched.begin(), touched.end()), touched.end());
    for (int c : touched) {
      merged.nodes |= comps[c].nodes;
      merged.ears.insert(merged.ears.end(), comps[c].ears.begin(), comps[c].ears.end());
      comps[c] = {};
    }
    std::sort(merged.ears.begin(), merged.ears.end());
    comps.push_back(merged);
    for (NodeId x : merged.nodes) comp_of[x] = static_cast<int>(comps.size()) - 1;
  }
  if (!joined) throw InternalError("no ear joins two components hanging from distinct nodes of U'");

  ctx.g_ell = gup;
  for (const Component& c : comps) {
    if (c.attach.size() != 1) continue;
    const NodeId at = c.attach.front();
    if (at != ctx.i && at != ctx.j) continue;
    (at == ctx.i ? ctx.component_i : ctx.component_j) |= c.nodes;
    for (std::size_t t : c.ears) {
      ctx.g_ell.nodes |= NodeSet::from_range(ctx.extension[t].path);
      ctx.g_ell.edges |= path_edges(g, ctx.extension[t].path);
    }
  }
  const Ear& joining = ctx.extension[ctx.ell];
  ctx.g_ell.nodes |= NodeSet::from_range(joining.path);
  ctx.g_ell.edges |= path_edges(g, joining.path);
  if (joining.length() == 1) {
    ctx.i_prime = joining.endpoint_a();
    ctx.j_prime = joining.endpoint_b();
  } else {
    ctx.i_prime = joining.path[1];
    ctx.j_prime = joining.path[2];
  }

  if (ctx.component_i.size() % 2 != 0 || ctx.component_j.size() % 2 != 0) {
    throw InternalError("component hanging from i or j has odd size");
  }
  if (!is_factor_critical(g, ctx.g_ell)) throw InternalError("G_ell is not factor-critical");
  if (!is_nice_subgraph(g, gu, ctx.g_ell.nodes)) throw InternalError("G_ell is not nice in G[U]");
  return ctx;
}

Cycle case3c_nice_cycle(const Graph& g, const WitnessContext& ctx) {
  const Matching mi = near_pm_excluding(g, ctx.g_ell, ctx.i_prime);
  const Matching mj = near_pm_excluding(g, ctx.g_ell, ctx.j_prime);
  Cycle c = alternating_path(g, mi, mj, ctx.i_prime);
  if (c.back() != ctx.j_prime || c.size() % 2 == 0 || !is_cycle_of(g, ctx.g_ell, c)) {
    throw InternalError("alternating path does not close into an odd cycle");
  }
  const NodeSet nodes = NodeSet::from_range(c);
  if (!nodes.contains(ctx.i) || !nodes.contains(ctx.j)) throw InternalError("cycle misses i or j");

  const auto [fwd, bwd] = cycle_arcs(c, ctx.i, ctx.j);
  auto inside = [&](const std::vector<NodeId>& arc) { return NodeSet::from_range(arc).is_subset_of(ctx.u_prime); };
  auto outside = [&](const std::vector<NodeId>& arc) {
    return !NodeSet::from_range(arc).without(ctx.i).without(ctx.j).intersects(ctx.u_prime);
  };
  const bool fwd_inner = inside(fwd) && outside(bwd);
  const bool bwd_inner = inside(bwd) && outside(fwd);
  if (!fwd_inner && !bwd_inner) throw InternalError("cycle does not split into an inner and an outer i-j path");
  const auto& inner = fwd_inner ? fwd : bwd;
  const auto& outer = fwd_inner ? bwd : fwd;
  if (inner.size() < 3 || inner.size() % 2 == 0) throw InternalError("inner i-j path is not even with an interior node");
  if (outer.size() % 2 != 0) throw InternalError("outer i-j path is not odd");
  if (!is_nice_subgraph(g, induced(g, ctx.u), nodes)) throw InternalError("cycle is not nice in G[U]");
  return c;
}

WitnessCase classify_target(const Graph& g, NodeSet u, const Inequality& target) {
  if (is_chordless_cycle(g, induced(g, u))) return WitnessCase::Case4;
  switch (target.kind()) {
    case InequalityKind::NonNeg:
      return g.induced_edges(u).contains(target.edge()) ? WitnessCase::Case1b : WitnessCase::Case1a;
    case InequalityKind::Degree: return WitnessCase::Case2;
    case InequalityKind::OddSet: {
      const NodeSet up = target.nodes();
      if (up.size() >= u.size() || !up.intersects(u)) return WitnessCase::Case3a;
      if (!up.is_subset_of(u)) return WitnessCase::Case3b;
      return WitnessCase::Case3c;
    }
  }
  return WitnessCase::Case1a;
}

WitnessChecks evaluate_witness(const Graph& g, NodeSet u, NodeId v, const Inequality& target, const Matching& m) {
  WitnessChecks c;
  c.valid_matching = m.edges().is_subset_of(g.all_edges()) && is_matching(g, m.edges());
  c.tight_on_u = (m.edges() & g.induced_edges(u)).size() == u.size() / 2;
  c.tight_on_v = (m.edges() & g.incident(v)).size() == 1;
  c.slack_on_target = target.lhs(m) < target.rhs();
  return c;
}

namespace {

void check_witness_input(const Graph& g, NodeSet u, NodeId v, const Inequality& target) {
  require_blossom(g, u);
  if (!u.contains(v)) throw PreconditionError("anchor is not in U");
  if (target == Inequality::odd_set(g, u) || target == Inequality::degree(g, v)) {
    throw PreconditionError("target must differ from the two tight inequalities");
  }
}

}  // namespace

WitnessResult constructive_witness(const Graph& g, NodeSet u, NodeId v, const Inequality& target) {
  check_witness_input(g, u, v, target);
  const bool hole = is_chordless_cycle(g, induced(g, u));
  const WitnessCase tag = classify_target(g, u, target);
  const Builder b(g, u, v);

  Matching m;
  switch (target.kind()) {
    case InequalityKind::NonNeg: {
      const EdgeId e = target.edge();
      if (!g.induced_edges(u).contains(e)) {
        m = b.edge_case_outside_u(e);
      } else {
        m = hole ? b.hole_edge_inside_u(e) : b.edge_case_inside_u(e);
      }
      break;
    }
    case InequalityKind::Degree:
      m = b.degree_case(target.node());
      break;
    case InequalityKind::OddSet: {
      const NodeSet up = target.nodes();
      if (up.size() >= u.size() || !up.intersects(u)) {
        m = b.odd_set_disjoint_or_large(up);
      } else if (!up.is_subset_of(u)) {
        m = b.odd_set_crossing(up);
      } else {
        if (hole) throw InternalError("odd hole contains a nested blossom " + format_nodes(up));
        require_blossom(g, up);
        m = b.odd_set_nested(up);
      }
      break;
    }
  }
  WitnessResult r{target, m, tag, evaluate_witness(g, u, v, target, m), false, {}};
  if (!r.checks.all()) {
    throw InternalError(to_string(tag) + " construction for " + target.to_string() + " fails its checks");
  }
  return r;
}

WitnessResult brute_force_witness(const Graph& g, NodeSet u, NodeId v, const Inequality& target,
                                  std::span<const Matching> matchings) {
  check_witness_input(g, u, v, target);
  for (const Matching& m : matchings) {
    const WitnessChecks c = evaluate_witness(g, u, v, target, m);
    if (c.all()) return {target, m, classify_target(g, u, target), c, true, {}};
  }
  throw InternalError("no matching is tight on " + format_nodes(u) + " and node " + std::to_string(v) +
                      " while slack on " + target.to_string());
}

WitnessResult brute_force_witness(const Graph& g, NodeSet u, NodeId v, const Inequality& target, int max_edges) {
  const auto all = enumerate_matchings(g, max_edges);
  return brute_force_witness(g, u, v, target, all);
}

WitnessResult witness_matching(const Graph& g, NodeSet u, NodeId v, const Inequality& target,
                               std::span<const Matching> matchings) {
  check_witness_input(g, u, v, target);
  try {
    return constructive_witness(g, u, v, target);
  } catch (const InternalError& e) {
    WitnessResult r = brute_force_witness(g, u, v, target, matchings);
    r.note = e.what();
    return r;
  }
}

WitnessResult witness_matching(const Graph& g, NodeSet u, NodeId v, const Inequality& target, int max_edges) {
  const auto all = enumerate_matchings(g, max_edges);
  return witness_matching(g, u, v, target, all);
}

WitnessReport witness_all(const MatchingPolytope& p, std::span<const Inequality> facets, NodeSet u,
                          const Anchor& anchor) {
  const Graph& g = p.graph();
  const NodeId v = anchor.node;
  const Inequality blossom = Inequality::odd_set(g, u);
  const Inequality degree = Inequality::degree(g, v);

  WitnessReport report;
  report.u = u;
  report.anchor = anchor;
  for (const Inequality& q : facets) {
    if (q == blossom || q == degree) continue;
    report.results.push_back(witness_matching(g, u, v, q, p.vertices()));
    if (report.results.back().fallback) ++report.fallback_count;
  }
  report.ridge_dimension = p.pair_dimension(blossom, degree);
  const bool degree_is_facet = std::find(facets.begin(), facets.end(), degree) != facets.end();
  report.ridge = degree_is_facet && report.ridge_dimension == p.dimension() - 2;
  return report;
}

WitnessReport witness_all(const Graph& g, NodeSet u, const Anchor& anchor, const Guards& guards) {
  const MatchingPolytope p(g, guards.max_edges);
  const auto facets = enumerate_facets(g, guards.max_nodes);
  return witness_all(p, facets, u, anchor);
}

}  // namespace mpr
