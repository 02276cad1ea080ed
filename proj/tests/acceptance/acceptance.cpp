// Acceptance checks. Prints one PASS/FAIL line per criterion and exits
// nonzero if any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>

#include "../support/oracles.hpp"
#include "mpr/ear.hpp"
#include "mpr/errors.hpp"
#include "mpr/rank.hpp"
#include "mpr/witness.hpp"

using namespace mpr;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (ok) return;
    if (pass) detail << what;
    pass = false;
  }
};

oracle::Row row_of(const Graph& g, const Inequality& q) { return {q.to_string(), q.coefficients(g), q.rhs()}; }

std::vector<oracle::Row> rows_of(const Graph& g, const std::vector<Inequality>& qs) {
  std::vector<oracle::Row> out;
  for (const Inequality& q : qs) out.push_back(row_of(g, q));
  return out;
}

bool in(const std::vector<Inequality>& qs, const Inequality& q) { return std::find(qs.begin(), qs.end(), q) != qs.end(); }

// Independent recount of the three witness conditions from the raw matching.
bool witness_holds(const Graph& g, NodeSet u, NodeId v, const Inequality& target, const Matching& m) {
  std::vector<int> cover(g.node_count(), 0);
  int inside = 0, at_v = 0, lhs = 0;
  const auto a = target.coefficients(g);
  for (EdgeId e : m.edges()) {
    const Edge& ed = g.edge(e);
    if (++cover[ed.u] > 1 || ++cover[ed.v] > 1) return false;
    inside += u.contains(ed.u) && u.contains(ed.v);
    at_v += ed.has(v);
    lhs += a[e];
  }
  return inside == u.size() / 2 && at_v == 1 && lhs < target.rhs();
}

// Criterion 1: the four-cycle has rank 0 and every facet is required.
Outcome c4_rank_zero(const Graph& c4) {
  Outcome o;
  const auto facets = enumerate_facets(c4);
  o.require(facets.size() == 8, "C4 has " + std::to_string(facets.size()) + " facets, expected 8");
  const auto f0 = rank_zero_facets(c4, F0Mode::Exhaustive);
  o.require(f0 == facets, "exhaustive rank-0 set is not all facets");
  const RankReport r = rank_hierarchy(c4, f0);
  o.require(r.complete && r.rho == 0, "rho(C4) = " + std::to_string(r.rho));
  o.require(oracle::minimal_formulation(c4, rows_of(c4, facets)), "oracle: all facets are not a minimal formulation");
  for (std::size_t k = 0; k < facets.size(); ++k) {
    auto rest = facets;
    rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(k));
    const MinimalityCheck check = check_minimal_formulation(c4, rest);
    o.require(!check.generates, "dropping " + facets[k].to_string() + " keeps condition (i)");
    o.require(oracle::admits_non_matching(c4, rows_of(c4, rest)),
              "oracle: dropping " + facets[k].to_string() + " keeps condition (i)");
  }
  return o;
}

// Criterion 2: rank at most one with degree-facet ridge certificates.
Outcome rank_at_most_one(const std::vector<std::pair<std::string, Graph>>& corpus) {
  Outcome o;
  for (const auto& [name, g] : corpus) {
    const RankReport r = verify_rank_at_most_one(g);
    o.require(r.complete, name + ": hierarchy incomplete");
    o.require(r.rho <= 1, name + ": rho = " + std::to_string(r.rho));
    o.require(r.violations.empty(), name + ": " + (r.violations.empty() ? "" : r.violations.front()));
    const auto ms = oracle::all_matchings(g);
    for (std::size_t k = 0; k < r.facets.size(); ++k) {
      if (r.ranks[k] != 1) continue;
      const auto cert = std::find_if(r.certificates.begin(), r.certificates.end(),
                                     [&](const RidgeCertificate& c) { return c.facet == r.facets[k]; });
      if (cert == r.certificates.end()) {
        o.require(false, name + ": no certificate for " + r.facets[k].to_string());
        continue;
      }
      o.require(cert->partner.kind() == InequalityKind::Degree && r.rank_of(cert->partner) == 0,
                name + ": " + r.facets[k].to_string() + " certified by " + cert->partner.to_string());
      o.require(oracle::face_dimension(g, {row_of(g, cert->facet), row_of(g, cert->partner)}, ms) ==
                    g.edge_count() - 2,
                name + ": oracle rejects ridge " + cert->facet.to_string() + " / " + cert->partner.to_string());
    }
  }
  return o;
}

// Criterion 3: constructive witnesses for every blossom outside the lemma set.
Outcome witness_completeness(const std::vector<std::pair<std::string, Graph>>& corpus, int& counted) {
  Outcome o;
  counted = 0;
  for (const auto& [name, g] : corpus) {
    const MatchingPolytope p(g);
    const auto facets = enumerate_facets(g);
    const auto lemma = lemma_minimal_formulation(g);
    for (const Inequality& f : facets) {
      if (f.kind() != InequalityKind::OddSet || in(lemma, f)) continue;
      const Anchor anchor = choose_anchor(g, f.nodes());
      const WitnessReport w = witness_all(p, facets, f.nodes(), anchor);
      o.require(w.fallback_count == 0, name + " " + f.to_string() + ": " + std::to_string(w.fallback_count) +
                                           " fallbacks");
      o.require(w.ridge, name + " " + f.to_string() + ": not a ridge with Degree(" +
                             std::to_string(anchor.node) + ")");
      o.require(w.results.size() + 2 == facets.size(), name + " " + f.to_string() + ": missing targets");
      for (const WitnessResult& r : w.results) {
        ++counted;
        o.require(!r.fallback && r.checks.all(), name + " " + f.to_string() + " target " + r.target.to_string());
        o.require(witness_holds(g, f.nodes(), anchor.node, r.target, r.matching),
                  name + " " + f.to_string() + " target " + r.target.to_string() + " fails the recount");
      }
    }
  }
  return o;
}

// Criterion 4: facet list and dimension against the validity/dimension oracle.
Outcome facet_oracle(const std::vector<std::pair<std::string, Graph>>& corpus) {
  Outcome o;
  for (const auto& [name, g] : corpus) {
    if (g.edge_count() > 15) continue;
    std::vector<oracle::RowKey> ours;
    for (const Inequality& q : enumerate_facets(g)) ours.push_back({q.coefficients(g), q.rhs()});
    std::sort(ours.begin(), ours.end());
    o.require(std::adjacent_find(ours.begin(), ours.end()) == ours.end(), name + ": repeated facet row");
    o.require(ours == oracle::facet_rows(g), name + ": facet list differs from the oracle");
    o.require(polytope_dimension(g) == g.edge_count(), name + ": dimension is not |E|");
    std::vector<std::vector<int>> pts;
    for (auto m : oracle::all_matchings(g)) pts.push_back(oracle::incidence(g, m));
    o.require(oracle::affine_dimension(pts) == g.edge_count(), name + ": oracle dimension is not |E|");
  }
  return o;
}

// Criterion 5: constructive and brute-force witnesses agree on every tuple.
Outcome witness_oracle(const std::vector<std::pair<std::string, Graph>>& corpus, int& tuples) {
  Outcome o;
  tuples = 0;
  for (const auto& [name, g] : corpus) {
    const MatchingPolytope p(g);
    const auto facets = enumerate_facets(g);
    const auto lemma = lemma_minimal_formulation(g);
    for (const Inequality& f : facets) {
      if (f.kind() != InequalityKind::OddSet || in(lemma, f)) continue;
      const NodeId v = choose_anchor(g, f.nodes()).node;
      for (const Inequality& q : facets) {
        if (q == f || q == Inequality::degree(g, v)) continue;
        ++tuples;
        const WitnessResult a = witness_matching(g, f.nodes(), v, q, p.vertices());
        const WitnessResult b = brute_force_witness(g, f.nodes(), v, q, p.vertices());
        o.require(!a.fallback && a.checks.all() && b.checks.all(),
                  name + " " + f.to_string() + " v=" + std::to_string(v) + " target " + q.to_string());
      }
    }
  }
  return o;
}

// Criterion 6: nice cycles and ear decompositions on random factor-critical graphs.
Outcome factor_critical_invariants(int& graphs) {
  Outcome o;
  std::mt19937 rng(1729);
  graphs = 0;
  for (int trial = 0; trial < 220; ++trial) {
    const Graph g = oracle::random_factor_critical(rng, 11, trial % 2 == 0);
    const std::string tag = "graph #" + std::to_string(trial);
    const auto ms = oracle::all_matchings(g);
    const std::uint64_t all = g.all_nodes().bits();
    if (g.node_count() > 11 || !oracle::factor_critical(g, all, ms)) {
      o.require(false, tag + ": generator produced an invalid graph");
      continue;
    }
    ++graphs;
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
      const Cycle c = nice_odd_cycle_through_edge(g, e);
      o.require(c.size() % 2 == 1 && is_cycle_of(g, whole(g), c), tag + ": cycle is not an odd cycle");
      o.require(cycle_edges(g, c).contains(e), tag + ": cycle misses its edge");
      o.require(oracle::has_pm(g, all & ~NodeSet::from_range(c).bits(), ms), tag + ": cycle is not nice");
    }
    auto check = [&](const EarDecomposition& d, bool proper) {
      std::uint64_t nodes = NodeSet::from_range(d.initial_cycle).bits();
      auto prefix_ok = [&] {
        return oracle::factor_critical(g, nodes, ms) && oracle::has_pm(g, all & ~nodes, ms) &&
               (!proper || oracle::two_connected(g, nodes));
      };
      o.require(prefix_ok(), tag + ": initial cycle fails the prefix checks");
      for (const Ear& ear : d.ears) {
        o.require(ear.length() % 2 == 1 && (!proper || ear.is_proper()), tag + ": bad ear");
        nodes |= NodeSet::from_range(ear.path).bits();
        o.require(prefix_ok(), tag + (proper ? ": proper" : ": odd") + " prefix fails the checks");
      }
      o.require(nodes == all && d.covered(g).edges == g.all_edges(), tag + ": decomposition does not cover g");
    };
    check(odd_ear_decomposition(g, nice_odd_cycle_through_edge(g, 0)), false);
    if (oracle::two_connected(g, all)) check(proper_odd_ear_decomposition(g), true);
  }
  o.require(graphs >= 200, "only " + std::to_string(graphs) + " graphs checked");
  return o;
}

// Criterion 7: the lemma set is a minimal formulation and every member is needed.
Outcome lemma_minimality(const std::vector<std::pair<std::string, Graph>>& corpus) {
  Outcome o;
  for (const auto& [name, g] : corpus) {
    const auto lemma = lemma_minimal_formulation(g);
    o.require(is_minimal_formulation(g, lemma), name + ": lemma set is not minimal");
    for (std::size_t k = 0; k < lemma.size(); ++k) {
      auto rest = lemma;
      rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(k));
      o.require(!is_minimal_formulation(g, rest), name + ": still minimal without " + lemma[k].to_string());
    }
    if (g.edge_count() <= 9) {
      o.require(oracle::minimal_formulation(g, rows_of(g, lemma)), name + ": oracle rejects the lemma set");
    }
  }
  return o;
}

}  // namespace

int main() {
  const auto corpus = oracle::corpus();
  const Graph* c4 = nullptr;
  for (const auto& [name, g] : corpus) {
    if (name == "c4") c4 = &g;
  }
  int failures = 0;
  auto report = [&](int id, const std::string& title, double limit_s, const std::function<Outcome()>& body) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = body();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail << "exception: " << e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (limit_s > 0 && secs >= limit_s) {
      o.pass = false;
      o.detail << " runtime " << secs << " s exceeds " << limit_s << " s";
    }
    if (!o.pass) ++failures;
    std::printf("%s criterion %d: %s (%.2f s)%s%s\n", o.pass ? "PASS" : "FAIL", id, title.c_str(), secs,
                o.pass ? "" : " -- ", o.detail.str().c_str());
    std::fflush(stdout);
  };

  report(1, "C4 has rank 0 and every facet is required", 1.0, [&] {
    if (!c4) {
      Outcome o;
      o.require(false, "c4 missing from corpus");
      return o;
    }
    return c4_rank_zero(*c4);
  });
  report(2, "rho <= 1 on the corpus, rank-1 facets certified by degree ridges", 60.0,
         [&] { return rank_at_most_one(corpus); });
  int witnesses = 0;
  report(3, "constructive witnesses, zero fallbacks, recounted from raw matchings", 0,
         [&] { return witness_completeness(corpus, witnesses); });
  std::printf("     (%d witnesses)\n", witnesses);
  report(4, "facet list and dimension equal the oracle on graphs with |E| <= 15", 0,
         [&] { return facet_oracle(corpus); });
  int tuples = 0;
  report(5, "constructive and brute-force witnesses agree", 0, [&] { return witness_oracle(corpus, tuples); });
  std::printf("     (%d tuples)\n", tuples);
  int graphs = 0;
  report(6, "nice cycles and ear decompositions on random factor-critical graphs", 0,
         [&] { return factor_critical_invariants(graphs); });
  std::printf("     (%d graphs)\n", graphs);
  report(7, "lemma set is a minimal formulation, every member required", 0, [&] { return lemma_minimality(corpus); });

  std::printf("%s: %d of 7 criteria failed\n", failures ? "FAIL" : "PASS", failures);
  return failures ? 1 : 0;
}
