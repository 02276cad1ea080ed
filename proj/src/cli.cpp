#include "mpr/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <sstream>

#include "mpr/errors.hpp"
#include "mpr/report.hpp"

namespace mpr {

namespace {

constexpr std::pair<Command, const char*> kCommandNames[] = {
    {Command::Facets, "facets"},       {Command::Dim, "dim"},         {Command::Ridges, "ridges"},
    {Command::Rank, "rank"},           {Command::Witness, "witness"}, {Command::Verify, "verify"},
    {Command::EarDecomp, "eardecomp"}, {Command::Matchings, "matchings"},
};

struct VerifyOutcome {
  RankReport rank;
  std::vector<WitnessReport> witnesses;
  std::vector<std::string> witness_errors;
  int fallback_count = 0;
  bool passed = false;
};

VerifyOutcome verify_pipeline(const Graph& g, const Guards& guards, Execution ex) {
  VerifyOutcome out;
  out.rank = verify_rank_at_most_one(g, guards, ex);
  const MatchingPolytope p(g, guards.max_edges);
  for (std::size_t k = 0; k < out.rank.facets.size(); ++k) {
    const Inequality& q = out.rank.facets[k];
    if (q.kind() != InequalityKind::OddSet || out.rank.ranks[k] == 0) continue;
    try {
      const Anchor anchor = choose_anchor(g, q.nodes());
      out.witnesses.push_back(witness_all(p, out.rank.facets, q.nodes(), anchor));
      out.fallback_count += out.witnesses.back().fallback_count;
    } catch (const PreconditionError& e) {
      out.witness_errors.push_back(q.to_string() + ": " + e.what());
    }
  }
  out.passed = out.rank.complete && out.rank.rho <= 1 && out.rank.violations.empty() && out.witness_errors.empty() &&
               std::all_of(out.witnesses.begin(), out.witnesses.end(), [](const WitnessReport& w) { return w.ok(); });
  return out;
}

struct KindCounts {
  int nonneg = 0, degree = 0, oddset = 0;
};

KindCounts count_kinds(std::span<const Inequality> facets) {
  KindCounts c;
  for (const Inequality& q : facets) {
    switch (q.kind()) {
      case InequalityKind::NonNeg: ++c.nonneg; break;
      case InequalityKind::Degree: ++c.degree; break;
      case InequalityKind::OddSet: ++c.oddset; break;
    }
  }
  return c;
}

Json graph_json(const Graph& g) {
  return {{"nodes", g.node_count()}, {"edges", edge_list_json(g, g.all_edges())}};
}

std::string graph_line(const Graph& g) {
  return "graph: n=" + std::to_string(g.node_count()) + " m=" + std::to_string(g.edge_count()) + "\n";
}

std::string matching_text(const Graph& g, const Matching& m) {
  std::string out = "[";
  bool first = true;
  for (EdgeId e : m.edges()) {
    if (!first) out += " ";
    first = false;
    out += std::to_string(g.edge(e).u) + "-" + std::to_string(g.edge(e).v);
  }
  return out + "]";
}

std::string witness_text(const Graph& g, const WitnessReport& w, bool detailed) {
  std::ostringstream os;
  os << "witnesses " << format_nodes(w.u) << " anchor=" << w.anchor.node
     << (w.anchor.kind == AnchorKind::OddHole ? " (odd hole)" : "") << " targets=" << w.results.size()
     << " fallback=" << w.fallback_count << " ridge_dimension=" << w.ridge_dimension
     << " status=" << (w.ok() ? "ok" : "FAIL") << "\n";
  if (detailed) {
    for (const WitnessResult& r : w.results) {
      os << "  " << r.target.to_string() << " " << to_string(r.case_tag) << " " << matching_text(g, r.matching)
         << (r.checks.all() ? "" : " CHECK FAILED") << (r.fallback ? " fallback: " + r.note : "") << "\n";
    }
  }
  return os.str();
}

std::string rank_text(const RankReport& r) {
  std::ostringstream os;
  os << "dimension=" << r.polytope_dimension << "\n";
  os << "f0=" << to_string(r.f0_mode) << " size=" << r.rank_zero_set.size() << "\n";
  os << "rho=" << r.rho << (r.complete ? "" : " (incomplete)") << "\n";
  os << "certificates=" << r.certificates.size() << "\n";
  for (const RidgeCertificate& c : r.certificates) {
    os << "  " << c.facet.to_string() << " -- " << c.partner.to_string() << " ridge_dimension=" << c.ridge_dimension
       << "\n";
  }
  for (const std::string& v : r.violations) os << "violation: " << v << "\n";
  return os.str();
}

struct Rendered {
  Json json;
  std::string text;
  int exit_code = kExitOk;
};

Rendered do_facets(const Graph& g, const RunConfig& c) {
  const auto facets = enumerate_facets(g, c.guards.max_nodes);
  const KindCounts k = count_kinds(facets);
  Json list = Json::array();
  std::string text = graph_line(g) + "facets=" + std::to_string(facets.size()) + " (NonNeg " +
                     std::to_string(k.nonneg) + ", Degree " + std::to_string(k.degree) + ", OddSet " +
                     std::to_string(k.oddset) + ")\n";
  for (const Inequality& q : facets) {
    list.push_back(to_json(g, q));
    text += "  " + q.to_string() + " <= " + std::to_string(q.rhs()) + "\n";
  }
  return {{{"graph", graph_json(g)}, {"facets", list}}, text};
}

Rendered do_dim(const Graph& g, const RunConfig& c) {
  const MatchingPolytope p(g, c.guards.max_edges);
  return {{{"graph", graph_json(g)}, {"dimension", p.dimension()}, {"vertices", p.vertices().size()}},
          graph_line(g) + "vertices=" + std::to_string(p.vertices().size()) + "\ndimension=" +
              std::to_string(p.dimension()) + "\n"};
}

Rendered do_ridges(const Graph& g, const RunConfig& c) {
  const MatchingPolytope p(g, c.guards.max_edges);
  const auto facets = enumerate_facets(g, c.guards.max_nodes);
  Json list = Json::array();
  std::string text;
  for (std::size_t a = 0; a < facets.size(); ++a) {
    for (std::size_t b = a + 1; b < facets.size(); ++b) {
      if (p.pair_dimension(facets[a], facets[b]) != p.dimension() - 2) continue;
      list.push_back({facets[a].to_string(), facets[b].to_string()});
      text += "  " + facets[a].to_string() + " -- " + facets[b].to_string() + "\n";
    }
  }
  return {{{"graph", graph_json(g)}, {"ridge_dimension", p.dimension() - 2}, {"ridges", list}},
          graph_line(g) + "ridges=" + std::to_string(list.size()) + "\n" + text};
}

Rendered do_rank(const Graph& g, const RunConfig& c) {
  const MatchingPolytope p(g, c.guards.max_edges);
  const auto facets = enumerate_facets(g, c.guards.max_nodes);
  const auto f0 = rank_zero_facets(g, c.f0_mode, c.guards);
  RankReport r = rank_hierarchy(p, facets, f0, c.execution);
  r.f0_mode = c.f0_mode;
  return {{{"graph", graph_json(g)}, {"rank", to_json(g, r)}}, graph_line(g) + rank_text(r)};
}

Rendered do_verify(const Graph& g, const RunConfig& c) {
  const VerifyOutcome v = verify_pipeline(g, c.guards, c.execution);
  Json witnesses = Json::array();
  std::string text = graph_line(g) + rank_text(v.rank);
  for (const WitnessReport& w : v.witnesses) {
    witnesses.push_back(to_json(g, w));
    text += witness_text(g, w, false);
  }
  for (const std::string& e : v.witness_errors) text += "witness error: " + e + "\n";
  text += "fallback_count=" + std::to_string(v.fallback_count) + "\n";
  text += std::string("result=") + (v.passed ? "PASS" : "FAIL") + "\n";
  return {{{"graph", graph_json(g)},
           {"rank", to_json(g, v.rank)},
           {"witnesses", witnesses},
           {"witness_errors", v.witness_errors},
           {"fallback_count", v.fallback_count},
           {"passed", v.passed}},
          text, v.passed ? kExitOk : kExitVerificationFailed};
}

Rendered do_witness(const Graph& g, const RunConfig& c) {
  const MatchingPolytope p(g, c.guards.max_edges);
  const auto facets = enumerate_facets(g, c.guards.max_nodes);
  std::vector<NodeSet> targets;
  if (c.node_set) {
    targets.push_back(*c.node_set);
  } else {
    const auto f0 = lemma_minimal_formulation(g, c.guards);
    for (const Inequality& q : facets) {
      if (q.kind() == InequalityKind::OddSet && std::find(f0.begin(), f0.end(), q) == f0.end()) {
        targets.push_back(q.nodes());
      }
    }
  }
  Json list = Json::array();
  std::string text = graph_line(g);
  bool ok = true;
  for (NodeSet u : targets) {
    Anchor anchor = c.anchor ? Anchor{*c.anchor, AnchorKind::EarEndpoint} : choose_anchor(g, u);
    if (c.anchor && is_chordless_cycle(g, induced(g, u))) anchor.kind = AnchorKind::OddHole;
    const WitnessReport w = witness_all(p, facets, u, anchor);
    ok = ok && w.ok();
    list.push_back(to_json(g, w));
    text += witness_text(g, w, true);
  }
  return {{{"graph", graph_json(g)}, {"reports", list}}, text, ok ? kExitOk : kExitVerificationFailed};
}

Rendered do_eardecomp(const Graph& g, const RunConfig& c) {
  const Subgraph h = c.node_set ? induced(g, *c.node_set) : whole(g);
  const EarDecomposition d = proper_odd_ear_decomposition(g, h);
  const auto problem = check_ear_decomposition(g, h, d, true);
  if (problem) throw InternalError("ear decomposition check failed: " + *problem);
  std::string text = graph_line(g) + "initial_cycle=" + format_nodes(NodeSet::from_range(d.initial_cycle)) + " [";
  for (std::size_t k = 0; k < d.initial_cycle.size(); ++k) text += (k ? " " : "") + std::to_string(d.initial_cycle[k]);
  text += "]\nears=" + std::to_string(d.ears.size()) + "\n";
  for (const Ear& e : d.ears) {
    text += "  [";
    for (std::size_t k = 0; k < e.path.size(); ++k) text += (k ? " " : "") + std::to_string(e.path[k]);
    text += "]\n";
  }
  return {{{"graph", graph_json(g)}, {"decomposition", to_json(d)}}, text};
}

Rendered do_matchings(const Graph& g, const RunConfig& c) {
  const auto all = enumerate_matchings(g, c.guards.max_edges);
  Json list = Json::array();
  std::string text = graph_line(g) + "matchings=" + std::to_string(all.size()) + "\n";
  for (const Matching& m : all) {
    list.push_back(to_json(g, m));
    text += "  " + matching_text(g, m) + "\n";
  }
  return {{{"graph", graph_json(g)}, {"count", all.size()}, {"matchings", list}}, text};
}

void check_guards(const Guards& g) {
  if (g.max_nodes <= 0 || g.max_edges <= 0 || g.max_facets_exhaustive <= 0 || g.max_integer_points <= 0) {
    throw PreconditionError("guards must be positive");
  }
}

}  // namespace

std::optional<Command> parse_command(const std::string& name) {
  for (const auto& [c, n] : kCommandNames) {
    if (name == n) return c;
  }
  return std::nullopt;
}

std::string to_string(Command c) {
  for (const auto& [cmd, n] : kCommandNames) {
    if (cmd == c) return n;
  }
  return "?";
}

NodeSet parse_node_set(const std::string& text) {
  NodeSet out;
  std::string token;
  auto flush = [&] {
    if (token.empty()) return;
    std::size_t used = 0;
    int v = -1;
    try {
      v = std::stoi(token, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != token.size() || v < 0 || v >= 64) throw PreconditionError("bad node id '" + token + "' in node set");
    out.insert(v);
    token.clear();
  };
  for (char ch : text) {
    if (ch == ',' || ch == ' ' || ch == '{' || ch == '}') {
      flush();
    } else {
      token += ch;
    }
  }
  flush();
  if (out.empty()) throw PreconditionError("empty node set");
  return out;
}

RunResult run(const RunConfig& config) {
  RunResult result;
  try {
    check_guards(config.guards);
    const Graph g = config.inline_graph ? parse_graph(*config.inline_graph) : read_graph_file(config.input_path);
    if (config.node_set && !config.node_set->is_subset_of(g.all_nodes())) {
      throw PreconditionError("node set " + format_nodes(*config.node_set) + " is not inside the graph");
    }
    Rendered r;
    switch (config.command) {
      case Command::Facets: r = do_facets(g, config); break;
      case Command::Dim: r = do_dim(g, config); break;
      case Command::Ridges: r = do_ridges(g, config); break;
      case Command::Rank: r = do_rank(g, config); break;
      case Command::Witness: r = do_witness(g, config); break;
      case Command::Verify: r = do_verify(g, config); break;
      case Command::EarDecomp: r = do_eardecomp(g, config); break;
      case Command::Matchings: r = do_matchings(g, config); break;
    }
    if (config.format == OutputFormat::Json) {
      r.json["command"] = to_string(config.command);
      result.output = r.json.dump(2) + "\n";
    } else {
      result.output = r.text;
    }
    result.exit_code = r.exit_code;
    if (r.exit_code == kExitVerificationFailed) result.error = "verification failed";
  } catch (const GraphParseError& e) {
    result = {kExitInputError, "", std::string("parse error: ") + e.what()};
  } catch (const GuardExceeded& e) {
    result = {kExitGuardExceeded, "", std::string("guard exceeded: ") + e.what()};
  } catch (const InternalError& e) {
    result = {kExitInternal, "", std::string("internal error: ") + e.what()};
  } catch (const std::invalid_argument& e) {
    result = {kExitInputError, "", std::string("input error: ") + e.what()};
  } catch (const std::exception& e) {
    result = {kExitInternal, "", std::string("internal error: ") + e.what()};
  }
  return result;
}

bool CorpusSummary::passed() const {
  return std::all_of(rows.begin(), rows.end(), [](const CorpusRow& r) { return r.ok; });
}

CorpusSummary run_corpus(const std::string& dir, const Guards& guards, Execution ex) {
  namespace fs = std::filesystem;
  if (!fs::is_directory(dir)) throw PreconditionError("'" + dir + "' is not a directory");
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (entry.is_regular_file()) files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());

  CorpusSummary summary;
  for (const fs::path& path : files) {
    CorpusRow row;
    row.name = path.filename().string();
    const auto start = std::chrono::steady_clock::now();
    try {
      const Graph g = read_graph_file(path.string());
      row.nodes = g.node_count();
      row.edges = g.edge_count();
      const VerifyOutcome v = verify_pipeline(g, guards, ex);
      const KindCounts k = count_kinds(v.rank.facets);
      row.nonneg_facets = k.nonneg;
      row.degree_facets = k.degree;
      row.oddset_facets = k.oddset;
      row.rho = v.rank.rho;
      row.fallback_count = v.fallback_count;
      row.ok = v.passed;
      if (!v.passed) row.error = "verification failed";
    } catch (const std::exception& e) {
      row.error = e.what();
    }
    row.runtime_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    summary.rows.push_back(row);
  }
  return summary;
}

std::string format_corpus(const CorpusSummary& s, OutputFormat format) {
  if (format == OutputFormat::Json) {
    Json rows = Json::array();
    for (const CorpusRow& r : s.rows) {
      Json row{{"name", r.name}, {"ok", r.ok}, {"runtime_ms", static_cast<long>(r.runtime_ms + 0.5)}};
      if (!r.error.empty()) row["error"] = r.error;
      if (r.rho >= 0) {
        row["nodes"] = r.nodes;
        row["edges"] = r.edges;
        row["facets"] = {{"NonNeg", r.nonneg_facets}, {"Degree", r.degree_facets}, {"OddSet", r.oddset_facets}};
        row["rho"] = r.rho;
        row["fallback_count"] = r.fallback_count;
      }
      rows.push_back(row);
    }
    return Json{{"rows", rows}, {"passed", s.passed()}}.dump(2) + "\n";
  }
  std::string out;
  char line[256];
  std::snprintf(line, sizeof line, "%-16s %4s %4s %7s %7s %7s %4s %9s %10s  %s\n", "graph", "|V|", "|E|", "NonNeg",
                "Degree", "OddSet", "rho", "fallback", "ms", "status");
  out += line;
  for (const CorpusRow& r : s.rows) {
    if (r.rho < 0) {
      std::snprintf(line, sizeof line, "%-16s %s\n", r.name.c_str(), ("ERROR " + r.error).c_str());
    } else {
      std::snprintf(line, sizeof line, "%-16s %4d %4d %7d %7d %7d %4d %9d %10.1f  %s\n", r.name.c_str(), r.nodes,
                    r.edges, r.nonneg_facets, r.degree_facets, r.oddset_facets, r.rho, r.fallback_count, r.runtime_ms,
                    r.ok ? "pass" : "FAIL");
    }
    out += line;
  }
  out += std::string("overall: ") + (s.passed() ? "pass" : "FAIL") + " (" + std::to_string(s.rows.size()) + " graphs)\n";
  return out;
}

}  // namespace mpr
