#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mpr/guards.hpp"
#include "mpr/kernels.hpp"
#include "mpr/rank.hpp"

namespace mpr {

enum class Command { Facets, Dim, Ridges, Rank, Witness, Verify, EarDecomp, Matchings };
enum class OutputFormat { Text, Json };

enum ExitCode : int {
  kExitOk = 0,
  kExitVerificationFailed = 1,
  kExitInputError = 2,
  kExitGuardExceeded = 3,
  kExitInternal = 4,
};

std::optional<Command> parse_command(const std::string& name);
std::string to_string(Command c);

struct RunConfig {
  std::string input_path;                 ///< graph file; ignored when inline_graph is set
  std::optional<std::string> inline_graph;
  Command command = Command::Verify;
  F0Mode f0_mode = F0Mode::Lemma;
  Guards guards;
  OutputFormat format = OutputFormat::Text;
  std::optional<NodeSet> node_set;        ///< witness / eardecomp: restrict to G[U]
  std::optional<NodeId> anchor;           ///< witness: override the chosen anchor
  Execution execution = Execution::Parallel;
};

struct RunResult {
  int exit_code = kExitOk;
  std::string output;  ///< report, ends with a newline
  std::string error;   ///< diagnostic for nonzero exit codes
};

/// Parses "0,1,2" or "{0,1,2}".
NodeSet parse_node_set(const std::string& text);

RunResult run(const RunConfig& config);

struct CorpusRow {
  std::string name;
  bool ok = false;
  std::string error;
  int nodes = 0;
  int edges = 0;
  int nonneg_facets = 0;
  int degree_facets = 0;
  int oddset_facets = 0;
  int rho = -1;
  int fallback_count = 0;
  double runtime_ms = 0;
};

struct CorpusSummary {
  std::vector<CorpusRow> rows;  ///< sorted by file name
  bool passed() const;
};

/// Runs the verify pipeline on every regular file of `dir`. Errors are
/// recorded per row and do not stop the run.
CorpusSummary run_corpus(const std::string& dir, const Guards& guards = {}, Execution ex = Execution::Parallel);
std::string format_corpus(const CorpusSummary& s, OutputFormat format);

}  // namespace mpr
