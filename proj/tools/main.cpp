#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "mpr/cli.hpp"
#include "mpr/errors.hpp"

namespace {

int emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return mpr::kExitOk;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out || !(out << text)) {
    std::cerr << "cannot write '" << out_path << "'\n";
    return mpr::kExitInputError;
  }
  return mpr::kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Matching polytope facets, ridges and geometric rank for small graphs"};
  app.require_subcommand(1);
  app.fallthrough();

  mpr::RunConfig config;
  std::string format = "text";
  std::string f0 = "lemma";
  std::string out_path;
  std::string node_set;
  int anchor = -1;
  bool serial = false;

  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->envname("MPR_FORMAT");
  app.add_option("--f0", f0, "Rank-0 facet set for the rank command")
      ->check(CLI::IsMember({"lemma", "exhaustive"}))
      ->envname("MPR_F0");
  app.add_option("--max-nodes", config.guards.max_nodes, "Node limit for the odd-set scan")
      ->envname("MPR_MAX_NODES")
      ->check(CLI::PositiveNumber);
  app.add_option("--max-edges", config.guards.max_edges, "Edge limit for matching enumeration")
      ->envname("MPR_MAX_EDGES")
      ->check(CLI::PositiveNumber);
  app.add_option("--max-facets-exhaustive", config.guards.max_facets_exhaustive,
                 "Facet limit for the exhaustive rank-0 scan")
      ->envname("MPR_MAX_FACETS_EXHAUSTIVE")
      ->check(CLI::PositiveNumber);
  app.add_option("--out", out_path, "Write the report to FILE")->envname("MPR_OUT");
  app.add_flag("--serial", serial, "Use the serial kernels")->envname("MPR_SERIAL");

  const std::pair<const char*, const char*> commands[] = {
      {"facets", "List the facets of the matching polytope"},
      {"dim", "Dimension of the matching polytope"},
      {"ridges", "All pairs of facets meeting in a ridge"},
      {"rank", "Rank hierarchy of the facets"},
      {"witness", "Witness matchings for blossom facets"},
      {"verify", "Check geometric rank at most 1 with witnesses"},
      {"eardecomp", "Proper odd ear decomposition"},
      {"matchings", "List all matchings"},
  };
  std::string input;
  std::string inline_graph;
  for (const auto& [name, help] : commands) {
    CLI::App* sub = app.add_subcommand(name, help);
    auto* file = sub->add_option("graph", input, "Graph file ('n N' header, 'e u v' lines)");
    auto* text = sub->add_option("--graph-text", inline_graph, "Graph given inline");
    file->excludes(text);
    text->excludes(file);
    if (std::string(name) == "witness" || std::string(name) == "eardecomp") {
      sub->add_option("--set", node_set, "Node set U, e.g. 0,1,2,3,4");
    }
    if (std::string(name) == "witness") sub->add_option("--anchor", anchor, "Anchor node v (default: chosen)");
  }
  std::string corpus_dir;
  CLI::App* corpus = app.add_subcommand("corpus", "Run verify on every graph file in a directory");
  corpus->add_option("dir", corpus_dir, "Directory of graph files")->required()->check(CLI::ExistingDirectory);

  CLI11_PARSE(app, argc, argv);

  config.format = format == "json" ? mpr::OutputFormat::Json : mpr::OutputFormat::Text;
  config.f0_mode = f0 == "exhaustive" ? mpr::F0Mode::Exhaustive : mpr::F0Mode::Lemma;
  config.execution = serial ? mpr::Execution::Serial : mpr::Execution::Parallel;

  if (corpus->parsed()) {
    try {
      const auto summary = mpr::run_corpus(corpus_dir, config.guards, config.execution);
      const int io = emit(mpr::format_corpus(summary, config.format), out_path);
      if (io != mpr::kExitOk) return io;
      return summary.passed() ? mpr::kExitOk : mpr::kExitVerificationFailed;
    } catch (const std::exception& e) {
      std::cerr << e.what() << "\n";
      return mpr::kExitInputError;
    }
  }

  const CLI::App* sub = app.get_subcommands().front();
  config.command = *mpr::parse_command(sub->get_name());
  if (!inline_graph.empty()) {
    config.inline_graph = inline_graph;
  } else if (input.empty()) {
    std::cerr << "no graph given (file argument or --graph-text)\n";
    return mpr::kExitInputError;
  } else {
    config.input_path = input;
  }
  try {
    if (!node_set.empty()) config.node_set = mpr::parse_node_set(node_set);
  } catch (const mpr::PreconditionError& e) {
    std::cerr << e.what() << "\n";
    return mpr::kExitInputError;
  }
  if (anchor >= 0) config.anchor = anchor;

  const mpr::RunResult result = mpr::run(config);
  if (!result.output.empty()) {
    const int io = emit(result.output, out_path);
    if (io != mpr::kExitOk) return io;
  }
  if (!result.error.empty()) std::cerr << result.error << "\n";
  return result.exit_code;
}
