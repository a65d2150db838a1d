// catmouse: command-line front end for the cat-and-mouse evasion game.

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "catmouse/checks.hpp"
#include "catmouse/commands.hpp"
#include "catmouse/play.hpp"
#include "catmouse/report.hpp"

namespace {

using namespace catmouse;

constexpr int kExitCounterexample = 1;
constexpr int kExitError = 2;

Graph load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Parse, "cannot read " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_graph(buffer.str());
}

void emit(const RunReport& report, bool json) {
  if (json) std::cout << to_json(report).dump(2) << '\n';
  else std::cout << render_human(report);
}

void emit_error(const std::string& command, const std::string& kind, const std::string& message, bool json) {
  if (json) {
    Json j;
    j["command"] = command;
    j["error"] = {{"kind", kind}, {"message", message}};
    std::cout << j.dump(2) << '\n';
  } else {
    std::cerr << "error: " << message << '\n';
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cat-and-mouse evasion game on graphs"};
  app.require_subcommand(1);
  app.fallthrough();

  bool json = false;
  std::uint64_t seed = 0;
  std::uint64_t limit = 0;
  std::string check = "formula-vs-solver";
  app.add_flag("--json", json, "Machine-readable output");
  app.add_option("--seed", seed, "Seed for random sampling");
  app.add_option("--limit", limit, "Maximum number of trees to check (0 = all)");
  app.add_option("--check", check, "Cross-check for enumerate")
      ->check(CLI::IsMember({"formula-vs-solver", "catseq-unbeatable", "visit-counts", "prune-invariance",
                             "covering-path"}));

  std::string path;
  std::string sequence_text;
  std::vector<std::string> sequence_tokens;
  std::size_t n = 0;
  bool certificate = false;
  std::string role = "mouse";
  std::size_t rounds = 0;

  auto* classify = app.add_subcommand("classify", "Tree, star, double-star and T* status");
  auto* mval = app.add_subcommand("mval", "Capture time of a tree by closed form");
  auto* solve = app.add_subcommand("solve", "Capture time of any small connected graph by exact search");
  auto* catseq = app.add_subcommand("catseq", "Optimal cat probe sequence for a tree");
  auto* beat = app.add_subcommand("beat", "Find a mouse walk that dodges a probe sequence");
  auto* prune = app.add_subcommand("prune", "Remove leaves hanging off vertices of degree >= 3");
  auto* enumerate = app.add_subcommand("enumerate", "Cross-check every labelled tree on n vertices");
  auto* play = app.add_subcommand("play", "Interactive game in the terminal");

  for (auto* sub : {classify, mval, solve, catseq, beat, prune, play})
    sub->add_option("graph", path, "Edge-list file")->required()->check(CLI::ExistingFile);
  solve->add_flag("--certificate", certificate, "List every state of the survival certificate");
  beat->add_option("sequence", sequence_tokens, "Probe labels")->required();
  enumerate->add_option("n", n, "Vertex count")->required()->check(CLI::Range(2, 20));
  play->add_option("--as", role, "Play as the mouse or the cat")->check(CLI::IsMember({"mouse", "cat"}));
  play->add_option("--rounds", rounds, "Stop after this many probes when playing the cat (0 = unlimited)");

  CLI11_PARSE(app, argc, argv);

  auto* active = app.get_subcommands().front();
  const std::string command = active->get_name();

  try {
    RunReport report;
    report.command = command;
    const auto start = std::chrono::steady_clock::now();
    bool counterexample = false;

    if (active == enumerate) {
      EnumerationOptions options;
      options.n = n;
      options.check = *parse_check(check);
      options.limit = limit;
      options.seed = seed;
      report.input = {"n=" + std::to_string(n), n, n - 1};
      report.result = cmd_enumerate(options, [&](const Counterexample& ce) {
        if (!json) std::cerr << "counterexample (" << ce.detail << "):\n" << ce.tree;
      });
      counterexample = report.result["mismatches"].get<std::size_t>() > 0;
    } else {
      const auto g = load_graph(path);
      report.input = {path, g.size(), g.edge_count()};
      if (active == play) {
        const auto outcome = role == "mouse" ? play_as_mouse(as_tree(g), std::cin, std::cout)
                                             : play_as_cat(g, std::cin, std::cout, rounds);
        report.result = {{"summary", outcome.caught ? "caught" : "not caught"},
                         {"caught", outcome.caught},
                         {"rounds", outcome.rounds}};
      } else if (active == classify) {
        report.result = cmd_classify(g);
      } else if (active == mval) {
        report.result = cmd_mval(g);
      } else if (active == solve) {
        report.result = cmd_solve(g, certificate);
      } else if (active == catseq) {
        report.result = cmd_catseq(g);
      } else if (active == beat) {
        for (const auto& tok : sequence_tokens) sequence_text += tok + ' ';
        report.result = cmd_beat(g, sequence_text);
      } else if (active == prune) {
        report.result = cmd_prune(g);
      }
    }

    report.elapsed_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    emit(report, json);
    return counterexample ? kExitCounterexample : 0;
  } catch (const Error& e) {
    emit_error(command, to_string(e.kind()), e.what(), json);
    return kExitError;
  } catch (const std::exception& e) {
    emit_error(command, "internal", e.what(), json);
    return kExitError;
  }
}
