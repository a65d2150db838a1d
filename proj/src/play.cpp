#include "catmouse/play.hpp"

#include <istream>
#include <ostream>
#include <string>

#include "catmouse/cat_strategy.hpp"
#include "catmouse/mouse_strategy.hpp"
#include "catmouse/solver.hpp"

namespace catmouse {

namespace {

// Reads tokens until one names a vertex accepted by `legal`. nullopt on EOF or "quit".
template <typename Legal>
std::optional<VertexId> read_vertex(const Graph& g, std::istream& in, std::ostream& out, const std::string& prompt,
                                    Legal legal) {
  std::string token;
  for (;;) {
    out << prompt << std::flush;
    if (!(in >> token) || token == "quit" || token == "q") return std::nullopt;
    std::optional<VertexId> v;
    try {
      v = g.find_label(std::stoll(token));
    } catch (const std::exception&) {
    }
    if (!v) {
      out << "no vertex '" << token << "'\n";
      continue;
    }
    if (!legal(*v)) {
      out << "illegal move to " << token << "\n";
      continue;
    }
    return v;
  }
}

}  // namespace

PlayOutcome play_as_mouse(const Tree& t, std::istream& in, std::ostream& out) {
  PlayOutcome outcome;
  const auto cat = cat_sequence(t);
  out << "The cat will probe " << cat.size() << " times. Choose where to hide.\n";
  for (std::size_t round = 0; round < cat.size(); ++round) {
    const auto prompt = "round " + std::to_string(round + 1) + ", mouse to> ";
    const auto move = read_vertex(t, in, out, prompt, [&](VertexId v) {
      return outcome.mouse.empty() || t.adjacent(outcome.mouse.back(), v);
    });
    if (!move) break;
    outcome.mouse.push_back(*move);
    outcome.cat.push_back(cat[round]);
    outcome.rounds = round + 1;
    out << "cat probes " << t.label(cat[round]);
    if (cat[round] == *move) {
      outcome.caught = true;
      out << ": caught after " << outcome.rounds << " rounds\n";
      return outcome;
    }
    out << ": miss\n";
  }
  if (!outcome.caught && outcome.rounds == cat.size()) out << "the mouse escaped\n";
  return outcome;
}

PlayOutcome play_as_cat(const Graph& g, std::istream& in, std::ostream& out, std::size_t max_rounds) {
  PlayOutcome outcome;
  const EvasionDynamics dyn(g);
  auto alive = EvasionSet::all(g.size());
  out << "The mouse is hiding somewhere in " << g.size() << " holes.\n";
  while (max_rounds == 0 || outcome.rounds < max_rounds) {
    const auto prompt = "round " + std::to_string(outcome.rounds + 1) + ", probe> ";
    const auto probe = read_vertex(g, in, out, prompt, [](VertexId) { return true; });
    if (!probe) break;
    outcome.cat.push_back(*probe);
    ++outcome.rounds;
    const auto step = dyn.step(alive, *probe);
    if (step.after_probe.empty()) {
      outcome.caught = true;
      out << "caught after " << outcome.rounds << " probes\n";
      return outcome;
    }
    out << "miss\n";
    alive = step.after_move;
  }
  if (!outcome.cat.empty()) {
    outcome.mouse = *beat(g, outcome.cat);
    out << "the mouse survived, for example along " << format_sequence(g, outcome.mouse) << "\n";
  }
  return outcome;
}

}  // namespace catmouse
