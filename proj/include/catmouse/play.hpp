#pragma once

#include <cstddef>
#include <iosfwd>
#include <vector>

#include "catmouse/graph.hpp"

namespace catmouse {

struct PlayOutcome {
  bool caught = false;
  std::size_t rounds = 0;
  std::vector<VertexId> cat;
  std::vector<VertexId> mouse;  // for the human-cat game: a walk that dodged every probe, when not caught
};

/// Human mouse against the optimal cat sequence of a T*-free tree. Each
/// round reads the mouse's next vertex label from `in` (the first round may
/// be anywhere, later rounds must be adjacent) and then reveals the probe.
/// Illegal or unreadable moves are re-prompted. Ends on capture, when the cat
/// sequence is exhausted, or at end of input.
PlayOutcome play_as_mouse(const Tree& t, std::istream& in, std::ostream& out);

/// Human cat against a mouse that is caught only when no walk could have
/// dodged every probe so far. Reads one probe label per round; "quit" or end
/// of input stops, `max_rounds` (0 = unlimited) caps the session.
PlayOutcome play_as_cat(const Graph& g, std::istream& in, std::ostream& out, std::size_t max_rounds = 0);

}  // namespace catmouse
