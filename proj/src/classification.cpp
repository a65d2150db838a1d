#include "catmouse/classification.hpp"

#include <algorithm>

namespace catmouse {

namespace {

void require_three(const Tree& t, const char* op) {
  if (t.size() < 3) throw Error(ErrorKind::Precondition, std::string(op) + " requires at least three vertices");
}

// Longest downward path (in edges) from `v` into the component of T - parent.
std::size_t subtree_depth(const Tree& t, VertexId v, VertexId parent) {
  std::size_t best = 0;
  for (VertexId w : t.neighbours(v))
    if (w != parent) best = std::max(best, 1 + subtree_depth(t, w, v));
  return best;
}

}  // namespace

bool is_star(const Tree& t) {
  require_three(t, "is_star");
  return internal_vertices(t).size() == 1;
}

bool is_double_star(const Tree& t) {
  require_three(t, "is_double_star");
  const auto internal = internal_vertices(t);
  return internal.size() == 2 && t.adjacent(internal[0], internal[1]);
}

bool covers_within_two(const Tree& t, std::span<const VertexId> path) {
  const auto dist = distances_from(t, path);
  return std::all_of(dist.begin(), dist.end(), [](std::size_t d) { return d <= 2; });
}

std::optional<CoveringPath> covering_path(const Tree& t) {
  require_three(t, "covering_path");
  std::optional<CoveringPath> best;
  for (VertexId a = 0; a < t.size(); ++a) {
    for (VertexId b = a; b < t.size(); ++b) {
      auto path = tree_path(t, a, b);
      if (best && path.size() >= best->vertices.size()) continue;
      if (covers_within_two(t, path)) best = CoveringPath{std::move(path)};
    }
  }
  return best;
}

bool contains_tstar(const Tree& t) {
  require_three(t, "contains_tstar");
  for (VertexId x = 0; x < t.size(); ++x) {
    if (t.degree(x) < 3) continue;
    std::size_t deep_arms = 0;
    for (VertexId y : t.neighbours(x))
      if (subtree_depth(t, y, x) >= 2) ++deep_arms;
    if (deep_arms >= 3) return true;
  }
  return false;
}

}  // namespace catmouse
