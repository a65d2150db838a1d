#pragma once

#include <optional>
#include <vector>

#include "catmouse/graph.hpp"

namespace catmouse {

/// A path v_1..v_r in a tree with every vertex within distance 2 of it.
struct CoveringPath {
  std::vector<VertexId> vertices;
};

/// Exactly one vertex of degree >= 2. Requires n >= 3.
bool is_star(const Tree& t);

/// Exactly two vertices of degree >= 2, and they are adjacent. Requires n >= 3.
bool is_double_star(const Tree& t);

/// True when every vertex lies within distance 2 of `path`.
bool covers_within_two(const Tree& t, std::span<const VertexId> path);

/// Shortest path (fewest vertices) that covers the tree within distance 2,
/// or nullopt when none exists. Ties go to the lexicographically smallest
/// (min endpoint, max endpoint) pair; the path is oriented from its smaller
/// endpoint.
std::optional<CoveringPath> covering_path(const Tree& t);

/// Whether T* (three length-3 paths sharing one endpoint) is a subgraph.
/// Computed from subtree depths, independently of covering_path().
bool contains_tstar(const Tree& t);

}  // namespace catmouse
