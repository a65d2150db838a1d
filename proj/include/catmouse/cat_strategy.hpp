#pragma once

#include <cstddef>
#include <vector>

#include "catmouse/classification.hpp"
#include "catmouse/graph.hpp"

namespace catmouse {

using CatSequence = std::vector<VertexId>;

/// Layout of the two-pass sweep along a covering path.
///
/// For path vertex v_i, `neighbour_order[i]` lists its internal neighbours
/// with v_{i-1} first and v_{i+1} last (when those exist) and the rest in
/// ascending id order. `offsets[i]` is the 1-based time at which the sweep
/// first probes v_i; `half_length` is the length of one pass.
struct PathPlan {
  CoveringPath path;
  std::vector<std::size_t> internal_counts;
  std::vector<std::vector<VertexId>> neighbour_order;
  std::vector<std::size_t> offsets;
  std::size_t half_length = 0;
};

/// Requires a T*-free tree on >= 3 vertices that is neither a star nor a
/// double-star; throws Error(Precondition) otherwise, and also if any path
/// vertex has fewer than two internal neighbours.
PathPlan plan_path(const Tree& t);

/// An unbeatable probe sequence of optimal length: A(T) probes on trees with
/// at least three vertices, two probes on the two-vertex tree.
///
/// Stars get the center twice and double-stars (v, w, w, v) with v the
/// smaller internal id. Every other tree gets a forward sweep along the plan
/// followed by its mirror image.
///
/// Throws Error(NoWinningStrategy) when the tree contains T*, and
/// Error(Infeasible) on a single vertex.
CatSequence cat_sequence(const Tree& t);

/// The first pass of the sweep for a planned tree, 1-based time s stored at
/// index s-1.
CatSequence forward_sweep(const PathPlan& plan);

}  // namespace catmouse
