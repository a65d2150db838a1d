#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "catmouse/error.hpp"

namespace catmouse {

/// Dense vertex index in [0, n).
using VertexId = std::uint32_t;
/// Vertex name as it appears in input files.
using Label = std::int64_t;
using Edge = std::pair<VertexId, VertexId>;

inline constexpr std::size_t kUnreachable = std::numeric_limits<std::size_t>::max();

/// Simple undirected graph over dense ids 0..n-1.
///
/// Neighbour lists are sorted, symmetric, loop-free and duplicate-free. Every
/// vertex carries the label it was read with, so results can be reported in
/// the caller's vocabulary. Immutable once built.
class Graph {
 public:
  Graph() = default;

  /// Builds a graph on `n` vertices. Labels default to the ids themselves.
  /// Throws Error(Parse) on self-loops, duplicate edges or out-of-range ids.
  static Graph from_edges(std::size_t n, std::span<const Edge> edges, std::vector<Label> labels = {});

  std::size_t size() const noexcept { return adjacency_.size(); }
  std::size_t edge_count() const noexcept { return edge_count_; }

  std::span<const VertexId> neighbours(VertexId v) const { return adjacency_[v]; }
  std::size_t degree(VertexId v) const { return adjacency_[v].size(); }
  bool adjacent(VertexId u, VertexId v) const;
  bool contains(VertexId v) const noexcept { return v < size(); }

  Label label(VertexId v) const { return labels_[v]; }
  std::span<const Label> labels() const noexcept { return labels_; }
  std::optional<VertexId> find_label(Label label) const;

  /// Edges with u < v, sorted.
  std::vector<Edge> edges() const;

  bool is_connected() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<std::vector<VertexId>> adjacency_;
  std::vector<Label> labels_;
  std::size_t edge_count_ = 0;
};

/// A connected acyclic graph. Only obtainable through as_tree().
class Tree : public Graph {
 public:
  Tree() = default;

 private:
  explicit Tree(Graph g) : Graph(std::move(g)) {}
  friend Tree as_tree(Graph g);
};

/// Parses the edge-list format: one "u v" pair of integer labels per line,
/// '#' starts a comment line, blank lines are skipped. A line holding a single
/// label declares an isolated vertex. Labels are mapped to dense ids in
/// ascending label order.
Graph parse_graph(std::string_view text);

/// One edge per line as "u v" with u < v by label, lines sorted. Isolated
/// vertices are written as a lone label.
std::string serialize_graph(const Graph& g);

/// Throws Error(HasCycle) when edges >= n, Error(Disconnected) otherwise.
Tree as_tree(Graph g);

/// Number of neighbours of `v` that are not leaves.
std::size_t internal_degree(const Graph& g, VertexId v);

/// Degree-1 vertices, ascending.
std::vector<VertexId> leaves(const Graph& g);

/// Vertices of degree >= 2 with at least deg-1 leaf neighbours, ascending.
std::vector<VertexId> twigs(const Graph& g);

/// Vertices of degree >= 2, ascending.
std::vector<VertexId> internal_vertices(const Graph& g);

/// BFS distances from the nearest source; kUnreachable where no path exists.
std::vector<std::size_t> distances_from(const Graph& g, std::span<const VertexId> sources);

/// The unique path from `from` to `to`, inclusive at both ends.
std::vector<VertexId> tree_path(const Tree& t, VertexId from, VertexId to);

/// Subgraph induced on `keep`; ids renumbered in ascending order of `keep`,
/// labels carried over.
Graph induced_subgraph(const Graph& g, std::span<const VertexId> keep);

/// Subtree induced on a connected vertex subset.
Tree induced_subtree(const Tree& t, std::span<const VertexId> keep);

// Small named families, labelled 0..n-1.
Tree make_path(std::size_t n);
Graph make_cycle(std::size_t n);
/// K_{1,leaves}; the center is vertex 0.
Tree make_star(std::size_t leaf_count);
/// Hub 0 with legs of the given lengths; leg vertices are numbered outwards,
/// leg by leg.
Tree make_spider(std::span<const std::size_t> leg_lengths);

/// Whitespace-separated labels to ids. Throws Error(Parse) on unknown labels.
std::vector<VertexId> parse_sequence(const Graph& g, std::string_view text);
/// Ids to whitespace-separated labels.
std::string format_sequence(const Graph& g, std::span<const VertexId> seq);

}  // namespace catmouse
