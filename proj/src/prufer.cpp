#include "catmouse/prufer.hpp"

#include <algorithm>
#include <queue>

namespace catmouse {

Tree tree_from_prufer(std::span<const VertexId> code) {
  const std::size_t n = code.size() + 2;
  std::vector<std::size_t> degree(n, 1);
  for (VertexId v : code) {
    if (v >= n) throw Error(ErrorKind::Precondition, "Prüfer code entry out of range");
    ++degree[v];
  }
  std::priority_queue<VertexId, std::vector<VertexId>, std::greater<>> leaf_queue;
  for (VertexId v = 0; v < n; ++v)
    if (degree[v] == 1) leaf_queue.push(v);

  std::vector<Edge> edges;
  edges.reserve(n - 1);
  for (VertexId v : code) {
    const VertexId leaf = leaf_queue.top();
    leaf_queue.pop();
    edges.emplace_back(leaf, v);
    if (--degree[v] == 1) leaf_queue.push(v);
  }
  const VertexId a = leaf_queue.top();
  leaf_queue.pop();
  edges.emplace_back(a, leaf_queue.top());
  return as_tree(Graph::from_edges(n, edges));
}

std::uint64_t labelled_tree_count(std::size_t n) {
  std::uint64_t count = 1;
  for (std::size_t i = 2; i < n; ++i) count *= n;
  return count;
}

std::uint64_t for_each_labelled_tree(std::size_t n, const std::function<bool(const Tree&)>& visit) {
  if (n < 2) throw Error(ErrorKind::Precondition, "trees need at least two vertices");
  std::vector<VertexId> code(n - 2, 0);
  std::uint64_t visited = 0;
  for (;;) {
    ++visited;
    if (!visit(tree_from_prufer(code))) return visited;
    // Odometer increment.
    std::size_t pos = code.size();
    while (pos > 0 && code[pos - 1] + 1 == n) code[--pos] = 0;
    if (pos == 0) return visited;
    ++code[pos - 1];
  }
}

Tree random_tree(std::size_t n, std::mt19937_64& rng) {
  if (n < 2) throw Error(ErrorKind::Precondition, "trees need at least two vertices");
  std::uniform_int_distribution<VertexId> pick(0, static_cast<VertexId>(n - 1));
  std::vector<VertexId> code(n - 2);
  for (auto& v : code) v = pick(rng);
  return tree_from_prufer(code);
}

Tree random_supertree(const Tree& base, std::size_t extra, std::mt19937_64& rng) {
  auto edges = base.edges();
  std::vector<Label> labels(base.labels().begin(), base.labels().end());
  Label next_label = labels.empty() ? 0 : *std::max_element(labels.begin(), labels.end()) + 1;
  for (std::size_t k = 0; k < extra; ++k) {
    const auto n = labels.size();
    std::uniform_int_distribution<VertexId> pick(0, static_cast<VertexId>(n - 1));
    edges.emplace_back(pick(rng), static_cast<VertexId>(n));
    labels.push_back(next_label++);
  }
  const auto n = labels.size();
  return as_tree(Graph::from_edges(n, edges, std::move(labels)));
}

}  // namespace catmouse
