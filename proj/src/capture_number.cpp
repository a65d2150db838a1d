#include "catmouse/capture_number.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

#include "catmouse/classification.hpp"

namespace catmouse {

std::string CaptureTime::to_string() const { return finite_ ? std::to_string(steps_) : "infinite"; }

std::size_t a_value(const Tree& t, VertexId v) {
  if (t.size() < 3) throw Error(ErrorKind::Precondition, "a(v) is defined only for trees with at least three vertices");
  const auto d = t.degree(v);
  const auto dint = internal_degree(t, v);
  if (dint >= 2) return 2 * dint - 2;
  if (d >= 2) return 2;
  // d == 1 with a leaf neighbour only happens on the two-vertex tree.
  if (dint != 1) throw std::logic_error("a_value: leaf with a leaf neighbour in a tree with n >= 3");
  return 0;
}

AValueTable a_values(const Tree& t) {
  AValueTable table;
  table.per_vertex.reserve(t.size());
  for (VertexId v = 0; v < t.size(); ++v) {
    table.per_vertex.push_back(a_value(t, v));
    table.total += table.per_vertex.back();
  }
  return table;
}

std::size_t a_total(const Tree& t) { return a_values(t).total; }

Tree prune(const Tree& t) {
  if (t.size() < 3) throw Error(ErrorKind::Precondition, "prune requires at least three vertices");
  std::vector<std::size_t> degree(t.size());
  std::vector<bool> removed(t.size(), false);
  for (VertexId v = 0; v < t.size(); ++v) degree[v] = t.degree(v);

  auto live_neighbour = [&](VertexId leaf) {
    for (VertexId w : t.neighbours(leaf))
      if (!removed[w]) return w;
    throw std::logic_error("prune: leaf without a live neighbour");
  };

  for (;;) {
    bool progressed = false;
    for (VertexId v = 0; v < t.size(); ++v) {
      if (removed[v] || degree[v] != 1) continue;
      const VertexId parent = live_neighbour(v);
      if (degree[parent] < 3) continue;
      removed[v] = true;
      --degree[parent];
      progressed = true;
      break;
    }
    if (!progressed) break;
  }

  std::vector<VertexId> keep;
  for (VertexId v = 0; v < t.size(); ++v)
    if (!removed[v]) keep.push_back(v);
  return induced_subtree(t, keep);
}

CaptureTime capture_time_formula(const Tree& t) {
  const auto n = t.size();
  if (n == 1) throw Error(ErrorKind::Infeasible, "the game is not feasible on a single vertex");
  if (n == 2) return CaptureTime::finite(2);
  if (contains_tstar(t)) return CaptureTime::infinite();
  if (is_star(t)) return CaptureTime::finite(2);
  const auto tw = twigs(t).size();
  const auto lv = leaves(t).size();
  assert(2 * n + 2 * tw >= 2 * lv + 4);
  return CaptureTime::finite(2 * n + 2 * tw - 2 * lv - 4);
}

}  // namespace catmouse
