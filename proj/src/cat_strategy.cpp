#include "catmouse/cat_strategy.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>

#include "catmouse/classification.hpp"

namespace catmouse {

PathPlan plan_path(const Tree& t) {
  if (t.size() < 3) throw Error(ErrorKind::Precondition, "plan_path requires at least three vertices");
  if (is_star(t)) throw Error(ErrorKind::Precondition, "plan_path: tree is a star");
  if (is_double_star(t)) throw Error(ErrorKind::Precondition, "plan_path: tree is a double-star");
  auto path = covering_path(t);
  if (!path) throw Error(ErrorKind::Precondition, "plan_path: tree contains T*");

  PathPlan plan;
  plan.path = std::move(*path);
  const auto& vs = plan.path.vertices;
  const auto r = vs.size();

  for (std::size_t i = 0; i < r; ++i) {
    const VertexId v = vs[i];
    const std::optional<VertexId> prev = i > 0 ? std::optional(vs[i - 1]) : std::nullopt;
    const std::optional<VertexId> next = i + 1 < r ? std::optional(vs[i + 1]) : std::nullopt;

    std::vector<VertexId> order;
    if (prev) order.push_back(*prev);
    for (VertexId w : t.neighbours(v))
      if (t.degree(w) >= 2 && w != prev && w != next) order.push_back(w);
    if (next) order.push_back(*next);

    if (order.size() < 2)
      throw Error(ErrorKind::Precondition, "plan_path: path vertex " + std::to_string(t.label(v)) +
                                               " has fewer than two internal neighbours");
    plan.internal_counts.push_back(order.size());
    plan.neighbour_order.push_back(std::move(order));
  }

  // B_1 = 2, B_{i+1} = B_i + 2b_i - 3.
  std::size_t offset = 2;
  for (std::size_t i = 0; i < r; ++i) {
    plan.offsets.push_back(offset);
    offset += 2 * plan.internal_counts[i] - 3;
  }
  plan.half_length = plan.offsets.back() + 2 * plan.internal_counts.back() - 3;
  return plan;
}

CatSequence forward_sweep(const PathPlan& plan) {
  std::vector<std::optional<VertexId>> slots(plan.half_length);
  auto put = [&](std::size_t time, VertexId v) {
    auto& slot = slots.at(time - 1);
    if (slot && *slot != v) throw std::logic_error("forward_sweep: inconsistent probe at time " + std::to_string(time));
    slot = v;
  };

  for (std::size_t i = 0; i < plan.path.vertices.size(); ++i) {
    const auto b = plan.internal_counts[i];
    const auto start = plan.offsets[i];
    // v_i at even offsets from B_i, its internal neighbours interleaved around it.
    for (std::size_t time = start; time + 4 <= start + 2 * b; time += 2) put(time, plan.path.vertices[i]);
    for (std::size_t k = 1; k <= b; ++k) put(start + 2 * k - 3, plan.neighbour_order[i][k - 1]);
  }

  CatSequence out;
  out.reserve(slots.size());
  for (std::size_t time = 1; time <= slots.size(); ++time) {
    if (!slots[time - 1]) throw std::logic_error("forward_sweep: no probe at time " + std::to_string(time));
    out.push_back(*slots[time - 1]);
  }
  return out;
}

CatSequence cat_sequence(const Tree& t) {
  const auto n = t.size();
  if (n == 1) throw Error(ErrorKind::Infeasible, "the game is not feasible on a single vertex");
  if (n == 2) return {0, 0};
  if (contains_tstar(t)) throw Error(ErrorKind::NoWinningStrategy, "no winning strategy: tree contains T*");

  const auto internal = internal_vertices(t);
  if (is_star(t)) return {internal[0], internal[0]};
  if (is_double_star(t)) return {internal[0], internal[1], internal[1], internal[0]};

  const auto half = forward_sweep(plan_path(t));
  CatSequence probes(half);
  probes.insert(probes.end(), half.rbegin(), half.rend());
  return probes;
}

}  // namespace catmouse
