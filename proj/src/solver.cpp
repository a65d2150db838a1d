#include "catmouse/solver.hpp"

#include <algorithm>
#include <queue>

namespace catmouse {

EvasionSet EvasionSet::of(std::span<const VertexId> vertices) {
  std::uint64_t mask = 0;
  for (VertexId v : vertices) mask |= std::uint64_t{1} << v;
  return EvasionSet(mask);
}

std::vector<VertexId> EvasionSet::members() const {
  std::vector<VertexId> out;
  for (std::uint64_t m = mask_; m; m &= m - 1) out.push_back(static_cast<VertexId>(std::countr_zero(m)));
  return out;
}

EvasionDynamics::EvasionDynamics(const Graph& g) {
  if (g.size() > kMaxEvasionVertices)
    throw Error(ErrorKind::TooLarge, "evasion sets support at most " + std::to_string(kMaxEvasionVertices) + " vertices");
  neighbours_.reserve(g.size());
  for (VertexId v = 0; v < g.size(); ++v) neighbours_.push_back(EvasionSet::of(g.neighbours(v)).mask());
}

EvasionStep evasion_step(const Graph& g, EvasionSet s, VertexId probe) {
  if (!g.contains(probe)) throw Error(ErrorKind::Precondition, "probe is not a vertex of the graph");
  return EvasionDynamics(g).step(s, probe);
}

bool verify_unbeatable(const Graph& g, std::span<const VertexId> probes) {
  if (probes.empty()) throw Error(ErrorKind::Precondition, "cat sequence is empty");
  const EvasionDynamics dyn(g);
  auto s = EvasionSet::all(g.size());
  for (VertexId probe : probes) {
    if (!g.contains(probe)) throw Error(ErrorKind::Precondition, "probe is not a vertex of the graph");
    const auto step = dyn.step(s, probe);
    if (step.after_probe.empty()) return true;
    s = step.after_move;
  }
  return false;
}

namespace {

constexpr std::uint32_t kUnseen = 0xFFFFFFFFu;

void check_solvable(const Graph& g) {
  if (g.size() == 1) throw Error(ErrorKind::Infeasible, "the game is not feasible on a single vertex");
  if (g.size() == 0) throw Error(ErrorKind::Precondition, "empty graph");
  if (g.size() > kMaxSolverVertices)
    throw Error(ErrorKind::TooLarge, "solver supports at most " + std::to_string(kMaxSolverVertices) + " vertices");
  if (!g.is_connected()) throw Error(ErrorKind::Disconnected, "disconnected");
}

}  // namespace

CaptureResult min_capture_time(const Graph& g, SolverOptions options) {
  check_solvable(g);
  const auto n = g.size();
  const EvasionDynamics dyn(g);
  const auto full = static_cast<std::uint32_t>(EvasionSet::all(n).mask());

  // parent[s] is the predecessor state, probe[s] the probe that led here.
  std::vector<std::uint32_t> parent(std::size_t{1} << n, kUnseen);
  std::vector<std::uint8_t> probe_of(std::size_t{1} << n, 0);
  std::vector<std::uint32_t> order;  // visit order, doubles as the certificate
  std::queue<std::uint32_t> frontier;

  parent[full] = full;
  order.push_back(full);
  frontier.push(full);

  auto dominated = [&](std::uint32_t s) {
    return std::any_of(order.begin(), order.end(), [s](std::uint32_t seen) { return (seen & ~s) == 0; });
  };

  while (!frontier.empty()) {
    const auto state = frontier.front();
    frontier.pop();
    for (VertexId p = 0; p < n; ++p) {
      const auto step = dyn.step(EvasionSet(state), p);
      if (step.after_probe.empty()) {
        Capture capture;
        capture.witness.push_back(p);
        for (auto s = state; s != full; s = parent[s]) capture.witness.push_back(probe_of[s]);
        std::reverse(capture.witness.begin(), capture.witness.end());
        capture.steps = capture.witness.size();
        return capture;
      }
      const auto next = static_cast<std::uint32_t>(step.after_move.mask());
      if (parent[next] != kUnseen) continue;
      if (options.dominance_pruning && dominated(next)) continue;
      parent[next] = state;
      probe_of[next] = static_cast<std::uint8_t>(p);
      order.push_back(next);
      frontier.push(next);
    }
  }

  // A pruned search proves survival but its visited set is not closed.
  if (options.dominance_pruning) return min_capture_time(g, SolverOptions{});

  Survival survival;
  survival.closed_states.reserve(order.size());
  for (auto s : order) survival.closed_states.emplace_back(s);
  return survival;
}

CaptureTime to_capture_time(const CaptureResult& result) {
  if (const auto* capture = std::get_if<Capture>(&result)) return CaptureTime::finite(capture->steps);
  return CaptureTime::infinite();
}

bool verify_survival_certificate(const Graph& g, const Survival& certificate) {
  const EvasionDynamics dyn(g);
  auto sorted = certificate.closed_states;
  std::sort(sorted.begin(), sorted.end(), [](EvasionSet a, EvasionSet b) { return a.mask() < b.mask(); });
  auto member = [&](EvasionSet s) {
    return std::binary_search(sorted.begin(), sorted.end(), s,
                              [](EvasionSet a, EvasionSet b) { return a.mask() < b.mask(); });
  };
  if (!member(EvasionSet::all(g.size()))) return false;
  for (auto s : sorted) {
    if (s.empty()) return false;
    for (VertexId p = 0; p < g.size(); ++p) {
      const auto step = dyn.step(s, p);
      if (step.after_probe.empty() || !member(step.after_move)) return false;
    }
  }
  return true;
}

}  // namespace catmouse
