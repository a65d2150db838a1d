#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <variant>
#include <vector>

#include "catmouse/capture_number.hpp"
#include "catmouse/graph.hpp"

namespace catmouse {

/// Widest graph an EvasionSet can describe.
inline constexpr std::size_t kMaxEvasionVertices = 64;
/// Largest graph min_capture_time() accepts; the search keeps a table of 2^n states.
inline constexpr std::size_t kMaxSolverVertices = 20;

/// Set of vertices the mouse may occupy given the probes so far.
class EvasionSet {
 public:
  constexpr EvasionSet() = default;
  constexpr explicit EvasionSet(std::uint64_t mask) : mask_(mask) {}

  static EvasionSet all(std::size_t n) {
    return EvasionSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }
  static EvasionSet of(std::span<const VertexId> vertices);

  std::uint64_t mask() const noexcept { return mask_; }
  bool empty() const noexcept { return mask_ == 0; }
  std::size_t size() const noexcept { return static_cast<std::size_t>(std::popcount(mask_)); }
  bool contains(VertexId v) const noexcept { return (mask_ >> v) & 1U; }
  bool subset_of(EvasionSet other) const noexcept { return (mask_ & ~other.mask_) == 0; }

  EvasionSet without(VertexId v) const noexcept { return EvasionSet(mask_ & ~(std::uint64_t{1} << v)); }
  std::vector<VertexId> members() const;

  friend bool operator==(EvasionSet, EvasionSet) = default;

 private:
  std::uint64_t mask_ = 0;
};

struct EvasionStep {
  EvasionSet after_probe;
  EvasionSet after_move;
};

/// Precomputed neighbourhood masks for repeated evasion steps on one graph.
class EvasionDynamics {
 public:
  /// Throws Error(TooLarge) beyond kMaxEvasionVertices.
  explicit EvasionDynamics(const Graph& g);

  std::size_t size() const noexcept { return neighbours_.size(); }

  /// Union of the neighbourhoods of `s`.
  EvasionSet move(EvasionSet s) const noexcept {
    std::uint64_t out = 0;
    for (std::uint64_t m = s.mask(); m; m &= m - 1) out |= neighbours_[std::countr_zero(m)];
    return EvasionSet(out);
  }

  EvasionStep step(EvasionSet s, VertexId probe) const noexcept {
    const auto after_probe = s.without(probe);
    return {after_probe, move(after_probe)};
  }

  std::uint64_t neighbour_mask(VertexId v) const { return neighbours_[v]; }

 private:
  std::vector<std::uint64_t> neighbours_;
};

/// Removes the probed vertex, then moves every survivor to all its neighbours.
EvasionStep evasion_step(const Graph& g, EvasionSet s, VertexId probe);

/// True when running the probes from the full vertex set empties it.
/// Throws Error(Precondition) on an empty sequence.
bool verify_unbeatable(const Graph& g, std::span<const VertexId> probes);

/// Capture is forced; `witness` is a shortest unbeatable probe sequence.
struct Capture {
  std::size_t steps = 0;
  std::vector<VertexId> witness;
};

/// The mouse survives forever. `closed_states` holds every evasion set
/// reachable from the full set; the family is closed under all probes and
/// never contains the empty set.
struct Survival {
  std::vector<EvasionSet> closed_states;
};

using CaptureResult = std::variant<Capture, Survival>;

struct SolverOptions {
  /// Skip states that contain an already visited state. Off by default; the
  /// search stays exact because evasion steps are monotone, but the
  /// certificate no longer lists every reachable state.
  bool dominance_pruning = false;
};

/// Exact m(G) by breadth-first search over evasion sets. Requires a connected
/// graph with 2 <= n <= kMaxSolverVertices.
CaptureResult min_capture_time(const Graph& g, SolverOptions options = {});

/// Drops the witness or certificate.
CaptureTime to_capture_time(const CaptureResult& result);

/// Checks a Survival certificate: contains the full set, no empty set, and
/// closed under every probe.
bool verify_survival_certificate(const Graph& g, const Survival& certificate);

}  // namespace catmouse
