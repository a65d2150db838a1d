#pragma once

#include <optional>
#include <span>
#include <vector>

#include "catmouse/graph.hpp"

namespace catmouse {

using MouseSequence = std::vector<VertexId>;

/// True when `mouse` is a walk in `g` of the same length as `cat` that avoids
/// every probe.
bool beats(const Graph& g, std::span<const VertexId> cat, std::span<const VertexId> mouse);

/// A mouse walk that beats `cat`, or nullopt when none exists.
///
/// Runs the forward evasion sets and walks back from the smallest surviving
/// final position, picking the smallest compatible predecessor each step.
/// Throws Error(Precondition) on an empty sequence or an unknown vertex.
std::optional<MouseSequence> beat(const Graph& g, std::span<const VertexId> cat);

/// Canonical labelling of T*: hub x = 0, and for arm j in {0, 1, 2} the path
/// u_j - v_j - w_j - x with u_j = 3j+1, v_j = 3j+2, w_j = 3j+3.
namespace tstar {
inline constexpr VertexId kHub = 0;
constexpr VertexId outer(std::size_t arm) { return static_cast<VertexId>(3 * arm + 1); }
constexpr VertexId middle(std::size_t arm) { return static_cast<VertexId>(3 * arm + 2); }
constexpr VertexId inner(std::size_t arm) { return static_cast<VertexId>(3 * arm + 3); }
}  // namespace tstar

Tree canonical_tstar();

/// Evasion walk on canonical T* against any probe sequence.
///
/// At odd times the mouse sits on the hub whenever it is not probed there.
/// Each maximal run of odd-time hub probes is waited out on the middle vertex
/// of one arm, chosen (smallest index first) so that the inner vertex of that
/// arm is free on the way down and on the way back. Even times are filled in
/// between. Even-length inputs are padded with one probe of u_0 and the answer
/// truncated.
///
/// Throws Error(Precondition) on an empty sequence or a probe outside T*.
MouseSequence tstar_mouse(std::span<const VertexId> cat);

/// Evasion walk for a cat sequence that probes `v` fewer than a(v) times.
///
/// When a(v) = 2 the mouse sits on `v` at every time of the parity the cat
/// never probes `v` at, and dodges between the two smallest neighbours of `v`
/// otherwise. When a(v) > 2 it uses the internal neighbours u_1..u_r of `v`
/// (ascending) and for each the smallest other neighbour w_j: runs of probes
/// on `v` at the chosen parity are waited out on some w_j whose u_j is never
/// probed around that run.
///
/// Throws Error(Precondition) unless n >= 3, deg(v) >= 2 and the sequence is
/// nonempty and probes `v` fewer than a(v) times.
MouseSequence undervisited_mouse(const Tree& t, VertexId v, std::span<const VertexId> cat);

}  // namespace catmouse
