#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "catmouse/graph.hpp"

namespace catmouse {

/// m(G): the least number of probes that guarantees capture, or infinity.
class CaptureTime {
 public:
  static CaptureTime finite(std::size_t steps) { return CaptureTime(steps); }
  static CaptureTime infinite() { return CaptureTime(); }

  bool is_finite() const noexcept { return finite_; }
  /// Only meaningful when is_finite().
  std::size_t steps() const noexcept { return steps_; }

  /// "infinite" or the step count.
  std::string to_string() const;

  friend bool operator==(const CaptureTime&, const CaptureTime&) = default;

 private:
  CaptureTime() = default;
  explicit CaptureTime(std::size_t steps) : finite_(true), steps_(steps) {}

  bool finite_ = false;
  std::size_t steps_ = 0;
};

/// Per-vertex minimum probe counts a(v) and their total A(T).
struct AValueTable {
  std::vector<std::size_t> per_vertex;
  std::size_t total = 0;
};

/// a(v): 2*dint(v)-2 when v has at least two internal neighbours, 2 for any
/// other internal vertex, 0 for a leaf. Requires n >= 3.
std::size_t a_value(const Tree& t, VertexId v);

AValueTable a_values(const Tree& t);

/// A(T) = sum of a(v).
std::size_t a_total(const Tree& t);

/// Deletes leaves hanging off vertices of degree >= 3 until none are left,
/// always removing the smallest eligible id first. Labels are preserved.
Tree prune(const Tree& t);

/// Closed-form capture time of a tree: 2 on two vertices and on stars,
/// infinite when T* is a subgraph, 2n + 2*twigs - 2*leaves - 4 otherwise.
/// Throws Error(Infeasible) on a single vertex.
CaptureTime capture_time_formula(const Tree& t);

}  // namespace catmouse
