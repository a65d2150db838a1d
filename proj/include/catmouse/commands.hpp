#pragma once

#include <functional>
#include <string>

#include "catmouse/checks.hpp"
#include "catmouse/graph.hpp"
#include "catmouse/report.hpp"

namespace catmouse {

// Each command fills `result` of a RunReport; the CLI front end adds timing
// and picks the output form. Library errors propagate as catmouse::Error.

/// Tree / star / double-star / T* status, covering path, and m by formula.
Json cmd_classify(const Graph& g);

/// m(T) from the closed form. Throws Error for non-trees.
Json cmd_mval(const Graph& g);

/// m(G) from the exact solver with its witness; the survival certificate is
/// listed only when `with_certificate` is set.
Json cmd_solve(const Graph& g, bool with_certificate);

/// The optimal cat sequence of a tree.
Json cmd_catseq(const Graph& g);

/// A mouse walk that beats `sequence` (whitespace-separated labels), if any.
Json cmd_beat(const Graph& g, const std::string& sequence);

/// The pruned tree as an edge list.
Json cmd_prune(const Graph& g);

/// Runs a cross-check over a tree corpus. `escape` fires on each
/// counterexample as soon as it is found.
Json cmd_enumerate(const EnumerationOptions& options, const std::function<void(const Counterexample&)>& escape = {});

}  // namespace catmouse
