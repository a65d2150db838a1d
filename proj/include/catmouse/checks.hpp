#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "catmouse/graph.hpp"

namespace catmouse {

/// Cross-checks run over tree corpora.
enum class Check {
  FormulaVsSolver,   // closed form equals the exact solver
  CatseqUnbeatable,  // constructed cat sequence has length A(T), is unbeatable, and is tight
  VisitCounts,       // constructed cat sequence probes each vertex exactly a(v) times
  PruneInvariance,   // pruning keeps m, is idempotent, and has n + twigs - leaves vertices
  CoveringPath,      // T* detection agrees with covering-path existence
};

std::string_view check_name(Check check);
std::optional<Check> parse_check(std::string_view name);
std::vector<Check> all_checks();

/// Runs one check on one tree. Returns a description of the mismatch, or
/// nullopt when the tree passes.
std::optional<std::string> run_check(Check check, const Tree& t);

struct Counterexample {
  std::string tree;    // serialized edge list
  std::string detail;
};

struct EnumerationOptions {
  std::size_t n = 0;
  Check check = Check::FormulaVsSolver;
  /// 0 means every tree in exhaustive mode and kDefaultSamples in sampling mode.
  std::uint64_t limit = 0;
  std::uint64_t seed = 0;
};

inline constexpr std::size_t kMaxExhaustiveVertices = 8;
inline constexpr std::uint64_t kDefaultSamples = 1000;

struct EnumerationSummary {
  bool exhaustive = true;
  std::uint64_t checked = 0;
  std::vector<Counterexample> counterexamples;
};

/// Exhaustive over all labelled trees for n <= kMaxExhaustiveVertices,
/// otherwise uniform random sampling from `seed`. `on_counterexample` fires
/// as soon as one is found.
EnumerationSummary run_enumeration(const EnumerationOptions& options,
                                   const std::function<void(const Counterexample&)>& on_counterexample = {});

}  // namespace catmouse
