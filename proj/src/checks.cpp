#include "catmouse/checks.hpp"

#include <algorithm>
#include <array>

#include "catmouse/capture_number.hpp"
#include "catmouse/cat_strategy.hpp"
#include "catmouse/classification.hpp"
#include "catmouse/mouse_strategy.hpp"
#include "catmouse/prufer.hpp"
#include "catmouse/solver.hpp"

namespace catmouse {

namespace {

constexpr std::array kNames = {
    std::pair{Check::FormulaVsSolver, std::string_view{"formula-vs-solver"}},
    std::pair{Check::CatseqUnbeatable, std::string_view{"catseq-unbeatable"}},
    std::pair{Check::VisitCounts, std::string_view{"visit-counts"}},
    std::pair{Check::PruneInvariance, std::string_view{"prune-invariance"}},
    std::pair{Check::CoveringPath, std::string_view{"covering-path"}},
};

std::optional<std::string> formula_vs_solver(const Tree& t) {
  const auto formula = capture_time_formula(t);
  const auto solved = to_capture_time(min_capture_time(t));
  if (formula == solved) return std::nullopt;
  return "formula " + formula.to_string() + ", solver " + solved.to_string();
}

std::optional<std::string> catseq_unbeatable(const Tree& t) {
  if (t.size() >= 3 && contains_tstar(t)) return std::nullopt;
  const auto seq = cat_sequence(t);
  const auto expected = t.size() == 2 ? std::size_t{2} : a_total(t);
  if (seq.size() != expected)
    return "length " + std::to_string(seq.size()) + ", expected " + std::to_string(expected);
  if (!verify_unbeatable(t, seq)) return "sequence " + format_sequence(t, seq) + " is beatable";
  if (seq.size() > 1) {
    const std::span<const VertexId> truncated(seq.data(), seq.size() - 1);
    if (!beat(t, truncated)) return "truncation of " + format_sequence(t, seq) + " is not beaten";
  }
  return std::nullopt;
}

std::optional<std::string> visit_counts(const Tree& t) {
  if (t.size() < 3 || contains_tstar(t)) return std::nullopt;
  const auto seq = cat_sequence(t);
  for (VertexId v = 0; v < t.size(); ++v) {
    const auto visits = static_cast<std::size_t>(std::count(seq.begin(), seq.end(), v));
    const auto need = a_value(t, v);
    if (visits != need)
      return "vertex " + std::to_string(t.label(v)) + " probed " + std::to_string(visits) + " times, a(v) = " +
             std::to_string(need);
  }
  return std::nullopt;
}

std::optional<std::string> prune_invariance(const Tree& t) {
  if (t.size() < 3) return std::nullopt;
  const auto pruned = prune(t);
  if (prune(pruned) != pruned) return "prune is not idempotent";
  for (VertexId v : internal_vertices(t)) {
    const auto id = pruned.find_label(t.label(v));
    if (!id || pruned.degree(*id) < 2) return "internal vertex " + std::to_string(t.label(v)) + " lost";
  }
  if (!is_star(t)) {
    const auto expected = t.size() + twigs(t).size() - leaves(t).size();
    if (pruned.size() != expected)
      return "pruned size " + std::to_string(pruned.size()) + ", expected n + t - l = " + std::to_string(expected);
  }
  const auto before = to_capture_time(min_capture_time(t));
  const auto after = to_capture_time(min_capture_time(pruned));
  if (before != after) return "m changed from " + before.to_string() + " to " + after.to_string();
  return std::nullopt;
}

std::optional<std::string> covering_path_equivalence(const Tree& t) {
  if (t.size() < 3) return std::nullopt;
  const bool tstar = contains_tstar(t);
  const bool path = covering_path(t).has_value();
  if (tstar != path) return std::nullopt;
  return tstar ? "contains T* but has a covering path" : "T*-free but has no covering path";
}

}  // namespace

std::string_view check_name(Check check) {
  for (auto [c, name] : kNames)
    if (c == check) return name;
  return "unknown";
}

std::optional<Check> parse_check(std::string_view name) {
  for (auto [c, n] : kNames)
    if (n == name) return c;
  return std::nullopt;
}

std::vector<Check> all_checks() {
  std::vector<Check> out;
  for (auto [c, name] : kNames) out.push_back(c);
  return out;
}

std::optional<std::string> run_check(Check check, const Tree& t) {
  try {
    switch (check) {
      case Check::FormulaVsSolver: return formula_vs_solver(t);
      case Check::CatseqUnbeatable: return catseq_unbeatable(t);
      case Check::VisitCounts: return visit_counts(t);
      case Check::PruneInvariance: return prune_invariance(t);
      case Check::CoveringPath: return covering_path_equivalence(t);
    }
  } catch (const std::exception& e) {
    return std::string("exception: ") + e.what();
  }
  return "unknown check";
}

EnumerationSummary run_enumeration(const EnumerationOptions& options,
                                   const std::function<void(const Counterexample&)>& on_counterexample) {
  if (options.n < 2) throw Error(ErrorKind::Precondition, "enumeration needs n >= 2");
  EnumerationSummary summary;
  summary.exhaustive = options.n <= kMaxExhaustiveVertices;

  auto visit = [&](const Tree& t) {
    ++summary.checked;
    if (auto detail = run_check(options.check, t)) {
      Counterexample ce{serialize_graph(t), std::move(*detail)};
      if (on_counterexample) on_counterexample(ce);
      summary.counterexamples.push_back(std::move(ce));
    }
    return options.limit == 0 || summary.checked < options.limit;
  };

  if (summary.exhaustive) {
    for_each_labelled_tree(options.n, visit);
  } else {
    std::mt19937_64 rng(options.seed);
    const auto samples = options.limit == 0 ? kDefaultSamples : options.limit;
    for (std::uint64_t i = 0; i < samples; ++i) visit(random_tree(options.n, rng));
  }
  return summary;
}

}  // namespace catmouse
