#include "catmouse/commands.hpp"

#include "catmouse/capture_number.hpp"
#include "catmouse/cat_strategy.hpp"
#include "catmouse/classification.hpp"
#include "catmouse/mouse_strategy.hpp"
#include "catmouse/solver.hpp"

namespace catmouse {

namespace {

Json labels_of(const Graph& g, std::span<const VertexId> vertices) {
  Json out = Json::array();
  for (VertexId v : vertices) out.push_back(g.label(v));
  return out;
}

Json capture_json(const CaptureTime& m) {
  if (m.is_finite()) return m.steps();
  return "infinite";
}

}  // namespace

Json cmd_classify(const Graph& g) {
  Json r;
  Tree t;
  try {
    t = as_tree(g);
  } catch (const Error& e) {
    r["summary"] = std::string("not a tree (") + e.what() + ")";
    r["tree"] = false;
    r["reason"] = e.what();
    return r;
  }
  if (t.size() < 3) {
    r["summary"] = t.size() == 2 ? "two-vertex tree; m = 2" : "single vertex; game not feasible";
    r["tree"] = true;
    r["vertices"] = t.size();
    if (t.size() == 2) r["capture_time"] = 2;
    return r;
  }
  const bool star = is_star(t);
  const bool double_star = is_double_star(t);
  const bool tstar = contains_tstar(t);
  const auto path = covering_path(t);
  const auto m = capture_time_formula(t);

  std::string summary;
  if (tstar) summary = "contains T*; m = infinite";
  else if (star) summary = "star; m = 2";
  else if (double_star) summary = "double-star; m = 4";
  else summary = "T*-free; covering path " + format_sequence(t, path->vertices) + "; m = " + m.to_string();

  r["summary"] = summary;
  r["tree"] = true;
  r["vertices"] = t.size();
  r["star"] = star;
  r["double_star"] = double_star;
  r["contains_tstar"] = tstar;
  r["covering_path"] = path ? labels_of(t, path->vertices) : Json(nullptr);
  r["leaves"] = labels_of(t, leaves(t));
  r["twigs"] = labels_of(t, twigs(t));
  r["capture_time"] = capture_json(m);
  return r;
}

Json cmd_mval(const Graph& g) {
  const auto t = as_tree(g);
  const auto m = capture_time_formula(t);
  Json r;
  r["summary"] = "m = " + m.to_string();
  r["capture_time"] = capture_json(m);
  if (t.size() >= 3) {
    r["vertices"] = t.size();
    r["twigs"] = twigs(t).size();
    r["leaves"] = leaves(t).size();
  }
  return r;
}

Json cmd_solve(const Graph& g, bool with_certificate) {
  const auto result = min_capture_time(g);
  Json r;
  if (const auto* capture = std::get_if<Capture>(&result)) {
    r["summary"] = "m = " + std::to_string(capture->steps);
    r["capture_time"] = capture->steps;
    r["witness"] = labels_of(g, capture->witness);
    return r;
  }
  const auto& survival = std::get<Survival>(result);
  r["summary"] = "m = infinite";
  r["capture_time"] = "infinite";
  r["certificate_states"] = survival.closed_states.size();
  if (with_certificate) {
    Json states = Json::array();
    for (auto s : survival.closed_states) states.push_back(labels_of(g, s.members()));
    r["certificate"] = std::move(states);
  }
  return r;
}

Json cmd_catseq(const Graph& g) {
  const auto t = as_tree(g);
  const auto seq = cat_sequence(t);
  Json r;
  r["summary"] = format_sequence(t, seq);
  r["length"] = seq.size();
  r["sequence"] = labels_of(t, seq);
  return r;
}

Json cmd_beat(const Graph& g, const std::string& sequence) {
  const auto cat = parse_sequence(g, sequence);
  const auto mouse = beat(g, cat);
  Json r;
  r["summary"] = mouse ? "escape: " + format_sequence(g, *mouse) : std::string("no escape");
  r["escape"] = mouse.has_value();
  r["mouse"] = mouse ? labels_of(g, *mouse) : Json(nullptr);
  return r;
}

Json cmd_prune(const Graph& g) {
  const auto t = as_tree(g);
  const auto pruned = prune(t);
  Json r;
  r["summary"] = "pruned to " + std::to_string(pruned.size()) + " vertices";
  r["vertices"] = pruned.size();
  r["removed"] = t.size() - pruned.size();
  r["edges"] = serialize_graph(pruned);
  return r;
}

Json cmd_enumerate(const EnumerationOptions& options, const std::function<void(const Counterexample&)>& escape) {
  const auto summary = run_enumeration(options, escape);
  Json r;
  r["summary"] = std::to_string(summary.checked) + " trees checked, " +
                 std::to_string(summary.counterexamples.size()) + " mismatches";
  r["check"] = std::string(check_name(options.check));
  r["n"] = options.n;
  r["mode"] = summary.exhaustive ? "exhaustive" : "sampled";
  if (!summary.exhaustive) r["seed"] = options.seed;
  r["checked"] = summary.checked;
  r["mismatches"] = summary.counterexamples.size();
  Json ces = Json::array();
  for (const auto& ce : summary.counterexamples) ces.push_back({{"tree", ce.tree}, {"detail", ce.detail}});
  r["counterexamples"] = std::move(ces);
  return r;
}

}  // namespace catmouse
