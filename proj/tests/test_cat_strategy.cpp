#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <random>

#include "catmouse/capture_number.hpp"
#include "catmouse/cat_strategy.hpp"
#include "catmouse/classification.hpp"
#include "catmouse/mouse_strategy.hpp"
#include "catmouse/prufer.hpp"
#include "catmouse/solver.hpp"
#include "oracles.hpp"

using namespace catmouse;

namespace {

Tree spider(std::initializer_list<std::size_t> legs) {
  std::vector<std::size_t> v(legs);
  return make_spider(v);
}

bool plannable(const Tree& t) {
  return t.size() >= 3 && !contains_tstar(t) && !is_star(t) && !is_double_star(t);
}

}  // namespace

TEST_CASE("plan_path on a 6-vertex path") {
  const auto plan = plan_path(make_path(6));
  CHECK(plan.path.vertices == std::vector<VertexId>{2, 3});
  CHECK(plan.internal_counts == std::vector<std::size_t>{2, 2});
  CHECK(plan.offsets == std::vector<std::size_t>{2, 3});
  CHECK(plan.half_length == 4);
  CHECK(plan.neighbour_order[0] == std::vector<VertexId>{1, 3});
  CHECK(plan.neighbour_order[1] == std::vector<VertexId>{2, 4});
}

TEST_CASE("plan_path on spiders") {
  const auto s222 = plan_path(spider({2, 2, 2}));
  CHECK(s222.path.vertices == std::vector<VertexId>{0});
  CHECK(s222.internal_counts == std::vector<std::size_t>{3});
  CHECK(s222.offsets == std::vector<std::size_t>{2});
  CHECK(s222.half_length == 5);
  CHECK(s222.half_length * 2 == a_total(spider({2, 2, 2})));

  const auto s221 = spider({2, 2, 1});
  const auto plan = plan_path(s221);
  CHECK(plan.path.vertices == std::vector<VertexId>{0});
  CHECK(plan.internal_counts == std::vector<std::size_t>{2});
  CHECK(plan.half_length == 3);
  CHECK(a_total(s221) == 6);
  CHECK(to_capture_time(min_capture_time(s221)) == CaptureTime::finite(6));
}

TEST_CASE("plan_path preconditions") {
  CHECK_THROWS_AS(plan_path(make_star(4)), Error);
  CHECK_THROWS_AS(plan_path(make_path(4)), Error);
  CHECK_THROWS_AS(plan_path(canonical_tstar()), Error);
}

TEST_CASE("cat_sequence examples") {
  CHECK(cat_sequence(make_path(4)) == CatSequence{1, 2, 2, 1});
  CHECK(cat_sequence(make_path(6)) == CatSequence{1, 2, 3, 4, 4, 3, 2, 1});
  CHECK(cat_sequence(make_star(4)) == CatSequence{0, 0});
  CHECK(cat_sequence(make_path(2)) == CatSequence{0, 0});
  CHECK(cat_sequence(spider({2, 2, 2})) == CatSequence{1, 0, 3, 0, 5, 5, 0, 3, 0, 1});
  CHECK(cat_sequence(spider({2, 2, 1})) == CatSequence{1, 0, 3, 3, 0, 1});
  // Star whose center is not vertex 0.
  CHECK(cat_sequence(as_tree(parse_graph("1 4\n2 4\n3 4\n"))) == CatSequence{3, 3});

  CHECK(verify_unbeatable(make_path(6), cat_sequence(make_path(6))));
  CHECK_FALSE(oracle::escape_exists(make_path(6), cat_sequence(make_path(6))));
}

TEST_CASE("cat_sequence errors") {
  try {
    cat_sequence(canonical_tstar());
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NoWinningStrategy);
  }
  try {
    cat_sequence(make_path(1));
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Infeasible);
  }
}

TEST_CASE("plan invariants over all trees on 7 vertices") {
  for_each_labelled_tree(7, [](const Tree& t) {
    if (!plannable(t)) return true;
    const auto plan = plan_path(t);
    const auto& vs = plan.path.vertices;
    const auto r = vs.size();
    for (std::size_t i = 0; i < r; ++i) {
      CHECK(plan.internal_counts[i] >= 2);
      CHECK(plan.internal_counts[i] == internal_degree(t, vs[i]));
      if (i > 0) CHECK(plan.neighbour_order[i].front() == vs[i - 1]);
      if (i + 1 < r) {
        CHECK(plan.neighbour_order[i].back() == vs[i + 1]);
        // B_i + 2b_i - 4 = B_{i+1} - 1
        CHECK(plan.offsets[i] + 2 * plan.internal_counts[i] - 4 == plan.offsets[i + 1] - 1);
      }
    }
    CHECK(plan.offsets.front() == 2);
    CHECK(2 * plan.half_length == a_total(t));
    return true;
  });
}

TEST_CASE("visit counts and tightness over all trees on 7 vertices") {
  for_each_labelled_tree(7, [](const Tree& t) {
    if (contains_tstar(t)) return true;
    const auto seq = cat_sequence(t);
    CHECK(seq.size() == a_total(t));
    for (VertexId v = 0; v < t.size(); ++v)
      CHECK(static_cast<std::size_t>(std::count(seq.begin(), seq.end(), v)) == a_value(t, v));
    CHECK(verify_unbeatable(t, seq));
    CHECK(beat(t, std::span(seq.data(), seq.size() - 1)).has_value());
    if (plannable(t)) {
      const auto plan = plan_path(t);
      for (VertexId v = 0; v < t.size(); ++v) {
        const auto visits = static_cast<std::size_t>(std::count(seq.begin(), seq.end(), v));
        const bool on_path = std::find(plan.path.vertices.begin(), plan.path.vertices.end(), v) !=
                             plan.path.vertices.end();
        if (on_path) CHECK(visits == 2 * internal_degree(t, v) - 2);
        else if (t.degree(v) >= 2) CHECK(visits == 2);
        else CHECK(visits == 0);
      }
    }
    return true;
  });
}

TEST_CASE("first pass clears the mouse whose distance to v_1 matches the time parity") {
  std::mt19937_64 rng(5);
  for (int round = 0; round < 300; ++round) {
    const auto t = random_tree(4 + rng() % 9, rng);
    if (!plannable(t)) continue;
    const auto plan = plan_path(t);
    const auto sweep = forward_sweep(plan);
    const VertexId start = plan.path.vertices.front();
    const auto dist = distances_from(t, std::span(&start, 1));
    std::vector<VertexId> odd;
    for (VertexId v = 0; v < t.size(); ++v)
      if (dist[v] % 2 == 1) odd.push_back(v);

    const EvasionDynamics dyn(t);
    auto alive = EvasionSet::of(odd);
    bool cleared = false;
    for (VertexId probe : sweep) {
      const auto step = dyn.step(alive, probe);
      if (step.after_probe.empty()) {
        cleared = true;
        break;
      }
      alive = step.after_move;
    }
    CHECK(cleared);
  }
}
